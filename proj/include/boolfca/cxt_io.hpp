#pragma once

#include <cctype>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "context.hpp"
#include "error.hpp"

namespace boolfca {

namespace detail {

inline std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) s.remove_suffix(1);
    return s;
}

inline std::size_t parse_count(std::string_view text, std::size_t line, const char* what)
{
    text = trim(text);
    if (text.empty()) throw ParseError(line, std::string("expected ") + what);
    std::size_t value = 0;
    for (char c : text) {
        if (std::isdigit(static_cast<unsigned char>(c)) == 0)
            throw ParseError(line, std::string("malformed header: ") + what + " is not a number");
        value = value * 10 + static_cast<std::size_t>(c - '0');
        if (value > IndexSet::kCapacity) throw ParseError(line, std::string(what) + " exceeds 64");
    }
    return value;
}

}  // namespace detail

/// Parses the Burmeister format:
///
///     B
///     <blank or context name>
///     |G|
///     |M|
///     <blank>
///     object names, attribute names, one per line
///     |G| rows of |M| characters from {X, x, .}
///
/// Blank lines are allowed between the header blocks.
[[nodiscard]] inline FormalContext parse_cxt(std::string_view text)
{
    std::vector<std::string> lines;
    {
        std::string current;
        for (char c : text) {
            if (c == '\n') {
                if (!current.empty() && current.back() == '\r') current.pop_back();
                lines.push_back(std::move(current));
                current.clear();
            } else {
                current += c;
            }
        }
        if (!current.empty()) lines.push_back(std::move(current));
    }
    std::size_t pos = 0;
    auto skip_blank = [&] {
        while (pos < lines.size() && detail::trim(lines[pos]).empty()) ++pos;
    };
    auto line_no = [&] { return pos + 1; };

    skip_blank();
    if (pos >= lines.size() || detail::trim(lines[pos]) != "B")
        throw ParseError(pos < lines.size() ? line_no() : 0, "malformed header: expected 'B'");
    ++pos;
    skip_blank();
    // Optional context name line before the counts.
    if (pos < lines.size()) {
        auto t = detail::trim(lines[pos]);
        bool numeric = !t.empty();
        for (char c : t) numeric = numeric && std::isdigit(static_cast<unsigned char>(c)) != 0;
        if (!numeric) {
            ++pos;
            skip_blank();
        }
    }
    if (pos >= lines.size()) throw ParseError(0, "malformed header: missing object count");
    const std::size_t n_obj = detail::parse_count(lines[pos], line_no(), "object count");
    ++pos;
    skip_blank();
    if (pos >= lines.size()) throw ParseError(0, "malformed header: missing attribute count");
    const std::size_t n_att = detail::parse_count(lines[pos], line_no(), "attribute count");
    ++pos;
    skip_blank();

    std::vector<std::string> objects;
    std::vector<std::string> attributes;
    for (std::size_t i = 0; i < n_obj + n_att; ++i) {
        if (pos >= lines.size()) throw ParseError(0, "unexpected end of file while reading names");
        std::string name(detail::trim(lines[pos]));
        (i < n_obj ? objects : attributes).push_back(std::move(name));
        ++pos;
    }
    std::vector<AttributeSet> rows;
    for (std::size_t g = 0; g < n_obj; ++g) {
        if (pos >= lines.size()) throw ParseError(0, "dimension mismatch: expected " + std::to_string(n_obj) +
                                                         " rows, found " + std::to_string(g));
        const auto row_text = detail::trim(lines[pos]);
        if (row_text.size() != n_att)
            throw ParseError(line_no(), "dimension mismatch: row has " + std::to_string(row_text.size()) +
                                            " entries, expected " + std::to_string(n_att));
        AttributeSet row;
        for (std::size_t m = 0; m < n_att; ++m) {
            const char c = row_text[m];
            if (c == 'X' || c == 'x') {
                row.insert(m);
            } else if (c != '.') {
                throw ParseError(line_no(), std::string("illegal incidence character '") + c + "'");
            }
        }
        rows.push_back(row);
        ++pos;
    }
    skip_blank();
    if (pos < lines.size()) throw ParseError(line_no(), "dimension mismatch: trailing content after last row");
    try {
        return {std::move(objects), std::move(attributes), std::move(rows)};
    } catch (const InvalidArgument& e) {
        throw ParseError(0, e.what());
    }
}

[[nodiscard]] inline std::string emit_cxt(const FormalContext& ctx)
{
    std::ostringstream out;
    out << "B\n\n" << ctx.num_objects() << '\n' << ctx.num_attributes() << "\n\n";
    for (const auto& n : ctx.object_names()) out << n << '\n';
    for (const auto& n : ctx.attribute_names()) out << n << '\n';
    for (std::size_t g = 0; g < ctx.num_objects(); ++g) {
        for (std::size_t m = 0; m < ctx.num_attributes(); ++m) out << (ctx.incident(g, m) ? 'X' : '.');
        out << '\n';
    }
    return out.str();
}

[[nodiscard]] inline nlohmann::json context_to_json(const FormalContext& ctx)
{
    nlohmann::json incidence = nlohmann::json::array();
    for (std::size_t g = 0; g < ctx.num_objects(); ++g) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t m = 0; m < ctx.num_attributes(); ++m) row.push_back(ctx.incident(g, m));
        incidence.push_back(std::move(row));
    }
    return {{"objects", ctx.object_names()}, {"attributes", ctx.attribute_names()}, {"incidence", incidence}};
}

[[nodiscard]] inline FormalContext context_from_json(const nlohmann::json& j)
{
    try {
        auto objects = j.at("objects").get<std::vector<std::string>>();
        auto attributes = j.at("attributes").get<std::vector<std::string>>();
        const auto& incidence = j.at("incidence");
        if (!incidence.is_array() || incidence.size() != objects.size())
            throw ParseError(0, "dimension mismatch: incidence must have one row per object");
        std::vector<AttributeSet> rows;
        for (const auto& r : incidence) {
            if (!r.is_array() || r.size() != attributes.size())
                throw ParseError(0, "dimension mismatch: incidence row length differs from attribute count");
            AttributeSet row;
            for (std::size_t m = 0; m < r.size(); ++m)
                if (r[m].get<bool>()) row.insert(m);
            rows.push_back(row);
        }
        return {std::move(objects), std::move(attributes), std::move(rows)};
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, std::string("invalid JSON context: ") + e.what());
    } catch (const InvalidArgument& e) {
        throw ParseError(0, e.what());
    }
}

/// Loads a context from a `.json` file or, otherwise, a Burmeister `.cxt` file.
[[nodiscard]] inline FormalContext load_context(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const bool json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
    if (json) {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(0, std::string("invalid JSON: ") + e.what());
        }
        return context_from_json(j);
    }
    return parse_cxt(text);
}

}  // namespace boolfca
