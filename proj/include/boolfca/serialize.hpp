#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "closed_subcontext.hpp"
#include "context.hpp"
#include "cxt_io.hpp"
#include "error.hpp"
#include "lattice.hpp"

namespace boolfca {

using nlohmann::json;

[[nodiscard]] inline json object_names(const FormalContext& ctx, ObjectSet s)
{
    json out = json::array();
    for (std::size_t g : s) out.push_back(ctx.object_names()[g]);
    return out;
}

[[nodiscard]] inline json attribute_names(const FormalContext& ctx, AttributeSet s)
{
    json out = json::array();
    for (std::size_t m : s) out.push_back(ctx.attribute_names()[m]);
    return out;
}

[[nodiscard]] inline json concept_to_json(const FormalContext& ctx, const Concept& c)
{
    return {{"extent", object_names(ctx, c.extent)}, {"intent", attribute_names(ctx, c.intent)}};
}

[[nodiscard]] inline json selector_to_json(const FormalContext& ctx, const SubcontextSelector& sel)
{
    return {{"objects", object_names(ctx, sel.objects)}, {"attributes", attribute_names(ctx, sel.attributes)}};
}

/// Concept indices plus their extents/intents.
[[nodiscard]] inline json suborder_to_json(const ConceptLattice& lat, const ConceptSet& s)
{
    json concepts = json::array();
    s.for_each([&](std::size_t i) { concepts.push_back(concept_to_json(lat.context(), lat[i])); });
    return {{"indices", s.to_vector()}, {"concepts", concepts}};
}

/// {"H": [names], "N": [names], "J": [[g, m], ...]}
[[nodiscard]] inline json triple_to_json(const FormalContext& ctx, const ClosedSubcontext& t)
{
    json pairs = json::array();
    for (std::size_t g = 0; g < t.rows.size(); ++g)
        for (std::size_t m : t.rows[g]) pairs.push_back({ctx.object_names()[g], ctx.attribute_names()[m]});
    return {{"H", object_names(ctx, t.objects)}, {"N", attribute_names(ctx, t.attributes)}, {"J", pairs}};
}

[[nodiscard]] inline ClosedSubcontext triple_from_json(const FormalContext& ctx, const json& j)
{
    auto object = [&](const std::string& name) {
        auto g = ctx.find_object(name);
        if (!g) throw InvalidArgument("unknown object '" + name + "'");
        return *g;
    };
    auto attribute = [&](const std::string& name) {
        auto m = ctx.find_attribute(name);
        if (!m) throw InvalidArgument("unknown attribute '" + name + "'");
        return *m;
    };
    try {
        auto t = ClosedSubcontext::empty_relation(ctx.num_objects(), {}, {});
        for (const auto& n : j.at("H")) t.objects.insert(object(n.get<std::string>()));
        for (const auto& n : j.at("N")) t.attributes.insert(attribute(n.get<std::string>()));
        for (const auto& p : j.at("J")) {
            if (!p.is_array() || p.size() != 2) throw InvalidArgument("J entries must be [object, attribute] pairs");
            t.add(object(p[0].get<std::string>()), attribute(p[1].get<std::string>()));
        }
        return t;
    } catch (const json::exception& e) {
        throw InvalidArgument(std::string("malformed closed-subcontext JSON: ") + e.what());
    }
}

[[nodiscard]] inline json lattice_to_json(const ConceptLattice& lat)
{
    json concepts = json::array();
    for (std::size_t i = 0; i < lat.size(); ++i) {
        json c = concept_to_json(lat.context(), lat[i]);
        c["index"] = i;
        c["upper_covers"] = lat.upper_covers(i);
        concepts.push_back(std::move(c));
    }
    return {{"concepts", concepts}, {"bottom", lat.bottom()}, {"top", lat.top()}};
}

/// Line diagram with reduced labelling: object g is written at the concept
/// (g'', g'), attribute m at (m', m'').
[[nodiscard]] inline std::string lattice_to_dot(const ConceptLattice& lat)
{
    const FormalContext& ctx = lat.context();
    std::vector<std::string> objects(lat.size());
    std::vector<std::string> attributes(lat.size());
    auto append = [](std::string& s, const std::string& name) {
        if (!s.empty()) s += ", ";
        s += name;
    };
    for (std::size_t g = 0; g < ctx.num_objects(); ++g)
        append(objects[lat.concept_of_objects(ObjectSet::singleton(g))], ctx.object_names()[g]);
    for (std::size_t m = 0; m < ctx.num_attributes(); ++m)
        append(attributes[lat.concept_of_attributes(AttributeSet::singleton(m))], ctx.attribute_names()[m]);

    auto quote = [](const std::string& s) {
        std::string out = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\') out += '\\';
            out += c;
        }
        return out + '"';
    };
    std::ostringstream out;
    out << "digraph lattice {\n  rankdir=BT;\n  node [shape=circle, label=\"\", width=0.2];\n";
    for (std::size_t i = 0; i < lat.size(); ++i) {
        out << "  c" << i;
        if (!objects[i].empty() || !attributes[i].empty()) {
            out << " [xlabel=" << quote(attributes[i] + (attributes[i].empty() || objects[i].empty() ? "" : " | ") +
                                        objects[i])
                << "]";
        }
        out << ";\n";
    }
    for (std::size_t i = 0; i < lat.size(); ++i)
        for (std::size_t j : lat.upper_covers(i)) out << "  c" << i << " -> c" << j << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace boolfca
