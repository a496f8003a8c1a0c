#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"
#include "index_set.hpp"

namespace boolfca {

using ObjectSet = IndexSet;
using AttributeSet = IndexSet;

/// Finite cross table (G, M, I).
///
/// Objects and attributes are addressed by index; names are kept for I/O only.
/// The incidence is stored twice, as rows (object intents) and as columns
/// (attribute extents), and both views always describe the same relation.
class FormalContext {
public:
    FormalContext() = default;

    /// `rows[g]` is the set of attributes of object g.
    FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes, std::vector<AttributeSet> rows)
        : objects_(std::move(objects)), attributes_(std::move(attributes)), rows_(std::move(rows))
    {
        if (objects_.size() > IndexSet::kCapacity || attributes_.size() > IndexSet::kCapacity)
            throw InvalidArgument("context exceeds 64 objects or 64 attributes");
        if (rows_.size() != objects_.size()) throw InvalidArgument("row count differs from object count");
        check_distinct(objects_, "object");
        check_distinct(attributes_, "attribute");
        const AttributeSet all = AttributeSet::full(attributes_.size());
        cols_.assign(attributes_.size(), ObjectSet{});
        for (std::size_t g = 0; g < rows_.size(); ++g) {
            if (!rows_[g].is_subset_of(all)) throw InvalidArgument("row references attribute out of range");
            for (std::size_t m : rows_[g]) cols_[m].insert(g);
        }
    }

    /// Builds a context from a boolean cross table with generated names
    /// "1".."n" for objects and "a".."z", "a1".. for attributes.
    static FormalContext from_table(const std::vector<std::vector<bool>>& table, std::size_t n_attributes)
    {
        std::vector<std::string> objs;
        std::vector<std::string> atts;
        std::vector<AttributeSet> rows;
        for (std::size_t g = 0; g < table.size(); ++g) {
            objs.push_back(std::to_string(g + 1));
            if (table[g].size() != n_attributes) throw InvalidArgument("ragged cross table");
            AttributeSet row;
            for (std::size_t m = 0; m < n_attributes; ++m)
                if (table[g][m]) row.insert(m);
            rows.push_back(row);
        }
        for (std::size_t m = 0; m < n_attributes; ++m) atts.push_back(default_attribute_name(m));
        return {std::move(objs), std::move(atts), std::move(rows)};
    }

    /// Parses rows of 'x'/'.' characters, e.g. {"xx.", ".x."}.
    static FormalContext from_strings(const std::vector<std::string>& rows)
    {
        const std::size_t n_att = rows.empty() ? 0 : rows.front().size();
        std::vector<std::vector<bool>> table;
        for (const auto& r : rows) {
            std::vector<bool> row;
            for (char c : r) row.push_back(c == 'x' || c == 'X');
            table.push_back(std::move(row));
        }
        return from_table(table, n_att);
    }

    static std::string default_attribute_name(std::size_t m)
    {
        std::string name(1, static_cast<char>('a' + m % 26));
        if (m >= 26) name += std::to_string(m / 26);
        return name;
    }

    [[nodiscard]] std::size_t num_objects() const { return objects_.size(); }
    [[nodiscard]] std::size_t num_attributes() const { return attributes_.size(); }
    [[nodiscard]] const std::vector<std::string>& object_names() const { return objects_; }
    [[nodiscard]] const std::vector<std::string>& attribute_names() const { return attributes_; }
    [[nodiscard]] ObjectSet all_objects() const { return ObjectSet::full(objects_.size()); }
    [[nodiscard]] AttributeSet all_attributes() const { return AttributeSet::full(attributes_.size()); }

    [[nodiscard]] AttributeSet row(std::size_t g) const { return rows_[g]; }
    [[nodiscard]] ObjectSet column(std::size_t m) const { return cols_[m]; }
    [[nodiscard]] const std::vector<AttributeSet>& rows() const { return rows_; }
    [[nodiscard]] bool incident(std::size_t g, std::size_t m) const { return rows_[g].contains(m); }
    [[nodiscard]] std::size_t incidence_count() const
    {
        std::size_t n = 0;
        for (auto r : rows_) n += r.size();
        return n;
    }

    /// A' : attributes shared by every object of A (all attributes for A = {}).
    [[nodiscard]] AttributeSet derive_objects(ObjectSet objects) const
    {
        AttributeSet out = all_attributes();
        for (std::size_t g : objects) out &= rows_[g];
        return out;
    }
    /// B' : objects having every attribute of B (all objects for B = {}).
    [[nodiscard]] ObjectSet derive_attributes(AttributeSet attributes) const
    {
        ObjectSet out = all_objects();
        for (std::size_t m : attributes) out &= cols_[m];
        return out;
    }
    [[nodiscard]] ObjectSet closure_objects(ObjectSet objects) const
    {
        return derive_attributes(derive_objects(objects));
    }
    [[nodiscard]] AttributeSet closure_attributes(AttributeSet attributes) const
    {
        return derive_objects(derive_attributes(attributes));
    }

    [[nodiscard]] std::optional<std::size_t> find_object(const std::string& name) const { return find(objects_, name); }
    [[nodiscard]] std::optional<std::size_t> find_attribute(const std::string& name) const
    {
        return find(attributes_, name);
    }

    bool operator==(const FormalContext& o) const
    {
        return objects_ == o.objects_ && attributes_ == o.attributes_ && rows_ == o.rows_;
    }

private:
    static void check_distinct(const std::vector<std::string>& names, const char* kind)
    {
        std::set<std::string> seen;
        for (const auto& n : names)
            if (!seen.insert(n).second) throw InvalidArgument(std::string("duplicate ") + kind + " name '" + n + "'");
    }
    static std::optional<std::size_t> find(const std::vector<std::string>& names, const std::string& name)
    {
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) return std::nullopt;
        return static_cast<std::size_t>(it - names.begin());
    }

    std::vector<std::string> objects_;
    std::vector<std::string> attributes_;
    std::vector<AttributeSet> rows_;
    std::vector<ObjectSet> cols_;
};

/// Selects the induced subcontext [H, N] = (H, N, I ∩ (H×N)).
struct SubcontextSelector {
    ObjectSet objects;
    AttributeSet attributes;

    static SubcontextSelector whole(const FormalContext& ctx) { return {ctx.all_objects(), ctx.all_attributes()}; }
    [[nodiscard]] bool valid_for(const FormalContext& ctx) const
    {
        return objects.is_subset_of(ctx.all_objects()) && attributes.is_subset_of(ctx.all_attributes());
    }
    bool operator==(const SubcontextSelector&) const = default;
    auto operator<=>(const SubcontextSelector&) const = default;
};

/// Derivations inside [H, N] expressed in the parent's index space.
[[nodiscard]] inline AttributeSet derive_objects_in(const FormalContext& ctx, const SubcontextSelector& sel, ObjectSet a)
{
    return ctx.derive_objects(a) & sel.attributes;
}
[[nodiscard]] inline ObjectSet derive_attributes_in(const FormalContext& ctx, const SubcontextSelector& sel,
                                                    AttributeSet b)
{
    return ctx.derive_attributes(b) & sel.objects;
}

/// The induced subcontext as a standalone context (indices renumbered,
/// original order kept).
[[nodiscard]] inline FormalContext induced_subcontext(const FormalContext& ctx, const SubcontextSelector& sel)
{
    if (!sel.valid_for(ctx)) throw InvalidArgument("selector out of range");
    std::vector<std::string> objs;
    std::vector<std::string> atts;
    std::vector<std::size_t> att_index(ctx.num_attributes(), 0);
    for (std::size_t m : sel.attributes) {
        att_index[m] = atts.size();
        atts.push_back(ctx.attribute_names()[m]);
    }
    std::vector<AttributeSet> rows;
    for (std::size_t g : sel.objects) {
        objs.push_back(ctx.object_names()[g]);
        AttributeSet r;
        for (std::size_t m : ctx.row(g) & sel.attributes) r.insert(att_index[m]);
        rows.push_back(r);
    }
    return {std::move(objs), std::move(atts), std::move(rows)};
}

struct Clarification {
    FormalContext context;
    /// For every original object, the index of its representative in `context`.
    std::vector<std::size_t> object_map;
    std::vector<std::size_t> attribute_map;
    /// Original indices retained (one per duplicate class).
    ObjectSet kept_objects;
    AttributeSet kept_attributes;
};

/// Merges objects with equal intents and attributes with equal extents.
/// The member with the smallest index represents each class.
[[nodiscard]] inline Clarification clarify(const FormalContext& ctx)
{
    Clarification out;
    std::unordered_map<IndexSet, std::size_t> seen_rows;
    std::unordered_map<IndexSet, std::size_t> seen_cols;
    std::vector<std::size_t> att_new(ctx.num_attributes());
    for (std::size_t m = 0; m < ctx.num_attributes(); ++m) {
        auto [it, fresh] = seen_cols.try_emplace(ctx.column(m), out.kept_attributes.size());
        if (fresh) out.kept_attributes.insert(m);
        att_new[m] = it->second;
    }
    std::vector<std::size_t> obj_new(ctx.num_objects());
    for (std::size_t g = 0; g < ctx.num_objects(); ++g) {
        auto [it, fresh] = seen_rows.try_emplace(ctx.row(g), out.kept_objects.size());
        if (fresh) out.kept_objects.insert(g);
        obj_new[g] = it->second;
    }
    out.context = induced_subcontext(ctx, {out.kept_objects, out.kept_attributes});
    out.object_map = std::move(obj_new);
    out.attribute_map = std::move(att_new);
    return out;
}

[[nodiscard]] inline bool is_clarified(const FormalContext& ctx)
{
    std::set<IndexSet> rows(ctx.rows().begin(), ctx.rows().end());
    std::set<IndexSet> cols;
    for (std::size_t m = 0; m < ctx.num_attributes(); ++m) cols.insert(ctx.column(m));
    return rows.size() == ctx.num_objects() && cols.size() == ctx.num_attributes();
}

/// g is reducible iff g' equals the intersection of all strictly larger
/// object intents (M when there are none). Same test dually for attributes.
[[nodiscard]] inline ObjectSet reducible_objects(const FormalContext& ctx)
{
    ObjectSet out;
    for (std::size_t g = 0; g < ctx.num_objects(); ++g) {
        const AttributeSet row = ctx.row(g);
        AttributeSet meet = ctx.all_attributes();
        for (std::size_t h = 0; h < ctx.num_objects(); ++h)
            if (h != g && row.is_proper_subset_of(ctx.row(h))) meet &= ctx.row(h);
        if (meet == row) out.insert(g);
    }
    return out;
}

[[nodiscard]] inline AttributeSet reducible_attributes(const FormalContext& ctx)
{
    AttributeSet out;
    for (std::size_t m = 0; m < ctx.num_attributes(); ++m) {
        const ObjectSet col = ctx.column(m);
        ObjectSet meet = ctx.all_objects();
        for (std::size_t n = 0; n < ctx.num_attributes(); ++n)
            if (n != m && col.is_proper_subset_of(ctx.column(n))) meet &= ctx.column(n);
        if (meet == col) out.insert(m);
    }
    return out;
}

[[nodiscard]] inline bool is_reduced(const FormalContext& ctx)
{
    return is_clarified(ctx) && reducible_objects(ctx).empty() && reducible_attributes(ctx).empty();
}

/// Standard context: clarify, then drop every reducible object and attribute.
[[nodiscard]] inline FormalContext reduce(const FormalContext& ctx)
{
    const FormalContext clarified = clarify(ctx).context;
    const ObjectSet keep_g = clarified.all_objects() - reducible_objects(clarified);
    const AttributeSet keep_m = clarified.all_attributes() - reducible_attributes(clarified);
    return induced_subcontext(clarified, {keep_g, keep_m});
}

/// Arrow relations; both are subsets of (G×M) \ I.
struct ArrowRelations {
    /// up[g] = { m : g ↗ m }
    std::vector<AttributeSet> up;
    /// down[g] = { m : g ↙ m }
    std::vector<AttributeSet> down;

    [[nodiscard]] bool has_up(std::size_t g, std::size_t m) const { return up[g].contains(m); }
    [[nodiscard]] bool has_down(std::size_t g, std::size_t m) const { return down[g].contains(m); }
};

/// g ↙ m iff (g,m) ∉ I and every h with g' ⊊ h' has (h,m) ∈ I;
/// g ↗ m iff (g,m) ∉ I and every n with m' ⊊ n' has (g,n) ∈ I.
[[nodiscard]] inline ArrowRelations arrow_relations(const FormalContext& ctx)
{
    ArrowRelations out;
    out.up.assign(ctx.num_objects(), AttributeSet{});
    out.down.assign(ctx.num_objects(), AttributeSet{});
    for (std::size_t g = 0; g < ctx.num_objects(); ++g) {
        AttributeSet down = ctx.all_attributes() - ctx.row(g);
        for (std::size_t h = 0; h < ctx.num_objects(); ++h)
            if (ctx.row(g).is_proper_subset_of(ctx.row(h))) down &= ctx.row(h);
        out.down[g] = down;
    }
    for (std::size_t m = 0; m < ctx.num_attributes(); ++m) {
        ObjectSet up = ctx.all_objects() - ctx.column(m);
        for (std::size_t n = 0; n < ctx.num_attributes(); ++n)
            if (ctx.column(m).is_proper_subset_of(ctx.column(n))) up &= ctx.column(n);
        for (std::size_t g : up) out.up[g].insert(m);
    }
    return out;
}

}  // namespace boolfca
