#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "boolean_enum.hpp"
#include "context.hpp"
#include "error.hpp"
#include "index_set.hpp"
#include "lattice.hpp"
#include "next_closure.hpp"

namespace boolfca {

/// Candidate triple (H, N, J) over a parent context's index space.
/// `rows[g]` holds { m : (g, m) ∈ J } for every parent object g; rows of
/// objects outside H are empty.
struct ClosedSubcontext {
    ObjectSet objects;
    AttributeSet attributes;
    std::vector<AttributeSet> rows;

    ClosedSubcontext() = default;
    ClosedSubcontext(ObjectSet h, AttributeSet n, std::vector<AttributeSet> j)
        : objects(h), attributes(n), rows(std::move(j))
    {
    }

    /// (H, N, ∅) sized for a parent with `num_objects` objects.
    static ClosedSubcontext empty_relation(std::size_t num_objects, ObjectSet h, AttributeSet n)
    {
        return {h, n, std::vector<AttributeSet>(num_objects)};
    }

    [[nodiscard]] bool incident(std::size_t g, std::size_t m) const { return rows[g].contains(m); }
    void add(std::size_t g, std::size_t m) { rows[g].insert(m); }
    /// Adds A × B to J (H and N are left alone).
    void add_product(ObjectSet a, AttributeSet b)
    {
        for (std::size_t g : a) rows[g] |= b;
    }

    /// X^J for X ⊆ H (N for X = ∅).
    [[nodiscard]] AttributeSet derive_objects(ObjectSet x) const
    {
        AttributeSet out = attributes;
        for (std::size_t g : x) out &= rows[g];
        return out;
    }
    /// Y^J for Y ⊆ N (H for Y = ∅).
    [[nodiscard]] ObjectSet derive_attributes(AttributeSet y) const
    {
        ObjectSet out;
        for (std::size_t g : objects)
            if (y.is_subset_of(rows[g])) out.insert(g);
        return out;
    }
    [[nodiscard]] std::size_t relation_size() const
    {
        std::size_t n = 0;
        for (auto r : rows) n += r.size();
        return n;
    }

    bool operator==(const ClosedSubcontext&) const = default;
    bool operator<(const ClosedSubcontext& o) const
    {
        if (objects != o.objects) return canonical_less(objects, o.objects);
        if (attributes != o.attributes) return canonical_less(attributes, o.attributes);
        return rows < o.rows;
    }
};

/// (H, N, I ∩ (H×N)).
[[nodiscard]] inline ClosedSubcontext induced_triple(const FormalContext& ctx, const SubcontextSelector& sel)
{
    auto t = ClosedSubcontext::empty_relation(ctx.num_objects(), sel.objects, sel.attributes);
    for (std::size_t g : sel.objects) t.rows[g] = ctx.row(g) & sel.attributes;
    return t;
}

/// Componentwise intersection.
[[nodiscard]] inline ClosedSubcontext intersect(const ClosedSubcontext& a, const ClosedSubcontext& b)
{
    ClosedSubcontext out = a;
    out.objects &= b.objects;
    out.attributes &= b.attributes;
    for (std::size_t g = 0; g < out.rows.size(); ++g) out.rows[g] &= b.rows[g];
    return out;
}

/// Throws unless J ⊆ H × N and the triple matches the context's size.
inline void validate_shape(const FormalContext& ctx, const ClosedSubcontext& t)
{
    if (t.rows.size() != ctx.num_objects()) throw InvalidArgument("relation sized for a different context");
    if (!t.objects.is_subset_of(ctx.all_objects()) || !t.attributes.is_subset_of(ctx.all_attributes()))
        throw InvalidArgument("H or N out of range");
    for (std::size_t g = 0; g < t.rows.size(); ++g) {
        if (t.rows[g].empty()) continue;
        if (!t.objects.contains(g) || !t.rows[g].is_subset_of(t.attributes))
            throw InvalidArgument("J is not contained in H x N");
    }
}

[[nodiscard]] inline bool relation_within_incidence(const FormalContext& ctx, const ClosedSubcontext& t)
{
    for (std::size_t g = 0; g < t.rows.size(); ++g)
        if (!t.rows[g].is_subset_of(ctx.row(g))) return false;
    return true;
}

/// All concepts of (H, N, J), canonically sorted.
[[nodiscard]] inline std::vector<Concept> triple_concepts(const ClosedSubcontext& t)
{
    auto out = collect_concepts(
        t.objects, [&](ObjectSet a) { return t.derive_objects(a); },
        [&](AttributeSet b) { return t.derive_attributes(b); });
    std::sort(out.begin(), out.end(), [](const Concept& a, const Concept& b) { return canonical_less(a, b); });
    return out;
}

/// Definition: J ⊆ I and every concept of (H, N, J) is a concept of ctx.
[[nodiscard]] inline bool is_closed_subcontext(const FormalContext& ctx, const ClosedSubcontext& t)
{
    validate_shape(ctx, t);
    if (!relation_within_incidence(ctx, t)) return false;
    for (const auto& c : triple_concepts(t))
        if (ctx.derive_objects(c.extent) != c.intent || ctx.derive_attributes(c.intent) != c.extent) return false;
    return true;
}

/// K_S = (∪A, ∪B, ∪ A×B) over the concepts (A, B) of the sublattice S.
[[nodiscard]] inline ClosedSubcontext sublattice_to_closed(const ConceptLattice& lat, const ConceptSet& s)
{
    if (s.empty()) throw InvalidArgument("empty element set is not a sublattice");
    if (!is_sublattice(lat, s)) throw InvalidArgument("element set is not a sublattice");
    auto t = ClosedSubcontext::empty_relation(lat.context().num_objects(), {}, {});
    s.for_each([&](std::size_t i) {
        const Concept& c = lat[i];
        t.objects |= c.extent;
        t.attributes |= c.intent;
        t.add_product(c.extent, c.intent);
    });
    return t;
}

/// The concepts of a closed-subcontext, located in the parent lattice.
[[nodiscard]] inline ConceptSet closed_to_sublattice(const ConceptLattice& lat, const ClosedSubcontext& t)
{
    if (!is_closed_subcontext(lat.context(), t)) throw InvalidArgument("triple is not a closed-subcontext");
    ConceptSet s = lat.none();
    for (const auto& c : triple_concepts(t)) s.insert(*lat.index_of(c));
    return s;
}

/// Every nonempty sublattice, in lectic order of the element sets.
[[nodiscard]] inline Enumeration<ConceptSet> enumerate_sublattices(const ConceptLattice& lat,
                                                                   const EnumerationBudget& budget = {})
{
    Enumeration<ConceptSet> out;
    NodeCounter counter(budget, "sublattice enumeration");
    std::vector<std::size_t> ground(lat.size());
    for (std::size_t i = 0; i < ground.size(); ++i) ground[i] = i;
    out.truncated = !next_closure(
        ground, lat.none(), [&](const ConceptSet& s) { return generated_sublattice(lat, s); },
        [&](const ConceptSet& s) {
            if (!counter.tick()) return false;
            if (!s.empty()) out.items.push_back(s);
            return true;
        });
    out.nodes = counter.nodes();
    return out;
}

/// Smallest closed-subcontext whose lattice contains every concept of T.
[[nodiscard]] inline ClosedSubcontext smallest_closed_containing(const ConceptLattice& lat, const ConceptSet& t)
{
    if (t.empty()) throw InvalidArgument("smallest closed-subcontext of an empty concept set");
    return sublattice_to_closed(lat, generated_sublattice(lat, t));
}

// ---------------------------------------------------------------------------
// Characterizations of closedness

/// X^{JJ} ⊇ X^{JI} for every X ⊆ H and every X ⊆ N.
[[nodiscard]] inline bool check_double_prime_condition(const FormalContext& ctx, const ClosedSubcontext& t)
{
    validate_shape(ctx, t);
    if (t.objects.size() > 20 || t.attributes.size() > 20)
        throw BudgetExceeded("double-prime check limited to |H|, |N| <= 20");
    if (!relation_within_incidence(ctx, t)) return false;
    auto for_each_subset = [](IndexSet base, auto&& f) {
        const auto elems = base.to_vector();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << elems.size()); ++mask) {
            IndexSet x;
            for (std::size_t b = 0; b < elems.size(); ++b)
                if (((mask >> b) & 1U) != 0) x.insert(elems[b]);
            if (!f(x)) return false;
        }
        return true;
    };
    const bool objects_ok = for_each_subset(t.objects, [&](ObjectSet x) {
        const AttributeSet xj = t.derive_objects(x);
        return ctx.derive_attributes(xj).is_subset_of(t.derive_attributes(xj));
    });
    if (!objects_ok) return false;
    return for_each_subset(t.attributes, [&](AttributeSet x) {
        const ObjectSet xj = t.derive_attributes(x);
        return ctx.derive_objects(xj).is_subset_of(t.derive_objects(xj));
    });
}

/// Cell-local test. Every (g, m) ∈ (H×N) ∩ (I \ J) needs some h ∈ H with
/// g^J ⊆ h^J and (h, m) ∉ I, and some n ∈ N with m^J ⊆ n^J and (g, n) ∉ I.
/// Added to that, the least and greatest concepts of the triple must be
/// concepts of ctx: (N^J)^I = N and (H^J)^I = H.
[[nodiscard]] inline bool check_condition_C(const FormalContext& ctx, const ClosedSubcontext& t)
{
    validate_shape(ctx, t);
    if (!relation_within_incidence(ctx, t)) return false;
    if (ctx.derive_objects(t.derive_attributes(t.attributes)) != t.attributes) return false;
    if (ctx.derive_attributes(t.derive_objects(t.objects)) != t.objects) return false;
    for (std::size_t g : t.objects) {
        const AttributeSet gj = t.rows[g];
        for (std::size_t m : (ctx.row(g) & t.attributes) - gj) {
            bool object_escape = false;
            for (std::size_t h : t.objects)
                if (gj.is_subset_of(t.rows[h]) && !ctx.incident(h, m)) {
                    object_escape = true;
                    break;
                }
            if (!object_escape) return false;
            const ObjectSet mj = t.derive_attributes(AttributeSet::singleton(m));
            bool attribute_escape = false;
            for (std::size_t n : t.attributes)
                if (mj.is_subset_of(t.derive_attributes(AttributeSet::singleton(n))) && !ctx.incident(g, n)) {
                    attribute_escape = true;
                    break;
                }
            if (!attribute_escape) return false;
        }
    }
    return true;
}

/// (H, N, J) read as a standalone context over the parent's index space.
[[nodiscard]] inline ArrowRelations triple_arrows(const ClosedSubcontext& t)
{
    ArrowRelations out;
    out.up.assign(t.rows.size(), AttributeSet{});
    out.down.assign(t.rows.size(), AttributeSet{});
    for (std::size_t g : t.objects) {
        AttributeSet down = t.attributes - t.rows[g];
        for (std::size_t h : t.objects)
            if (t.rows[g].is_proper_subset_of(t.rows[h])) down &= t.rows[h];
        out.down[g] = down;
    }
    for (std::size_t m : t.attributes) {
        const ObjectSet col = t.derive_attributes(AttributeSet::singleton(m));
        ObjectSet up = t.objects - col;
        for (std::size_t n : t.attributes) {
            const ObjectSet other = t.derive_attributes(AttributeSet::singleton(n));
            if (col.is_proper_subset_of(other)) up &= other;
        }
        for (std::size_t g : up) out.up[g].insert(m);
    }
    return out;
}

[[nodiscard]] inline bool is_clarified_triple(const ClosedSubcontext& t)
{
    std::set<IndexSet> rows;
    for (std::size_t g : t.objects) rows.insert(t.rows[g]);
    std::set<IndexSet> cols;
    for (std::size_t m : t.attributes) cols.insert(t.derive_attributes(AttributeSet::singleton(m)));
    return rows.size() == t.objects.size() && cols.size() == t.attributes.size();
}

/// For clarified (H, N, J): J ⊆ I ∩ (H×N) ⊆ (H×N) \ (↗^J ∪ ↙^J), plus the
/// same extremal-concept clause as condition (C).
[[nodiscard]] inline bool check_clarified_arrow_characterization(const FormalContext& ctx, const ClosedSubcontext& t)
{
    validate_shape(ctx, t);
    if (!is_clarified_triple(t)) throw InvalidArgument("arrow characterization requires a clarified triple");
    if (!relation_within_incidence(ctx, t)) return false;
    if (ctx.derive_objects(t.derive_attributes(t.attributes)) != t.attributes) return false;
    if (ctx.derive_attributes(t.derive_objects(t.objects)) != t.objects) return false;
    const ArrowRelations arrows = triple_arrows(t);
    for (std::size_t g : t.objects)
        if ((ctx.row(g) & t.attributes).intersects(arrows.up[g] | arrows.down[g])) return false;
    return true;
}

/// ↗^J ⊆ ↗^I and ↙^J ⊆ ↙^I.
[[nodiscard]] inline bool arrow_containment(const FormalContext& ctx, const ClosedSubcontext& t)
{
    const ArrowRelations inner = triple_arrows(t);
    const ArrowRelations outer = arrow_relations(ctx);
    for (std::size_t g : t.objects)
        if (!inner.up[g].is_subset_of(outer.up[g]) || !inner.down[g].is_subset_of(outer.down[g])) return false;
    return true;
}

/// Either H = G or some m ∈ N has m^J = H; either N = M or some g ∈ H has
/// g^J = N.
struct BoundaryWitnesses {
    bool full_objects = false;
    std::optional<std::size_t> attribute;
    bool full_attributes = false;
    std::optional<std::size_t> object;

    [[nodiscard]] bool holds() const
    {
        return (full_objects || attribute.has_value()) && (full_attributes || object.has_value());
    }
};

[[nodiscard]] inline BoundaryWitnesses boundary_witnesses(const FormalContext& ctx, const ClosedSubcontext& t)
{
    BoundaryWitnesses out;
    out.full_objects = t.objects == ctx.all_objects();
    out.full_attributes = t.attributes == ctx.all_attributes();
    for (std::size_t m : t.attributes)
        if (t.derive_attributes(AttributeSet::singleton(m)) == t.objects) {
            out.attribute = m;
            break;
        }
    for (std::size_t g : t.objects)
        if (t.rows[g] == t.attributes) {
            out.object = g;
            break;
        }
    return out;
}

// ---------------------------------------------------------------------------
// Canonical closed-subcontexts

/// (A, B, A×B): its only concept is (A, B).
[[nodiscard]] inline ClosedSubcontext concept_triple(const FormalContext& ctx, const Concept& c)
{
    auto t = ClosedSubcontext::empty_relation(ctx.num_objects(), c.extent, c.intent);
    t.add_product(c.extent, c.intent);
    return t;
}

/// (A, M, I ∩ (A×M)): lattice is the ideal ((A, B)].
[[nodiscard]] inline ClosedSubcontext ideal_triple(const FormalContext& ctx, const Concept& c)
{
    return induced_triple(ctx, {c.extent, ctx.all_attributes()});
}

/// (G, B, I ∩ (G×B)): lattice is the filter [(A, B)).
[[nodiscard]] inline ClosedSubcontext filter_triple(const FormalContext& ctx, const Concept& c)
{
    return induced_triple(ctx, {ctx.all_objects(), c.intent});
}

/// (C, B, A×B ∪ C×D) for (A, B) ≤ (C, D): lattice is {(A, B), (C, D)}.
[[nodiscard]] inline ClosedSubcontext pair_triple(const FormalContext& ctx, const Concept& lower, const Concept& upper)
{
    auto t = ClosedSubcontext::empty_relation(ctx.num_objects(), upper.extent, lower.intent);
    t.add_product(lower.extent, lower.intent);
    t.add_product(upper.extent, upper.intent);
    return t;
}

/// (C, B, I ∩ (C×B)) for (A, B) ≤ (C, D): lattice is the interval.
[[nodiscard]] inline ClosedSubcontext interval_triple(const FormalContext& ctx, const Concept& lower,
                                                      const Concept& upper)
{
    return induced_triple(ctx, {upper.extent, lower.intent});
}

// ---------------------------------------------------------------------------
// Boolean closed-subcontexts from contranominal scales

/// Lifts every concept (A_T, B_T) of the contranominal subcontext `srb` to a
/// concept (A_K, B_K) of ctx with A_T ⊆ A_K and B_T ⊆ B_K and forms
///     H~ = H ∪ ⋃ A_K,  N~ = N ∪ ⋃ B_K,  J~ = J ∪ ⋃ A_K × B_K.
/// Returns every distinct result that is a closed-subcontext with a Boolean
/// lattice of the same dimension.
///
/// A valid result's lattice contains every chosen lift, so the sublattice
/// generated by a partial choice may never exceed 2^k elements; that is the
/// pruning rule.
[[nodiscard]] inline Enumeration<ClosedSubcontext> boolean_closed_from_srb(const ConceptLattice& lat,
                                                                           const SubcontextSelector& srb,
                                                                           const EnumerationBudget& budget = {})
{
    const FormalContext& ctx = lat.context();
    const auto k = is_contranominal(ctx, srb);
    if (!k) throw InvalidArgument("selector does not induce a contranominal scale");
    detail::check_dimension(*k, budget);
    const std::size_t size = std::size_t{1} << *k;

    const ClosedSubcontext base = induced_triple(ctx, srb);
    const std::vector<Concept> inner = triple_concepts(base);
    std::vector<std::vector<std::size_t>> lifts(inner.size());
    for (std::size_t i = 0; i < inner.size(); ++i)
        for (std::size_t c = 0; c < lat.size(); ++c)
            if (inner[i].extent.is_subset_of(lat[c].extent) && inner[i].intent.is_subset_of(lat[c].intent))
                lifts[i].push_back(c);

    Enumeration<ClosedSubcontext> out;
    NodeCounter counter(budget, "lift enumeration");
    std::set<ClosedSubcontext> found;
    std::vector<std::size_t> choice(inner.size());

    auto search = [&](auto& self, std::size_t pos, const ConceptSet& generated) -> bool {
        if (!counter.tick()) return false;
        if (pos == inner.size()) {
            ClosedSubcontext t = base;
            for (std::size_t c : choice) {
                t.objects |= lat[c].extent;
                t.attributes |= lat[c].intent;
                t.add_product(lat[c].extent, lat[c].intent);
            }
            if (found.count(t) != 0 || !is_closed_subcontext(ctx, t)) return true;
            if (triple_concepts(t).size() != size) return true;
            if (is_boolean_suborder(lat, closed_to_sublattice(lat, t)) != *k) return true;
            found.insert(std::move(t));
            return true;
        }
        for (std::size_t c : lifts[pos]) {
            ConceptSet next = generated;
            next.insert(c);
            next = generated_sublattice(lat, next);
            if (next.size() > size) continue;
            choice[pos] = c;
            if (!self(self, pos + 1, next)) return false;
        }
        return true;
    };
    out.truncated = !search(search, 0, lat.none());
    out.items.assign(found.begin(), found.end());
    out.nodes = counter.nodes();
    return out;
}

/// Visits every candidate (H, N, J) with J ⊆ I ∩ (H×N). Exponential in |G|,
/// |M| and |I|; used for exhaustive agreement scans on tiny contexts.
template <typename Visit>
void for_each_candidate_triple(const FormalContext& ctx, Visit&& visit)
{
    if (ctx.num_objects() > 4 || ctx.num_attributes() > 4)
        throw InvalidArgument("candidate triple scan limited to 4x4 contexts");
    const std::uint64_t ng = std::uint64_t{1} << ctx.num_objects();
    const std::uint64_t nm = std::uint64_t{1} << ctx.num_attributes();
    for (std::uint64_t hm = 0; hm < ng; ++hm)
        for (std::uint64_t nmask = 0; nmask < nm; ++nmask) {
            const ObjectSet h(hm);
            const AttributeSet n(nmask);
            std::vector<std::pair<std::size_t, std::size_t>> cells;
            for (std::size_t g : h)
                for (std::size_t m : ctx.row(g) & n) cells.emplace_back(g, m);
            for (std::uint64_t jm = 0; jm < (std::uint64_t{1} << cells.size()); ++jm) {
                auto t = ClosedSubcontext::empty_relation(ctx.num_objects(), h, n);
                for (std::size_t c = 0; c < cells.size(); ++c)
                    if (((jm >> c) & 1U) != 0) t.add(cells[c].first, cells[c].second);
                visit(static_cast<const ClosedSubcontext&>(t));
            }
        }
}

}  // namespace boolfca
