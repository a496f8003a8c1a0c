#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "context.hpp"
#include "error.hpp"
#include "index_set.hpp"
#include "next_closure.hpp"

namespace boolfca {

/// Formal concept (A, B) with A' = B and B' = A in its owning context.
struct Concept {
    ObjectSet extent;
    AttributeSet intent;

    bool operator==(const Concept&) const = default;
};

[[nodiscard]] inline bool canonical_less(const Concept& a, const Concept& b)
{
    return canonical_less(a.extent, b.extent);
}

/// Suborder / sublattice element set: a bitset over the concept indices of a
/// fixed parent lattice.
using ConceptSet = DynamicBitset;

inline constexpr std::size_t kDefaultMaxConcepts = std::size_t{1} << 22;

/// All concepts of a context given by its two derivation operators, found by
/// NextClosure over the extents. `ground` are the admissible objects.
template <typename DeriveObjects, typename DeriveAttributes>
[[nodiscard]] std::vector<Concept> collect_concepts(ObjectSet ground, DeriveObjects&& derive_objects,
                                                    DeriveAttributes&& derive_attributes,
                                                    std::size_t max_concepts = kDefaultMaxConcepts)
{
    std::vector<Concept> out;
    const auto close = [&](ObjectSet a) { return derive_attributes(derive_objects(a)); };
    next_closure(ground.to_vector(), ObjectSet{}, close, [&](const ObjectSet& extent) {
        if (out.size() >= max_concepts)
            throw BudgetExceeded("concept enumeration exceeded " + std::to_string(max_concepts) + " concepts");
        out.push_back({extent, derive_objects(extent)});
        return true;
    });
    return out;
}

/// Closure enumeration of all concepts of `ctx`, canonically sorted.
[[nodiscard]] inline std::vector<Concept> concepts_of(const FormalContext& ctx,
                                                      std::size_t max_concepts = kDefaultMaxConcepts)
{
    if (ctx.num_objects() > kMaxExhaustiveSize || ctx.num_attributes() > kMaxExhaustiveSize)
        throw InvalidArgument("context exceeds the 24x24 bound for concept enumeration");
    auto out = collect_concepts(
        ctx.all_objects(), [&](ObjectSet a) { return ctx.derive_objects(a); },
        [&](AttributeSet b) { return ctx.derive_attributes(b); }, max_concepts);
    std::sort(out.begin(), out.end(), [](const Concept& a, const Concept& b) { return canonical_less(a, b); });
    return out;
}

/// Reference enumeration: closes every object subset and deduplicates.
/// Uses cell-by-cell incidence lookups only, independent of the derivation
/// operators. Exponential in |G|; meant for cross-checks on small contexts.
[[nodiscard]] inline std::vector<Concept> naive_concepts(const FormalContext& ctx)
{
    const std::size_t ng = ctx.num_objects();
    const std::size_t nm = ctx.num_attributes();
    if (ng > 20) throw InvalidArgument("naive enumeration limited to 20 objects");
    std::unordered_set<IndexSet> extents;
    std::vector<Concept> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ng); ++mask) {
        AttributeSet intent;
        for (std::size_t m = 0; m < nm; ++m) {
            bool all = true;
            for (std::size_t g = 0; g < ng && all; ++g)
                if (((mask >> g) & 1U) != 0 && !ctx.incident(g, m)) all = false;
            if (all) intent.insert(m);
        }
        ObjectSet extent;
        for (std::size_t g = 0; g < ng; ++g) {
            bool all = true;
            for (std::size_t m : intent) all = all && ctx.incident(g, m);
            if (all) extent.insert(g);
        }
        if (extents.insert(extent).second) out.push_back({extent, intent});
    }
    std::sort(out.begin(), out.end(), [](const Concept& a, const Concept& b) { return canonical_less(a, b); });
    return out;
}

/// 𝔅(K) with order, covers, and constant-time join/meet lookups.
///
/// Concepts are indexed in canonical order (extent size, then lexicographic
/// extent), so index 0 is the bottom and the last index the top.
class ConceptLattice {
public:
    ConceptLattice() = default;

    explicit ConceptLattice(FormalContext ctx, std::size_t max_concepts = kDefaultMaxConcepts)
        : ConceptLattice(ctx, concepts_of(ctx, max_concepts), 0)
    {
    }

    /// From a precomputed concept list (any order).
    ConceptLattice(FormalContext ctx, std::vector<Concept> concepts, int /*tag*/)
        : ctx_(std::move(ctx)), concepts_(std::move(concepts))
    {
        std::sort(concepts_.begin(), concepts_.end(),
                  [](const Concept& a, const Concept& b) { return canonical_less(a, b); });
        for (std::size_t i = 0; i < concepts_.size(); ++i) {
            extent_index_.emplace(concepts_[i].extent, i);
            intent_index_.emplace(concepts_[i].intent, i);
        }
        build_covers();
        if (concepts_.size() <= kTableLimit) build_tables();
    }

    [[nodiscard]] const FormalContext& context() const { return ctx_; }
    [[nodiscard]] std::size_t size() const { return concepts_.size(); }
    [[nodiscard]] const Concept& concept_at(std::size_t i) const { return concepts_[i]; }
    [[nodiscard]] const Concept& operator[](std::size_t i) const { return concepts_[i]; }
    [[nodiscard]] const std::vector<Concept>& concepts() const { return concepts_; }

    [[nodiscard]] std::size_t bottom() const { return 0; }
    [[nodiscard]] std::size_t top() const { return concepts_.size() - 1; }

    /// (A1,B1) <= (A2,B2) iff A1 ⊆ A2.
    [[nodiscard]] bool leq(std::size_t i, std::size_t j) const
    {
        return concepts_[i].extent.is_subset_of(concepts_[j].extent);
    }
    [[nodiscard]] bool less(std::size_t i, std::size_t j) const { return i != j && leq(i, j); }

    [[nodiscard]] std::optional<std::size_t> index_of_extent(ObjectSet extent) const
    {
        auto it = extent_index_.find(extent);
        if (it == extent_index_.end()) return std::nullopt;
        return it->second;
    }
    [[nodiscard]] std::optional<std::size_t> index_of_intent(AttributeSet intent) const
    {
        auto it = intent_index_.find(intent);
        if (it == intent_index_.end()) return std::nullopt;
        return it->second;
    }
    [[nodiscard]] std::optional<std::size_t> index_of(const Concept& c) const
    {
        auto i = index_of_extent(c.extent);
        if (!i || concepts_[*i].intent != c.intent) return std::nullopt;
        return i;
    }
    /// Index of the concept whose extent is the closure of `objects`.
    [[nodiscard]] std::size_t concept_of_objects(ObjectSet objects) const
    {
        return extent_index_.at(ctx_.closure_objects(objects));
    }
    [[nodiscard]] std::size_t concept_of_attributes(AttributeSet attributes) const
    {
        return intent_index_.at(ctx_.closure_attributes(attributes));
    }

    [[nodiscard]] std::size_t join(std::size_t i, std::size_t j) const
    {
        if (!join_table_.empty()) return join_table_[i * concepts_.size() + j];
        return intent_index_.at(concepts_[i].intent & concepts_[j].intent);
    }
    [[nodiscard]] std::size_t meet(std::size_t i, std::size_t j) const
    {
        if (!meet_table_.empty()) return meet_table_[i * concepts_.size() + j];
        return extent_index_.at(concepts_[i].extent & concepts_[j].extent);
    }
    /// Join of a set; the empty join is the bottom.
    [[nodiscard]] std::size_t join(const ConceptSet& s) const
    {
        AttributeSet intent = ctx_.all_attributes();
        bool any = false;
        s.for_each([&](std::size_t i) {
            intent &= concepts_[i].intent;
            any = true;
        });
        return any ? intent_index_.at(ctx_.closure_attributes(intent)) : bottom();
    }
    /// Meet of a set; the empty meet is the top.
    [[nodiscard]] std::size_t meet(const ConceptSet& s) const
    {
        ObjectSet extent = ctx_.all_objects();
        bool any = false;
        s.for_each([&](std::size_t i) {
            extent &= concepts_[i].extent;
            any = true;
        });
        return any ? extent_index_.at(extent) : top();
    }

    [[nodiscard]] const std::vector<std::size_t>& upper_covers(std::size_t i) const { return upper_[i]; }
    [[nodiscard]] const std::vector<std::size_t>& lower_covers(std::size_t i) const { return lower_[i]; }

    [[nodiscard]] ConceptSet atoms() const { return ConceptSet::from_range(size(), upper_[bottom()]); }
    [[nodiscard]] ConceptSet coatoms() const { return ConceptSet::from_range(size(), lower_[top()]); }

    [[nodiscard]] ConceptSet all() const { return ConceptSet::full(size()); }
    [[nodiscard]] ConceptSet none() const { return ConceptSet(size()); }

    /// Principal ideal (c] and filter [c).
    [[nodiscard]] ConceptSet down_set(std::size_t c) const
    {
        ConceptSet s(size());
        for (std::size_t i = 0; i < size(); ++i)
            if (leq(i, c)) s.insert(i);
        return s;
    }
    [[nodiscard]] ConceptSet up_set(std::size_t c) const
    {
        ConceptSet s(size());
        for (std::size_t i = 0; i < size(); ++i)
            if (leq(c, i)) s.insert(i);
        return s;
    }

private:
    static constexpr std::size_t kTableLimit = 512;

    void build_covers()
    {
        const std::size_t n = concepts_.size();
        upper_.assign(n, {});
        lower_.assign(n, {});
        std::unordered_map<std::size_t, std::size_t> hits;
        for (std::size_t i = 0; i < n; ++i) {
            const ObjectSet extent = concepts_[i].extent;
            hits.clear();
            for (std::size_t g : ctx_.all_objects() - extent) ++hits[extent_index_.at(ctx_.closure_objects(extent.with(g)))];
            for (auto [c, count] : hits)
                if (count == (concepts_[c].extent - extent).size()) upper_[i].push_back(c);
            std::sort(upper_[i].begin(), upper_[i].end());
            for (std::size_t c : upper_[i]) lower_[c].push_back(i);
        }
        for (auto& l : lower_) std::sort(l.begin(), l.end());
    }

    void build_tables()
    {
        const std::size_t n = concepts_.size();
        join_table_.resize(n * n);
        meet_table_.resize(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                join_table_[i * n + j] =
                    static_cast<std::uint32_t>(intent_index_.at(concepts_[i].intent & concepts_[j].intent));
                meet_table_[i * n + j] =
                    static_cast<std::uint32_t>(extent_index_.at(concepts_[i].extent & concepts_[j].extent));
            }
    }

    FormalContext ctx_;
    std::vector<Concept> concepts_;
    std::unordered_map<IndexSet, std::size_t> extent_index_;
    std::unordered_map<IndexSet, std::size_t> intent_index_;
    std::vector<std::vector<std::size_t>> upper_;
    std::vector<std::vector<std::size_t>> lower_;
    std::vector<std::uint32_t> join_table_;
    std::vector<std::uint32_t> meet_table_;
};

[[nodiscard]] inline ConceptLattice enumerate_concepts(const FormalContext& ctx,
                                                       std::size_t max_concepts = kDefaultMaxConcepts)
{
    return ConceptLattice(ctx, max_concepts);
}

// ---------------------------------------------------------------------------
// Suborders

/// Least element of S under the induced order, if any.
[[nodiscard]] inline std::optional<std::size_t> suborder_bottom(const ConceptLattice& lat, const ConceptSet& s)
{
    std::optional<std::size_t> result;
    s.for_each([&](std::size_t i) {
        if (!result && [&] {
                bool least = true;
                s.for_each([&](std::size_t j) { least = least && lat.leq(i, j); });
                return least;
            }())
            result = i;
    });
    return result;
}

[[nodiscard]] inline std::optional<std::size_t> suborder_top(const ConceptLattice& lat, const ConceptSet& s)
{
    std::optional<std::size_t> result;
    s.for_each([&](std::size_t i) {
        if (!result && [&] {
                bool greatest = true;
                s.for_each([&](std::size_t j) { greatest = greatest && lat.leq(j, i); });
                return greatest;
            }())
            result = i;
    });
    return result;
}

[[nodiscard]] inline ConceptSet minimal_elements(const ConceptLattice& lat, const ConceptSet& s)
{
    ConceptSet out(lat.size());
    s.for_each([&](std::size_t i) {
        bool minimal = true;
        s.for_each([&](std::size_t j) { minimal = minimal && !lat.less(j, i); });
        if (minimal) out.insert(i);
    });
    return out;
}

[[nodiscard]] inline ConceptSet maximal_elements(const ConceptLattice& lat, const ConceptSet& s)
{
    ConceptSet out(lat.size());
    s.for_each([&](std::size_t i) {
        bool maximal = true;
        s.for_each([&](std::size_t j) { maximal = maximal && !lat.less(i, j); });
        if (maximal) out.insert(i);
    });
    return out;
}

/// Atoms of the suborder: minimal elements above its least element.
[[nodiscard]] inline ConceptSet suborder_atoms(const ConceptLattice& lat, const ConceptSet& s)
{
    if (s.empty()) throw InvalidArgument("atoms of an empty suborder");
    const auto bottom = suborder_bottom(lat, s);
    if (!bottom) throw InvalidArgument("suborder has no least element");
    ConceptSet rest = s;
    rest.erase(*bottom);
    return minimal_elements(lat, rest);
}

/// Coatoms of the suborder: maximal elements below its greatest element.
[[nodiscard]] inline ConceptSet suborder_coatoms(const ConceptLattice& lat, const ConceptSet& s)
{
    if (s.empty()) throw InvalidArgument("coatoms of an empty suborder");
    const auto top = suborder_top(lat, s);
    if (!top) throw InvalidArgument("suborder has no greatest element");
    ConceptSet rest = s;
    rest.erase(*top);
    return maximal_elements(lat, rest);
}

// ---------------------------------------------------------------------------
// Minimal generators

namespace detail {

template <typename Close>
std::vector<IndexSet> minimal_generators(IndexSet target, Close&& close)
{
    if (target.size() > kMaxExhaustiveSize) throw InvalidArgument("minimal generator search limited to 24 elements");
    const std::vector<std::size_t> elems = target.to_vector();
    std::vector<IndexSet> out;
    const std::uint64_t limit = std::uint64_t{1} << elems.size();
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        IndexSet candidate;
        for (std::size_t b = 0; b < elems.size(); ++b)
            if (((mask >> b) & 1U) != 0) candidate.insert(elems[b]);
        if (close(candidate) != target) continue;
        bool minimal = true;
        for (std::size_t x : candidate)
            if (close(candidate.without(x)) == target) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(candidate);
    }
    std::sort(out.begin(), out.end(), [](IndexSet a, IndexSet b) { return canonical_less(a, b); });
    return out;
}

}  // namespace detail

/// All ⊆-minimal O ⊆ A with O'' = A for the concept (A, B) at `c`.
[[nodiscard]] inline std::vector<ObjectSet> min_generators_obj(const ConceptLattice& lat, std::size_t c)
{
    const auto& ctx = lat.context();
    return detail::minimal_generators(lat[c].extent, [&](ObjectSet o) { return ctx.closure_objects(o); });
}

/// All ⊆-minimal D ⊆ B with D'' = B for the concept (A, B) at `c`.
[[nodiscard]] inline std::vector<AttributeSet> min_generators_att(const ConceptLattice& lat, std::size_t c)
{
    const auto& ctx = lat.context();
    return detail::minimal_generators(lat[c].intent, [&](AttributeSet d) { return ctx.closure_attributes(d); });
}

/// Union of all minimal generators, flattened to one set.
[[nodiscard]] inline ObjectSet min_generator_objects(const ConceptLattice& lat, std::size_t c)
{
    ObjectSet out;
    for (auto g : min_generators_obj(lat, c)) out |= g;
    return out;
}
[[nodiscard]] inline AttributeSet min_generator_attributes(const ConceptLattice& lat, std::size_t c)
{
    AttributeSet out;
    for (auto g : min_generators_att(lat, c)) out |= g;
    return out;
}

// ---------------------------------------------------------------------------
// Boolean structure

/// k if the lattice is isomorphic to the powerset of its k atoms.
[[nodiscard]] inline std::optional<std::size_t> is_boolean_lattice(const ConceptLattice& lat)
{
    const std::size_t n = lat.size();
    if (n == 0 || !std::has_single_bit(n)) return std::nullopt;
    const std::size_t k = static_cast<std::size_t>(std::countr_zero(n));
    const std::vector<std::size_t>& atoms = lat.upper_covers(lat.bottom());
    if (atoms.size() != k) return std::nullopt;
    std::vector<std::uint64_t> label(n, 0);
    std::vector<bool> used(n, false);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t a = 0; a < k; ++a)
            if (lat.leq(atoms[a], x)) label[x] |= std::uint64_t{1} << a;
        if (used[label[x]]) return std::nullopt;
        used[label[x]] = true;
    }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (lat.leq(x, y) != ((label[x] & ~label[y]) == 0)) return std::nullopt;
    return k;
}

/// k if S with the induced order is isomorphic to B(k).
[[nodiscard]] inline std::optional<std::size_t> is_boolean_suborder(const ConceptLattice& lat, const ConceptSet& s)
{
    const std::size_t n = s.size();
    if (n == 0 || !std::has_single_bit(n)) return std::nullopt;
    const std::size_t k = static_cast<std::size_t>(std::countr_zero(n));
    const auto bottom = suborder_bottom(lat, s);
    if (!bottom) return std::nullopt;
    ConceptSet rest = s;
    rest.erase(*bottom);
    const std::vector<std::size_t> primes = minimal_elements(lat, rest).to_vector();
    if (primes.size() != k) return std::nullopt;
    const std::vector<std::size_t> elems = s.to_vector();
    std::vector<std::uint64_t> label(elems.size(), 0);
    std::vector<bool> used(n, false);
    for (std::size_t e = 0; e < elems.size(); ++e) {
        for (std::size_t p = 0; p < k; ++p)
            if (lat.leq(primes[p], elems[e])) label[e] |= std::uint64_t{1} << p;
        if (used[label[e]]) return std::nullopt;
        used[label[e]] = true;
    }
    for (std::size_t x = 0; x < elems.size(); ++x)
        for (std::size_t y = 0; y < elems.size(); ++y)
            if (lat.leq(elems[x], elems[y]) != ((label[x] & ~label[y]) == 0)) return std::nullopt;
    return k;
}

[[nodiscard]] inline bool is_sub_join_semilattice(const ConceptLattice& lat, const ConceptSet& s)
{
    const auto elems = s.to_vector();
    for (std::size_t a = 0; a < elems.size(); ++a)
        for (std::size_t b = a + 1; b < elems.size(); ++b)
            if (!s.contains(lat.join(elems[a], elems[b]))) return false;
    return true;
}

[[nodiscard]] inline bool is_sub_meet_semilattice(const ConceptLattice& lat, const ConceptSet& s)
{
    const auto elems = s.to_vector();
    for (std::size_t a = 0; a < elems.size(); ++a)
        for (std::size_t b = a + 1; b < elems.size(); ++b)
            if (!s.contains(lat.meet(elems[a], elems[b]))) return false;
    return true;
}

[[nodiscard]] inline bool is_sublattice(const ConceptLattice& lat, const ConceptSet& s)
{
    const auto elems = s.to_vector();
    for (std::size_t a = 0; a < elems.size(); ++a)
        for (std::size_t b = a + 1; b < elems.size(); ++b)
            if (!s.contains(lat.join(elems[a], elems[b])) || !s.contains(lat.meet(elems[a], elems[b])))
                return false;
    return true;
}

/// Smallest sublattice containing S (binary joins and meets to a fixpoint).
[[nodiscard]] inline ConceptSet generated_sublattice(const ConceptLattice& lat, const ConceptSet& s)
{
    ConceptSet out = s;
    std::vector<std::size_t> members = s.to_vector();
    std::vector<std::size_t> frontier = members;
    while (!frontier.empty()) {
        std::vector<std::size_t> fresh;
        for (std::size_t x : frontier)
            for (std::size_t i = 0; i < members.size(); ++i) {
                for (std::size_t r : {lat.join(x, members[i]), lat.meet(x, members[i])})
                    if (!out.contains(r)) {
                        out.insert(r);
                        fresh.push_back(r);
                    }
            }
        members.insert(members.end(), fresh.begin(), fresh.end());
        frontier = std::move(fresh);
    }
    return out;
}

}  // namespace boolfca
