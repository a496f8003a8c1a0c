#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "context.hpp"
#include "error.hpp"
#include "index_set.hpp"
#include "lattice.hpp"

namespace boolfca {

/// Result of an enumeration; `truncated` is set when the node budget ran out
/// in truncate mode, in which case `items` is a subset of the full answer.
template <typename T>
struct Enumeration {
    std::vector<T> items;
    bool truncated = false;
    std::uint64_t nodes = 0;
};

using SelectorEnumeration = Enumeration<SubcontextSelector>;
using SuborderEnumeration = Enumeration<ConceptSet>;

[[nodiscard]] inline bool selector_less(const SubcontextSelector& a, const SubcontextSelector& b)
{
    if (a.objects != b.objects) return canonical_less(a.objects, b.objects);
    return canonical_less(a.attributes, b.attributes);
}

/// k iff ctx ≅ N^c(k): |G| = |M| = k and the non-incident cells form a
/// perfect matching.
[[nodiscard]] inline std::optional<std::size_t> is_contranominal(const FormalContext& ctx)
{
    const std::size_t k = ctx.num_objects();
    if (ctx.num_attributes() != k) return std::nullopt;
    AttributeSet missing_union;
    for (std::size_t g = 0; g < k; ++g) {
        const AttributeSet missing = ctx.all_attributes() - ctx.row(g);
        if (missing.size() != 1 || missing_union.intersects(missing)) return std::nullopt;
        missing_union |= missing;
    }
    return k;
}

/// Same test on the induced subcontext [H, N] without materializing it.
[[nodiscard]] inline std::optional<std::size_t> is_contranominal(const FormalContext& ctx,
                                                                 const SubcontextSelector& sel)
{
    if (sel.objects.size() != sel.attributes.size()) return std::nullopt;
    AttributeSet missing_union;
    for (std::size_t g : sel.objects) {
        const AttributeSet missing = sel.attributes - ctx.row(g);
        if (missing.size() != 1 || missing_union.intersects(missing)) return std::nullopt;
        missing_union |= missing;
    }
    return sel.objects.size();
}

namespace detail {

inline void check_dimension(std::size_t k, const EnumerationBudget& budget)
{
    if (k > budget.max_k)
        throw BudgetExceeded("dimension " + std::to_string(k) + " exceeds the budget's max_k of " +
                             std::to_string(budget.max_k));
}

}  // namespace detail

/// SRB_k: every [H, N] with |H| = |N| = k inducing a contranominal scale.
///
/// Objects are chosen in increasing order, each paired with the one attribute
/// of N it lacks; the pairing is forced by the induced table, so every
/// selector is produced once.
[[nodiscard]] inline SelectorEnumeration enumerate_srb(const FormalContext& ctx, std::size_t k,
                                                       const EnumerationBudget& budget = {})
{
    detail::check_dimension(k, budget);
    SelectorEnumeration out;
    NodeCounter counter(budget, "srb enumeration");
    ObjectSet h;
    AttributeSet n;
    const std::size_t ng = ctx.num_objects();

    auto search = [&](auto& self, std::size_t next_object) -> bool {
        if (!counter.tick()) return false;
        if (h.size() == k) {
            out.items.push_back({h, n});
            return true;
        }
        for (std::size_t g = next_object; g + (k - h.size()) <= ng; ++g) {
            const AttributeSet row = ctx.row(g);
            if (!n.is_subset_of(row)) continue;
            for (std::size_t m : ctx.all_attributes() - row - n) {
                if (!h.is_subset_of(ctx.column(m))) continue;
                h.insert(g);
                n.insert(m);
                const bool go_on = self(self, g + 1);
                h.erase(g);
                n.erase(m);
                if (!go_on) return false;
            }
        }
        return true;
    };
    out.truncated = !search(search, 0);
    out.nodes = counter.nodes();
    std::sort(out.items.begin(), out.items.end(), selector_less);
    return out;
}

/// Concept count of [H, N], stopping once it exceeds `limit`.
[[nodiscard]] inline std::size_t count_concepts_upto(const FormalContext& ctx, const SubcontextSelector& sel,
                                                     std::size_t limit)
{
    std::size_t count = 0;
    next_closure(
        sel.objects.to_vector(), ObjectSet{},
        [&](ObjectSet a) { return derive_attributes_in(ctx, sel, derive_objects_in(ctx, sel, a)); },
        [&](const ObjectSet&) { return ++count <= limit; });
    return count;
}

/// Lattice of the induced subcontext [H, N] (indices renumbered).
[[nodiscard]] inline ConceptLattice subcontext_lattice(const FormalContext& ctx, const SubcontextSelector& sel)
{
    return ConceptLattice(induced_subcontext(ctx, sel));
}

/// SB_k: every [H, N] whose concept lattice is Boolean of dimension k.
///
/// The standard context of such a subcontext is an SRB_k member of ctx, so
/// the search starts from each SRB core and adds objects and attributes.
/// Adding either can only add concepts, so a branch is cut as soon as the
/// count passes 2^k.
[[nodiscard]] inline SelectorEnumeration enumerate_sb(const FormalContext& ctx, std::size_t k,
                                                      const EnumerationBudget& budget = {})
{
    detail::check_dimension(k, budget);
    if (ctx.num_objects() > kMaxExhaustiveSize || ctx.num_attributes() > kMaxExhaustiveSize)
        throw InvalidArgument("SB enumeration limited to 24x24 contexts");
    const std::size_t target = std::size_t{1} << k;
    SelectorEnumeration out;
    NodeCounter counter(budget, "sb enumeration");
    std::set<SubcontextSelector> found;
    std::set<SubcontextSelector> visited;

    const auto cores = enumerate_srb(ctx, k, budget);
    out.truncated = cores.truncated;
    const std::size_t ng = ctx.num_objects();
    const std::size_t nm = ctx.num_attributes();

    // Extra elements are indexed 0..ng-1 for objects, ng..ng+nm-1 for attributes.
    auto search = [&](auto& self, SubcontextSelector sel, std::size_t next) -> bool {
        if (!visited.insert(sel).second) return true;
        if (!counter.tick()) return false;
        const std::size_t count = count_concepts_upto(ctx, sel, target);
        if (count > target) return true;
        if (count == target && is_boolean_lattice(subcontext_lattice(ctx, sel)) == k) found.insert(sel);
        for (std::size_t e = next; e < ng + nm; ++e) {
            SubcontextSelector grown = sel;
            if (e < ng) {
                if (sel.objects.contains(e)) continue;
                grown.objects.insert(e);
            } else {
                if (sel.attributes.contains(e - ng)) continue;
                grown.attributes.insert(e - ng);
            }
            if (!self(self, grown, e + 1)) return false;
        }
        return true;
    };
    for (const auto& core : cores.items)
        if (!search(search, core, 0)) {
            out.truncated = true;
            break;
        }
    out.items.assign(found.begin(), found.end());
    std::sort(out.items.begin(), out.items.end(), selector_less);
    out.nodes = counter.nodes();
    return out;
}

/// SOB_k: every set of concepts order-isomorphic to B(k) under the induced
/// order.
///
/// Backtracks an order embedding of B(k) (elements = bitmasks over k atoms):
/// bottom first, then atoms, then by rank. Atom images are required to
/// increase in concept index, which picks one of the k! equivalent embeddings
/// per image set, so results are duplicate-free.
[[nodiscard]] inline SuborderEnumeration enumerate_sob(const ConceptLattice& lat, std::size_t k,
                                                       const EnumerationBudget& budget = {})
{
    detail::check_dimension(k, budget);
    SuborderEnumeration out;
    NodeCounter counter(budget, "sob enumeration");
    const std::size_t size = std::size_t{1} << k;
    const std::size_t n = lat.size();
    if (size > n) return out;

    std::vector<std::uint32_t> order(size);
    for (std::uint32_t i = 0; i < size; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });

    std::vector<std::size_t> image(size, 0);
    std::vector<bool> used(n, false);

    auto fits = [&](std::size_t pos, std::size_t c) {
        const std::uint32_t x = order[pos];
        for (std::size_t q = 0; q < pos; ++q) {
            const std::uint32_t y = order[q];
            const std::size_t d = image[y];
            if (((y & ~x) == 0) != lat.leq(d, c)) return false;
            if (((x & ~y) == 0) != lat.leq(c, d)) return false;
        }
        return true;
    };

    auto search = [&](auto& self, std::size_t pos) -> bool {
        if (!counter.tick()) return false;
        if (pos == size) {
            ConceptSet s(n);
            for (std::size_t c : image) s.insert(c);
            out.items.push_back(std::move(s));
            return true;
        }
        const std::uint32_t x = order[pos];
        std::size_t start = 0;
        // Atoms in increasing concept index; every other element lies above bottom.
        if (std::popcount(x) == 1 && x != 1) start = image[x >> 1] + 1;
        for (std::size_t c = start; c < n; ++c) {
            if (used[c] || !fits(pos, c)) continue;
            image[x] = c;
            used[c] = true;
            const bool go_on = self(self, pos + 1);
            used[c] = false;
            if (!go_on) return false;
        }
        return true;
    };
    out.truncated = !search(search, 0);
    out.nodes = counter.nodes();
    std::sort(out.items.begin(), out.items.end());
    return out;
}

/// SLB_k: the members of SOB_k closed under the lattice's joins and meets.
[[nodiscard]] inline SuborderEnumeration enumerate_slb(const ConceptLattice& lat, std::size_t k,
                                                       const EnumerationBudget& budget = {})
{
    auto sob = enumerate_sob(lat, k, budget);
    std::erase_if(sob.items, [&](const ConceptSet& s) { return !is_sublattice(lat, s); });
    return sob;
}

}  // namespace boolfca
