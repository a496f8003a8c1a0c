#pragma once

// Brute-force reference implementations. They work on plain bool tables and
// std::vector<int> sets and share no code with the library beyond reading a
// FormalContext's incidence.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include <boolfca/context.hpp>

namespace oracle {

using Table = std::vector<std::vector<bool>>;
using Mask = std::uint32_t;

inline Table table_of(const boolfca::FormalContext& ctx)
{
    Table t(ctx.num_objects(), std::vector<bool>(ctx.num_attributes()));
    for (std::size_t g = 0; g < ctx.num_objects(); ++g)
        for (std::size_t m = 0; m < ctx.num_attributes(); ++m) t[g][m] = ctx.incident(g, m);
    return t;
}

inline int popcount(Mask x)
{
    int n = 0;
    for (; x; x &= x - 1) ++n;
    return n;
}

inline bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

/// Concepts of the table restricted to object mask H and attribute mask N,
/// as (extent mask, intent mask), sorted by extent size then value.
inline std::vector<std::pair<Mask, Mask>> concepts(const Table& t, Mask h, Mask n)
{
    const std::size_t ng = t.size();
    const std::size_t nm = ng ? t[0].size() : 0;
    auto up = [&](Mask a) {
        Mask out = 0;
        for (std::size_t m = 0; m < nm; ++m) {
            if (!((n >> m) & 1U)) continue;
            bool all = true;
            for (std::size_t g = 0; g < ng; ++g)
                if (((a >> g) & 1U) && !t[g][m]) all = false;
            if (all) out |= Mask{1} << m;
        }
        return out;
    };
    auto down = [&](Mask b) {
        Mask out = 0;
        for (std::size_t g = 0; g < ng; ++g) {
            if (!((h >> g) & 1U)) continue;
            bool all = true;
            for (std::size_t m = 0; m < nm; ++m)
                if (((b >> m) & 1U) && !t[g][m]) all = false;
            if (all) out |= Mask{1} << g;
        }
        return out;
    };
    std::set<std::pair<Mask, Mask>> found;
    for (Mask a = 0; a < (Mask{1} << ng); ++a) {
        if (!subset(a, h)) continue;
        const Mask b = up(a);
        if (down(b) == a) found.insert({a, b});
    }
    std::vector<std::pair<Mask, Mask>> out(found.begin(), found.end());
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& x, const auto& y) { return popcount(x.first) < popcount(y.first); });
    return out;
}

inline std::vector<std::pair<Mask, Mask>> concepts(const Table& t)
{
    const std::size_t nm = t.empty() ? 0 : t[0].size();
    return concepts(t, (Mask{1} << t.size()) - 1, (Mask{1} << nm) - 1);
}

/// Concepts of an arbitrary relation J (rows as attribute masks) on H × N.
inline std::vector<std::pair<Mask, Mask>> relation_concepts(const std::vector<Mask>& rows, Mask h, Mask n)
{
    std::set<std::pair<Mask, Mask>> found;
    for (Mask a = 0; a < (Mask{1} << rows.size()); ++a) {
        if (!subset(a, h)) continue;
        Mask b = n;
        for (std::size_t g = 0; g < rows.size(); ++g)
            if ((a >> g) & 1U) b &= rows[g];
        Mask back = 0;
        for (std::size_t g = 0; g < rows.size(); ++g)
            if (((h >> g) & 1U) && subset(b, rows[g])) back |= Mask{1} << g;
        if (back == a) found.insert({a, b});
    }
    return {found.begin(), found.end()};
}

/// Definition check: every concept of (H, N, J) is a concept of the table.
inline bool closed(const Table& t, const std::vector<Mask>& rows, Mask h, Mask n)
{
    for (std::size_t g = 0; g < rows.size(); ++g) {
        if (!((h >> g) & 1U) && rows[g]) return false;
        if (!subset(rows[g], n)) return false;
        for (std::size_t m = 0; m < t[g].size(); ++m)
            if (((rows[g] >> m) & 1U) && !t[g][m]) return false;
    }
    const auto all = concepts(t);
    const std::set<std::pair<Mask, Mask>> parent(all.begin(), all.end());
    for (const auto& c : relation_concepts(rows, h, n))
        if (!parent.count(c)) return false;
    return true;
}

/// A finite poset given by its leq matrix.
struct Poset {
    std::vector<std::vector<bool>> leq;
    [[nodiscard]] std::size_t size() const { return leq.size(); }
};

inline Poset concept_order(const std::vector<std::pair<Mask, Mask>>& cs)
{
    Poset p;
    p.leq.assign(cs.size(), std::vector<bool>(cs.size()));
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = 0; j < cs.size(); ++j) p.leq[i][j] = subset(cs[i].first, cs[j].first);
    return p;
}

/// Dimension k if the elements `s` of p form B(k) under the induced order,
/// else -1. Tries every bijection between s and the subsets of a k-set
/// that preserves and reflects the order.
inline int boolean_dimension(const Poset& p, const std::vector<std::size_t>& s)
{
    int k = 0;
    while ((std::size_t{1} << k) < s.size()) ++k;
    if ((std::size_t{1} << k) != s.size()) return -1;
    std::vector<std::size_t> perm = s;
    std::sort(perm.begin(), perm.end());
    // Labels are assigned by rank; a brute force over all assignments is
    // affordable for k <= 3 (8! = 40320).
    if (k > 3) return -1;
    std::vector<Mask> labels(s.size());
    for (Mask i = 0; i < s.size(); ++i) labels[i] = i;
    do {
        bool ok = true;
        for (std::size_t a = 0; a < perm.size() && ok; ++a)
            for (std::size_t b = 0; b < perm.size() && ok; ++b)
                ok = p.leq[perm[a]][perm[b]] == subset(labels[a], labels[b]);
        if (ok) return k;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return -1;
}

/// All element sets of p of size 2^k that form B(k).
inline std::set<std::vector<std::size_t>> boolean_suborders(const Poset& p, int k)
{
    std::set<std::vector<std::size_t>> out;
    const std::size_t size = std::size_t{1} << k;
    const std::size_t n = p.size();
    if (size > n) return out;
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(size), true);
    do {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i)
            if (pick[i]) s.push_back(i);
        if (boolean_dimension(p, s) == k) out.insert(s);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

/// Selectors (H, N) with |H| = |N| = k whose induced table is N^c(k).
inline std::set<std::pair<Mask, Mask>> reduced_boolean_subcontexts(const Table& t, int k)
{
    std::set<std::pair<Mask, Mask>> out;
    const std::size_t ng = t.size();
    const std::size_t nm = ng ? t[0].size() : 0;
    for (Mask h = 0; h < (Mask{1} << ng); ++h) {
        if (popcount(h) != k) continue;
        for (Mask n = 0; n < (Mask{1} << nm); ++n) {
            if (popcount(n) != k) continue;
            bool ok = true;
            Mask missing_all = 0;
            for (std::size_t g = 0; g < ng && ok; ++g) {
                if (!((h >> g) & 1U)) continue;
                Mask missing = 0;
                for (std::size_t m = 0; m < nm; ++m)
                    if (((n >> m) & 1U) && !t[g][m]) missing |= Mask{1} << m;
                ok = popcount(missing) == 1 && !(missing & missing_all);
                missing_all |= missing;
            }
            if (ok) out.insert({h, n});
        }
    }
    return out;
}

/// Selectors (H, N) whose induced lattice is B(k).
inline std::set<std::pair<Mask, Mask>> boolean_subcontexts(const Table& t, int k)
{
    std::set<std::pair<Mask, Mask>> out;
    const std::size_t ng = t.size();
    const std::size_t nm = ng ? t[0].size() : 0;
    for (Mask h = 0; h < (Mask{1} << ng); ++h)
        for (Mask n = 0; n < (Mask{1} << nm); ++n) {
            const auto cs = concepts(t, h, n);
            if (cs.size() != (std::size_t{1} << k)) continue;
            std::vector<std::size_t> all(cs.size());
            for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
            if (boolean_dimension(concept_order(cs), all) == k) out.insert({h, n});
        }
    return out;
}

/// Subsets of concepts closed under pairwise join and meet.
inline std::set<std::vector<std::size_t>> sublattices(const std::vector<std::pair<Mask, Mask>>& cs)
{
    const std::size_t n = cs.size();
    std::map<Mask, std::size_t> by_extent;
    std::map<Mask, std::size_t> by_intent;
    for (std::size_t i = 0; i < n; ++i) {
        by_extent[cs[i].first] = i;
        by_intent[cs[i].second] = i;
    }
    std::vector<std::vector<std::size_t>> join(n, std::vector<std::size_t>(n));
    std::vector<std::vector<std::size_t>> meet(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            meet[i][j] = by_extent.at(cs[i].first & cs[j].first);
            join[i][j] = by_intent.at(cs[i].second & cs[j].second);
        }
    std::set<std::vector<std::size_t>> out;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            if (!((s >> i) & 1U)) continue;
            for (std::size_t j = 0; j < n && ok; ++j)
                if ((s >> j) & 1U) ok = ((s >> join[i][j]) & 1U) && ((s >> meet[i][j]) & 1U);
        }
        if (!ok) continue;
        std::vector<std::size_t> v;
        for (std::size_t i = 0; i < n; ++i)
            if ((s >> i) & 1U) v.push_back(i);
        out.insert(v);
    }
    return out;
}

/// Arrow relations by definition: g down-arrow m iff (g,m) not in I and every
/// h with g' strictly inside h' has m. Returned as sets of (g, m).
inline std::pair<std::set<std::pair<int, int>>, std::set<std::pair<int, int>>> arrows(const Table& t)
{
    const std::size_t ng = t.size();
    const std::size_t nm = ng ? t[0].size() : 0;
    auto row_sub = [&](std::size_t a, std::size_t b) {
        bool strict = false;
        for (std::size_t m = 0; m < nm; ++m) {
            if (t[a][m] && !t[b][m]) return false;
            if (!t[a][m] && t[b][m]) strict = true;
        }
        return strict;
    };
    auto col_sub = [&](std::size_t a, std::size_t b) {
        bool strict = false;
        for (std::size_t g = 0; g < ng; ++g) {
            if (t[g][a] && !t[g][b]) return false;
            if (!t[g][a] && t[g][b]) strict = true;
        }
        return strict;
    };
    std::set<std::pair<int, int>> up;
    std::set<std::pair<int, int>> down;
    for (std::size_t g = 0; g < ng; ++g)
        for (std::size_t m = 0; m < nm; ++m) {
            if (t[g][m]) continue;
            bool d = true;
            for (std::size_t h = 0; h < ng; ++h)
                if (row_sub(g, h) && !t[h][m]) d = false;
            bool u = true;
            for (std::size_t n = 0; n < nm; ++n)
                if (col_sub(m, n) && !t[g][n]) u = false;
            if (d) down.insert({static_cast<int>(g), static_cast<int>(m)});
            if (u) up.insert({static_cast<int>(g), static_cast<int>(m)});
        }
    return {up, down};
}

}  // namespace oracle
