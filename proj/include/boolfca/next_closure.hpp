#pragma once

#include <cstddef>
#include <vector>

#include "index_set.hpp"

namespace boolfca {

namespace detail {

inline IndexSet prefix(const IndexSet& s, std::size_t i) { return s & IndexSet::below(i); }
inline DynamicBitset prefix(const DynamicBitset& s, std::size_t i) { return s.prefix(i); }

inline IndexSet with(const IndexSet& s, std::size_t i) { return s.with(i); }
inline DynamicBitset with(DynamicBitset s, std::size_t i)
{
    s.insert(i);
    return s;
}

}  // namespace detail

/// Ganter's NextClosure: visits every closed set of `close` over the given
/// ground elements exactly once, in lectic order, starting with close({}).
///
/// `close` must be a closure operator on subsets of `ground`; `empty` is the
/// empty set of the right universe. `visit` returns false to stop early.
/// Returns false iff stopped early.
template <typename Set, typename Close, typename Visit>
bool next_closure(const std::vector<std::size_t>& ground, const Set& empty, Close&& close, Visit&& visit)
{
    Set current = close(empty);
    if (!visit(static_cast<const Set&>(current))) return false;
    for (;;) {
        bool advanced = false;
        for (auto it = ground.rbegin(); it != ground.rend(); ++it) {
            const std::size_t i = *it;
            if (current.contains(i)) continue;
            const Set head = detail::prefix(current, i);
            Set candidate = close(detail::with(head, i));
            if (detail::prefix(candidate, i) == head) {
                current = std::move(candidate);
                advanced = true;
                break;
            }
        }
        if (!advanced) return true;
        if (!visit(static_cast<const Set&>(current))) return false;
    }
}

}  // namespace boolfca
