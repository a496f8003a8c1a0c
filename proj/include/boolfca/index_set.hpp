#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace boolfca {

/// Set of small indices (objects or attributes) packed into one machine word.
///
/// Capacity is 64; contexts larger than that are rejected at construction.
class IndexSet {
public:
    static constexpr std::size_t kCapacity = 64;

    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = std::size_t;
        using difference_type = std::ptrdiff_t;
        using pointer = const std::size_t*;
        using reference = std::size_t;

        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

        constexpr std::size_t operator*() const { return static_cast<std::size_t>(std::countr_zero(rest_)); }
        constexpr iterator& operator++()
        {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr iterator operator++(int)
        {
            iterator old = *this;
            ++*this;
            return old;
        }
        constexpr bool operator==(const iterator&) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr IndexSet() = default;
    constexpr explicit IndexSet(std::uint64_t bits) : bits_(bits) {}
    IndexSet(std::initializer_list<std::size_t> indices)
    {
        for (std::size_t i : indices) insert(i);
    }

    /// {0, ..., n-1}
    static constexpr IndexSet full(std::size_t n)
    {
        assert(n <= kCapacity);
        return IndexSet(n == kCapacity ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
    }
    /// {0, ..., i-1}
    static constexpr IndexSet below(std::size_t i) { return full(i); }
    static constexpr IndexSet singleton(std::size_t i)
    {
        assert(i < kCapacity);
        return IndexSet(std::uint64_t{1} << i);
    }

    [[nodiscard]] constexpr std::uint64_t bits() const { return bits_; }
    [[nodiscard]] constexpr bool contains(std::size_t i) const { return i < kCapacity && ((bits_ >> i) & 1U) != 0; }
    [[nodiscard]] constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    [[nodiscard]] constexpr bool empty() const { return bits_ == 0; }
    [[nodiscard]] constexpr std::size_t first() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

    constexpr void insert(std::size_t i)
    {
        assert(i < kCapacity);
        bits_ |= std::uint64_t{1} << i;
    }
    constexpr void erase(std::size_t i)
    {
        assert(i < kCapacity);
        bits_ &= ~(std::uint64_t{1} << i);
    }
    [[nodiscard]] constexpr IndexSet with(std::size_t i) const
    {
        IndexSet r = *this;
        r.insert(i);
        return r;
    }
    [[nodiscard]] constexpr IndexSet without(std::size_t i) const
    {
        IndexSet r = *this;
        r.erase(i);
        return r;
    }

    [[nodiscard]] constexpr bool is_subset_of(IndexSet other) const { return (bits_ & ~other.bits_) == 0; }
    [[nodiscard]] constexpr bool is_proper_subset_of(IndexSet other) const
    {
        return is_subset_of(other) && bits_ != other.bits_;
    }
    [[nodiscard]] constexpr bool intersects(IndexSet other) const { return (bits_ & other.bits_) != 0; }

    constexpr IndexSet& operator|=(IndexSet o)
    {
        bits_ |= o.bits_;
        return *this;
    }
    constexpr IndexSet& operator&=(IndexSet o)
    {
        bits_ &= o.bits_;
        return *this;
    }
    constexpr IndexSet& operator-=(IndexSet o)
    {
        bits_ &= ~o.bits_;
        return *this;
    }
    friend constexpr IndexSet operator|(IndexSet a, IndexSet b) { return a |= b; }
    friend constexpr IndexSet operator&(IndexSet a, IndexSet b) { return a &= b; }
    friend constexpr IndexSet operator-(IndexSet a, IndexSet b) { return a -= b; }

    constexpr bool operator==(const IndexSet&) const = default;
    constexpr auto operator<=>(const IndexSet&) const = default;

    [[nodiscard]] constexpr iterator begin() const { return iterator(bits_); }
    [[nodiscard]] constexpr iterator end() const { return iterator(0); }

    [[nodiscard]] std::vector<std::size_t> to_vector() const { return {begin(), end()}; }

private:
    std::uint64_t bits_ = 0;
};

/// Canonical order used for golden output: cardinality first, then the set
/// whose lowest differing index is a member comes first (lexicographic order
/// of the sorted index lists).
[[nodiscard]] constexpr bool canonical_less(IndexSet a, IndexSet b)
{
    if (a.size() != b.size()) return a.size() < b.size();
    const std::uint64_t diff = a.bits() ^ b.bits();
    if (diff == 0) return false;
    return ((a.bits() >> std::countr_zero(diff)) & 1U) != 0;
}

/// Growable bitset over concept indices; used for suborders of a lattice.
class DynamicBitset {
public:
    DynamicBitset() = default;
    explicit DynamicBitset(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

    static DynamicBitset full(std::size_t n)
    {
        DynamicBitset b(n);
        for (std::size_t i = 0; i < n; ++i) b.insert(i);
        return b;
    }
    static DynamicBitset of(std::size_t n, std::initializer_list<std::size_t> indices)
    {
        DynamicBitset b(n);
        for (std::size_t i : indices) b.insert(i);
        return b;
    }
    template <typename Range>
    static DynamicBitset from_range(std::size_t n, const Range& indices)
    {
        DynamicBitset b(n);
        for (std::size_t i : indices) b.insert(i);
        return b;
    }

    [[nodiscard]] std::size_t universe_size() const { return size_; }
    [[nodiscard]] bool contains(std::size_t i) const
    {
        return i < size_ && ((words_[i >> 6] >> (i & 63)) & 1U) != 0;
    }
    void insert(std::size_t i)
    {
        assert(i < size_);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    void erase(std::size_t i)
    {
        assert(i < size_);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
    [[nodiscard]] std::size_t size() const
    {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    [[nodiscard]] bool empty() const
    {
        return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
    }

    /// Elements with index < i.
    [[nodiscard]] DynamicBitset prefix(std::size_t i) const
    {
        DynamicBitset r(size_);
        for (std::size_t w = 0; w < words_.size(); ++w) {
            const std::size_t lo = w * 64;
            if (lo >= i) break;
            const std::size_t take = std::min<std::size_t>(64, i - lo);
            const std::uint64_t mask = take == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << take) - 1);
            r.words_[w] = words_[w] & mask;
        }
        return r;
    }

    [[nodiscard]] bool is_subset_of(const DynamicBitset& o) const
    {
        assert(size_ == o.size_);
        for (std::size_t w = 0; w < words_.size(); ++w)
            if ((words_[w] & ~o.words_[w]) != 0) return false;
        return true;
    }
    [[nodiscard]] bool intersects(const DynamicBitset& o) const
    {
        assert(size_ == o.size_);
        for (std::size_t w = 0; w < words_.size(); ++w)
            if ((words_[w] & o.words_[w]) != 0) return true;
        return false;
    }

    DynamicBitset& operator|=(const DynamicBitset& o)
    {
        assert(size_ == o.size_);
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
        return *this;
    }
    DynamicBitset& operator&=(const DynamicBitset& o)
    {
        assert(size_ == o.size_);
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
        return *this;
    }
    DynamicBitset& operator-=(const DynamicBitset& o)
    {
        assert(size_ == o.size_);
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~o.words_[w];
        return *this;
    }
    friend DynamicBitset operator|(DynamicBitset a, const DynamicBitset& b) { return a |= b; }
    friend DynamicBitset operator&(DynamicBitset a, const DynamicBitset& b) { return a &= b; }
    friend DynamicBitset operator-(DynamicBitset a, const DynamicBitset& b) { return a -= b; }

    bool operator==(const DynamicBitset&) const = default;
    /// Lexicographic on the sorted element lists.
    bool operator<(const DynamicBitset& o) const
    {
        const std::size_t n = std::min(words_.size(), o.words_.size());
        for (std::size_t w = 0; w < n; ++w) {
            const std::uint64_t diff = words_[w] ^ o.words_[w];
            if (diff != 0) return ((words_[w] >> std::countr_zero(diff)) & 1U) != 0;
        }
        return words_.size() > o.words_.size();
    }

    template <typename F>
    void for_each(F&& f) const
    {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t rest = words_[w];
            while (rest != 0) {
                f(w * 64 + static_cast<std::size_t>(std::countr_zero(rest)));
                rest &= rest - 1;
            }
        }
    }

    [[nodiscard]] std::vector<std::size_t> to_vector() const
    {
        std::vector<std::size_t> out;
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    [[nodiscard]] std::size_t hash() const
    {
        std::size_t h = size_;
        for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

struct DynamicBitsetHash {
    std::size_t operator()(const DynamicBitset& b) const { return b.hash(); }
};

}  // namespace boolfca

template <>
struct std::hash<boolfca::IndexSet> {
    std::size_t operator()(boolfca::IndexSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};
