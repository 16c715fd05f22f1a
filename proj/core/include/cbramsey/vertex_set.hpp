#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace cbramsey {

/// Fixed-capacity bit set over vertex indices [0, capacity).
///
/// All binary operations require both operands to share the same capacity;
/// this is the case for every row and mask derived from a single Graph.
class VertexSet {
public:
    using Word = std::uint64_t;
    static constexpr int kWordBits = 64;

    VertexSet() = default;
    explicit VertexSet(int capacity)
        : capacity_(capacity), words_(static_cast<std::size_t>((capacity + kWordBits - 1) / kWordBits), 0) {}
    VertexSet(int capacity, std::initializer_list<int> members) : VertexSet(capacity) {
        for (int v : members) insert(v);
    }

    static VertexSet full(int capacity) {
        VertexSet s(capacity);
        for (auto& w : s.words_) w = ~Word{0};
        s.trim();
        return s;
    }

    /// Vertices v with lo <= v < capacity.
    static VertexSet from(int capacity, int lo) {
        VertexSet s = full(capacity);
        for (int v = 0; v < lo && v < capacity; ++v) s.erase(v);
        return s;
    }

    int capacity() const { return capacity_; }
    std::size_t word_count() const { return words_.size(); }
    const Word* data() const { return words_.data(); }

    bool contains(int v) const { return (words_[static_cast<std::size_t>(v) / kWordBits] >> (v % kWordBits)) & 1U; }
    void insert(int v) { words_[static_cast<std::size_t>(v) / kWordBits] |= Word{1} << (v % kWordBits); }
    void erase(int v) { words_[static_cast<std::size_t>(v) / kWordBits] &= ~(Word{1} << (v % kWordBits)); }
    void clear() {
        for (auto& w : words_) w = 0;
    }
    /// Removes every member <= v.
    void erase_through(int v) {
        if (v < 0) return;
        const std::size_t last = static_cast<std::size_t>(v) / kWordBits;
        for (std::size_t i = 0; i < last && i < words_.size(); ++i) words_[i] = 0;
        if (last < words_.size()) {
            const int bit = v % kWordBits;
            words_[last] &= bit == kWordBits - 1 ? Word{0} : (~Word{0} << (bit + 1));
        }
    }

    int count() const {
        int c = 0;
        for (Word w : words_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (Word w : words_)
            if (w) return false;
        return true;
    }

    /// Smallest member >= from, or -1.
    int next(int from) const {
        if (from >= capacity_) return -1;
        std::size_t wi = static_cast<std::size_t>(from) / kWordBits;
        Word w = words_[wi] & (~Word{0} << (from % kWordBits));
        while (true) {
            if (w) return static_cast<int>(wi * kWordBits) + std::countr_zero(w);
            if (++wi == words_.size()) return -1;
            w = words_[wi];
        }
    }
    int first() const { return next(0); }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            Word w = words_[wi];
            while (w) {
                fn(static_cast<int>(wi * kWordBits) + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    /// Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    /// Complement within [0, capacity).
    VertexSet operator~() const {
        VertexSet s(*this);
        for (auto& w : s.words_) w = ~w;
        s.trim();
        return s;
    }

    /// |this ∪ o| without materialising the union.
    int union_count(const VertexSet& o) const {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] | o.words_[i]);
        return c;
    }
    int intersection_count(const VertexSet& o) const {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }
    bool intersects(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    /// out = a | b, reusing out's storage.
    static void assign_union(VertexSet& out, const VertexSet& a, const VertexSet& b) {
        for (std::size_t i = 0; i < a.words_.size(); ++i) out.words_[i] = a.words_[i] | b.words_[i];
    }

    bool operator==(const VertexSet&) const = default;

private:
    void trim() {
        const int tail = capacity_ % kWordBits;
        if (tail != 0 && !words_.empty()) words_.back() &= (Word{1} << tail) - 1;
    }

    int capacity_ = 0;
    std::vector<Word> words_;
};

}  // namespace cbramsey
