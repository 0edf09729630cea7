#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace scs {

// Small dynamic bitset for search state over robot sets.
class DynBitset {
public:
    DynBitset() = default;
    explicit DynBitset(int n) : n_(n), words_((n + 63) / 64, 0) {}

    static DynBitset full(int n) {
        DynBitset b(n);
        for (int i = 0; i < n; ++i) b.set(i);
        return b;
    }

    void set(int i) { words_[i >> 6] |= (uint64_t)1 << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~((uint64_t)1 << (i & 63)); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (uint64_t w : words_)
            if (w) return false;
        return true;
    }

    DynBitset& operator&=(const DynBitset& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    DynBitset& operator|=(const DynBitset& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    // this &= ~o
    DynBitset& remove(const DynBitset& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    int size() const { return n_; }

    // First set bit at or after `from`; -1 if none.
    int next(int from = 0) const {
        if (from >= n_) return -1;
        int word = from >> 6;
        uint64_t w = words_[word] >> (from & 63);
        if (w) return from + std::countr_zero(w);
        for (size_t k = word + 1; k < words_.size(); ++k)
            if (words_[k]) return (int)(k << 6) + std::countr_zero(words_[k]);
        return -1;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (int i = next(0); i >= 0; i = next(i + 1)) f(i);
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

private:
    int n_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace scs
