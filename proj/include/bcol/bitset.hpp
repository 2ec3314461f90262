#pragma once

#include <cstdint>
#include <vector>

namespace bcol {

// dynamic bitset sized at construction; used for adjacency rows and vertex sets
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int size() const { return n_; }

    bool get(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }

    void clear() { for (auto& w : w_) w = 0; }

    int count() const {
        int c = 0;
        for (auto w : w_) c += __builtin_popcountll(w);
        return c;
    }
    bool any() const {
        for (auto w : w_) if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    Bitset& operator&=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    // set difference
    Bitset& operator-=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }
    friend Bitset operator&(Bitset a, const Bitset& b) { a &= b; return a; }
    friend Bitset operator|(Bitset a, const Bitset& b) { a |= b; return a; }
    friend Bitset operator-(Bitset a, const Bitset& b) { a -= b; return a; }

    bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }

    bool subset_of(const Bitset& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    bool intersects(const Bitset& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    // index of lowest set bit, -1 if empty
    int first() const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int(i) * 64 + __builtin_ctzll(w_[i]);
        return -1;
    }
    // next set bit strictly after i, -1 if none
    int next(int i) const {
        ++i;
        if (i >= n_) return -1;
        size_t iw = size_t(i) >> 6;
        uint64_t w = w_[iw] & (~uint64_t(0) << (i & 63));
        if (w) return int(iw) * 64 + __builtin_ctzll(w);
        for (++iw; iw < w_.size(); ++iw)
            if (w_[iw]) return int(iw) * 64 + __builtin_ctzll(w_[iw]);
        return -1;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int i = first(); i >= 0; i = next(i)) out.push_back(i);
        return out;
    }

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace bcol
