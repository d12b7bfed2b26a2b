#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace commring {

/// Fixed-size dynamic bitset. Backs element sets and graph adjacency rows.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(int n) : size_(n), w_((n + 63) / 64, 0) {}

    static BitVec full(int n) {
        BitVec v(n);
        for (int i = 0; i < n; ++i) v.set(i);
        return v;
    }

    int size() const { return size_; }

    bool test(int i) const {
        assert(i >= 0 && i < size_);
        return (w_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(int i) {
        assert(i >= 0 && i < size_);
        w_[i >> 6] |= uint64_t{1} << (i & 63);
    }

    void reset(int i) {
        assert(i >= 0 && i < size_);
        w_[i >> 6] &= ~(uint64_t{1} << (i & 63));
    }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (uint64_t w : w_)
            if (w) return true;
        return false;
    }

    bool none() const { return !any(); }

    BitVec& operator&=(const BitVec& o) {
        assert(size_ == o.size_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }

    BitVec& operator|=(const BitVec& o) {
        assert(size_ == o.size_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }

    /// this &= ~o
    BitVec& subtract(const BitVec& o) {
        assert(size_ == o.size_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    int count_and(const BitVec& o) const {
        assert(size_ == o.size_);
        int c = 0;
        for (size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
        return c;
    }

    bool intersects(const BitVec& o) const {
        assert(size_ == o.size_);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool operator==(const BitVec& o) const = default;

    /// Index of the first set bit, or -1.
    int find_first() const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int(i * 64) + std::countr_zero(w_[i]);
        return -1;
    }

    /// Index of the first set bit strictly after i, or -1.
    int find_next(int i) const {
        ++i;
        if (i >= size_) return -1;
        size_t word = size_t(i) >> 6;
        uint64_t w = w_[word] & (~uint64_t{0} << (i & 63));
        while (true) {
            if (w) return int(word * 64) + std::countr_zero(w);
            if (++word >= w_.size()) return -1;
            w = w_[word];
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int i = find_first(); i >= 0; i = find_next(i)) out.push_back(i);
        return out;
    }

private:
    int size_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace commring
