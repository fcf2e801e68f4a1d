#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace aaf {

// Fixed-universe bitset. All binary operations require both operands to share
// the same universe size.
class Bits {
public:
    Bits() = default;
    explicit Bits(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}

    static Bits full(int universe) {
        Bits b(universe);
        for (int i = 0; i < universe; ++i) b.set(i);
        return b;
    }

    int universe() const { return n_; }

    bool test(int i) const {
        assert(i >= 0 && i < n_);
        return (w_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(int i) {
        assert(i >= 0 && i < n_);
        w_[i >> 6] |= uint64_t(1) << (i & 63);
    }
    void reset(int i) {
        assert(i >= 0 && i < n_);
        w_[i >> 6] &= ~(uint64_t(1) << (i & 63));
    }

    bool any() const {
        for (uint64_t w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }

    bool is_subset_of(const Bits& o) const {
        assert(n_ == o.n_);
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~o.w_[k]) return false;
        return true;
    }
    bool is_strict_subset_of(const Bits& o) const { return is_subset_of(o) && *this != o; }

    bool intersects(const Bits& o) const {
        assert(n_ == o.n_);
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & o.w_[k]) return true;
        return false;
    }

    Bits& operator|=(const Bits& o) {
        assert(n_ == o.n_);
        for (size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
        return *this;
    }
    Bits& operator&=(const Bits& o) {
        assert(n_ == o.n_);
        for (size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
        return *this;
    }
    Bits& subtract(const Bits& o) {
        assert(n_ == o.n_);
        for (size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
        return *this;
    }

    friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
    friend Bits operator&(Bits a, const Bits& b) { return a &= b; }

    bool operator==(const Bits& o) const = default;

    // Total order usable as a map key.
    bool operator<(const Bits& o) const {
        assert(n_ == o.n_);
        return w_ < o.w_;
    }

    // Index of the first set bit at or after `from`, or -1.
    int next_set(int from) const {
        for (int i = from; i < n_; ++i) {
            uint64_t w = w_[i >> 6] >> (i & 63);
            if (w == 0) {
                i = ((i >> 6) + 1) * 64 - 1;
                continue;
            }
            return i + std::countr_zero(w);
        }
        return -1;
    }

    // First-word view; valid for universes up to 64 bits.
    uint64_t word0() const { return w_.empty() ? 0 : w_[0]; }

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

} // namespace aaf
