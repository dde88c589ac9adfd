#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace grainforge {

// Fixed-length bit vector; logical index 0..size-1, word-packed.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }

    int get(std::size_t i) const { return int((w_[i >> 6] >> (i & 63)) & 1u); }
    void set(std::size_t i, int b) {
        std::uint64_t m = std::uint64_t(1) << (i & 63);
        if (b)
            w_[i >> 6] |= m;
        else
            w_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    // b[i] = b[i+1] for i < n-1; b[n-1] = top. O(words).
    void shift_down_push_top(int top);

    bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const BitVec& o) const { return !(*this == o); }
    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }

    // Bit 0 first ("leftmost").
    std::string to_string() const;
    static BitVec from_string(const std::string& s);

    // For hashing/period detection.
    const std::vector<std::uint64_t>& words() const { return w_; }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace grainforge
