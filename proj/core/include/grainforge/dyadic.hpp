#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace grainforge {

// Exact rational with power-of-two denominator: value = num / 2^log2_den.
// Normalized so that num is odd or zero (zero has log2_den == 0).
class Dyadic {
public:
    Dyadic() : num_(0), log2_den_(0) {}

    // value = num / 2^log2_den (log2_den >= 0); normalizes.
    static Dyadic make(__int128 num, int log2_den);
    static Dyadic from_int(std::int64_t v) { return make(v, 0); }

    std::int64_t num() const { return num_; }
    int log2_den() const { return log2_den_; }
    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    // True when the value is +/- 2^-k (or an integral power of two).
    bool is_pow2() const { return num_ == 1 || num_ == -1; }

    Dyadic operator+(const Dyadic& o) const;
    Dyadic operator-(const Dyadic& o) const;
    Dyadic operator*(const Dyadic& o) const;
    Dyadic operator-() const;
    bool operator==(const Dyadic& o) const {
        return num_ == o.num_ && log2_den_ == o.log2_den_;
    }
    bool operator!=(const Dyadic& o) const { return !(*this == o); }

    Dyadic abs() const;
    Dyadic pow(unsigned e) const;

    double to_double() const;
    // log2(|value|); requires nonzero.
    double log2_abs() const;

    // "0", "1", "-3/2^5", "2^-5", "-2^-2", "3·2^4" style exact rendering.
    std::string to_string() const;
    // "2^-28.068" style; "0" for zero. digits = fractional digits of exponent.
    std::string to_log2_string(int digits = 3) const;

private:
    std::int64_t num_;
    int log2_den_;
};

}  // namespace grainforge
