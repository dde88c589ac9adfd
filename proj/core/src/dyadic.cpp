#include "grainforge/dyadic.hpp"

#include <cmath>
#include <cstdlib>

namespace grainforge {

Dyadic Dyadic::make(__int128 num, int log2_den) {
    if (log2_den < 0) throw std::invalid_argument("Dyadic: negative denominator exponent");
    Dyadic d;
    if (num == 0) return d;
    while ((num & 1) == 0 && log2_den > 0) {
        num >>= 1;
        --log2_den;
    }
    // Values in this library are correlations/biases and small integer
    // multiples thereof; after reduction they always fit in 64 bits.
    if (num > __int128(INT64_MAX) || num < __int128(INT64_MIN))
        throw std::overflow_error("Dyadic: numerator out of 64-bit range after reduction");
    d.num_ = static_cast<std::int64_t>(num);
    d.log2_den_ = log2_den;
    return d;
}

Dyadic Dyadic::operator+(const Dyadic& o) const {
    int den = std::max(log2_den_, o.log2_den_);
    __int128 a = __int128(num_) << (den - log2_den_);
    __int128 b = __int128(o.num_) << (den - o.log2_den_);
    return make(a + b, den);
}

Dyadic Dyadic::operator-(const Dyadic& o) const { return *this + (-o); }

Dyadic Dyadic::operator*(const Dyadic& o) const {
    return make(__int128(num_) * __int128(o.num_), log2_den_ + o.log2_den_);
}

Dyadic Dyadic::operator-() const { return make(-__int128(num_), log2_den_); }

Dyadic Dyadic::abs() const { return num_ < 0 ? -*this : *this; }

Dyadic Dyadic::pow(unsigned e) const {
    Dyadic r = from_int(1);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

double Dyadic::to_double() const { return std::ldexp(double(num_), -log2_den_); }

double Dyadic::log2_abs() const {
    if (num_ == 0) throw std::domain_error("Dyadic: log2 of zero");
    return std::log2(std::fabs(double(num_))) - double(log2_den_);
}

std::string Dyadic::to_string() const {
    if (num_ == 0) return "0";
    std::string sign = num_ < 0 ? "-" : "";
    std::uint64_t mag = std::uint64_t(num_ < 0 ? -num_ : num_);
    if (log2_den_ == 0) return sign + std::to_string(mag);
    if (mag == 1) return sign + "2^-" + std::to_string(log2_den_);
    return sign + std::to_string(mag) + "/2^" + std::to_string(log2_den_);
}

std::string Dyadic::to_log2_string(int digits) const {
    if (num_ == 0) return "0";
    std::string sign = num_ < 0 ? "-" : "";
    double e = log2_abs();
    // Render exact powers of two without a fractional part.
    if (is_pow2()) return sign + "2^" + std::to_string(-log2_den_);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s2^%.*f", sign.c_str(), digits, e);
    return buf;
}

}  // namespace grainforge
