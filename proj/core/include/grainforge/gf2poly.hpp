#pragma once

#include <cstdint>
#include <vector>

namespace grainforge {

// Polynomial over GF(2); bit i of the word vector is the coefficient of x^i.
struct Gf2Poly {
    std::vector<std::uint64_t> w;

    static Gf2Poly zero() { return {}; }
    static Gf2Poly one();
    static Gf2Poly x();
    static Gf2Poly from_exponents(const std::vector<int>& exps);

    int degree() const;  // -1 for the zero polynomial
    bool is_zero() const { return degree() < 0; }
    bool get(int i) const;
    void set(int i);
    void trim();
    std::vector<int> exponents() const;  // descending
    bool operator==(const Gf2Poly& o) const;
};

Gf2Poly gf2_add(const Gf2Poly& a, const Gf2Poly& b);
Gf2Poly gf2_mul(const Gf2Poly& a, const Gf2Poly& b);
Gf2Poly gf2_mod(const Gf2Poly& a, const Gf2Poly& m);
Gf2Poly gf2_gcd(Gf2Poly a, Gf2Poly b);
Gf2Poly gf2_mulmod(const Gf2Poly& a, const Gf2Poly& b, const Gf2Poly& m);
// x^e mod m, e given in binary big-endian over bit positions [0, ebits).
Gf2Poly gf2_pow_x_mod(std::uint64_t e, const Gf2Poly& m);
// x^(2^t) mod m by t modular squarings.
Gf2Poly gf2_pow_x_2exp_mod(int t, const Gf2Poly& m);

// Rabin test: works for any degree >= 1 (used on the full-size feedback
// polynomials).
bool gf2_is_irreducible(const Gf2Poly& f);

// Multiplicative order check: true iff f is irreducible and x has order
// 2^deg - 1 mod f. Requires deg <= 24 (the cofactor factorization is done by
// trial division).
bool gf2_is_primitive(const Gf2Poly& f);

}  // namespace grainforge
