#include "grainforge/gf2poly.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace grainforge {

Gf2Poly Gf2Poly::one() {
    Gf2Poly p;
    p.w = {1};
    return p;
}

Gf2Poly Gf2Poly::x() {
    Gf2Poly p;
    p.w = {2};
    return p;
}

Gf2Poly Gf2Poly::from_exponents(const std::vector<int>& exps) {
    Gf2Poly p;
    for (int e : exps) {
        if (e < 0) throw std::invalid_argument("negative exponent");
        p.set(e);
    }
    return p;
}

int Gf2Poly::degree() const {
    for (int i = int(w.size()) - 1; i >= 0; --i)
        if (w[i]) return i * 64 + 63 - std::countl_zero(w[i]);
    return -1;
}

bool Gf2Poly::get(int i) const {
    std::size_t word = std::size_t(i) / 64;
    if (word >= w.size()) return false;
    return (w[word] >> (i % 64)) & 1;
}

void Gf2Poly::set(int i) {
    std::size_t word = std::size_t(i) / 64;
    if (word >= w.size()) w.resize(word + 1, 0);
    w[word] ^= std::uint64_t(1) << (i % 64);
}

void Gf2Poly::trim() {
    while (!w.empty() && w.back() == 0) w.pop_back();
}

std::vector<int> Gf2Poly::exponents() const {
    std::vector<int> out;
    for (int i = degree(); i >= 0; --i)
        if (get(i)) out.push_back(i);
    return out;
}

bool Gf2Poly::operator==(const Gf2Poly& o) const {
    Gf2Poly a = *this, b = o;
    a.trim();
    b.trim();
    return a.w == b.w;
}

Gf2Poly gf2_add(const Gf2Poly& a, const Gf2Poly& b) {
    Gf2Poly r = a;
    if (r.w.size() < b.w.size()) r.w.resize(b.w.size(), 0);
    for (std::size_t i = 0; i < b.w.size(); ++i) r.w[i] ^= b.w[i];
    r.trim();
    return r;
}

Gf2Poly gf2_mul(const Gf2Poly& a, const Gf2Poly& b) {
    Gf2Poly r;
    int da = a.degree(), db = b.degree();
    if (da < 0 || db < 0) return r;
    r.w.assign(std::size_t(da + db) / 64 + 1, 0);
    for (int i = 0; i <= da; ++i) {
        if (!a.get(i)) continue;
        for (std::size_t j = 0; j < b.w.size(); ++j) {
            std::uint64_t word = b.w[j];
            if (!word) continue;
            int base = i + int(j) * 64;
            r.w[std::size_t(base) / 64] ^= word << (base % 64);
            if (base % 64)
                r.w[std::size_t(base) / 64 + 1] ^= word >> (64 - base % 64);
        }
    }
    r.trim();
    return r;
}

Gf2Poly gf2_mod(const Gf2Poly& a, const Gf2Poly& m) {
    int dm = m.degree();
    if (dm < 0) throw std::invalid_argument("modulus is zero");
    Gf2Poly r = a;
    for (int d = r.degree(); d >= dm; d = r.degree()) {
        int shift = d - dm;
        for (int e : m.exponents()) r.set(e + shift);
    }
    r.trim();
    return r;
}

Gf2Poly gf2_gcd(Gf2Poly a, Gf2Poly b) {
    while (!b.is_zero()) {
        Gf2Poly r = gf2_mod(a, b);
        a = b;
        b = r;
    }
    return a;
}

Gf2Poly gf2_mulmod(const Gf2Poly& a, const Gf2Poly& b, const Gf2Poly& m) {
    return gf2_mod(gf2_mul(a, b), m);
}

Gf2Poly gf2_pow_x_mod(std::uint64_t e, const Gf2Poly& m) {
    Gf2Poly result = gf2_mod(Gf2Poly::one(), m);
    Gf2Poly base = gf2_mod(Gf2Poly::x(), m);
    while (e) {
        if (e & 1) result = gf2_mulmod(result, base, m);
        base = gf2_mulmod(base, base, m);
        e >>= 1;
    }
    return result;
}

Gf2Poly gf2_pow_x_2exp_mod(int t, const Gf2Poly& m) {
    Gf2Poly r = gf2_mod(Gf2Poly::x(), m);
    for (int i = 0; i < t; ++i) r = gf2_mulmod(r, r, m);
    return r;
}

namespace {

std::vector<int> prime_divisors(int n) {
    std::vector<int> ps;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

std::vector<std::uint64_t> prime_divisors_u64(std::uint64_t n) {
    std::vector<std::uint64_t> ps;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

}  // namespace

bool gf2_is_irreducible(const Gf2Poly& f) {
    int d = f.degree();
    if (d <= 0) return false;
    if (!f.get(0)) return d == 1 && f.get(1);  // divisible by x unless f == x
    if (d == 1) return true;
    // x^(2^d) == x mod f, and gcd(x^(2^(d/p)) - x, f) == 1 for prime p | d.
    Gf2Poly xp = gf2_mod(Gf2Poly::x(), f);
    if (!(gf2_pow_x_2exp_mod(d, f) == xp)) return false;
    for (int p : prime_divisors(d)) {
        Gf2Poly diff = gf2_add(gf2_pow_x_2exp_mod(d / p, f), xp);
        if (gf2_gcd(f, diff).degree() != 0) return false;
    }
    return true;
}

bool gf2_is_primitive(const Gf2Poly& f) {
    int d = f.degree();
    if (d < 1 || d > 24)
        throw std::invalid_argument("order check limited to degree <= 24");
    if (!gf2_is_irreducible(f)) return false;
    std::uint64_t group = (std::uint64_t(1) << d) - 1;
    for (std::uint64_t p : prime_divisors_u64(group)) {
        if (p == group) continue;  // proper divisor cofactors only
        if (gf2_pow_x_mod(group / p, f) == gf2_mod(Gf2Poly::one(), f)) return false;
    }
    return true;
}

}  // namespace grainforge
