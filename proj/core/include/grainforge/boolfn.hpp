#pragma once

#include <cstdint>
#include <vector>

#include "grainforge/dyadic.hpp"

namespace grainforge {

// Shared bit-index convention: input x = (x1..xn) maps to index
// sum x_i * 2^(i-1), i.e. x1 is the least significant index bit.

inline constexpr int kMaxTableVars = 24;

struct TruthTable {
    int n = 0;
    std::vector<std::uint8_t> bits;  // length 2^n, one byte per bit

    TruthTable() = default;
    TruthTable(int n_, std::vector<std::uint8_t> b) : n(n_), bits(std::move(b)) {}
    static TruthTable zero(int n);

    std::size_t size() const { return bits.size(); }
    std::uint64_t weight() const;
    bool balanced() const { return 2 * weight() == size(); }
};

// Set of monomials; each monomial is a variable mask (bit i-1 set <=> X_i
// present). The empty mask is the constant 1. Canonical form: sorted, unique.
struct AnfPoly {
    int n = 0;
    std::vector<std::uint64_t> monomials;

    AnfPoly() = default;
    AnfPoly(int n_, std::vector<std::uint64_t> m);

    void canonicalize();
    bool empty() const { return monomials.empty(); }
    bool operator==(const AnfPoly& o) const { return n == o.n && monomials == o.monomials; }
};

struct WalshSpectrum {
    int n = 0;
    std::vector<std::int32_t> values;  // length 2^n

    std::int32_t max_abs() const;
    bool parseval_holds() const;
};

struct SpectralProfile {
    std::int64_t nl = 0;
    Dyadic lb;
    int resiliency = -1;  // -1 = unbalanced
};

struct AiResult {
    int ai = 0;      // smallest annihilator degree found, or max_deg+1 if none found
    bool exact = false;  // true when a witness annihilator was found and verified
    AnfPoly witness;     // the annihilator (of f or of f+1), empty when !exact
};

TruthTable anf_to_tt(const AnfPoly& anf);
AnfPoly tt_to_anf(const TruthTable& tt);
WalshSpectrum walsh_spectrum(const TruthTable& tt);
SpectralProfile spectral_profile(const TruthTable& tt);
SpectralProfile spectral_profile(const WalshSpectrum& ws);
int degree(const AnfPoly& anf);

// Annihilator search over f and f+1 with degree cap max_deg (pass -1 for the
// theoretical cap ceil(n/2)).
AiResult algebraic_immunity(const TruthTable& tt, int max_deg = -1);

Dyadic correlation_at(const TruthTable& tt, std::uint32_t alpha);
Dyadic correlation_at(const WalshSpectrum& ws, std::uint32_t alpha);

// f(x) xor g(y) on n_f + n_g variables (f's variables first / low-order).
TruthTable direct_sum(const TruthTable& f, const TruthTable& g);

// Evaluate an ANF at one point without materializing a table (any n <= 64).
int eval_anf(const AnfPoly& anf, std::uint64_t x);

// In-place fast transforms on raw sequences (exposed for oracle cross-checks).
void mobius_in_place(std::vector<std::uint8_t>& bits);
void fwht_in_place(std::vector<std::int32_t>& v);

}  // namespace grainforge
