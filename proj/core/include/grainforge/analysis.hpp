#pragma once

#include <cstdint>
#include <vector>

#include "grainforge/dyadic.hpp"
#include "grainforge/engine.hpp"

namespace grainforge {

// A linear approximation of a keystream-bit sum: the bit
//   b = <gamma, lambda-window> xor XOR_{i in T} z_{t+i},
// studied over the windows lambda_{t..t+r-1} and eta_{t..t+s-1}.
struct ApproxSpec {
    std::vector<int> T;                // non-empty, distinct non-negative shifts
    std::vector<std::uint8_t> gamma;   // length r; mask over the lambda-window
};

struct WindowBounds {
    int r = 0, s = 0;
};

// r = 1 + max(max(Q1+T), max(P1), max(Q0+T));
// s = 1 + max(max(P1+S0), max(P1+S1'), max(P0+T)), with S1' = T xor-diff
// (S1 union {kappa1}). Empty summand groups are skipped.
WindowBounds window_bounds(const GrainParams& p, const std::vector<int>& T);

// The index sets that rewrite b over the two windows.
//   B = (T+Q1) xor-diff P1 xor-diff supp(gamma)   (lambda-window linear part)
//   C = P1 + S1' with odd-multiplicity (xor) semantics  (eta-window linear part)
//   D_i = Q0+i, E_i = P0+i, F_j = S0+j; D, E, F their unions.
// gamma_prime / delta_mask are the indicator masks of B over r bits and of C
// over s bits. Per-shift lists keep the tap-list order (they feed the h and g
// input tuples); the union sets are sorted.
struct IndexSets {
    int r = 0, s = 0;
    std::vector<int> S1_prime;
    std::vector<int> B, C, D, E, F;
    std::vector<std::vector<int>> D_i, E_i;  // aligned with T (ascending)
    std::vector<std::vector<int>> F_j;       // aligned with P1 (list order)
    std::vector<std::uint8_t> gamma_prime;   // length r
    std::vector<std::uint8_t> delta_mask;    // length s
};

IndexSets index_sets(const GrainParams& p, const std::vector<int>& T,
                     const std::vector<std::uint8_t>& gamma);

// False when B \ D or C \ (E u F) is non-empty; in that case the bias of b
// is exactly zero in the independent-uniform window model.
bool necessary_condition(const GrainParams& p, const std::vector<int>& T,
                         const std::vector<std::uint8_t>& gamma);

// eps_h = LB(h)^t_card bounds each product term contributing to the
// correlation of the h-sum; eps_g = LB(g)^p1 bounds the correlation of the
// g-sum, valid only when #(S0+P1) = #S0 * #P1 (the direct-sum condition).
struct EpsilonBounds {
    Dyadic eps_h;
    bool eps_g_applicable = false;
    Dyadic eps_g;  // meaningful only when eps_g_applicable
};

EpsilonBounds epsilon_bounds(const GrainParams& p, int t_card);

// Exact bias E[(-1)^b] under the model where all r+s window bits are
// independent and uniform: brute-force enumeration of all 2^(r+s)
// assignments of the rewritten window expression. Requires r+s <= 30.
Dyadic exact_model_bias(const GrainParams& p, const std::vector<int>& T,
                        const std::vector<std::uint8_t>& gamma);

// The same bias through the spectral route: bias = sum over beta in F_2^s of
// corr_{h-sum}(gamma_prime, beta) * corr_{g-sum}(beta xor delta_mask), with
// the g-sum correlation obtained from the product form when the direct-sum
// condition holds, else by convolving the per-copy spectra. Requires
// r+s <= 30. Agrees with exact_model_bias as an exact rational.
Dyadic convolution_bias(const GrainParams& p, const std::vector<int>& T,
                        const std::vector<std::uint8_t>& gamma);

// Monte-Carlo estimate of E[(-1)^b] on actual cipher states: uniform random
// (N, L) loads stepped forward in plain keystream mode, with b computed from
// its original definition (gamma-masked lambda bits xor the z_{t+i} sum).
// Deterministic per seed; requires samples >= 1000.
double empirical_bias(const GrainParams& p, const std::vector<int>& T,
                      const std::vector<std::uint8_t>& gamma,
                      std::uint64_t samples, std::uint64_t seed);

}  // namespace grainforge
