#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "grainforge/bitvec.hpp"
#include "grainforge/funlib.hpp"

namespace grainforge {

enum class AssemblyOrder { LFirst, NFirst };
enum class InitVariant { Init1, Init2, InitG };
enum class StepMode { NS, NSI, NSIG };

// One member of the cipher family. The NFSR N holds kappa1 bits eta_0..,
// the LFSR L holds kappa2 bits lambda_0.. (index 0 is the oldest bit; the
// feedback enters at the top index).
struct GrainParams {
    std::string name;
    int kappa = 0, v = 0, kappa1 = 0, kappa2 = 0;
    std::vector<int> tau;  // exponents of the feedback polynomial, incl. kappa2 and 0
    std::vector<int> A;    // LFSR taps: (0) plus (kappa2 - i) for middle exponents i
    std::vector<int> S0, S1, P0, P1, Q0, Q1;
    FunctionBundle g_bundle;  // n0 = #S0 variables
    FunctionBundle h_bundle;  // p0+q0 variables
    std::vector<int> psi;     // output slot j (1-based) reads input psi[j-1]
    AssemblyOrder assembly_order = AssemblyOrder::NFirst;
    int delta_speed = 1;
    std::vector<std::uint8_t> pad;  // kappa1+kappa2-kappa-v bits
    InitVariant init_variant = InitVariant::InitG;
    int max_keystream_log2 = 64;
    std::vector<std::string> errata;  // deviations from the literal source text

    int n0() const { return int(S0.size()); }
    int n1() const { return int(S1.size()); }
    int p0() const { return int(P0.size()); }
    int p1() const { return int(P1.size()); }
    int q0() const { return int(Q0.size()); }
    int q1() const { return int(Q1.size()); }
};

// Derive the LFSR tap set A from the feedback polynomial exponent list.
std::vector<int> lfsr_taps_from_tau(const std::vector<int>& tau, int kappa2);

struct CipherState {
    BitVec N, L;
    std::uint64_t t = 0;

    bool operator==(const CipherState& o) const { return N == o.N && L == o.L; }
};

struct ValidationReport {
    struct Item {
        int condition;  // 0 = structural, 1..6 = tap conditions
        bool pass;
        bool warning;  // true when a violation was downgraded (legacy mode)
        std::string detail;
    };
    std::vector<Item> items;

    bool ok() const;
    int warnings() const;
    std::string summary() const;  // e.g. "conditions: 6/6 pass"
};

// strict: every violation fails. Legacy mode downgrades the condition-1
// register-overlap and the condition-6 cartesian-sum requirement to
// warnings (the two published ciphers violate exactly those). Structural
// impossibilities always fail.
ValidationReport validate_params(const GrainParams& p, bool strict);

// K (kappa bits) fills N from eta_0; IV (v bits) continues through the rest
// of N and into L; pad fills the tail of L.
CipherState load_state(const GrainParams& p, const std::vector<std::uint8_t>& K,
                       const std::vector<std::uint8_t>& IV);

struct ComponentBits {
    int nlb, nnb, ob;
};
ComponentBits component_bits(const GrainParams& p, const CipherState& s);

CipherState step(const GrainParams& p, const CipherState& s, StepMode mode);
CipherState step_inverse(const GrainParams& p, const CipherState& s, StepMode mode);

CipherState run_init(const GrainParams& p, const std::vector<std::uint8_t>& K,
                     const std::vector<std::uint8_t>& IV);

std::vector<std::uint8_t> keystream(const GrainParams& p,
                                    const std::vector<std::uint8_t>& K,
                                    const std::vector<std::uint8_t>& IV,
                                    std::uint64_t nbits,
                                    bool allow_beyond_policy = false);

// Produce i output bits and advance i steps in one call (1 <= i <=
// delta_speed); all feedback taps are low enough that the i new bits can be
// computed from the starting state alone.
std::pair<CipherState, std::vector<std::uint8_t>> step_wide(const GrainParams& p,
                                                            const CipherState& s,
                                                            int i);

}  // namespace grainforge
