#pragma once

#include <optional>
#include <string>

#include "grainforge/boolfn.hpp"
#include "grainforge/circuit.hpp"

namespace grainforge {

enum class FunFamily { NamedLegacy, H2k, H5p2k, G2k, Triangular, Custom };

enum class AiClaimKind { None, Exact, LowerBound, UpperBound };

// Property record transcribed from the source tables; tests compare computed
// values against these, distinguishing equality claims from bound claims.
struct ClaimedProps {
    std::optional<int> degree;
    std::optional<int> resiliency;  // -1 = unbalanced
    std::optional<std::int64_t> nl;
    std::optional<Dyadic> lb;
    AiClaimKind ai_kind = AiClaimKind::None;
    int ai = 0;
    std::optional<GateCount> gates;
    std::string note;  // discrepancy / bound-provenance annotations
};

struct FunctionBundle {
    std::string name;
    int n = 0;
    FunFamily family = FunFamily::Custom;
    AnfPoly anf;
    Circuit circuit;
    ClaimedProps claimed;

    // Convenience evaluation through the ANF (any n); the anf==circuit
    // invariant is enforced by tests.
    int eval(std::uint64_t x) const { return eval_anf(anf, x); }
};

struct FunctionSpec {
    std::string name;            // one of the registry names, or empty
    FunFamily family = FunFamily::Custom;  // used when name is empty
    int k = 0;
};

// Registry names: h5, h7, h10, h15, h19, g10, f10, g24, g30, g36,
// e12, e15, e18, grainv1_g, grainv1_h, grain128a_g, grain128a_h.
FunctionBundle build_function(const FunctionSpec& spec);
FunctionBundle build_function(const std::string& name);
std::vector<std::string> function_registry();

// Walsh value of <X,Y> xor h_part(X) on 2k variables at masks (u over X,
// v over Y), via the closed form 2^k * (-1)^(h_part(v) xor <u,v>).
std::int64_t mm_walsh(const TruthTable& h_part, std::uint32_t u, std::uint32_t v);

}  // namespace grainforge
