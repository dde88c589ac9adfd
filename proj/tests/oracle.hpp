#pragma once

#include <cstdint>
#include <vector>

#include "grainforge/boolfn.hpp"
#include "grainforge/engine.hpp"

// Independent reference implementations kept deliberately naive: plain int
// vectors, per-step recomputation, no sharing with the library's engine or
// transform code. The fast paths are tested against these.
namespace oracle {

// Full keystream pipeline (load, initialisation, plain stepping) on int
// vectors; bits of K and IV are 0/1 ints.
std::vector<int> keystream(const grainforge::GrainParams& p, const std::vector<int>& K,
                           const std::vector<int>& IV, int nbits);

// Direct-definition Walsh coefficient and transforms.
long long walsh_at(const grainforge::TruthTable& tt, std::uint64_t alpha);
long long nonlinearity(const grainforge::TruthTable& tt);
grainforge::TruthTable tt_from_anf(const grainforge::AnfPoly& anf);

}  // namespace oracle
