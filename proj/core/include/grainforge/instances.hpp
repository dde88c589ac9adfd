#pragma once

#include <string>
#include <vector>

#include "grainforge/engine.hpp"

namespace grainforge {

// Registry names: grainv1, grain128a, r80, r128, w128, r192, w192, r256, w256.
std::vector<std::string> instance_names();
GrainParams get_instance(const std::string& name);

// Downscaled instance for exhaustive analysis. Tap lists come from the tap
// generator, tau from a seeded search for a primitive polynomial; the result
// always passes strict validation.
struct ToySpec {
    int kappa = 0, v = 0, kappa1 = 0, kappa2 = 0;  // each <= 24
    std::string g_choice;  // function registry name, even arity
    std::string h_choice;  // function registry name
    std::uint64_t seed = 0;
};

GrainParams make_toy(const ToySpec& spec);

std::vector<int> psi_identity(int m);
// The q0 = p0+1 interleaving (b1,a1,b2,a2,b3, a3..a_p0, b4..b_q0) on the
// N-first core tuple (a1..a_p0, b1..b_q0).
std::vector<int> psi_interleave(int p0, int q0);

}  // namespace grainforge
