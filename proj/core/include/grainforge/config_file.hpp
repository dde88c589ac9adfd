#pragma once

#include <string>

#include "grainforge/engine.hpp"

namespace grainforge {

// Plain-text instance description: one "field: value" per line, '#' comments,
// integer lists as "[1,2,3]". g and h are either function-registry names or
// inline algebraic normal forms ("x1*x2 + x3 + 1"); inline definitions get a
// mechanically synthesized circuit. The LFSR tap set A is derived from tau.
//
// Fields: name, kappa, v, kappa1, kappa2, tau, S0, S1, P0, P1, Q0, Q1,
// g, h, psi (optional, default identity), assembly (l-first | n-first),
// init (init1 | init2 | initg), delta, pad (bit string, may be empty),
// max-keystream-log2 (optional, default 64).
GrainParams parse_instance_config(const std::string& text);

std::string render_instance_config(const GrainParams& p);

GrainParams load_instance_file(const std::string& path);

}  // namespace grainforge
