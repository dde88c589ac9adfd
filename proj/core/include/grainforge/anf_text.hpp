#pragma once

#include <string>

#include "grainforge/boolfn.hpp"

namespace grainforge {

// Text syntax: monomials joined by '+', variables x1..xn, constant '1',
// factors joined by '*' (e.g. "x1*x2 + x3 + 1"). Case-insensitive,
// whitespace ignored. When n == 0 the variable count is inferred from the
// highest variable index used.
AnfPoly parse_anf(const std::string& text, int n = 0);

std::string format_anf(const AnfPoly& anf);

}  // namespace grainforge
