#pragma once

#include <vector>

#include "jetflow/poly.hpp"

namespace jetflow {

// Primitive gcd (integer coefficients, coprime, positive leading
// coefficient) of two polynomials.  gcd(0, 0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

// gcd of a whole family; 0 for an empty or all-zero family.
Poly poly_gcd_many(const std::vector<Poly>& ps);

}  // namespace jetflow
