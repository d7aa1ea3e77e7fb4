#pragma once

#include <utility>
#include <vector>

#include "jetflow/expr.hpp"

namespace jetflow {

// Dense univariate polynomial with Expression coefficients, used for the
// field arithmetic inside radical inversion and rational integration.  The
// indeterminate is abstract; callers decide what it stands for.
struct UniE {
  std::vector<Expression> c;  // c[k] multiplies t^k

  static UniE zero() { return {}; }
  static UniE constant(Expression e);

  int deg() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  const Expression& lead() const { return c.back(); }
  void trim();

  UniE operator+(const UniE& o) const;
  UniE operator-(const UniE& o) const;
  UniE operator*(const UniE& o) const;
  UniE scaled(const Expression& s) const;
  UniE shifted(int k) const;  // multiply by t^k

  // Derivative with respect to the indeterminate.
  UniE derivative() const;
};

// Field division: a = q * b + r with deg r < deg b.  b must be nonzero.
std::pair<UniE, UniE> uni_divmod(const UniE& a, const UniE& b);

// Monic gcd over the coefficient field.
UniE uni_gcd(UniE a, UniE b);

// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic (or zero).
struct UniExt {
  UniE g, s, t;
};
UniExt uni_ext_gcd(const UniE& a, const UniE& b);

}  // namespace jetflow
