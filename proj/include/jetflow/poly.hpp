#pragma once

#include <gmpxx.h>

#include <array>
#include <optional>
#include <vector>

#include "jetflow/monomial.hpp"

namespace jetflow {

struct Term {
  Monomial m;
  mpq_class c;
};

// Sparse multivariate polynomial with rational coefficients over the fixed
// generator slots.  Terms are kept in strictly decreasing monomial order
// and never have zero coefficient, so equal values have equal
// representations.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const mpq_class& c);
  static Poly var(int slot, int k = 1);
  static Poly term(const mpq_class& c, const Monomial& m);

  // Takes unsorted, possibly duplicated terms and normalizes.
  static Poly from_terms(std::vector<Term> terms);

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  // Constant value; requires is_constant().
  mpq_class constant_value() const;

  std::size_t size() const { return t_.size(); }
  const std::vector<Term>& terms() const { return t_; }
  const Term& leading() const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly mul_term(const mpq_class& c, const Monomial& m) const;
  Poly mul_scalar(const mpq_class& c) const;
  Poly pow(unsigned k) const;

  // Partial derivative with respect to one slot.
  Poly derivative(int slot) const;

  int degree_in(int slot) const;
  bool depends_on(int slot) const;
  // Highest jet order appearing, or -1 if jet-free.
  int max_jet_order() const;
  std::uint32_t total_degree() const;

  // Coefficient of slot^k, a polynomial free of `slot`.
  Poly coeff_of(int slot, int k) const;

  // Substitutes a polynomial for one slot.
  Poly subst(int slot, const Poly& value) const;

  mpq_class eval(const std::array<mpq_class, kNumSlots>& point) const;

  // gcd of all coefficients (positive), with sign of the leading
  // coefficient: dividing by it makes the poly integer, coprime, and
  // leading-positive.  Zero for the zero polynomial.
  mpq_class content_signed() const;

  // Exact division; throws DivisionError when not divisible.
  Poly divide_exact(const Poly& d) const;
  // Returns false (and leaves q unspecified) when not divisible.
  bool try_divide(const Poly& d, Poly* q) const;

 private:
  std::vector<Term> t_;
  void normalize_sorted();
};

inline Poly operator*(const mpq_class& c, const Poly& p) {
  return p.mul_scalar(c);
}

// Exact k-th root of a rational; false when none exists.
bool rational_nth_root(const mpq_class& q, int k, mpq_class* out);

// Exact k-th root of a polynomial, or nullopt when p is not a perfect
// k-th power.
std::optional<Poly> poly_nth_root(const Poly& p, int k);

}  // namespace jetflow
