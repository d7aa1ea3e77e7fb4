#pragma once

#include <map>
#include <memory>
#include <string>

#include "jetflow/poly.hpp"

namespace jetflow {

// One adjoined algebraic element r with r^index = radicand.  The radicand
// is a radical-free polynomial of jet order at most 2 that is linear in its
// top jet; that shape is what the downstream integration algorithms rely
// on, so it is enforced at construction.
struct RadicalContext {
  int index;      // 2, 3, or 5
  Poly radicand;  // R = top_coeff * u_top + rest
  int top_order;
  Poly top_coeff;
  Poly rest;

  static std::shared_ptr<const RadicalContext> create(int index,
                                                      const Poly& radicand);
  bool same_as(const RadicalContext& o) const {
    return index == o.index && radicand == o.radicand;
  }
};

using RadicalPtr = std::shared_ptr<const RadicalContext>;

// Element of the differential-polynomial fraction field, optionally
// extended by one radical.  Canonical form: numerator reduced to r-degree
// below the radical index, denominator radical-free, common polynomial
// factors cancelled, denominator integer-primitive with positive leading
// coefficient.  Zero is 0/1 with no radical; a radical context is dropped
// as soon as r disappears from the numerator.
class Expression {
 public:
  Expression() : den_(mpq_class(1)) {}
  explicit Expression(const mpq_class& c) : num_(c), den_(mpq_class(1)) {}
  explicit Expression(long c) : num_(mpq_class(c)), den_(mpq_class(1)) {}

  static Expression variable(int slot);
  static Expression from_poly(Poly num);
  // General constructor; normalizes (including r-power reduction).
  static Expression make(Poly num, Poly den, RadicalPtr rad);

  // Introduces the radical: base^(1/index).  The base must be a
  // radical-free polynomial of the supported radicand shape.
  static Expression radical_root(const Expression& base, int index);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const RadicalPtr& radical() const { return rad_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  // A pure number (no generators at all).
  bool is_rational_constant() const;
  mpq_class rational_value() const;
  // Free of x, jets, and the radical; parameters allowed.
  bool is_param_constant() const;

  bool operator==(const Expression& o) const;
  bool operator!=(const Expression& o) const { return !(*this == o); }

  Expression operator-() const;
  Expression operator+(const Expression& o) const;
  Expression operator-(const Expression& o) const;
  Expression operator*(const Expression& o) const;
  Expression operator/(const Expression& o) const;
  Expression& operator+=(const Expression& o) { return *this = *this + o; }
  Expression& operator-=(const Expression& o) { return *this = *this - o; }
  Expression& operator*=(const Expression& o) { return *this = *this * o; }
  Expression& operator/=(const Expression& o) { return *this = *this / o; }

  Expression inverse() const;
  Expression pow(long k) const;

  // Partial derivative treating every slot (r included) as independent.
  // The calculus layer adds the chain rule through the radical.
  Expression formal_partial(int slot) const;

  bool depends_on(int slot) const;  // through the radicand as well
  int explicit_jet_order() const;   // jets written out in num/den
  int jet_order() const;            // including the radicand's order

  // Coefficient of r^k as a radical-free expression.
  Expression r_layer(int k) const;
  // The radical-free part (layer 0).
  Expression radical_free_part() const { return r_layer(0); }
  bool has_radical() const { return rad_ != nullptr; }

  // Substitutes expressions for slots (slots absent from the map are kept).
  // The radicand is substituted too and must stay polynomial.
  Expression subst(const std::map<int, Expression>& vals) const;

  // Exact evaluation; the point must carry a consistent radical value.
  mpq_class eval(const std::array<mpq_class, kNumSlots>& point) const;

  std::string to_string() const;

 private:
  Poly num_;
  Poly den_;
  RadicalPtr rad_;

  void normalize();
  static RadicalPtr merge_radicals(const RadicalPtr& a, const RadicalPtr& b);
};

// E = gamma * root^k with rational gamma (gamma == 1 when E is a perfect
// k-th power).  nth_root throws RootError when no such decomposition is
// found within the supported shapes.
struct RootResult {
  Expression root;
  mpq_class gamma;
};
RootResult nth_root(const Expression& e, int k);

}  // namespace jetflow
