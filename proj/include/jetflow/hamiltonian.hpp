#pragma once

#include <gmpxx.h>

#include "jetflow/calculus.hpp"

namespace jetflow {

// Hamiltonian density H(x, u, u1, u2); the evolution it generates is
// u_t = D_x(delta H / delta u).
class Hamiltonian {
 public:
  // Throws ShapeError when the expression's jet order exceeds 2.
  explicit Hamiltonian(Expression h);
  const Expression& value() const { return h_; }

 private:
  Expression h_;
};

// The flow of a Hamiltonian; throws ShapeError when the variational
// derivative vanishes (H is a pure divergence plus a multiple of u).
Flow flow_of(const Hamiltonian& h);

// Invertible point transformation x = phi(y, v), u = psi(y, v) with
// polynomial data; y and v are written with the x- and u-slots of the
// target ring.  The transformation is canonical when its Jacobian
// phi_y psi_v - phi_v psi_y is identically 1; canonical transformations
// preserve the D_x-Hamiltonian form of the flow.
class PointTransformation {
 public:
  // Throws ShapeError when phi or psi is not a polynomial in (y, v) and
  // parameters, or when the Jacobian vanishes identically.
  PointTransformation(Expression phi, Expression psi);

  const Expression& phi() const { return phi_; }
  const Expression& psi() const { return psi_; }
  const Expression& jacobian() const { return delta_; }
  bool canonical() const { return canonical_; }

 private:
  Expression phi_;
  Expression psi_;
  Expression delta_;
  bool canonical_;
};

// Result of a point transformation.  For a canonical transformation the
// flow keeps the plain D_x form and `conformal` is 1; otherwise the flow
// takes the conformally twisted form v_t = f D_y(f delta H/delta v) with
// f = conformal = 1/Jacobian.
struct TransformedHamiltonian {
  Hamiltonian hamiltonian;
  bool canonical;
  Expression conformal;
};

TransformedHamiltonian transform_point(const Hamiltonian& h,
                                       const PointTransformation& t);

// t = alpha t', x = beta y, u = gamma v; admissible for every H.
Hamiltonian transform_dilate(const Hamiltonian& h, const mpq_class& alpha,
                             const mpq_class& beta, const mpq_class& gamma);

// y = x + c t, v = u; requires H free of explicit x.
Hamiltonian transform_galilean(const Hamiltonian& h, const mpq_class& c);

// Shifts u by a t-proportional amount to strip the x-linear part of the
// Hamiltonian.  kLinearInX removes c1*x*u and requires the remainder to
// be free of x and u; kQuadraticInX removes (c1*x^2 + c2*x)*u and
// additionally requires the remainder to be free of u1.
enum class ShiftKind { kLinearInX, kQuadraticInX };
Hamiltonian transform_shift(const Hamiltonian& h, ShiftKind kind,
                            const mpq_class& c1,
                            const mpq_class& c2 = mpq_class(0));

// Hamiltonians generate the same flow iff they differ by a total
// derivative plus lambda*u: the variational derivative of the difference
// is then the rational constant lambda.
struct EquivalenceWitness {
  bool equivalent = false;
  mpq_class lambda{0};
};
EquivalenceWitness equivalent(const Hamiltonian& a, const Hamiltonian& b);

// The flow of u_t = F rewritten in the transformed variables:
// v_t = F(phi, psi, w1, ..., wk) * D_y(phi) / Jacobian, where w_i is the
// i-th pushed-forward derivative.
Flow pushforward_flow(const Flow& f, const PointTransformation& t);

}  // namespace jetflow
