#pragma once

#include "jetflow/expr.hpp"

namespace jetflow {

// Right-hand side of an evolution equation u_t = F(x, u, u1, ..., uk).
struct Flow {
  Expression rhs;

  Flow() = default;
  explicit Flow(Expression e) : rhs(std::move(e)) {}
  int order() const { return rhs.jet_order(); }
};

// Total derivative with respect to x.  Throws OrderError when the result
// would need a jet beyond the cap.
Expression total_x(const Expression& e);

// D_x applied k times.
Expression total_x_pow(const Expression& e, int k);

// Partial derivative with respect to the jet of the given order; the chain
// rule through the radical is included.
Expression jet_partial(const Expression& e, int order);

// Partial derivative with respect to explicit x, radical included.
Expression x_partial(const Expression& e);

// Variational derivative sum_i (-D_x)^i d/du_i; accepts jet order <= 6.
Expression euler(const Expression& e);

// Frechet (directional) derivative of e along g:
// sum_i (d e/d u_i) D_x^i(g).
Expression frechet(const Expression& e, const Expression& g);

// Time derivative of e along u_t = F.
Expression dt_along(const Flow& f, const Expression& e);

// frechet(F, G) - frechet(G, F); identically zero iff the flows commute.
Expression commutator(const Flow& f, const Flow& g);
bool flows_commute(const Flow& f, const Flow& g);

}  // namespace jetflow
