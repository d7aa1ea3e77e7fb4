#pragma once

#include <array>
#include <map>

#include "jetflow/calculus.hpp"
#include "jetflow/exactness.hpp"

namespace jetflow {

// Chain of canonical conserved densities attached to a fifth-order flow
// u_t = F(x, u, u1, ..., u5).  The chain starts from the inverse fifth
// root of dF/du5; the next two densities have closed forms, and every
// later one follows from a recurrence over the earlier densities and the
// fluxes of their time derivatives.
//
// Each D_t(rho_n) must be a total x-derivative for the chain to continue;
// condition(n) exposes that per-index decision together with the flux (on
// success) or the obstruction (on failure).
class DensityChain {
 public:
  // Throws ShapeError when the flow is not of fifth order, and RootError
  // when dF/du5 has no fifth root; if the root exists only up to a
  // rational factor, that factor rides along as the error's scalar
  // obstruction so callers can rescale the flow and retry.
  explicit DensityChain(Flow flow);

  const Flow& flow() const { return flow_; }
  // dF/du_i for i = 0..5.
  const Expression& rhs_partial(int i) const {
    return f_.at(static_cast<std::size_t>(i));
  }

  // rho_n; zero for n <= -2.  Densities from rho_3 on consume the flux of
  // condition(n - 4), so they are only available while the conditions
  // keep passing (otherwise this throws Error).
  const Expression& density(int n);

  // D_t(rho_n) and its exactness decision, cached per index (n >= -1).
  const ExactnessResult& condition(int n);

  // The recurrence's value for rho_n (n >= 0) even where density() uses a
  // closed form, as a consistency surface: for n = 0 the two agree
  // exactly, for n = 1 up to a total x-derivative.
  Expression density_by_recurrence(int n);

 private:
  Flow flow_;
  std::array<Expression, 6> f_;
  std::map<int, Expression> rho_;
  std::map<int, Expression> drho_;
  std::map<int, ExactnessResult> cond_;

  // theta_n: zero for n <= -2, otherwise the flux of condition(n), which
  // must be log-free to stay in the field.
  Expression theta(int n);
  const Expression& d_density(int n);
  // Ordered sum over index tuples (i_1, ..., i_k), each >= -1 and at most
  // `cap`, summing to `total`; the last diff_count factors enter as
  // D_x(rho_i), the rest as rho_i.
  Expression ordered_sum(int factors, int total, int cap, int diff_count);
  Expression recurrence(int n);
};

}  // namespace jetflow
