#pragma once

#include <string>
#include <vector>

#include "jetflow/expr.hpp"

namespace jetflow {

// One logarithmic flux term coeff * log(arg).  The coefficient is always
// parameter-constant, so the term's total derivative coeff * D_x(arg)/arg
// stays inside the fraction field.
struct LogTerm {
  Expression coeff;
  Expression arg;
};

// Outcome of the image-of-D_x decision.  When exact holds,
//   input = D_x(flux) + sum_i coeff_i * D_x(arg_i) / arg_i
// and residue is zero; otherwise residue is the obstruction the
// order-lowering ran into, residue_order its effective jet order, and
// reason a stable tag naming the obstruction class.  flux and flux_logs
// then hold the partial integral accumulated before the failure, so
//   input = D_x(flux) + (log terms) + residue
// in every case.
struct ExactnessResult {
  bool exact = false;
  Expression flux;
  std::vector<LogTerm> flux_logs;
  Expression residue;
  int residue_order = -1;
  std::string reason;
};

// Decides whether e lies in the image of the total derivative over the
// differential fraction field (radical extension included) and produces
// the flux on success.
ExactnessResult is_exact(const Expression& e);

// Splits the numerator of a residue by its non-parameter monomials and
// returns the distinct parameter-polynomial coefficients, each integer
// primitive with positive leading coefficient, in a stable order.  A
// parametric condition holds exactly when all of these vanish.
std::vector<Poly> extract_constraints(const Expression& residue);

}  // namespace jetflow
