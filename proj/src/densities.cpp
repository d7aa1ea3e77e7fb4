#include "jetflow/densities.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace jetflow {

DensityChain::DensityChain(Flow flow) : flow_(std::move(flow)) {
  if (flow_.order() != 5) throw ShapeError("flow must be of fifth order");
  for (int i = 0; i <= 5; ++i)
    f_[static_cast<std::size_t>(i)] = jet_partial(flow_.rhs, i);
  RootResult lead = nth_root(f_[5], 5);
  if (lead.gamma != 1)
    throw RootError(
        "leading coefficient is a fifth power only up to a rational factor",
        lead.gamma);
  rho_.emplace(-1, lead.root.inverse());
}

const Expression& DensityChain::density(int n) {
  if (n <= -2) {
    static const Expression kZero;
    return kZero;
  }
  auto it = rho_.find(n);
  if (it != rho_.end()) return it->second;

  const Expression& a = density(-1);
  Expression value;
  if (n == 0) {
    value = Expression(mpq_class(-1, 5)) * f_[4] * a.pow(5) -
            Expression(2L) * total_x(a) / a;
  } else if (n == 1) {
    Expression da = total_x(a);
    value = Expression(mpq_class(1, 2)) * f_[4] * total_x(a.pow(4)) +
            Expression(mpq_class(2, 5)) * a.pow(4) * total_x(f_[4]) +
            Expression(mpq_class(2, 25)) * a.pow(9) * f_[4] * f_[4] -
            Expression(mpq_class(1, 5)) * a.pow(4) * f_[3] -
            Expression(3L) * da * da * a.pow(-3) +
            Expression(2L) * total_x(da) * a.pow(-2);
  } else {
    value = recurrence(n - 4);
  }
  return rho_.emplace(n, std::move(value)).first->second;
}

const ExactnessResult& DensityChain::condition(int n) {
  if (n < -1) throw ShapeError("conditions are indexed from -1");
  auto it = cond_.find(n);
  if (it != cond_.end()) return it->second;
  ExactnessResult res = is_exact(dt_along(flow_, density(n)));
  return cond_.emplace(n, std::move(res)).first->second;
}

Expression DensityChain::density_by_recurrence(int n) {
  if (n < 0) throw ShapeError("the recurrence starts at index 0");
  return recurrence(n - 4);
}

Expression DensityChain::theta(int n) {
  if (n <= -2) return Expression();
  const ExactnessResult& c = condition(n);
  if (!c.exact)
    throw Error("density chain is obstructed at condition " +
                std::to_string(n));
  if (!c.flux_logs.empty())
    throw Error("flux of condition " + std::to_string(n) +
                " leaves the rational field");
  return c.flux;
}

const Expression& DensityChain::d_density(int n) {
  auto it = drho_.find(n);
  if (it != drho_.end()) return it->second;
  Expression d = total_x(density(n));
  return drho_.emplace(n, std::move(d)).first->second;
}

Expression DensityChain::ordered_sum(int factors, int total, int cap,
                                     int diff_count) {
  if (factors == 0) return total == 0 ? Expression(1L) : Expression();
  Expression acc;
  const int hi = std::min(cap, total + factors - 1);
  for (int i = -1; i <= hi; ++i) {
    // The remaining factors, each at least -1, must reach total - i.
    if (total - i < -(factors - 1)) break;
    const Expression& head =
        factors <= diff_count ? d_density(i) : density(i);
    if (head.is_zero()) continue;
    Expression rest = ordered_sum(factors - 1, total - i, cap, diff_count);
    if (rest.is_zero()) continue;
    acc += head * rest;
  }
  return acc;
}

// rho_{n+4} in terms of the earlier densities and theta_n.  The five-fold
// sum is capped at index n+3: the dropped tuples are exactly the ones
// containing rho_{n+4} itself, whose contribution cancels against the
// recurrence's self-referential term.
Expression DensityChain::recurrence(int n) {
  const Expression& a = density(-1);
  const Expression& rn = density(n);
  const Expression fifth{mpq_class(1, 5)};
  const Expression half{mpq_class(1, 2)};

  Expression s2 = ordered_sum(2, n, n + 1, 0);
  Expression s3 = ordered_sum(3, n, n + 2, 0);
  Expression s4 = ordered_sum(4, n, n + 3, 0);
  Expression s5 = ordered_sum(5, n, n + 3, 0);
  Expression t2 = ordered_sum(2, n, n + 1, 2);
  Expression u3 = ordered_sum(3, n, n + 2, 2);

  Expression value = fifth * a * theta(n);
  {
    Expression inner = f_[1] * rn + f_[2] * total_x(rn) + f_[2] * s2 +
                       f_[3] * total_x_pow(rn, 2);
    if (n == 0) inner += f_[0];
    value -= fifth * a * inner;
  }
  value -= fifth * a * f_[3] *
           (Expression(mpq_class(3, 2)) * total_x(s2) + s3);
  value -= fifth * a * f_[4] *
           (total_x_pow(rn, 3) + Expression(2L) * total_x_pow(s2, 2) - t2 +
            Expression(2L) * total_x(s3) + s4);
  value -= a.pow(-4) *
           (fifth * total_x_pow(rn, 4) + half * total_x_pow(s2, 3) -
            half * total_x(t2) +
            Expression(mpq_class(2, 3)) * total_x_pow(s3, 2) - u3 +
            half * total_x(s4) + fifth * s5);
  return value;
}

}  // namespace jetflow
