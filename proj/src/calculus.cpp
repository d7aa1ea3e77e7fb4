#include "jetflow/calculus.hpp"

#include <utility>

namespace jetflow {
namespace {

// Total x-derivative of a radical-free polynomial (the radical slot, if
// present in monomials, rides along as a constant).
Poly poly_total_x(const Poly& p) {
  Poly out = p.derivative(kSlotX);
  int top = p.max_jet_order();
  if (top >= kJetOrderCap)
    throw OrderError("total derivative exceeds the jet order cap");
  for (int o = 0; o <= top; ++o) {
    Poly dp = p.derivative(jet_slot(o));
    if (!dp.is_zero()) out += dp * Poly::var(jet_slot(o + 1));
  }
  return out;
}

// Applies a derivation (given by its action on radical-free polynomials)
// to n/d, including the chain rule through r = R^(1/m), assembling the
// whole result over one denominator so it is normalized exactly once:
//
//   delta(n/d) = (delta(n) d - n delta(d)) / d^2
//              + (dn/dr) delta(R) r / (m R d).
template <typename DPoly>
Expression apply_derivation(const Expression& e, DPoly&& dpoly) {
  const Poly& n = e.num();
  const Poly& d = e.den();
  Poly num = dpoly(n) * d - n * dpoly(d);
  Poly den = d * d;
  if (e.has_radical() && n.depends_on(kSlotR)) {
    const Poly& radicand = e.radical()->radicand;
    Poly dr = dpoly(radicand);
    if (!dr.is_zero()) {
      Poly scaled = radicand.mul_scalar(mpq_class(e.radical()->index));
      num = num * scaled +
            n.derivative(kSlotR) * dr * Poly::var(kSlotR) * d;
      den *= scaled;
    }
  }
  return Expression::make(std::move(num), std::move(den), e.radical());
}

}  // namespace

Expression total_x(const Expression& e) {
  return apply_derivation(e, poly_total_x);
}

Expression total_x_pow(const Expression& e, int k) {
  Expression out = e;
  for (int i = 0; i < k; ++i) out = total_x(out);
  return out;
}

Expression jet_partial(const Expression& e, int order) {
  int slot = jet_slot(order);
  return apply_derivation(e, [slot](const Poly& p) {
    return p.derivative(slot);
  });
}

Expression x_partial(const Expression& e) {
  return apply_derivation(e, [](const Poly& p) {
    return p.derivative(kSlotX);
  });
}

Expression euler(const Expression& e) {
  int order = e.jet_order();
  if (order > 6)
    throw OrderError("variational derivative needs jet order <= 6");
  Expression out;
  for (int i = 0; i <= std::max(order, 0); ++i) {
    Expression jp = jet_partial(e, i);
    if (jp.is_zero()) continue;
    Expression term = total_x_pow(jp, i);
    out += (i % 2 == 0) ? term : -term;
  }
  return out;
}

Expression frechet(const Expression& e, const Expression& g) {
  int order = e.jet_order();
  Expression out;
  Expression dg = g;
  for (int i = 0; i <= std::max(order, 0); ++i) {
    if (i > 0) dg = total_x(dg);
    Expression jp = jet_partial(e, i);
    if (!jp.is_zero()) out += jp * dg;
  }
  return out;
}

Expression dt_along(const Flow& f, const Expression& e) {
  return frechet(e, f.rhs);
}

Expression commutator(const Flow& f, const Flow& g) {
  return frechet(f.rhs, g.rhs) - frechet(g.rhs, f.rhs);
}

bool flows_commute(const Flow& f, const Flow& g) {
  return commutator(f, g).is_zero();
}

}  // namespace jetflow
