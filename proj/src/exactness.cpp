#include "jetflow/exactness.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jetflow/calculus.hpp"
#include "jetflow/gcd.hpp"
#include "jetflow/generators.hpp"
#include "jetflow/uni.hpp"

namespace jetflow {
namespace {

// ------------------------------------------------------------------
// Antiderivatives with respect to a single slot.
//
// The integrand is a rational function of the slot over the field
// generated by everything else; the standard chain applies: polynomial
// part by the power rule, denominator split squarefree, repeated factors
// reduced by Hermite's method, and what remains integrates to logarithms
// whose coefficients must be parameter constants for the result's total
// derivative to stay in the field.

struct SlotIntegral {
  bool ok = false;
  Expression value;
  std::vector<LogTerm> logs;
  std::string reason;
};

Expression uni_to_expr(const UniE& u, int v) {
  Expression x = Expression::variable(v);
  Expression acc;
  for (std::size_t k = u.c.size(); k-- > 0;) acc = acc * x + u.c[k];
  return acc;
}

UniE poly_to_unie(const Poly& p, int v, const RadicalPtr& rad) {
  UniE u;
  int d = p.degree_in(v);
  u.c.reserve(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= d; ++k)
    u.c.push_back(
        Expression::make(p.coeff_of(v, k), Poly(mpq_class(1)), rad));
  u.trim();
  return u;
}

struct SquarefreeFactor {
  Poly factor;
  int multiplicity;
};

// Yun's decomposition with respect to slot v; factors are pairwise
// coprime and squarefree in v, and their powers rebuild the input up to
// a cofactor free of v.
std::vector<SquarefreeFactor> squarefree_in(const Poly& d, int v) {
  Poly dd = d.derivative(v);
  Poly g = poly_gcd(d, dd);
  std::vector<SquarefreeFactor> out;
  if (g.is_constant()) {
    out.push_back({d, 1});
    return out;
  }
  Poly w = d.divide_exact(g);
  Poly y = dd.divide_exact(g);
  int i = 1;
  while (w.degree_in(v) > 0) {
    Poly z = y - w.derivative(v);
    Poly gi = poly_gcd(w, z);
    if (gi.degree_in(v) > 0) out.push_back({gi, i});
    w = w.divide_exact(gi);
    y = z.divide_exact(gi);
    ++i;
  }
  return out;
}

struct ProperPiece {
  UniE num;
  Poly factor;
  int multiplicity;
};

// rem / prod(factor_i^mult_i) as a sum of proper fractions over the
// pairwise coprime moduli, via Bezout identities.
std::vector<ProperPiece> split_partial_fractions(
    UniE rem, const std::vector<SquarefreeFactor>& factors, int v) {
  std::vector<ProperPiece> pieces;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    UniE mi = poly_to_unie(
        factors[i].factor.pow(static_cast<unsigned>(factors[i].multiplicity)),
        v, nullptr);
    if (i + 1 == factors.size()) {
      pieces.push_back(
          {uni_divmod(rem, mi).second, factors[i].factor,
           factors[i].multiplicity});
      break;
    }
    UniE rest = UniE::constant(Expression(1L));
    for (std::size_t j = i + 1; j < factors.size(); ++j)
      rest = rest * poly_to_unie(factors[j].factor.pow(static_cast<unsigned>(
                                     factors[j].multiplicity)),
                                 v, nullptr);
    UniExt ext = uni_ext_gcd(mi, rest);
    if (ext.g.deg() != 0)
      throw Error("partial fraction moduli are not coprime");
    pieces.push_back({uni_divmod(rem * ext.t, mi).second, factors[i].factor,
                      factors[i].multiplicity});
    rem = uni_divmod(rem * ext.s, rest).second;
  }
  return pieces;
}

// Integrates num / factor^multiplicity.  Returns false (with reason)
// when the logarithmic part would need a coefficient that is not a
// parameter constant.
bool hermite_piece(UniE num, const Poly& factor, int multiplicity, int v,
                   Expression* value, std::vector<LogTerm>* logs,
                   std::string* reason) {
  UniE q = poly_to_unie(factor, v, nullptr);
  UniE qp = q.derivative();
  int e = multiplicity;
  while (e > 1) {
    UniExt ext = uni_ext_gcd(q, qp);
    if (ext.g.deg() != 0) throw Error("repeated factor is not squarefree");
    UniE b = uni_divmod(num * ext.t, q).second;
    auto [c, r0] = uni_divmod(num - b * qp, q);
    if (!r0.is_zero()) throw Error("Hermite split left a remainder");
    Expression step(static_cast<long>(e - 1));
    *value -= uni_to_expr(b, v) /
              (Expression::from_poly(factor).pow(e - 1) * step);
    num = c + b.derivative().scaled(Expression(1L) / step);
    num.trim();
    --e;
  }
  if (num.is_zero()) return true;
  if (num.deg() == qp.deg()) {
    Expression c = num.lead() / qp.lead();
    if ((num - qp.scaled(c)).is_zero() && c.is_param_constant() &&
        !c.depends_on(v)) {
      logs->push_back({c, Expression::from_poly(factor)});
      return true;
    }
  }
  *reason = "nonconstant log residue";
  return false;
}

SlotIntegral integrate_slot(const Expression& a, int v) {
  SlotIntegral out;
  if (a.is_zero()) {
    out.ok = true;
    return out;
  }
  const Poly& num = a.num();
  const Poly& den = a.den();
  const RadicalPtr& rad = a.radical();
  Expression x = Expression::variable(v);
  if (den.degree_in(v) == 0) {
    for (int k = 0; k <= num.degree_in(v); ++k) {
      Poly nk = num.coeff_of(v, k);
      if (nk.is_zero()) continue;
      out.value += Expression::make(std::move(nk),
                                    den.mul_scalar(mpq_class(k + 1)), rad) *
                   x.pow(k + 1);
    }
    out.ok = true;
    return out;
  }

  std::vector<Poly> dcs;
  for (int k = 0; k <= den.degree_in(v); ++k) {
    Poly c = den.coeff_of(v, k);
    if (!c.is_zero()) dcs.push_back(std::move(c));
  }
  Poly cont = poly_gcd_many(dcs);
  Poly dp = den.divide_exact(cont);
  Expression scale = Expression::make(Poly(mpq_class(1)), cont, nullptr);

  UniE na = poly_to_unie(num, v, rad);
  UniE da = poly_to_unie(dp, v, nullptr);
  auto [quot, rem] = uni_divmod(na, da);
  for (std::size_t k = 0; k < quot.c.size(); ++k) {
    if (quot.c[k].is_zero()) continue;
    out.value += scale * quot.c[k] *
                 x.pow(static_cast<long>(k) + 1) /
                 Expression(static_cast<long>(k) + 1);
  }
  if (!rem.is_zero()) {
    auto factors = squarefree_in(dp, v);
    Poly prod{mpq_class(1)};
    for (const auto& f : factors)
      prod *= f.factor.pow(static_cast<unsigned>(f.multiplicity));
    Poly lam;
    if (!dp.try_divide(prod, &lam) || lam.degree_in(v) != 0)
      throw Error("squarefree decomposition mismatch");
    rem = rem.scaled(scale / Expression::from_poly(lam));
    for (auto& piece : split_partial_fractions(std::move(rem), factors, v)) {
      if (piece.num.is_zero()) continue;
      if (!hermite_piece(std::move(piece.num), piece.factor,
                         piece.multiplicity, v, &out.value, &out.logs,
                         &out.reason))
        return out;
    }
  }
  out.ok = true;
  return out;
}

// ------------------------------------------------------------------
// Integration across the radical boundary.
//
// When the integration jet is the radicand's top jet, the radicand being
// linear in that jet makes  u_top <-> r  a birational change of
// coordinates: substituting u_top = (r^index - rest) / top_coeff turns
// the integrand into an ordinary rational function of a transcendental
// stand-in for r, which the machinery above integrates; substituting the
// radical generator back reinstates the algebraic relation.

int subst_slot() {
  static const int slot = ParamRegistry::instance().intern("_t");
  return slot;
}

// p with the radical generator sent to r_sub and `slot` sent to
// slot_sub; every other generator is kept.
Expression poly_with(const Poly& p, int slot, const Expression& slot_sub,
                     const Expression& r_sub) {
  Expression acc;
  for (const auto& term : p.terms()) {
    Expression val{term.c};
    for (int s = 0; s < kNumSlots; ++s) {
      int e = term.m.exp(s);
      if (!e) continue;
      const Expression base = s == kSlotR     ? r_sub
                              : s == slot     ? slot_sub
                                              : Expression::variable(s);
      val *= base.pow(e);
    }
    acc += val;
  }
  return acc;
}

SlotIntegral integrate_radical_boundary(const Expression& a,
                                        const RadicalPtr& rad) {
  const int tv = subst_slot();
  const int top = jet_slot(rad->top_order);
  Expression t = Expression::variable(tv);
  Expression coeff = Expression::from_poly(rad->top_coeff);
  Expression lifted =
      (t.pow(rad->index) - Expression::from_poly(rad->rest)) / coeff;

  Expression num_t = poly_with(a.num(), top, lifted, t);
  Expression den_t = poly_with(a.den(), top, lifted, t);
  Expression integrand = num_t / den_t *
                         Expression(static_cast<long>(rad->index)) *
                         t.pow(rad->index - 1) / coeff;

  SlotIntegral inner = integrate_slot(integrand, tv);
  if (!inner.ok) return inner;

  Expression r =
      Expression::make(Poly::var(kSlotR), Poly(mpq_class(1)), rad);
  std::map<int, Expression> back{{tv, r}};
  SlotIntegral out;
  out.ok = true;
  out.value = inner.value.subst(back);
  for (auto& lt : inner.logs)
    out.logs.push_back({lt.coeff, lt.arg.subst(back)});
  return out;
}

int effective_order(const Expression& e) {
  int eo = e.explicit_jet_order();
  if (e.has_radical()) eo = std::max(eo, e.radical()->top_order);
  return eo;
}

}  // namespace

// ------------------------------------------------------------------
// The image-of-D_x decision by order lowering.
//
// A total derivative D_x(g) is linear in its top jet, with a coefficient
// that is the partial of g by the jet below; stripping one integrated
// layer at a time either reaches zero or leaves an obstruction.  Each
// failure branch is backed by a structural argument, not a heuristic:
//
//  * When the top jet appears only through the radical, a flux term
//    B * r^k would need explicit order above the input's unless B solves
//    an equation whose solutions are irrational, so every radical layer
//    of the input must vanish identically.
//  * A nonlinear top jet cannot come from any D_x(g).
//  * A logarithm with a non-constant coefficient cannot cancel against
//    rational terms in any total derivative.
//  * An order-zero input depending on u would need a flux depending on
//    nothing but x, whose derivative cannot involve u.
ExactnessResult is_exact(const Expression& e) {
  ExactnessResult res;
  Expression s = e;
  auto fail = [&](const std::string& reason) {
    res.exact = false;
    res.residue = s;
    res.residue_order = effective_order(s);
    res.reason = reason;
    return res;
  };

  for (int guard = 0; guard < 256; ++guard) {
    if (s.is_zero()) {
      res.exact = true;
      res.residue = Expression();
      res.residue_order = -1;
      res.reason.clear();
      return res;
    }
    const int eo = s.explicit_jet_order();
    const bool has_r = s.has_radical();
    const int ro = has_r ? s.radical()->top_order : -1;

    if (has_r && eo <= ro) {
      // Any flux for the radical layers would need jets beyond the
      // input's order; the layers must already be zero.
      Expression base = s.radical_free_part();
      if (s != base) return fail("radical residue");
      s = std::move(base);
      continue;
    }

    if (eo >= 1) {
      const int top_slot = jet_slot(eo);
      if (s.den().degree_in(top_slot) != 0 ||
          s.num().degree_in(top_slot) > 1)
        return fail("nonlinear in top jet");
      Expression a = jet_partial(s, eo);
      SlotIntegral si =
          a.has_radical() && a.radical()->top_order == eo - 1
              ? integrate_radical_boundary(a, a.radical())
              : integrate_slot(a, jet_slot(eo - 1));
      if (!si.ok) return fail(si.reason);
      Expression delta = total_x(si.value);
      for (const auto& lt : si.logs)
        delta += lt.coeff * total_x(lt.arg) / lt.arg;
      res.flux += si.value;
      for (auto& lt : si.logs) res.flux_logs.push_back(std::move(lt));
      s = s - delta;
      if (!s.is_zero() && s.explicit_jet_order() >= eo)
        throw Error("order lowering failed to reduce the top jet");
      continue;
    }

    if (eo == 0) return fail("order-zero residue");

    // Only x and parameters remain.
    SlotIntegral si = integrate_slot(s, kSlotX);
    if (!si.ok) return fail(si.reason);
    res.flux += si.value;
    for (auto& lt : si.logs) res.flux_logs.push_back(std::move(lt));
    s = Expression();
  }
  throw Error("exactness analysis did not terminate");
}

std::vector<Poly> extract_constraints(const Expression& residue) {
  std::map<Monomial, Poly> groups;
  for (const auto& term : residue.num().terms()) {
    Monomial shape = term.m;
    Monomial params;
    for (int slot = kFirstParamSlot; slot < kNumSlots; ++slot) {
      params.set_exp(slot, term.m.exp(slot));
      shape.set_exp(slot, 0);
    }
    groups[shape] += Poly::term(term.c, params);
  }
  std::vector<std::pair<std::string, Poly>> keyed;
  for (auto& [shape, coeff] : groups) {
    if (coeff.is_zero()) continue;
    Poly canon = coeff.mul_scalar(1 / coeff.content_signed());
    std::string key = Expression::from_poly(canon).to_string();
    keyed.emplace_back(std::move(key), std::move(canon));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(),
                          [](const auto& a, const auto& b) {
                            return a.first == b.first;
                          }),
              keyed.end());
  std::vector<Poly> out;
  out.reserve(keyed.size());
  for (auto& [key, p] : keyed) out.push_back(std::move(p));
  return out;
}

}  // namespace jetflow
