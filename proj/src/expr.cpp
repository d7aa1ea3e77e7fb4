#include "jetflow/expr.hpp"


#include <optional>
#include <vector>

#include "jetflow/gcd.hpp"
#include "jetflow/uni.hpp"

namespace jetflow {
namespace {

Poly radical_pow_table(const Poly& radicand, int k, std::vector<Poly>* cache) {
  while (static_cast<int>(cache->size()) <= k) {
    if (cache->empty())
      cache->push_back(Poly(mpq_class(1)));
    else
      cache->push_back(cache->back() * radicand);
  }
  return (*cache)[static_cast<std::size_t>(k)];
}

// Folds r^k with k >= index down using r^index = radicand.
Poly reduce_r(const Poly& p, const RadicalContext& ctx) {
  bool needs = false;
  for (const auto& t : p.terms())
    if (t.m.exp(kSlotR) >= ctx.index) {
      needs = true;
      break;
    }
  if (!needs) return p;
  std::vector<Term> low;
  Poly folded;
  std::vector<Poly> cache;
  for (const auto& t : p.terms()) {
    int k = t.m.exp(kSlotR);
    if (k < ctx.index) {
      low.push_back(t);
    } else {
      Monomial m = t.m;
      m.set_exp(kSlotR, k % ctx.index);
      folded += radical_pow_table(ctx.radicand, k / ctx.index, &cache)
                    .mul_term(t.c, m);
    }
  }
  return Poly::from_terms(std::move(low)) + folded;
}

}  // namespace

std::shared_ptr<const RadicalContext> RadicalContext::create(
    int index, const Poly& radicand) {
  if (index != 2 && index != 3 && index != 5)
    throw RadicalError("radical index must be 2, 3, or 5");
  if (radicand.is_zero()) throw RadicalError("radicand must be nonzero");
  if (radicand.depends_on(kSlotR))
    throw RadicalError("radicand must be radical-free");
  int top = radicand.max_jet_order();
  if (top < 0)
    throw RadicalError("radicand must involve at least one jet variable");
  if (top > 2) throw RadicalError("radicand jet order exceeds 2");
  int top_slot = jet_slot(top);
  if (radicand.degree_in(top_slot) != 1)
    throw RadicalError("radicand must be linear in its top jet");
  auto ctx = std::make_shared<RadicalContext>();
  ctx->index = index;
  ctx->radicand = radicand;
  ctx->top_order = top;
  ctx->top_coeff = radicand.coeff_of(top_slot, 1);
  ctx->rest = radicand.coeff_of(top_slot, 0);
  return ctx;
}

Expression Expression::variable(int slot) {
  Expression e;
  e.num_ = Poly::var(slot);
  return e;
}

Expression Expression::from_poly(Poly num) {
  Expression e;
  e.num_ = std::move(num);
  if (e.num_.depends_on(kSlotR))
    throw RadicalError("from_poly operand must be radical-free");
  return e;
}

Expression Expression::radical_root(const Expression& base, int index) {
  if (base.rad_) throw RadicalError("nested radicals are not supported");
  if (!base.den_.is_constant() || base.den_.constant_value() != 1)
    throw RadicalError("radicand must be a polynomial");
  auto ctx = RadicalContext::create(index, base.num_);
  return make(Poly::var(kSlotR), Poly(mpq_class(1)), ctx);
}

namespace {

// 1 / p where p may involve r; the result has a radical-free denominator.
Expression invert_r_poly(const Poly& p, const RadicalPtr& rad);

}  // namespace

Expression Expression::make(Poly num, Poly den, RadicalPtr rad) {
  if (den.is_zero()) throw DivisionError("zero denominator");
  if (rad) {
    num = reduce_r(num, *rad);
    den = reduce_r(den, *rad);
    if (den.depends_on(kSlotR)) {
      Expression inv = invert_r_poly(den, rad);
      return make(num * inv.num_, inv.den_, rad);
    }
  } else if (num.depends_on(kSlotR) || den.depends_on(kSlotR)) {
    throw RadicalError("radical generator used without a radical context");
  }
  Expression e;
  e.num_ = std::move(num);
  e.den_ = std::move(den);
  e.rad_ = std::move(rad);
  e.normalize();
  return e;
}

void Expression::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(mpq_class(1));
    rad_ = nullptr;
    return;
  }
  if (rad_ && !num_.depends_on(kSlotR)) rad_ = nullptr;

  std::vector<Poly> parts;
  if (rad_) {
    for (int k = 0; k < rad_->index; ++k) {
      Poly layer = num_.coeff_of(kSlotR, k);
      if (!layer.is_zero()) parts.push_back(std::move(layer));
    }
  } else {
    parts.push_back(num_);
  }
  parts.push_back(den_);
  Poly g = poly_gcd_many(parts);
  if (!g.is_constant()) {
    num_ = num_.divide_exact(g);
    den_ = den_.divide_exact(g);
  }
  mpq_class s = den_.content_signed();
  if (s != 1) {
    mpq_class inv = 1 / s;
    num_ = num_.mul_scalar(inv);
    den_ = den_.mul_scalar(inv);
  }
}

RadicalPtr Expression::merge_radicals(const RadicalPtr& a,
                                      const RadicalPtr& b) {
  if (!a) return b;
  if (!b) return a;
  if (a->same_as(*b)) return a;
  throw RadicalError("cannot combine two distinct radicals");
}

bool Expression::is_one() const {
  return num_.is_constant() && den_.is_constant() &&
         num_.constant_value() == 1 && den_.constant_value() == 1;
}

bool Expression::is_rational_constant() const {
  return num_.is_constant() && den_.is_constant();
}

mpq_class Expression::rational_value() const {
  if (!is_rational_constant())
    throw ShapeError("rational_value on non-constant expression");
  if (num_.is_zero()) return mpq_class(0);
  return num_.constant_value() / den_.constant_value();
}

bool Expression::is_param_constant() const {
  for (const Poly* p : {&num_, &den_})
    for (const auto& t : p->terms())
      for (int s = 0; s < kFirstParamSlot; ++s)
        if (t.m.exp(s) != 0) return false;
  return true;
}

bool Expression::operator==(const Expression& o) const {
  if (num_ != o.num_ || den_ != o.den_) return false;
  if (!rad_ != !o.rad_) return false;
  return !rad_ || rad_->same_as(*o.rad_);
}

Expression Expression::operator-() const {
  Expression e(*this);
  e.num_ = -e.num_;
  return e;
}

Expression Expression::operator+(const Expression& o) const {
  RadicalPtr rad = merge_radicals(rad_, o.rad_);
  if (den_ == o.den_)
    return make(num_ + o.num_, den_, std::move(rad));
  // Combine over the least common denominator; anything else towers up
  // powers that the normalization gcd then has to tear back down.
  Poly g = poly_gcd(den_, o.den_);
  if (g.is_constant())
    return make(num_ * o.den_ + o.num_ * den_, den_ * o.den_, std::move(rad));
  Poly da = den_.divide_exact(g);
  Poly db = o.den_.divide_exact(g);
  return make(num_ * db + o.num_ * da, den_ * db, std::move(rad));
}

Expression Expression::operator-(const Expression& o) const {
  return *this + (-o);
}

Expression Expression::operator*(const Expression& o) const {
  RadicalPtr rad = merge_radicals(rad_, o.rad_);
  return make(num_ * o.num_, den_ * o.den_, std::move(rad));
}

Expression Expression::operator/(const Expression& o) const {
  return *this * o.inverse();
}

namespace {

UniE to_uni_r(const Poly& p, int index) {
  UniE u;
  u.c.reserve(static_cast<std::size_t>(index));
  for (int k = 0; k < index; ++k)
    u.c.push_back(Expression::from_poly(p.coeff_of(kSlotR, k)));
  u.trim();
  return u;
}

Expression invert_r_poly(const Poly& p, const RadicalPtr& rad) {
  if (p.is_zero()) throw DivisionError("inverse of zero");
  const int m = rad->index;
  // Single-term fast path: 1/(c*M*r^k) = r^(m-k) / (c*M*R).
  if (p.size() == 1) {
    const Term& t = p.terms()[0];
    int k = t.m.exp(kSlotR);
    if (k == 0) {
      return Expression::make(Poly(mpq_class(1)), p, nullptr);
    }
    Monomial base = t.m;
    base.set_exp(kSlotR, 0);
    Poly den = rad->radicand.mul_term(t.c, base);
    return Expression::make(Poly::var(kSlotR, m - k), den, rad);
  }
  // General case: extended Euclid against r^m - R in the quotient field.
  UniE modulus;
  modulus.c.assign(static_cast<std::size_t>(m) + 1, Expression());
  modulus.c[0] = -Expression::from_poly(rad->radicand);
  modulus.c.back() = Expression(1L);
  UniE target = to_uni_r(p, m);
  UniExt ext = uni_ext_gcd(modulus, target);
  if (ext.g.deg() != 0)
    throw RadicalError("radical denominator is a zero divisor");
  // ext.t * p == g (deg 0, monic == 1), so ext.t is the inverse.
  Expression out;
  for (std::size_t k = 0; k < ext.t.c.size(); ++k) {
    const Expression& ck = ext.t.c[k];
    if (ck.is_zero()) continue;
    Expression rk = Expression::make(Poly::var(kSlotR, static_cast<int>(k)),
                                     Poly(mpq_class(1)), rad);
    out += ck * rk;
  }
  return out;
}

}  // namespace

Expression Expression::inverse() const {
  if (num_.is_zero()) throw DivisionError("inverse of zero expression");
  if (!rad_ || !num_.depends_on(kSlotR))
    return make(den_, num_, nullptr);
  Expression inv = invert_r_poly(num_, rad_);
  return inv * make(den_, Poly(mpq_class(1)), nullptr);
}

Expression Expression::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  Expression result(1L);
  Expression base(*this);
  auto e = static_cast<unsigned long>(k);
  while (e) {
    if (e & 1ul) result *= base;
    e >>= 1ul;
    if (e) base *= base;
  }
  return result;
}

Expression Expression::formal_partial(int slot) const {
  Poly dn = num_.derivative(slot);
  Poly dd = den_.derivative(slot);
  if (dd.is_zero()) return make(std::move(dn), den_, rad_);
  return make(dn * den_ - num_ * dd, den_ * den_, rad_);
}

bool Expression::depends_on(int slot) const {
  if (num_.depends_on(slot) || den_.depends_on(slot)) return true;
  return rad_ && rad_->radicand.depends_on(slot);
}

int Expression::explicit_jet_order() const {
  return std::max(num_.max_jet_order(), den_.max_jet_order());
}

int Expression::jet_order() const {
  int order = explicit_jet_order();
  if (rad_) order = std::max(order, rad_->top_order);
  return order;
}

Expression Expression::r_layer(int k) const {
  if (!rad_) {
    if (k == 0) return *this;
    return Expression();
  }
  return make(num_.coeff_of(kSlotR, k), den_, nullptr);
}

Expression Expression::subst(const std::map<int, Expression>& vals) const {
  RadicalPtr new_rad;
  Expression r_value;  // value of the r generator after substitution
  if (rad_) {
    Expression radicand = from_poly(rad_->radicand).subst(vals);
    if (!radicand.den_.is_constant() || radicand.den_.constant_value() != 1 ||
        radicand.rad_)
      throw RadicalError("substitution must keep the radicand polynomial");
    if (radicand.num_ == rad_->radicand) {
      new_rad = rad_;
    } else {
      new_rad = RadicalContext::create(rad_->index, radicand.num_);
    }
    r_value = make(Poly::var(kSlotR), Poly(mpq_class(1)), new_rad);
  }

  auto eval_poly = [&](const Poly& p) {
    Expression acc;
    std::map<int, std::vector<Expression>> powers;
    for (const auto& t : p.terms()) {
      Expression v(t.c);
      for (int s = 0; s < kNumSlots; ++s) {
        int e = t.m.exp(s);
        if (e == 0) continue;
        Expression base;
        if (s == kSlotR) {
          base = r_value;
        } else if (auto it = vals.find(s); it != vals.end()) {
          base = it->second;
        } else {
          base = variable(s);
        }
        auto& cache = powers[s];
        if (cache.empty()) cache.push_back(Expression(1L));
        while (static_cast<int>(cache.size()) <= e)
          cache.push_back(cache.back() * base);
        v *= cache[static_cast<std::size_t>(e)];
      }
      acc += v;
    }
    return acc;
  };

  Expression n = eval_poly(num_);
  Expression d = eval_poly(den_);
  return n / d;
}

mpq_class Expression::eval(
    const std::array<mpq_class, kNumSlots>& point) const {
  if (rad_) {
    mpq_class rv = point[kSlotR];
    mpq_class rpow(1);
    for (int i = 0; i < rad_->index; ++i) rpow *= rv;
    if (rpow != rad_->radicand.eval(point))
      throw ShapeError("evaluation point is inconsistent with the radical");
  }
  mpq_class d = den_.eval(point);
  if (d == 0) throw DivisionError("evaluation point hits a pole");
  return num_.eval(point) / d;
}

// ------------------------------------------------------------------
// k-th roots.

namespace {

// Root of c * root^k for a radical-free expression; gamma soaks up the
// non-power rational content.
std::optional<RootResult> rational_function_root(const Expression& e, int k) {
  mpq_class cn = e.num().content_signed();
  mpq_class cd = e.den().content_signed();
  Poly n = e.num().mul_scalar(1 / cn);
  Poly d = e.den().mul_scalar(1 / cd);
  auto rn = poly_nth_root(n, k);
  if (!rn) return std::nullopt;
  auto rd = poly_nth_root(d, k);
  if (!rd) return std::nullopt;
  mpq_class gamma = cn / cd;
  Expression root = Expression::make(*rn, *rd, nullptr);
  mpq_class scalar_root;
  if (rational_nth_root(gamma, k, &scalar_root)) {
    root = root * Expression(scalar_root);
    gamma = 1;
  }
  return RootResult{root, gamma};
}

}  // namespace

RootResult nth_root(const Expression& e, int k) {
  if (k <= 0) throw ShapeError("root index must be positive");
  if (e.is_zero()) throw RootError("k-th root of zero");
  if (!e.has_radical()) {
    auto r = rational_function_root(e, k);
    if (!r) throw RootError("operand is not a rational k-th power");
    return *r;
  }
  const RadicalPtr& rad = e.radical();
  const int m = rad->index;
  int layer = -1;
  for (int s = 0; s < m; ++s) {
    if (!e.num().coeff_of(kSlotR, s).is_zero()) {
      if (layer >= 0)
        throw RootError("radical operand mixes several r-layers");
      layer = s;
    }
  }
  Expression r_expr =
      Expression::make(Poly::var(kSlotR), Poly(mpq_class(1)), rad);
  for (int j = 0; j < m; ++j) {
    if ((k * j) % m != layer) continue;
    Expression w = e / r_expr.pow(static_cast<long>(k) * j);
    if (w.has_radical()) continue;
    if (auto base = rational_function_root(w, k))
      return RootResult{base->root * r_expr.pow(j), base->gamma};
  }
  throw RootError("operand is not a k-th power in the radical extension");
}

}  // namespace jetflow
