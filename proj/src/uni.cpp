#include "jetflow/uni.hpp"

namespace jetflow {

UniE UniE::constant(Expression e) {
  UniE u;
  if (!e.is_zero()) u.c.push_back(std::move(e));
  return u;
}

void UniE::trim() {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

UniE UniE::operator+(const UniE& o) const {
  UniE out;
  out.c.resize(std::max(c.size(), o.c.size()));
  for (std::size_t i = 0; i < out.c.size(); ++i) {
    if (i < c.size()) out.c[i] += c[i];
    if (i < o.c.size()) out.c[i] += o.c[i];
  }
  out.trim();
  return out;
}

UniE UniE::operator-(const UniE& o) const {
  UniE out;
  out.c.resize(std::max(c.size(), o.c.size()));
  for (std::size_t i = 0; i < out.c.size(); ++i) {
    if (i < c.size()) out.c[i] += c[i];
    if (i < o.c.size()) out.c[i] -= o.c[i];
  }
  out.trim();
  return out;
}

UniE UniE::operator*(const UniE& o) const {
  if (is_zero() || o.is_zero()) return {};
  UniE out;
  out.c.resize(c.size() + o.c.size() - 1);
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < o.c.size(); ++j)
      out.c[i + j] += c[i] * o.c[j];
  out.trim();
  return out;
}

UniE UniE::scaled(const Expression& s) const {
  UniE out;
  out.c.reserve(c.size());
  for (const auto& ck : c) out.c.push_back(ck * s);
  out.trim();
  return out;
}

UniE UniE::shifted(int k) const {
  if (is_zero()) return {};
  UniE out;
  out.c.resize(c.size() + static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < c.size(); ++i)
    out.c[i + static_cast<std::size_t>(k)] = c[i];
  return out;
}

UniE UniE::derivative() const {
  UniE out;
  for (std::size_t i = 1; i < c.size(); ++i)
    out.c.push_back(c[i] * Expression(static_cast<long>(i)));
  out.trim();
  return out;
}

std::pair<UniE, UniE> uni_divmod(const UniE& a, const UniE& b) {
  if (b.is_zero()) throw DivisionError("univariate division by zero");
  UniE q, r = a;
  Expression lb_inv = b.lead().inverse();
  while (!r.is_zero() && r.deg() >= b.deg()) {
    Expression f = r.lead() * lb_inv;
    int shift = r.deg() - b.deg();
    UniE t;
    t.c.assign(static_cast<std::size_t>(shift) + 1, Expression());
    t.c.back() = f;
    q = q + t;
    r = r - b.scaled(f).shifted(shift);
    r.trim();
  }
  return {q, r};
}

UniE uni_gcd(UniE a, UniE b) {
  while (!b.is_zero()) {
    UniE r = uni_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) a = a.scaled(a.lead().inverse());
  return a;
}

UniExt uni_ext_gcd(const UniE& a, const UniE& b) {
  UniE r0 = a, r1 = b;
  UniE s0 = UniE::constant(Expression(1L)), s1;
  UniE t0, t1 = UniE::constant(Expression(1L));
  while (!r1.is_zero()) {
    auto [q, r2] = uni_divmod(r0, r1);
    UniE s2 = s0 - q * s1;
    UniE t2 = t0 - q * t1;
    r0 = std::move(r1), r1 = std::move(r2);
    s0 = std::move(s1), s1 = std::move(s2);
    t0 = std::move(t1), t1 = std::move(t2);
  }
  if (!r0.is_zero()) {
    Expression inv = r0.lead().inverse();
    r0 = r0.scaled(inv);
    s0 = s0.scaled(inv);
    t0 = t0.scaled(inv);
  }
  return {r0, s0, t0};
}

}  // namespace jetflow
