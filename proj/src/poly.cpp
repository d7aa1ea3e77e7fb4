#include "jetflow/poly.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace jetflow {

Poly::Poly(const mpq_class& c) {
  if (c != 0) t_.push_back({Monomial::one(), c});
}

Poly Poly::var(int slot, int k) {
  Poly p;
  if (k != 0)
    p.t_.push_back({Monomial::var(slot, k), mpq_class(1)});
  else
    p.t_.push_back({Monomial::one(), mpq_class(1)});
  return p;
}

Poly Poly::term(const mpq_class& c, const Monomial& m) {
  Poly p;
  if (c != 0) p.t_.push_back({m, c});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  Poly p;
  p.t_ = std::move(terms);
  std::sort(p.t_.begin(), p.t_.end(),
            [](const Term& a, const Term& b) { return a.m > b.m; });
  // Merge duplicates in place.
  std::size_t out = 0;
  for (std::size_t i = 0; i < p.t_.size();) {
    Monomial m = p.t_[i].m;
    mpq_class c = p.t_[i].c;
    std::size_t j = i + 1;
    while (j < p.t_.size() && p.t_[j].m == m) c += p.t_[j++].c;
    if (c != 0) p.t_[out++] = {m, std::move(c)};
    i = j;
  }
  p.t_.resize(out);
  return p;
}

bool Poly::is_constant() const {
  return t_.empty() || (t_.size() == 1 && t_[0].m.is_one());
}

mpq_class Poly::constant_value() const {
  if (t_.empty()) return mpq_class(0);
  if (t_.size() == 1 && t_[0].m.is_one()) return t_[0].c;
  throw ShapeError("constant_value on non-constant polynomial");
}

const Term& Poly::leading() const {
  if (t_.empty()) throw ShapeError("leading term of zero polynomial");
  return t_[0];
}

Poly Poly::operator-() const {
  Poly p(*this);
  for (auto& t : p.t_) t.c = -t.c;
  return p;
}

Poly Poly::operator+(const Poly& o) const {
  Poly p;
  p.t_.reserve(t_.size() + o.t_.size());
  std::size_t i = 0, j = 0;
  while (i < t_.size() && j < o.t_.size()) {
    if (t_[i].m == o.t_[j].m) {
      mpq_class c = t_[i].c + o.t_[j].c;
      if (c != 0) p.t_.push_back({t_[i].m, std::move(c)});
      ++i, ++j;
    } else if (t_[i].m > o.t_[j].m) {
      p.t_.push_back(t_[i++]);
    } else {
      p.t_.push_back(o.t_[j++]);
    }
  }
  while (i < t_.size()) p.t_.push_back(t_[i++]);
  while (j < o.t_.size()) p.t_.push_back(o.t_[j++]);
  return p;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly& Poly::operator+=(const Poly& o) {
  *this = *this + o;
  return *this;
}
Poly& Poly::operator-=(const Poly& o) {
  *this = *this - o;
  return *this;
}
Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly Poly::operator*(const Poly& o) const {
  if (t_.empty() || o.t_.empty()) return Poly();
  if (t_.size() == 1) return o.mul_term(t_[0].c, t_[0].m);
  if (o.t_.size() == 1) return mul_term(o.t_[0].c, o.t_[0].m);
  std::unordered_map<Monomial, mpq_class, MonomialHash> acc;
  acc.reserve(t_.size() * o.t_.size());
  for (const auto& a : t_)
    for (const auto& b : o.t_) acc[a.m * b.m] += a.c * b.c;
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) terms.push_back({m, std::move(c)});
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.m > b.m; });
  Poly p;
  p.t_ = std::move(terms);
  return p;
}

Poly Poly::mul_term(const mpq_class& c, const Monomial& m) const {
  if (c == 0) return Poly();
  Poly p;
  p.t_.reserve(t_.size());
  for (const auto& t : t_) p.t_.push_back({t.m * m, t.c * c});
  return p;
}

Poly Poly::mul_scalar(const mpq_class& c) const {
  return mul_term(c, Monomial::one());
}

Poly Poly::pow(unsigned k) const {
  Poly result(mpq_class(1));
  Poly base(*this);
  while (k) {
    if (k & 1u) result *= base;
    base = (k >>= 1u) ? base * base : Poly();
  }
  return result;
}

Poly Poly::derivative(int slot) const {
  std::vector<Term> terms;
  for (const auto& t : t_) {
    int e = t.m.exp(slot);
    if (e == 0) continue;
    Monomial m = t.m;
    m.set_exp(slot, e - 1);
    terms.push_back({m, t.c * e});
  }
  Poly p;
  p.t_ = std::move(terms);  // order is preserved by lowering one slot
  std::sort(p.t_.begin(), p.t_.end(),
            [](const Term& a, const Term& b) { return a.m > b.m; });
  return p;
}

int Poly::degree_in(int slot) const {
  int d = 0;
  for (const auto& t : t_) d = std::max(d, t.m.exp(slot));
  return d;
}

bool Poly::depends_on(int slot) const {
  for (const auto& t : t_)
    if (t.m.exp(slot) != 0) return true;
  return false;
}

int Poly::max_jet_order() const {
  int order = -1;
  for (const auto& t : t_)
    for (int s = kSlotU0 + kMaxJetOrder; s >= kSlotU0; --s)
      if (t.m.exp(s) != 0) {
        order = std::max(order, slot_jet_order(s));
        break;
      }
  return order;
}

std::uint32_t Poly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : t_) d = std::max(d, t.m.deg);
  return d;
}

Poly Poly::coeff_of(int slot, int k) const {
  std::vector<Term> terms;
  for (const auto& t : t_) {
    if (t.m.exp(slot) != k) continue;
    Monomial m = t.m;
    m.set_exp(slot, 0);
    terms.push_back({m, t.c});
  }
  return from_terms(std::move(terms));
}

Poly Poly::subst(int slot, const Poly& value) const {
  int dmax = degree_in(slot);
  if (dmax == 0) return *this;
  // Powers of the replacement, computed once.
  std::vector<Poly> pow(static_cast<std::size_t>(dmax) + 1);
  pow[0] = Poly(mpq_class(1));
  for (int k = 1; k <= dmax; ++k)
    pow[static_cast<std::size_t>(k)] = pow[static_cast<std::size_t>(k - 1)] * value;
  Poly out;
  for (int k = 0; k <= dmax; ++k) {
    Poly ck = coeff_of(slot, k);
    if (!ck.is_zero()) out += ck * pow[static_cast<std::size_t>(k)];
  }
  return out;
}

mpq_class Poly::eval(const std::array<mpq_class, kNumSlots>& point) const {
  mpq_class acc(0);
  for (const auto& t : t_) {
    mpq_class v = t.c;
    for (int s = 0; s < kNumSlots; ++s) {
      int e = t.m.exp(s);
      if (e == 0) continue;
      mpq_class p(1);
      mpq_class base = point[static_cast<std::size_t>(s)];
      for (int i = 0; i < e; ++i) p *= base;
      v *= p;
    }
    acc += v;
  }
  return acc;
}

mpq_class Poly::content_signed() const {
  if (t_.empty()) return mpq_class(0);
  mpz_class num_gcd(0), den_lcm(1);
  for (const auto& t : t_) {
    mpz_class n = t.c.get_num();
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    mpz_class d = t.c.get_den();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
  }
  mpq_class c(num_gcd, den_lcm);
  c.canonicalize();
  if (t_[0].c < 0) c = -c;
  return c;
}

bool Poly::try_divide(const Poly& d, Poly* q) const {
  if (d.is_zero()) throw DivisionError("polynomial division by zero");
  // Ordered-map long division: each quotient term costs |d| map updates
  // instead of a full remainder rewrite.
  struct MonoGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
      return a > b;
    }
  };
  std::map<Monomial, mpq_class, MonoGreater> rem;
  for (const auto& t : t_) rem.emplace(t.m, t.c);
  const Term& lt = d.leading();
  std::vector<Term> quot;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (it->second == 0) {
      rem.erase(it);
      continue;
    }
    if (!it->first.divisible_by(lt.m)) return false;
    Term t{it->first / lt.m, it->second / lt.c};
    rem.erase(it);
    for (std::size_t i = 1; i < d.t_.size(); ++i) {
      const Term& dt = d.t_[i];
      rem[t.m * dt.m] -= t.c * dt.c;
    }
    quot.push_back(std::move(t));
  }
  if (q) *q = from_terms(std::move(quot));
  return true;
}

Poly Poly::divide_exact(const Poly& d) const {
  Poly q;
  if (!try_divide(d, &q)) throw DivisionError("non-exact polynomial division");
  return q;
}

bool Poly::operator==(const Poly& o) const {
  if (t_.size() != o.t_.size()) return false;
  for (std::size_t i = 0; i < t_.size(); ++i)
    if (t_[i].m != o.t_[i].m || t_[i].c != o.t_[i].c) return false;
  return true;
}

bool rational_nth_root(const mpq_class& q, int k, mpq_class* out) {
  if (q == 0) {
    *out = 0;
    return true;
  }
  mpz_class num = q.get_num(), den = q.get_den();
  bool negative = num < 0;
  if (negative) {
    if (k % 2 == 0) return false;
    num = -num;
  }
  mpz_class rn, rd;
  if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(),
               static_cast<unsigned long>(k)) == 0)
    return false;
  if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(),
               static_cast<unsigned long>(k)) == 0)
    return false;
  mpq_class r(rn, rd);
  r.canonicalize();
  *out = negative ? mpq_class(-r) : r;
  return true;
}

std::optional<Poly> poly_nth_root(const Poly& p, int k) {
  if (p.is_zero()) return Poly();
  if (k == 1) return p;
  // Both extreme terms of a perfect power are powers of the root's
  // extreme terms; checking them first makes failure cheap.
  mpq_class root_c, tail_c;
  const Term& lt = p.leading();
  const Term& bt = p.terms().back();
  if (!rational_nth_root(lt.c, k, &root_c)) return std::nullopt;
  if (!rational_nth_root(bt.c, k, &tail_c)) return std::nullopt;
  Monomial root_m;
  for (int s = 0; s < kNumSlots; ++s) {
    if (lt.m.exp(s) % k != 0 || bt.m.exp(s) % k != 0) return std::nullopt;
    if (int e = lt.m.exp(s)) root_m.set_exp(s, e / k);
  }
  Poly q = Poly::term(root_c, root_m);
  Poly lead_pow = Poly::term(mpq_class(k), Monomial()) *
                  Poly::term(root_c, root_m).pow(static_cast<unsigned>(k - 1));
  const Term& dt = lead_pow.leading();
  Monomial prev = lt.m;  // correction monomials strictly decrease
  std::size_t guard = 4 * p.size() + 16;
  for (std::size_t it = 0; it < guard; ++it) {
    Poly err = p - q.pow(static_cast<unsigned>(k));
    if (err.is_zero()) return q;
    // Next correction: lead(err) / (k * lead(q)^(k-1)).
    const Term& et = err.leading();
    if (!et.m.divisible_by(dt.m)) return std::nullopt;
    Monomial tm = et.m / dt.m;
    if (!(root_m > tm)) return std::nullopt;  // no progress: not a power
    if (!(prev > tm)) return std::nullopt;
    if (q.size() >= p.size()) return std::nullopt;  // a root is never larger
    prev = tm;
    q += Poly::term(et.c / dt.c, tm);
  }
  return std::nullopt;
}

}  // namespace jetflow
