#include "jetflow/gcd.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace jetflow {
namespace {

Poly make_primitive(const Poly& p) {
  if (p.is_zero()) return p;
  return p.mul_scalar(1 / p.content_signed());
}

Monomial monomial_content(const Poly& p) {
  Monomial m = p.terms()[0].m;
  for (const auto& t : p.terms()) {
    for (int s = 0; s < kNumSlots; ++s)
      if (t.m.exp(s) < m.exp(s)) m.set_exp(s, t.m.exp(s));
    if (m.is_one()) break;
  }
  return m;
}

struct MonoLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return b > a; }
};

// ------------------------------------------------------------------
// Prime field arithmetic.

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                          19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  // Deterministic Miller-Rabin bases for 64-bit inputs.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                          19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a % n, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x6a6574666c6f77ull);  // fixed: results must not
                                                    // depend on luck
  return gen;
}

std::uint64_t random_prime() {
  std::uniform_int_distribution<std::uint64_t> dist(
      (1ull << 61) + 1, (1ull << 62) - 1);
  for (;;) {
    std::uint64_t c = dist(rng()) | 1ull;
    if (is_prime(c)) return c;
  }
}

// Residue of a rational mod p; false when the denominator vanishes.
bool mpq_mod(const mpq_class& q, std::uint64_t p, std::uint64_t* out) {
  mpz_class pz(static_cast<unsigned long>(p));
  mpz_class nr = q.get_num() % pz, dr = q.get_den() % pz;
  if (nr < 0) nr += pz;
  std::uint64_t n = mpz_get_ui(nr.get_mpz_t());
  std::uint64_t d = mpz_get_ui(dr.get_mpz_t());
  if (d == 0) return false;
  *out = d == 1 ? n : mulmod(n, powmod(d, p - 2, p), p);
  return true;
}

// ------------------------------------------------------------------
// Modular multivariate gcd by dense interpolation.
//
// The workhorse for any pair the structural shortcuts below do not
// dispatch.  One main variable is fixed; all the others are evaluated on
// a grid, univariate gcds are taken in the prime field, and the images
// are interpolated back, scaled so the leading coefficient matches
// gcd(lead(a), lead(b)).  Candidates are only ever accepted after an
// exact division check over the rationals, so wrong primes or unlucky
// evaluation points can cost time but never correctness.  In the other
// direction, one degree-preserving specialization whose image gcd is
// constant proves the true gcd has degree zero in the main variable:
// any common divisor would survive specialization intact.

struct MPoly {
  std::vector<std::pair<Monomial, std::uint64_t>> t;

  bool is_zero() const { return t.empty(); }
};

int mdeg_in(const MPoly& a, int v) {
  int d = 0;
  for (const auto& [m, c] : a.t) d = std::max(d, m.exp(v));
  return d;
}

bool reduce_mod(const Poly& a, std::uint64_t p, MPoly* out) {
  out->t.clear();
  out->t.reserve(a.size());
  for (const auto& t : a.terms()) {
    std::uint64_t c;
    if (!mpq_mod(t.c, p, &c)) return false;
    if (c) out->t.push_back({t.m, c});
  }
  return true;
}

MPoly eval_var(const MPoly& a, int v, std::uint64_t x, std::uint64_t p) {
  std::map<Monomial, std::uint64_t, MonoLess> acc;
  for (const auto& [m, c] : a.t) {
    int e = m.exp(v);
    std::uint64_t cc = e ? mulmod(c, powmod(x, static_cast<std::uint64_t>(e),
                                            p), p)
                         : c;
    Monomial m2 = m;
    m2.set_exp(v, 0);
    auto [it, fresh] = acc.emplace(m2, cc);
    if (!fresh) it->second = (it->second + cc) % p;
  }
  MPoly out;
  for (const auto& [m, c] : acc)
    if (c) out.t.push_back({m, c});
  return out;
}

// Dense univariate coefficients of a fully specialized image.
std::vector<std::uint64_t> to_dense(const MPoly& a, int v, std::uint64_t p) {
  std::vector<std::uint64_t> out(static_cast<std::size_t>(mdeg_in(a, v)) + 1,
                                 0);
  for (const auto& [m, c] : a.t) {
    auto d = static_cast<std::size_t>(m.exp(v));
    out[d] = (out[d] + c) % p;
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<std::uint64_t> uni_gcd(std::vector<std::uint64_t> a,
                                   std::vector<std::uint64_t> b,
                                   std::uint64_t p) {
  while (!b.empty()) {
    std::uint64_t inv = powmod(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
      std::uint64_t f = mulmod(a.back(), inv, p);
      std::size_t off = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) {
        std::uint64_t s = mulmod(f, b[i], p);
        a[off + i] = (a[off + i] + p - s) % p;
      }
      while (!a.empty() && a.back() == 0) a.pop_back();
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    std::uint64_t inv = powmod(a.back(), p - 2, p);
    for (auto& c : a) c = mulmod(c, inv, p);
  }
  return a;
}

// Thrown when a constant image gcd proves the answer free of the main
// variable; the specialization is degree-preserving by construction.
struct FreeOfMainVar {};

// Thrown on inconsistent image degrees or exhausted evaluation points.
struct UnluckyRun {};

MPoly interpolate(const std::vector<std::uint64_t>& pts,
                  std::vector<MPoly> kids, int w, std::uint64_t p) {
  std::size_t n = pts.size();
  // master(x) = prod (x - pts[i]), dense and monic
  std::vector<std::uint64_t> master(1, 1);
  for (std::uint64_t t : pts) {
    std::vector<std::uint64_t> next(master.size() + 1, 0);
    for (std::size_t k = 0; k < master.size(); ++k) {
      next[k + 1] = (next[k + 1] + master[k]) % p;
      std::uint64_t s = mulmod(master[k], t, p);
      next[k] = (next[k] + p - s) % p;
    }
    master = std::move(next);
  }
  std::map<Monomial, std::uint64_t, MonoLess> acc;
  for (std::size_t j = 0; j < n; ++j) {
    // quotient master / (x - pts[j]) by synthetic division
    std::vector<std::uint64_t> q(n, 0);
    std::uint64_t carry = 0;
    for (std::size_t k = n + 1; k-- > 1;) {
      carry = (master[k] + mulmod(carry, pts[j], p)) % p;
      q[k - 1] = carry;
    }
    // scale so the basis polynomial is 1 at pts[j]
    std::uint64_t val = 0;
    for (std::size_t k = n; k-- > 0;)
      val = (mulmod(val, pts[j], p) + q[k]) % p;
    std::uint64_t inv = powmod(val, p - 2, p);
    for (auto& c : q) c = mulmod(c, inv, p);
    for (const auto& [m, c] : kids[j].t) {
      for (std::size_t k = 0; k < n; ++k) {
        if (q[k] == 0) continue;
        Monomial mk = m;
        mk.set_exp(w, m.exp(w) + static_cast<int>(k));
        auto [it, fresh] = acc.emplace(mk, 0);
        it->second = (it->second + mulmod(c, q[k], p)) % p;
      }
    }
  }
  MPoly out;
  for (const auto& [m, c] : acc)
    if (c) out.t.push_back({m, c});
  return out;
}

// Recursive evaluation/interpolation over the grid variables `gv`.
// Returns the image of gamma * gcd / lead(gcd) modulo p, with the image
// gcd degree in *deg_out.
MPoly brown_walk(const MPoly& a, const MPoly& b, const MPoly& gamma, int v,
                 int da, int db, const std::vector<int>& gv,
                 const std::vector<int>& bounds, std::size_t level,
                 std::uint64_t offset, std::uint64_t p, int* deg_out) {
  if (level == gv.size()) {
    auto ua = to_dense(a, v, p), ub = to_dense(b, v, p);
    if (static_cast<int>(ua.size()) - 1 != da ||
        static_cast<int>(ub.size()) - 1 != db)
      throw UnluckyRun{};
    auto g = uni_gcd(std::move(ua), std::move(ub), p);
    int dg = static_cast<int>(g.size()) - 1;
    if (dg == 0) throw FreeOfMainVar{};
    if (gamma.t.size() != 1 || !gamma.t[0].first.is_one()) throw UnluckyRun{};
    std::uint64_t gval = gamma.t[0].second;
    MPoly out;
    for (int k = 0; k <= dg; ++k) {
      std::uint64_t c = mulmod(g[static_cast<std::size_t>(k)], gval, p);
      if (!c) continue;
      Monomial m;
      m.set_exp(v, k);
      out.t.push_back({m, c});
    }
    *deg_out = dg;
    return out;
  }
  int w = gv[level];
  std::size_t need = static_cast<std::size_t>(bounds[level]) + 1;
  std::vector<std::uint64_t> pts;
  std::vector<MPoly> kids;
  int dg = -1;
  std::uint64_t t = offset;
  std::uint64_t limit = offset + 4 * need + 16;
  while (kids.size() < need) {
    if (t >= limit) throw UnluckyRun{};
    std::uint64_t x = t++;
    MPoly at = eval_var(a, w, x, p);
    if (mdeg_in(at, v) != da) continue;
    MPoly bt = eval_var(b, w, x, p);
    if (mdeg_in(bt, v) != db) continue;
    MPoly gt = eval_var(gamma, w, x, p);
    if (gt.is_zero()) continue;
    int kd = -1;
    MPoly kid = brown_walk(at, bt, gt, v, da, db, gv, bounds, level + 1,
                           offset, p, &kd);
    if (dg < 0)
      dg = kd;
    else if (kd != dg)
      throw UnluckyRun{};
    pts.push_back(x);
    kids.push_back(std::move(kid));
  }
  *deg_out = dg;
  return interpolate(pts, std::move(kids), w, p);
}

enum class VarAttempt { kFound, kFreeOfVar, kBail };

// Chinese-remainder accumulator keyed by monomial.
struct CrtState {
  std::map<Monomial, mpz_class, MonoLess> coeff;
  mpz_class modulus{1};
  int image_degree = -1;

  void reset() {
    coeff.clear();
    modulus = 1;
    image_degree = -1;
  }

  void merge(const MPoly& img, std::uint64_t p) {
    mpz_class pz(static_cast<unsigned long>(p));
    mpz_class minv;
    mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t());
    std::map<Monomial, std::uint64_t, MonoLess> incoming;
    for (const auto& [m, c] : img.t) incoming[m] = c;
    // existing keys, possibly absent from the new image
    for (auto& [m, x] : coeff) {
      auto it = incoming.find(m);
      mpz_class c(it == incoming.end()
                      ? 0ul
                      : static_cast<unsigned long>(it->second));
      if (it != incoming.end()) incoming.erase(it);
      mpz_class d = (c - x) % pz;
      if (d < 0) d += pz;
      d = (d * minv) % pz;
      x += modulus * d;
    }
    // keys new in this image
    for (const auto& [m, c] : incoming) {
      mpz_class cz(static_cast<unsigned long>(c));
      mpz_class d = (cz * minv) % pz;
      coeff[m] = modulus * d;
    }
    modulus *= pz;
  }

  Poly lift() const {
    Poly out;
    mpz_class half = modulus / 2;
    for (const auto& [m, x] : coeff) {
      mpz_class c = x;
      if (c > half) c -= modulus;
      if (c != 0) out += Poly::term(mpq_class(c), m);
    }
    return out;
  }
};

// Removes any factor free of v that the leading-coefficient scaling
// introduced: the interpolated polynomial is (gamma / lead(g)) * g, and
// the cofactor lands in the content with respect to v.
Poly strip_var_content(const Poly& cand, int v) {
  int d = cand.degree_in(v);
  std::vector<Poly> coeffs;
  for (int k = 0; k <= d; ++k) {
    Poly c = cand.coeff_of(v, k);
    if (!c.is_zero()) coeffs.push_back(std::move(c));
  }
  if (coeffs.size() < 2) return cand;
  Poly c = poly_gcd_many(coeffs);
  if (c.is_constant()) return cand;
  return cand.divide_exact(c);
}

VarAttempt attempt_main_var(const Poly& a, const Poly& b, int v, Poly* out) {
  int da = a.degree_in(v), db = b.degree_in(v);
  Poly gamma = poly_gcd(a.coeff_of(v, da), b.coeff_of(v, db));
  std::vector<int> gv;
  std::vector<int> bounds;
  double grid = 1;
  for (int s = 0; s < kNumSlots; ++s) {
    if (s == v) continue;
    int ds = a.degree_in(s), dbs = b.degree_in(s);
    if (ds == 0 && dbs == 0) continue;
    int bound = std::min(ds, dbs) + gamma.degree_in(s);
    gv.push_back(s);
    bounds.push_back(bound);
    grid *= bound + 1;
  }
  if (grid > 120000) return VarAttempt::kBail;

  CrtState crt;
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::uint64_t p = random_prime();
    MPoly ap, bp, gp;
    if (!reduce_mod(a, p, &ap) || !reduce_mod(b, p, &bp) ||
        !reduce_mod(gamma, p, &gp))
      continue;
    if (mdeg_in(ap, v) != da || mdeg_in(bp, v) != db || gp.is_zero())
      continue;
    for (std::uint64_t offset : {3ull, 1117ull}) {
      int dg = -1;
      MPoly img;
      try {
        img = brown_walk(ap, bp, gp, v, da, db, gv, bounds, 0, offset, p,
                         &dg);
      } catch (const FreeOfMainVar&) {
        return VarAttempt::kFreeOfVar;
      } catch (const UnluckyRun&) {
        continue;
      }
      if (crt.image_degree >= 0 && dg > crt.image_degree) break;
      if (crt.image_degree < 0 || dg < crt.image_degree) crt.reset();
      crt.image_degree = dg;
      crt.merge(img, p);
      Poly cand = crt.lift();
      if (cand.is_zero() || cand.degree_in(v) != dg) break;
      cand = make_primitive(strip_var_content(cand, v));
      Poly qa, qb;
      if (a.try_divide(cand, &qa) && b.try_divide(cand, &qb)) {
        *out = std::move(cand);
        return VarAttempt::kFound;
      }
      break;  // image banked; more primes may finish the lift
    }
  }
  return VarAttempt::kBail;
}

// Full modular gcd: tries each common variable as the main one.  Every
// positive answer is division-checked; a run where every common
// variable is proved out means the gcd is constant.  Returns nullopt
// only when some variable had to bail, in which case the caller falls
// back to the remainder sequence.
std::optional<Poly> modular_gcd(const Poly& a, const Poly& b) {
  std::vector<std::pair<int, int>> cands;  // (min degree, slot)
  for (int s = 0; s < kNumSlots; ++s) {
    int da = a.degree_in(s), db = b.degree_in(s);
    if (da > 0 && db > 0) cands.push_back({std::min(da, db), s});
  }
  if (cands.empty()) return Poly(mpq_class(1));
  std::sort(cands.begin(), cands.end(),
            [](const auto& x, const auto& y) { return x.first > y.first; });
  bool bailed = false;
  for (const auto& [d, v] : cands) {
    Poly g;
    switch (attempt_main_var(a, b, v, &g)) {
      case VarAttempt::kFound: {
        Poly rest = poly_gcd(a.divide_exact(g), b.divide_exact(g));
        return g * rest;
      }
      case VarAttempt::kFreeOfVar:
        break;
      case VarAttempt::kBail:
        bailed = true;
        break;
    }
  }
  if (bailed) return std::nullopt;
  return Poly(mpq_class(1));
}

// ------------------------------------------------------------------
// Primitive PRS over the main variable v, coefficients in the remaining
// slots.  Exact and dependable for small operands; the modular path
// above takes everything big.

struct UniP {
  std::vector<Poly> c;  // c[k] multiplies v^k

  int deg() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  const Poly& lead() const { return c.back(); }
  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
};

UniP to_uni(const Poly& p, int v) {
  UniP u;
  u.c.resize(static_cast<std::size_t>(p.degree_in(v)) + 1);
  for (int k = 0; k <= p.degree_in(v); ++k)
    u.c[static_cast<std::size_t>(k)] = p.coeff_of(v, k);
  u.trim();
  return u;
}

Poly from_uni(const UniP& u, int v) {
  Poly p;
  for (std::size_t k = 0; k < u.c.size(); ++k)
    p += u.c[k] * Poly::var(v, static_cast<int>(k));
  return p;
}

Poly content_of(const UniP& u) { return poly_gcd_many(u.c); }

UniP divide_coeffs(const UniP& u, const Poly& d) {
  UniP out;
  out.c.reserve(u.c.size());
  for (const auto& ck : u.c) out.c.push_back(ck.divide_exact(d));
  return out;
}

// The polynomial content above treats rational factors as units, so the
// pseudo-remainder scaling would pile up digits unchecked; strip the
// common rational content as well to keep coefficients primitive.
void strip_scalar_content(UniP* u) {
  mpz_class num(0), den(1);
  for (const auto& ck : u->c) {
    if (ck.is_zero()) continue;
    mpq_class c = ck.content_signed();
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  }
  if (num == 0) return;
  mpq_class g(num, den);
  g.canonicalize();
  if (g == 1) return;
  for (auto& ck : u->c) ck = ck.mul_scalar(1 / g);
}

// Pseudo-remainder: lead(B)^(deg A - deg B + 1) * A  mod  B.
UniP prem(UniP a, const UniP& b) {
  const Poly& lb = b.lead();
  int d = b.deg();
  int e = a.deg() - d + 1;
  while (!a.is_zero() && a.deg() >= d) {
    Poly la = a.lead();
    int shift = a.deg() - d;
    UniP next;
    next.c.assign(static_cast<std::size_t>(a.deg()) + 1, Poly());
    for (int k = 0; k <= a.deg(); ++k)
      next.c[static_cast<std::size_t>(k)] =
          a.c[static_cast<std::size_t>(k)] * lb;
    for (std::size_t k = 0; k < b.c.size(); ++k)
      next.c[static_cast<std::size_t>(shift) + k] -= b.c[k] * la;
    next.trim();
    a = std::move(next);
    --e;
  }
  if (e > 0) {
    Poly f = lb.pow(static_cast<unsigned>(e));
    for (auto& ck : a.c) ck *= f;
  }
  return a;
}

// ------------------------------------------------------------------
// Structure-aware shortcuts.  Denominators accumulate as products of
// powers of a few small polynomials, and a blind remainder sequence on
// those explodes; peeling the structure first keeps every remaining gcd
// small.

struct PowerSplit {
  Poly base;
  int k = 0;
};

// p = base^k with k maximal, when p is a nontrivial perfect power.
std::optional<PowerSplit> try_power_split(const Poly& p) {
  long td = static_cast<long>(p.total_degree());
  if (td < 2 || p.size() < 2) return std::nullopt;
  for (int k = static_cast<int>(std::min<long>(td, 64)); k >= 2; --k) {
    if (td % k) continue;
    if (auto r = poly_nth_root(p, k)) return PowerSplit{std::move(*r), k};
  }
  return std::nullopt;
}

// gcd(a, base^k) by repeated gcds against the still-common part, which
// always divides `base`; every step has one small argument.
Poly gcd_against_power(const Poly& a, const Poly& base, int k) {
  Poly acc{mpq_class(1)};
  Poly rest = a;
  Poly h = base;
  for (int i = 0; i < k; ++i) {
    Poly t = poly_gcd(rest, h);
    if (t.is_constant()) break;
    rest = rest.divide_exact(t);
    acc *= t;
    h = std::move(t);
  }
  return acc;
}

Poly gcd_prs(const Poly& pa, const Poly& pb, int v) {
  UniP a = to_uni(pa, v), b = to_uni(pb, v);
  Poly ca = content_of(a), cb = content_of(b);
  a = divide_coeffs(a, ca);
  b = divide_coeffs(b, cb);
  strip_scalar_content(&a);
  strip_scalar_content(&b);
  if (a.deg() < b.deg()) std::swap(a, b);
  Poly part;
  for (;;) {
    if (b.is_zero()) {
      part = from_uni(a, v);
      break;
    }
    if (b.deg() == 0) {
      part = Poly(mpq_class(1));
      break;
    }
    UniP r = prem(a, b);
    r.trim();
    if (!r.is_zero()) {
      Poly rc = content_of(r);
      r = divide_coeffs(r, rc);
      strip_scalar_content(&r);
    }
    a = std::move(b);
    b = std::move(r);
  }
  return make_primitive(poly_gcd(ca, cb) * part);
}

}  // namespace

Poly poly_gcd(const Poly& a_in, const Poly& b_in) {
  if (a_in.is_zero()) return make_primitive(b_in);
  if (b_in.is_zero()) return make_primitive(a_in);
  Poly a = make_primitive(a_in), b = make_primitive(b_in);

  Monomial ma = monomial_content(a), mb = monomial_content(b);
  Monomial mg;
  for (int s = 0; s < kNumSlots; ++s)
    mg.set_exp(s, std::min(ma.exp(s), mb.exp(s)));
  if (!ma.is_one()) a = a.divide_exact(Poly::term(1, ma));
  if (!mb.is_one()) b = b.divide_exact(Poly::term(1, mb));
  Poly mono = Poly::term(1, mg);

  if (a.size() == 1 || b.size() == 1) return make_primitive(mono);

  // Cheap containment checks before anything clever.
  if (a == b) return make_primitive(mono * a);
  if (Poly q; b.try_divide(a, &q)) return make_primitive(mono * a);
  if (Poly q; a.try_divide(b, &q)) return make_primitive(mono * b);

  // Perfect powers (accumulated denominators, mostly) reduce to a chain
  // of small gcds.
  if (auto s = try_power_split(b))
    return make_primitive(mono * gcd_against_power(a, s->base, s->k));
  if (auto s = try_power_split(a))
    return make_primitive(mono * gcd_against_power(b, s->base, s->k));

  // Main variable: a slot both depend on, preferring the lowest degree sum.
  int v = -1;
  long best = 0;
  for (int s = 0; s < kNumSlots; ++s) {
    int da = a.degree_in(s), db = b.degree_in(s);
    if (da > 0 && db > 0) {
      long cost = static_cast<long>(da) + db;
      if (v < 0 || cost < best) v = s, best = cost;
    }
  }
  if (v < 0) return make_primitive(mono);

  if (a.size() + b.size() > 40) {
    if (auto g = modular_gcd(a, b)) return make_primitive(mono * *g);
  }
  return make_primitive(mono * gcd_prs(a, b, v));
}

Poly poly_gcd_many(const std::vector<Poly>& ps) {
  Poly g;
  for (const auto& p : ps) {
    g = poly_gcd(g, p);
    if (!g.is_zero() && g.is_constant()) return Poly(mpq_class(1));
  }
  return g;
}

}  // namespace jetflow
