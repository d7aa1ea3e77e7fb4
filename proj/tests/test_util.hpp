#pragma once

#include <random>

#include "jetflow/expr.hpp"
#include "jetflow/generators.hpp"

namespace jetflow::testutil {

// Deterministic helpers shared by the test binaries.  Every suite seeds
// its own engine so failures reproduce in isolation.

inline mpq_class rand_rational(std::mt19937_64& g, int num_range = 9) {
  std::uniform_int_distribution<int> num(-num_range, num_range);
  std::uniform_int_distribution<int> den(1, 4);
  mpq_class q(num(g), den(g));
  q.canonicalize();
  return q;
}

inline mpq_class rand_nonzero_rational(std::mt19937_64& g,
                                       int num_range = 9) {
  for (;;) {
    mpq_class q = rand_rational(g, num_range);
    if (q != 0) return q;
  }
}

// Random polynomial in the given slots.
inline Poly rand_poly(std::mt19937_64& g, const std::vector<int>& slots,
                      int terms, int max_exp = 2) {
  std::uniform_int_distribution<int> exp(0, max_exp);
  Poly p;
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    for (int s : slots) m.set_exp(s, exp(g));
    p += Poly::term(rand_rational(g), m);
  }
  return p;
}

inline Poly rand_nonzero_poly(std::mt19937_64& g,
                              const std::vector<int>& slots, int terms,
                              int max_exp = 2) {
  for (;;) {
    Poly p = rand_poly(g, slots, terms, max_exp);
    if (!p.is_zero()) return p;
  }
}

// Random rational expression (no radical).
inline Expression rand_expression(std::mt19937_64& g,
                                  const std::vector<int>& slots,
                                  bool with_denominator = true) {
  Poly n = rand_poly(g, slots, 3);
  if (!with_denominator) return Expression::from_poly(n);
  Poly d = rand_nonzero_poly(g, slots, 2, 1);
  return Expression::make(n, d, nullptr);
}

// A full evaluation point with small nonzero rationals everywhere; the
// radical slot (if any) must be fixed up by the caller.
inline std::array<mpq_class, kNumSlots> rand_point(std::mt19937_64& g) {
  std::array<mpq_class, kNumSlots> pt;
  for (auto& v : pt) v = rand_nonzero_rational(g, 7);
  return pt;
}

// Adjusts `pt` so that r^m = R holds exactly: picks r freely and solves
// the radicand's top jet.
inline void make_radical_consistent(const RadicalContext& rad,
                                    std::array<mpq_class, kNumSlots>* pt,
                                    std::mt19937_64& g) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    mpq_class r0 = rand_nonzero_rational(g, 5);
    mpq_class rm(1);
    for (int i = 0; i < rad.index; ++i) rm *= r0;
    mpq_class c = rad.top_coeff.eval(*pt);
    if (c == 0) {
      // c is free of the top jet, so reshuffle the lower slots.
      (*pt)[kSlotX] = rand_nonzero_rational(g, 7);
      for (int o = 0; o < rad.top_order; ++o)
        (*pt)[static_cast<std::size_t>(jet_slot(o))] =
            rand_nonzero_rational(g, 7);
      continue;
    }
    mpq_class d = rad.rest.eval(*pt);
    (*pt)[kSlotR] = r0;
    (*pt)[static_cast<std::size_t>(jet_slot(rad.top_order))] = (rm - d) / c;
    return;
  }
  throw ShapeError("could not build a radical-consistent point");
}

}  // namespace jetflow::testutil
