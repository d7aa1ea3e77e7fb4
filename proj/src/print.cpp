#include <sstream>

#include "jetflow/expr.hpp"
#include "jetflow/generators.hpp"

namespace jetflow {
namespace {

void append_rational(std::ostringstream& os, const mpq_class& q) {
  os << q.get_num().get_str();
  if (q.get_den() != 1) os << "/" << q.get_den().get_str();
}

std::string poly_to_string(const Poly& p, const RadicalContext* rad);

// One term, sign stripped; the caller has already emitted the sign.
void append_term(std::ostringstream& os, const Term& t,
                 const RadicalContext* rad) {
  mpq_class mag = t.c < 0 ? mpq_class(-t.c) : t.c;
  bool wrote = false;
  if (mag != 1 || t.m.is_one()) {
    append_rational(os, mag);
    wrote = true;
  }
  auto emit = [&](int slot) {
    int e = t.m.exp(slot);
    if (e == 0) return;
    if (wrote) os << "*";
    wrote = true;
    if (slot == kSlotR) {
      os << "(" << poly_to_string(rad->radicand, nullptr) << ")^(" << e << "/"
         << rad->index << ")";
      return;
    }
    os << slot_name(slot);
    if (e != 1) os << "^" << e;
  };
  for (int s = kFirstParamSlot; s < kNumSlots; ++s) emit(s);
  emit(kSlotX);
  for (int s = kSlotU0; s <= kSlotU0 + kMaxJetOrder; ++s) emit(s);
  emit(kSlotR);
}

std::string poly_to_string(const Poly& p, const RadicalContext* rad) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    if (first) {
      if (t.c < 0) os << "-";
      first = false;
    } else {
      os << (t.c < 0 ? " - " : " + ");
    }
    append_term(os, t, rad);
  }
  return os.str();
}

bool den_needs_parens(const Poly& d) {
  if (d.size() != 1) return true;
  const Term& t = d.terms()[0];
  if (t.c != 1) return true;
  int named = 0;
  for (int s = 0; s < kNumSlots; ++s)
    if (t.m.exp(s)) ++named;
  return named != 1;
}

}  // namespace

std::string Expression::to_string() const {
  const RadicalContext* rad = rad_.get();
  std::string n = poly_to_string(num_, rad);
  if (den_.is_constant() && den_.constant_value() == 1) return n;
  std::ostringstream os;
  if (num_.size() > 1)
    os << "(" << n << ")";
  else
    os << n;
  os << "/";
  std::string d = poly_to_string(den_, nullptr);
  if (den_needs_parens(den_))
    os << "(" << d << ")";
  else
    os << d;
  return os.str();
}

}  // namespace jetflow
