#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jetflow/calculus.hpp"
#include "jetflow/exactness.hpp"
#include "jetflow/parse.hpp"
#include "test_util.hpp"

using namespace jetflow;
using testutil::rand_expression;

namespace {

Expression parse(const std::string& s,
                 const std::vector<std::string>& params = {}) {
  return parse_expression(s, params);
}

// The result invariant: whatever the verdict, the input splits as
// D_x(flux) + sum_i coeff_i * D_x(arg_i)/arg_i + residue.
bool reconstructs(const Expression& e, const ExactnessResult& res) {
  Expression back = total_x(res.flux);
  for (const auto& lt : res.flux_logs)
    back += lt.coeff * total_x(lt.arg) / lt.arg;
  return back + res.residue == e;
}

}  // namespace

TEST_CASE("derivatives of polynomial fluxes are recognized") {
  struct Case {
    std::string input;
    std::string flux;
  };
  const Case cases[] = {
      {"u2", "u1"},
      {"u*u1", "1/2*u^2"},
      {"u*u2 + u1^2", "u*u1"},
      {"7", "7*x"},
      {"u1 + x*u2", "x*u1"},
      {"3*x^2*u + x^3*u1", "x^3*u"},
  };
  for (const auto& c : cases) {
    CAPTURE(c.input);
    ExactnessResult res = is_exact(parse(c.input));
    CHECK(res.exact);
    CHECK(res.flux == parse(c.flux));
    CHECK(res.flux_logs.empty());
    CHECK(res.residue.is_zero());
    CHECK(reconstructs(parse(c.input), res));
  }
}

TEST_CASE("derivatives of rational fluxes are recognized") {
  const std::string fluxes[] = {
      "u1/u^2",
      "1/(x + u)^2",
      "u2/(u1 + u)",
      "(u*u1 + x)/(u^2 + 1)",
  };
  for (const auto& f : fluxes) {
    CAPTURE(f);
    Expression e = total_x(parse(f));
    ExactnessResult res = is_exact(e);
    CHECK(res.exact);
    CHECK(res.residue.is_zero());
    CHECK(reconstructs(e, res));
  }
}

TEST_CASE("logarithmic fluxes with constant coefficients") {
  ExactnessResult res = is_exact(parse("u1/u"));
  CHECK(res.exact);
  CHECK(res.flux.is_zero());
  REQUIRE(res.flux_logs.size() == 1);
  CHECK(res.flux_logs[0].coeff == Expression(1L));
  CHECK(res.flux_logs[0].arg == parse("u"));
  CHECK(reconstructs(parse("u1/u"), res));

  res = is_exact(parse("1/x"));
  CHECK(res.exact);
  REQUIRE(res.flux_logs.size() == 1);
  CHECK(res.flux_logs[0].arg == parse("x"));

  res = is_exact(parse("u2/u1"));
  CHECK(res.exact);
  REQUIRE(res.flux_logs.size() == 1);
  CHECK(res.flux_logs[0].arg == parse("u1"));
  CHECK(reconstructs(parse("u2/u1"), res));

  Expression c = parse("k", {"k"});
  Expression e = c * parse("u2/u1");
  res = is_exact(e);
  CHECK(res.exact);
  REQUIRE(res.flux_logs.size() == 1);
  CHECK(res.flux_logs[0].coeff == c);
  CHECK(reconstructs(e, res));
}

TEST_CASE("obstructed inputs fail with the right reason") {
  struct Case {
    std::string input;
    std::string reason;
  };
  const Case cases[] = {
      {"u^2", "order-zero residue"},
      {"x*u1", "order-zero residue"},
      {"u1^2/u", "nonlinear in top jet"},
      {"u2^2", "nonlinear in top jet"},
      {"u3/(u4 + 1)", "nonlinear in top jet"},
      {"u*u2/u1", "nonconstant log residue"},
      {"u2 + u^2", "order-zero residue"},
  };
  for (const auto& c : cases) {
    CAPTURE(c.input);
    Expression e = parse(c.input);
    ExactnessResult res = is_exact(e);
    CHECK(!res.exact);
    CHECK(res.reason == c.reason);
    CHECK(!res.residue.is_zero());
    CHECK(res.residue_order >= 0);
    CHECK(reconstructs(e, res));
  }
}

TEST_CASE("partial flux is kept on failure") {
  // u2 + u^2 lowers once (flux u1) before the order-zero part obstructs.
  Expression e = parse("u2 + u^2");
  ExactnessResult res = is_exact(e);
  CHECK(res.flux == parse("u1"));
  CHECK(res.residue == parse("u^2"));
  CHECK(res.residue_order == 0);
}

TEST_CASE("radical layers obstruct unless differentiated") {
  Expression r = parse("u^(1/2)");
  ExactnessResult res = is_exact(r);
  CHECK(!res.exact);
  CHECK(res.reason == "radical residue");
  CHECK(reconstructs(r, res));

  // The radical's jet order is above everything explicit, so no flux of
  // admissible order can produce these.
  res = is_exact(parse("u1*(u2 + u)^(1/2)"));
  CHECK(!res.exact);
  CHECK(res.reason == "radical residue");

  res = is_exact(parse("(u + u1)^(1/2)"));
  CHECK(!res.exact);
  CHECK(res.reason == "radical residue");
}

TEST_CASE("derivatives of radical fluxes round-trip") {
  const std::string fluxes[] = {
      "u^(1/2)",
      "u1*u^(1/2)",
      "(u1 + u)^(1/2)",
      "u2*(u1 + u^2)^(1/3)",
      "u*u2*(u2 + u)^(1/2)",
      "(u1 + 2*u)^(1/2) + u*u1",
      "u1^2/(u + 1) + x*u^(1/3)",
  };
  for (const auto& f : fluxes) {
    CAPTURE(f);
    Expression e = total_x(parse(f));
    ExactnessResult res = is_exact(e);
    CHECK(res.exact);
    CHECK(res.residue.is_zero());
    CHECK(reconstructs(e, res));
  }
}

TEST_CASE("derivative round-trip on random rational expressions") {
  std::mt19937_64 g(40413);
  std::vector<int> slots{kSlotX, jet_slot(0), jet_slot(1), jet_slot(2)};
  int checked = 0;
  while (checked < 300) {
    Expression f = rand_expression(g, slots, checked % 2 == 0);
    Expression e = total_x(f);
    ExactnessResult res = is_exact(e);
    CHECK(res.exact);
    CHECK(reconstructs(e, res));
    ++checked;
  }
}

TEST_CASE("random non-derivatives keep the reconstruction invariant") {
  std::mt19937_64 g(515);
  std::vector<int> slots{kSlotX, jet_slot(0), jet_slot(1)};
  int exact_count = 0;
  for (int i = 0; i < 200; ++i) {
    Expression e = rand_expression(g, slots, i % 2 == 0);
    ExactnessResult res = is_exact(e);
    CHECK(reconstructs(e, res));
    if (res.exact) ++exact_count;
  }
  // Random expressions are almost never total derivatives.
  CHECK(exact_count < 20);
}

TEST_CASE("parameters ride along as constants") {
  std::vector<std::string> ps{"a", "b"};
  Expression e = total_x(parse("a*u1^2/u + b*u2 + a*b*x*u", ps));
  ExactnessResult res = is_exact(e);
  CHECK(res.exact);
  CHECK(reconstructs(e, res));
}

TEST_CASE("constraint extraction groups by differential shape") {
  std::vector<std::string> ps{"a", "b"};
  Expression residue = parse("(3*a - b)*u1^2 + (a + b)*u*u2 + (6*a - 2*b)*x", ps);
  std::vector<Poly> cs = extract_constraints(residue);
  REQUIRE(cs.size() == 2);
  // Both scalings of 3a - b collapse to one normalized constraint.
  auto normalized = [](const Poly& p) {
    return p.mul_scalar(1 / p.content_signed());
  };
  Poly want1 = normalized(parse("3*a - b", ps).num());
  Poly want2 = normalized(parse("a + b", ps).num());
  bool saw1 = false;
  bool saw2 = false;
  for (const auto& p : cs) {
    if (p == want1) saw1 = true;
    if (p == want2) saw2 = true;
  }
  CHECK(saw1);
  CHECK(saw2);
}

TEST_CASE("constraint extraction on a clean residue is empty") {
  CHECK(extract_constraints(Expression()).empty());
}
