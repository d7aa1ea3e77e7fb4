#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jetflow/densities.hpp"
#include "jetflow/exactness.hpp"
#include "jetflow/parse.hpp"
#include "test_util.hpp"

using namespace jetflow;

namespace {

Expression parse(const std::string& s,
                 const std::vector<std::string>& params = {}) {
  return parse_expression(s, params);
}

Flow parse_flow(const std::string& s) { return Flow(parse(s)); }

}  // namespace

TEST_CASE("fifth-order shape is enforced") {
  CHECK_THROWS_AS(DensityChain(parse_flow("u3 + u*u1")), ShapeError);
  CHECK_THROWS_AS(DensityChain(parse_flow("u")), ShapeError);
}

TEST_CASE("leading coefficients without a fifth root are rejected") {
  CHECK_THROWS_AS(DensityChain(parse_flow("u*u5")), RootError);
  try {
    DensityChain chain(parse_flow("3*u1^5*u5"));
    FAIL("expected a root error");
  } catch (const RootError& e) {
    // A fifth power up to the scalar 3: the obstruction is reported so
    // the caller can rescale the flow.
    CHECK(e.has_obstruction);
    CHECK(e.scalar_obstruction == mpq_class(3));
  }
  DensityChain chain(parse_flow("32*u1^5*u5 + u"));
  CHECK(chain.density(-1) == parse("1/(2*u1)"));
}

TEST_CASE("density chain of the fifth-order KdV flow") {
  DensityChain chain(parse_flow("u5 + 10*u*u3 + 20*u1*u2 + 30*u^2*u1"));
  CHECK(chain.density(-1) == Expression(1L));
  CHECK(chain.density(0).is_zero());
  CHECK(chain.density(1) == parse("-2*u"));
  // Worked out by hand from the recurrence: the even densities collapse,
  // the odd ones continue the u, u^2, ... ladder.
  CHECK(chain.density(2).is_zero());
  CHECK(chain.density(3) == parse("-2*u^2"));
  CHECK(chain.density(4).is_zero());
  for (int n = -1; n <= 3; ++n) {
    CAPTURE(n);
    CHECK(chain.condition(n).exact);
  }
}

TEST_CASE("density chain of a non-integrable polynomial flow") {
  // D_x(u4 + 4u^3 + u2), expanded.
  DensityChain chain(parse_flow("u5 + 12*u^2*u1 + u3"));
  CHECK(chain.density(-1) == Expression(1L));
  CHECK(chain.density(0).is_zero());
  CHECK(chain.density(1) == parse("-1/5"));
  CHECK(chain.density(2).is_zero());
  CHECK(chain.density(3) == parse("-12/5*u^2 + 1/25"));
  // The low conditions still pass; the obstruction sits much deeper.
  CHECK(chain.condition(-1).exact);
  CHECK(chain.condition(0).exact);
  CHECK(chain.condition(1).exact);
  CHECK(chain.condition(3).exact);
}

TEST_CASE("recurrence agrees with the closed forms") {
  DensityChain chain(parse_flow("u5 + 10*u*u3 + 20*u1*u2 + 30*u^2*u1"));
  CHECK(chain.density_by_recurrence(0) == chain.density(0));
  Expression d1 = chain.density_by_recurrence(1) - chain.density(1);
  CHECK(is_exact(d1).exact);

  // A generic flow with a usable leading coefficient; the identities are
  // structural, integrability plays no role.
  DensityChain generic(parse_flow("u^5*u5 + u1*u2 + x*u"));
  CHECK(generic.density_by_recurrence(0) == generic.density(0));
  Expression g1 = generic.density_by_recurrence(1) - generic.density(1);
  CHECK(is_exact(g1).exact);
}

TEST_CASE("density chain with a radical leading coefficient") {
  // Flow of the Hamiltonian u2^(1/3), rescaled so the leading coefficient
  // becomes a perfect fifth power.
  Expression f = total_x(euler(parse("u2^(1/3)")));
  try {
    DensityChain chain{Flow(f)};
    FAIL("expected a root error");
  } catch (const RootError& e) {
    CHECK(e.has_obstruction);
    CHECK(e.scalar_obstruction == mpq_class(-2, 9));
  }

  DensityChain chain{Flow(Expression(mpq_class(-9, 2)) * f)};
  CHECK(chain.density(-1) == parse("u2^(1/3)"));
  CHECK(chain.density(0) == parse("1/3*u3/u2"));
  CHECK(chain.condition(-1).exact);
  CHECK(chain.condition(0).exact);
  CHECK(chain.condition(1).exact);

  // The next nontrivial density matches the known u3^2*u2^(-7/3) shape up
  // to a constant multiple and a total derivative.
  Expression target = euler(parse("u3^2*u2^(-7/3)"));
  Expression got = euler(chain.density(1));
  CHECK(!got.is_zero());
  CHECK((got / target).is_rational_constant());

  CHECK(chain.density_by_recurrence(0) == chain.density(0));
  Expression d1 = chain.density_by_recurrence(1) - chain.density(1);
  CHECK(is_exact(d1).exact);
}
