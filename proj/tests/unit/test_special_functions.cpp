#include "check.hpp"
#include "dzeta/special_functions.hpp"

using namespace dzeta;

// Reference values from mpmath at 30 digits.

TEST_CASE("gamma at complex and real points") {
  check_rel(gamma({0.3, 2.0}), {0.057465337569588033, -0.074984912582646138}, 1e-13);
  check_rel(gamma({-2.5, 0.7}), {-0.15981871636293293, -0.15756654908151528}, 1e-13);
  check_rel(gamma(Complex(7.2)), 1050.317816662683, 1e-13);
  check_rel(gamma(Complex(5.0)), 24.0, 1e-14);
}

TEST_CASE("gamma poles and the reciprocal") {
  CHECK_THROWS_AS(gamma(Complex(-3.0)), Refusal);
  CHECK(rgamma(Complex(-3.0)) == Complex{});
  CHECK(rgamma(Complex(0.0)) == Complex{});
  check_rel(rgamma({0.3, 2.0}) * gamma({0.3, 2.0}), 1.0, 1e-14);
}

TEST_CASE("pochhammer") {
  check_rel(pochhammer(Complex(3.0), 4), 360.0, 1e-15);
  CHECK(pochhammer({1.2, 0.4}, 0) == Complex(1.0));
}

TEST_CASE("Psi on every route") {
  struct Row {
    Complex a, c, x, want;
  };
  const Row rows[] = {
      {{1.5, 0.5}, {0.3, -0.2}, {2.0, 1.0}, {0.038220168150076633, -0.14676011590216921}},
      {{0.2, 1.0}, {2.5, 0.0}, {0.7, -0.3}, {2.0008445854723915, 2.5978229199631512}},
      {{-1.3, 0.4}, {0.5, 0.1}, {3.0, 0.5}, {3.5412083337396337, 0.51518413977742128}},
      {{2.0, 0.0}, {-1.5, 0.0}, {40.0, 10.0}, {0.00043640185988007641, -0.00020795522601002896}},
      {{0.5, -2.0}, {1.5, 1.0}, {0.05, 0.02}, {-13.157121616430613, 56.124287843283929}},
  };
  for (const auto& r : rows) {
    const auto v = psi(r.a, r.c, r.x);
    INFO("route " << v.route);
    REQUIRE(v.ok());
    check_rel(v.value, r.want, 1e-10);
  }
}

TEST_CASE("Psi simple closed forms") {
  check_rel(psi(1.0, 2.0, 10.0).value, 0.1, 1e-13);
  // Psi(a, a+1; x) = x^{-a}
  const Complex a{0.7, -1.3}, x{3.0, 2.0};
  check_rel(psi(a, a + 1.0, x).value, cpow(x, -a), 1e-12);
}

TEST_CASE("Kummer transform residual is small") {
  CHECK(kummer_residual({1.2, 0.3}, {0.4, -0.5}, {2.5, 1.0}) < 1e-10);
}

TEST_CASE("asymptotic series agrees with quadrature for large x") {
  const Complex a{2.0, 0.5}, c{0.5, 0.0}, x{60.0, 20.0};
  const auto q = psi_quadrature(a, c, x);
  REQUIRE(q.ok());
  const auto s = psi_asymptotic_optimal(a, c, x, 200, 1e-17);
  check_rel(q.value, s.value, 1e-9);
}

TEST_CASE("sin_pi is exact at the integers") {
  CHECK(sin_pi(3.0) == 0.0);
  CHECK(sin_pi(Complex(-2.0)) == Complex{});
  CHECK(std::abs(sin_pi(0.5) - 1.0) < 1e-16);
}
