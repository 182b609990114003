#include "check.hpp"
#include "dzeta/double_series.hpp"
#include "dzeta/oracle_quadrature.hpp"

using namespace dzeta;

TEST_CASE("Delta is modular") {
  const auto d = delta_form();
  CHECK(std::abs(modular_residual({0.0, 1.0}, *d)) < 1e-15);
  CHECK(std::abs(modular_residual({0.3, 0.8}, *d)) < 1e-12);
}

TEST_CASE("Delta at tau = i") {
  // Delta(i) = Gamma(1/4)^24 / (2^24 pi^18)
  const double want = std::pow(std::tgamma(0.25), 24) / (std::pow(2.0, 24) * std::pow(kPi, 18));
  check_rel(cusp_form_eval({0.0, 1.0}, *delta_form()), want, 1e-12);
}

TEST_CASE("cusp form evaluation refuses near the real axis") {
  CHECK_THROWS_AS(cusp_form_eval({0.1, 5e-4}, *delta_form()), Refusal);
  CHECK_THROWS_AS(cusp_form_eval({0.1, -1.0}, *delta_form()), Refusal);
}

TEST_CASE("generating functions in closed form") {
  const Complex w{1.0, 0.2};
  const double y = 0.7;
  const Complex z = kTwoPi * w * y;
  check_rel(generating_function(CoefficientSequence::constant(), w, y), 1.0 / (std::exp(z) - 1.0), 1e-14);
  check_rel(generating_function(CoefficientSequence::delta(3), w, y), std::exp(-3.0 * z), 1e-14);
}

TEST_CASE("kernel is the geometric sum") {
  CHECK(kernel_geometric_residual(0.8, 0.3, 60) < 1e-15);
  CHECK(std::abs(lambda_kernel(0.8, 0.3) - std::exp(-2 * kPi * 0.3 * 0.8) / (1 - std::exp(-2 * kPi * 0.8))) < 1e-16);
}

TEST_CASE("integral oracle matches the double series") {
  const EvalPoint s{1.5, 2.5};
  const auto one = CoefficientSequence::constant();
  const auto q = lambda_L2(s, 1.0, 1.0, one);
  REQUIRE(q.ok());
  DoubleSeriesParams p;
  const auto d = L2_direct(s, p);
  check_rel(q.value, d.value, 1e-8);
}

TEST_CASE("integral oracle gates") {
  const auto one = CoefficientSequence::constant();
  CHECK(lambda_L2({-0.5, 3.0}, 1.0, 1.0, one).reason.find("sigma1 > 0") != std::string::npos);
  CHECK(lambda_L2({1.5, 2.5}, 1.0, {1.0, 1.5}, one).reason.find("pi/4") != std::string::npos);
  CHECK(lambda_L2({1.5, 2.5}, 1.5, 1.0, one).reason.find("alpha") != std::string::npos);
}
