#include "check.hpp"
#include "dzeta/classical_zetas.hpp"
#include "dzeta/double_series.hpp"

using namespace dzeta;

TEST_CASE("Euler-Zagier value at (2, 2)") {
  DoubleSeriesParams p;
  const auto v = L2_direct({2.0, 2.0}, p);
  REQUIRE(v.ok());
  const double z2 = kPi * kPi / 6.0, z4 = std::pow(kPi, 4) / 90.0;
  check_rel(v.value, (z2 * z2 - z4) / 2.0, 1e-12);
}

TEST_CASE("delta sequence collapses to a single series") {
  DoubleSeriesParams p;
  p.seq = CoefficientSequence::delta(1);
  const auto v = L2_direct({0.0, 3.0}, p);
  REQUIRE(v.ok());
  check_rel(v.value, riemann_zeta(3.0) - 1.0, 1e-12);

  p.seq = CoefficientSequence::delta(2);
  p.alpha = 0.5;
  p.omega = 1.2;
  const auto w = L2_direct({1.2, 2.2}, p);
  REQUIRE(w.ok());
  check_rel(w.value, 0.27316493968670681, 1e-11);
}

TEST_CASE("exponential sequence against a brute-force double sum") {
  DoubleSeriesParams p;
  p.seq = CoefficientSequence::exponential(0.3);
  p.alpha = 0.7;
  const auto v = L2_direct({{1.3, 0.5}, 2.4}, p);
  REQUIRE(v.ok());
  check_rel(v.value, {-0.27503425797482666, 0.33428646458334780}, 1e-10);
}

TEST_CASE("two-period double zeta summed m-outer") {
  const auto v = zeta2_two_omega_direct({1.5, 2.5}, 1.0, 1.5);
  REQUIRE(v.ok());
  check_rel(v.value, 0.23378999670151879, 1e-10);
}

TEST_CASE("region test names the violated inequality") {
  const auto r = convergence_region({3.0, 0.5}, 1.02);
  CHECK_FALSE(r.inside);
  CHECK(r.violated.find("Re s2") != std::string::npos);
  DoubleSeriesParams p;
  const auto v = L2_direct({0.5, 1.2}, p);
  CHECK_FALSE(v.ok());
  CHECK(v.reason.find("Re(s1+s2)") != std::string::npos);
}

TEST_CASE("periodic decomposition reproduces the split double L") {
  const auto chi = dirichlet_character(4, 1);
  const EvalPoint s{{1.4, 0.3}, 2.6};
  const Complex w1 = 1.0, w2 = 1.5;
  const auto direct = double_L_direct(s, chi.table, chi.table, w1, w2);
  REQUIRE(direct.ok());
  Complex sum{};
  for (const auto& inst : decompose_periodic(chi.table, chi.table, w1, w2)) {
    if (inst.weight == Complex{}) continue;
    const auto z = zeta2_hl_two_omega(s, inst.alpha, inst.beta, inst.omega1, inst.omega2);
    REQUIRE(z.ok());
    sum += inst.weight * z.value;
  }
  check_rel(sum, direct.value, 1e-10);
}
