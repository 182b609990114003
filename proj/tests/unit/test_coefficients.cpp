#include "check.hpp"
#include "dzeta/coefficients.hpp"

using namespace dzeta;

TEST_CASE("Ramanujan tau") {
  const std::vector<std::int64_t> want{1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643, -115920};
  CHECK(ramanujan_tau(10) == want);
  // multiplicativity at coprime indices
  const auto t = ramanujan_tau(40);
  CHECK(t[34] == t[4] * t[6]);  // tau(35) = tau(5) tau(7)
  // Hecke relation tau(p^2) = tau(p)^2 - p^11
  CHECK(t[3] == t[1] * t[1] - 2048);
}

TEST_CASE("divisors") {
  CHECK(divisors(12) == std::vector<long>{1, 2, 3, 4, 6, 12});
  CHECK(divisor_count(36) == 9);
}

TEST_CASE("characters mod 4 and mod 5") {
  const auto chi4 = dirichlet_character(4, 1);
  const std::vector<Complex> want{1.0, 0.0, -1.0, 0.0};
  CHECK(chi4.table == want);
  CHECK(chi4.primitive);
  CHECK(parity(chi4.table) == -1);
  check_close(gauss_sum(chi4), Complex(0.0, 2.0), 1e-14);
  for (const auto& chi : dirichlet_characters(5)) {
    if (chi.index == 0) continue;
    CHECK(std::abs(std::norm(gauss_sum(chi)) - 5.0) < 1e-12);
  }
}

TEST_CASE("finite Fourier transform of a character") {
  // for primitive chi, hat chi(nu) = tau(chi) conj(chi(-nu)) / f
  const auto chi = dirichlet_character(5, 1);
  const auto h = finite_fourier(chi.table);
  const Complex g = gauss_sum(chi);
  for (int nu = 1; nu <= 5; ++nu) check_close(h[nu - 1], g * std::conj(chi(5 - nu)) / 5.0, 1e-14);
}

TEST_CASE("sequences") {
  const auto e = CoefficientSequence::exponential(0.25);
  check_close(e(3), Complex(0.0, -1.0), 1e-15);
  const auto d = CoefficientSequence::delta(3);
  CHECK(d(3) == Complex(1.0));
  CHECK(d(4) == Complex{});
  CHECK(d.support_end() == 3);
  const auto f = CoefficientSequence::cusp_form(delta_form());
  CHECK(f(2) == Complex(-24.0));
  CHECK(f.kappa() == 12.0);
}

TEST_CASE("divisor sums") {
  // sigma_1(6; 0, 0) = 1 + 2 + 3 + 6
  check_close(sigma_c(6, 0.0, 0.0, 1.0), 12.0, 1e-14);
  // A_c with the constant sequence: sum_{mn=l} e^{2 pi i m alpha} n^c
  const auto one = CoefficientSequence::constant();
  const Complex c{0.5, 0.2};
  Complex want{};
  for (long m : divisors(12)) want += expi2pi(0.3 * m) * std::pow(Complex(12.0 / m), c);
  check_close(A_c(12, 1, 0.3, one, c), want, 1e-13);
}
