#include "check.hpp"
#include "dzeta/classical_zetas.hpp"

using namespace dzeta;

TEST_CASE("Riemann zeta") {
  check_rel(riemann_zeta(2.0), kPi * kPi / 6.0, 1e-14);
  check_rel(riemann_zeta({0.5, 14.0}), {0.022241142609993589, -0.10325812326645006}, 1e-11);
  check_rel(riemann_zeta({-3.5, 2.0}), {-0.0035609799649190723, 0.042622537314776407}, 1e-12);
  check_rel(riemann_zeta(-7.3), 0.003936040865716961, 1e-12);
  check_close(riemann_zeta(-2.0), 0.0, 1e-15);
  CHECK_THROWS_AS(riemann_zeta(1.0), Refusal);
}

TEST_CASE("Hurwitz zeta") {
  check_rel(hurwitz_zeta({2.5, 1.0}, 0.3), {7.8528807052013212, 18.593143534318559}, 1e-12);
  check_rel(hurwitz_zeta({-1.7, 3.0}, 0.7), {-0.13440560196235807, 0.16642636617509454}, 1e-11);
  check_rel(hurwitz_zeta(3.0, 1.0), riemann_zeta(3.0), 1e-14);
}

TEST_CASE("Lerch zeta") {
  check_rel(lerch_phi({0.4, 2.0}, 0.3), {-1.1254422250129249, 0.95298570514721795}, 1e-11);
  check_rel(lerch_phi(-1.5, 0.25), {-0.33568019393249195, -0.28834656450840637}, 1e-11);
  check_rel(lerch_phi(3.0, 0.1), {0.81369720728014483, 0.74415064032719571}, 1e-13);
}

TEST_CASE("periodic and character L-functions") {
  const auto chi4 = dirichlet_character(4, 1);
  check_rel(periodic_L(1.0, chi4.table), kPi / 4.0, 1e-13);
  // trivial zero at s = -1; L(-2k, chi4) = E_{2k}/2 with Euler numbers
  check_close(periodic_L(-1.0, chi4.table), 0.0, 1e-13);
  check_rel(periodic_L(0.0, chi4.table), 0.5, 1e-13);
  check_rel(periodic_L(-2.0, chi4.table), -0.5, 1e-12);
  // tail from n = 3: L - 1
  check_rel(periodic_tail(2.0, chi4.table, 2), periodic_L(2.0, chi4.table) - 1.0, 1e-14);
}

TEST_CASE("cusp form L-function of Delta") {
  const auto d = delta_form();
  // Lambda(s) = Lambda(12 - s)
  const Complex s{4.3, 1.7};
  check_rel(cusp_completed(s, *d), cusp_completed(12.0 - s, *d), 1e-11);
  // L(s) near the edge of absolute convergence against the raw series.
  Complex direct{};
  for (long n = 1; n <= d->available(); ++n) direct += d->a(n) * std::pow(double(n), -9.0);
  check_rel(cusp_L(9.0, *d), direct, 1e-8);
}

TEST_CASE("sequence_L refuses without a continuation") {
  const auto v = sequence_L(0.5, CoefficientSequence::finite({1.0, 2.0}));
  CHECK(v.ok());
  const auto one = sequence_L(1.0, CoefficientSequence::constant());
  CHECK_FALSE(one.ok());
}
