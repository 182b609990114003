#include "check.hpp"
#include "dzeta/fe_engine.hpp"

using namespace dzeta;

TEST_CASE("theorem ids") {
  CHECK(parse_theorem("t5") == TheoremId::t5);
  CHECK(parse_theorem("F-relation") == TheoremId::f_relation);
  CHECK_FALSE(parse_theorem("T9").has_value());
  CHECK(std::string(to_string(TheoremId::oracle)) == "oracle");
}

TEST_CASE("F refuses outside absolute convergence unless continued") {
  const EvalPoint s{-2.0, 0.5};
  const auto one = CoefficientSequence::constant();
  const auto v = F_pm(1, s, 0.3, 1.0, one);
  CHECK(v.status == Status::nonconvergent);
  CHECK(v.reason.find("< -1") != std::string::npos);
  FSeriesOptions opt;
  opt.allow_continuation = true;
  const auto w = F_pm(1, s, 0.3, 1.0, one, opt);
  CHECK(w.ok());
  CHECK(w.route.find("continued") != std::string::npos);
}

TEST_CASE("F refuses omega outside the right half-plane") {
  const auto v = F_pm(1, {-2.0, 3.5}, 0.3, Complex(-1.0, 0.1), CoefficientSequence::constant());
  CHECK_FALSE(v.ok());
  CHECK(v.reason.find("arg omega") != std::string::npos);
}

TEST_CASE("decay exponent of the divisor family") {
  const auto one = CoefficientSequence::constant();
  const DivisorFamily fam{0.3, Complex{}, Complex(0.5), one};
  const auto d = psi_dirichlet_decay(fam, 3.0);
  CHECK(d.convergent);
  CHECK(std::abs(d.exponent - (0.5 + one.growth_exponent() - 3.0)) < 1e-12);
  // finite support: only the m-power counts
  const DivisorFamily fin{0.3, Complex(-0.4), Complex(7.0), CoefficientSequence::delta(2)};
  CHECK(std::abs(psi_dirichlet_decay(fin, 1.0).exponent - (-1.4)) < 1e-12);
}

TEST_CASE("F-relation for three sequence kinds") {
  FEParams p;
  p.alpha = 0.3;
  p.tolerance = 1e-9;
  for (auto seq : {CoefficientSequence::constant(), CoefficientSequence::exponential(0.3),
                   CoefficientSequence::delta(5)}) {
    p.seq = seq;
    const auto r = verify(TheoremId::f_relation, {-2.0, 3.5}, p);
    INFO(seq.describe());
    CHECK(r.status == Status::ok);
    CHECK(r.residual_rel < 1e-12);
  }
}

TEST_CASE("Theorem 5 with a delta sequence") {
  FEParams p;
  p.alpha = 1.0 / 3.0;
  p.seq = CoefficientSequence::delta(3);
  const auto r = verify(TheoremId::t5, {-1.5, 3.2}, p);
  CHECK(r.pass);
  CHECK(r.residual_rel < 1e-12);
}

TEST_CASE("Theorem 5 additional term plus body") {
  const EvalPoint s{-0.8, 2.9};
  const auto parts = thm5_parts(s, 0.5, 1.0, CoefficientSequence::constant());
  const auto whole = thm5_rhs(s, 0.5, 1.0, CoefficientSequence::constant());
  REQUIRE(parts.additional.ok());
  REQUIRE(parts.body.ok());
  check_rel(parts.additional.value + parts.body.value, whole.value, 1e-14);
}

TEST_CASE("Theorem 3 needs an odd integer hyperplane with k != 0") {
  FEParams p;
  const auto off = verify(TheoremId::t3, {0.4, 2.0}, p);
  CHECK(off.refused());
  const auto k0 = verify(TheoremId::t3, {0.4, 0.6}, p);
  CHECK(k0.refused());
  const auto on = verify(TheoremId::t3, {{0.4, 1.1}, {2.6, -1.1}}, p);
  CHECK(on.pass);
}

TEST_CASE("Theorem 4 records the dual normalization") {
  FEParams p;
  const auto chi = dirichlet_character(4, 1);
  p.a1 = chi.table;
  p.a2 = chi.table;
  p.tolerance = 1e-7;
  const auto r = verify(TheoremId::t4, {{1.3, 0.7}, {3.7, -0.7}}, p);
  CHECK(r.pass);
  REQUIRE(r.params.count("dual_factor"));
}

TEST_CASE("Theorem 4 refuses a parity mismatch") {
  FEParams p;
  p.a1 = dirichlet_character(5, 1).table;
  p.a2 = dirichlet_character(5, 2).table;
  const auto r = verify(TheoremId::t4, {{1.3, 0.7}, {3.7, -0.7}}, p);
  CHECK(r.refused());
  CHECK(r.refusal_reason.find("parity") != std::string::npos);
}

TEST_CASE("H decay at the Theorem 6 points") {
  CHECK(H_decay({6.0, 7.8}, 12.0).convergent);
  CHECK_FALSE(H_decay({2.0, 3.0}, 12.0).convergent);
}

TEST_CASE("Riemann and Hurwitz functional equations") {
  FEParams p;
  p.tolerance = 1e-9;
  CHECK(verify(TheoremId::riemann, {{-1.3, 4.0}, 0.0}, p).pass);
  p.alpha = 0.3;
  CHECK(verify(TheoremId::hurwitz, {{-1.3, 4.0}, 0.0}, p).pass);
}
