#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dzeta/coefficients.hpp"
#include "dzeta/types.hpp"

namespace dzeta {

struct DoubleSeriesParams {
  double alpha = 1.0;
  double beta = 0.0;
  Complex omega{1.0, 0.0};
  Complex omega1{1.0, 0.0};
  Complex omega2{1.0, 0.0};
  CoefficientSequence seq = CoefficientSequence::constant();
  long m_max = 20000;
  long n_max = 20000;
  double target_tol = 1e-10;
  /// Replaces seq.kappa() in the region test (kappa = 1 for the two-period series).
  std::optional<double> kappa_override;
};

struct RegionCheck {
  bool inside = false;
  double margin_s2 = 0.0;   // Re s2 - (kappa + 1)/2
  double margin_sum = 0.0;  // Re(s1 + s2) - (kappa + 3)/2
  /// Names the first violated inequality, empty when inside.
  std::string violated;
};

RegionCheck convergence_region(const EvalPoint& s, double kappa);

/// sum_{m>=0} (alpha+m)^{-s1} (alpha+m+X)^{-s2}: direct terms for m < M with
/// M >= 2|X| + 20, then the binomial expansion in X against shifted Hurwitz zetas.
SeriesValue single_series(Complex s1, Complex s2, double alpha, Complex X);

/// sum_{m>=0} sum_{n>=1} a(n) (alpha+m)^{-s1} (alpha+m+n omega)^{-s2}.
SeriesValue L2_direct(const EvalPoint& s, const DoubleSeriesParams& p);

/// sum_{m,n>=1} (m w1)^{-s1} (m w1 + n w2)^{-s2}, summed with m outermost.
SeriesValue zeta2_two_omega_direct(const EvalPoint& s, Complex w1, Complex w2);

/// sum_{m,n>=1} a1(m) a2(n) (m w1)^{-s1} (m w1 + n w2)^{-s2}, split by m mod f.
SeriesValue double_L_direct(const EvalPoint& s, std::span<const Complex> a1,
                            std::span<const Complex> a2, Complex w1, Complex w2);

/// sum_{m>=0} sum_{n>=1} e^{2 pi i n beta} ((alpha+m) w1)^{-s1} ((alpha+m) w1 + n w2)^{-s2}.
SeriesValue zeta2_hl_two_omega(const EvalPoint& s, double alpha, double beta, Complex w1, Complex w2);

struct Zeta2Instance {
  Complex weight;
  double alpha;
  double beta;
  Complex omega1;
  Complex omega2;
};

/// Writes L2(s; a1, a2; w1, w2) as sum weight * zeta2(s; nu/f, mu/f; f w1, w2) over
/// nu, mu = 1..f with weight a1(nu) hat a2(mu). All f^2 entries are returned.
std::vector<Zeta2Instance> decompose_periodic(std::span<const Complex> a1,
                                              std::span<const Complex> a2, Complex w1, Complex w2);

}  // namespace dzeta
