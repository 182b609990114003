#pragma once

#include <limits>
#include <optional>

#include "dzeta/types.hpp"

namespace dzeta {

/// sin(pi z) with exact reduction of Re z, accurate near the integers.
Complex sin_pi(Complex z);
double sin_pi(double x);
double cos_pi(double x);

/// Principal-branch power base^exponent, arg base in (-pi, pi].
Complex cpow(Complex base, Complex exponent);

/// Complex Gamma. Throws Refusal(Status::pole) at z in {0, -1, -2, ...}.
Complex gamma(Complex z);

/// 1/Gamma(z); entire, exactly zero at the non-positive integers.
Complex rgamma(Complex z);

/// Pochhammer symbol (a)_n for n >= 0.
Complex pochhammer(Complex a, int n);

/// Distance from z to the nearest pole of Gamma (infinity when Re z > 0.5
/// and z is away from the poles).
double gamma_pole_distance(Complex z);

struct PsiEvalConfig {
  /// Ray angle for the quadrature route; unset means the deterministic rule
  /// phi = -arg x clipped to (-pi/2 + 0.1, pi/2 - 0.1).
  std::optional<double> ray_angle;
  int quadrature_points = 16;
  int asymptotic_terms = 60;
  /// |x| at or above which the asymptotic route is tried first; <= 0 means
  /// 30 (1 + |a| + |c|).
  double crossover_magnitude = 0.0;
  double tolerance = 1e-14;
};

/// The ray angle the quadrature route uses for argument x.
double default_ray_angle(Complex x);

/// Confluent hypergeometric function Psi(a, c; x) (Tricomi U).
/// Routes: "asymptotic" for large |x|, "quadrature" on the ray when
/// Re a >= 1/4, "kummer+quadrature" when only Re(a - c + 1) is large enough,
/// and "recurrence+quadrature" (three-term recurrence in a, run downward)
/// otherwise.
SeriesValue psi(Complex a, Complex c, Complex x, const PsiEvalConfig& cfg = {});

/// The ray-integral route alone; requires Re a > 0 and an admissible ray.
SeriesValue psi_quadrature(Complex a, Complex c, Complex x, const PsiEvalConfig& cfg = {});

struct AsymptoticSum {
  Complex value{};
  double first_omitted = 0.0;  // magnitude of the first omitted term
  int terms = 0;
};

/// Truncated asymptotic series x^{-a} sum_k (-1)^k (a)_k (a-c+1)_k / k! x^{-k}
/// with exactly `terms` terms.
AsymptoticSum psi_asymptotic(Complex a, Complex c, Complex x, int terms);

/// Same series truncated adaptively: stops once a term falls below
/// rel_tol * |sum| or the terms start growing, whichever comes first.
AsymptoticSum psi_asymptotic_optimal(Complex a, Complex c, Complex x, int max_terms,
                                     double rel_tol);

/// |Psi(a,c;x) - x^{1-c} Psi(a-c+1, 2-c; x)| with the two sides evaluated by
/// separate quadratures on different admissible rays.
double kummer_residual(Complex a, Complex c, Complex x);

}  // namespace dzeta
