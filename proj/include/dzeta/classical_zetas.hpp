#pragma once

#include <span>
#include <string>

#include "dzeta/coefficients.hpp"
#include "dzeta/types.hpp"

namespace dzeta {

/// How L(s, A) is continued beyond its half-plane of absolute convergence.
enum class ContinuationKind { euler_maclaurin, hurwitz_decomposition, completed_integral, direct_sum_only };

struct ContinuationStrategy {
  ContinuationKind kind = ContinuationKind::direct_sum_only;
  int cutoff = 0;            // M for Euler-Maclaurin, 0 when adaptive
  int correction_order = 0;  // K for Euler-Maclaurin, 0 when adaptive
};

const char* to_string(ContinuationKind k);
ContinuationStrategy continuation_strategy(const CoefficientSequence& a);

/// B_{2k} / (2k)! for k = 1..kMaxBernoulli.
inline constexpr int kMaxBernoulli = 60;
long double bernoulli_ratio(int k);

/// Riemann zeta. Refuses within 1e-6 of s = 1.
Complex riemann_zeta(Complex s);

/// Hurwitz zeta zeta(s, alpha) = sum_{n>=0} (n + alpha)^{-s}, 0 < alpha <= 1.
Complex hurwitz_zeta(Complex s, double alpha);

/// Same series for any shift a > 0.
Complex hurwitz_zeta_shifted(Complex s, double a);

/// sum_{n>=0} (n + a)^{-s} for complex a with Re a > 0 (Euler-Maclaurin only).
Complex hurwitz_zeta_cshift(Complex s, Complex a);

/// Lerch zeta phi(s, alpha) = sum_{n>=1} e^{2 pi i n alpha} n^{-s}.
Complex lerch_phi(Complex s, double alpha);

/// sum_{n>=n_start} e^{2 pi i n alpha} n^{-s}.
Complex lerch_tail(Complex s, double alpha, long n_start);

/// sum_{n>=n_start} a(n) n^{-s} for a table a(1..f), via shifted Hurwitz zetas.
Complex periodic_tail(Complex s, std::span<const Complex> table, long n_start);

/// L(s, a) = sum a(m) m^{-s} for a table a(1..f).
Complex periodic_L(Complex s, std::span<const Complex> table);

/// Coefficients a(1..) of a cusp form summed against e^{-2 pi n y}, y > 0.
Complex cusp_q_series(const CuspForm& f, double y);

/// Completed integral Lambda(s) = int_0^inf f(iy) y^{s-1} dy = (2 pi)^{-s} Gamma(s) L(s, f).
Complex cusp_completed(Complex s, const CuspForm& f);

/// L(s, f) for a cusp form; entire.
Complex cusp_L(Complex s, const CuspForm& f);

/// L(s, A) by kind; refuses outside Re s > (kappa + 1)/2 when no continuation exists.
SeriesValue sequence_L(Complex s, const CoefficientSequence& a);

/// sum_{n>=n_start} a(n) n^{-s}, computed without subtracting a partial sum
/// from L(s, A) where that would cancel.
SeriesValue sequence_L_tail(Complex s, const CoefficientSequence& a, long n_start);

/// Gamma(s) L(s, A), finite at trivial zeros where Gamma has a pole.
SeriesValue gamma_times_L(Complex s, const CoefficientSequence& a);

}  // namespace dzeta
