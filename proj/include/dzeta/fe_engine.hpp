#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dzeta/coefficients.hpp"
#include "dzeta/special_functions.hpp"
#include "dzeta/types.hpp"

namespace dzeta {

/// Coefficients of the form c(l) = sum_{mn=l} e^{2 pi i m phase} m^{c_m} a(n) n^{c_n}.
/// Their Dirichlet series is phi(w - c_m, phase) L(w - c_n, A).
struct DivisorFamily {
  double phase = 0.0;
  Complex c_m{};
  Complex c_n{};
  CoefficientSequence seq = CoefficientSequence::constant();

  Complex operator()(long l) const;
  /// Exponent g with |c(l)| << l^{g + eps}.
  double growth() const;
  /// sum_{l >= l0} c(l) l^{-w}.
  Complex tail(Complex w, long l0) const;
  /// sum_{l >= 1} c(l) l^{-w}, continued.
  Complex dirichlet(Complex w) const;
};

struct FSeriesOptions {
  long L_max = 200;
  /// Evaluate through the analytic continuation of the tail when the series
  /// itself does not converge absolutely.
  bool allow_continuation = false;
  PsiEvalConfig psi;
};

struct DecayCheck {
  double exponent = 0.0;  // growth of the coefficients minus Re a
  bool convergent = false;
  std::string describe() const;
};

/// sum_l c(l) Psi(a, c; x l).
SeriesValue psi_dirichlet(const DivisorFamily& coef, Complex a, Complex c, Complex x,
                          const FSeriesOptions& opt);
DecayCheck psi_dirichlet_decay(const DivisorFamily& coef, Complex a);

/// +-2 pi i omega.
Complex twopi_i_omega(int sign, Complex omega);

/// F_{+-}(s; alpha; omega; A) with coefficients A_{s1+s2-1}(l; +-alpha; A).
SeriesValue F_pm(int sign, const EvalPoint& s, double alpha, Complex omega,
                 const CoefficientSequence& seq, const FSeriesOptions& opt = {});

/// The same series with the power on m: A^0_{s1+s2-1}(l; +-alpha; A).
SeriesValue F0_pm(int sign, const EvalPoint& s, double alpha, Complex omega,
                  const CoefficientSequence& seq, const FSeriesOptions& opt = {});

/// F_{+-}(s; alpha, beta, omega) with divisor coefficients sigma_{s1+s2-1}(k; alpha, beta).
SeriesValue F_sigma(int sign, const EvalPoint& s, double alpha, double beta, Complex omega,
                    const FSeriesOptions& opt = {});

struct HOptions {
  long m_max = 48;
  long n_slope = 8;    // n runs up to n_slope * m + n_offset
  long n_offset = 40;
  PsiEvalConfig psi;
};

struct HDecay {
  double n_exponent = 0.0;
  double m_exponent = 0.0;
  bool convergent = false;
  std::string describe() const;
};

HDecay H_decay(const EvalPoint& s, double kappa);

/// H^{+-}_{2,N}(s; alpha; omega; f~) as a double sum over (m, n).
SeriesValue H_pm(int sign, const EvalPoint& s, double alpha, Complex omega, const CuspForm& ftilde,
                 int level, const HOptions& opt = {});

/// Continuation of L2(s; alpha; omega; A) through F at the dual point.
SeriesValue thm5_rhs(const EvalPoint& s, double alpha, Complex omega, const CoefficientSequence& seq,
                     FSeriesOptions opt = {});

/// The same right-hand side split into its two pieces.
struct Thm5Parts {
  SeriesValue additional;  // Gamma(1-s1) Gamma(s1+s2-1) / (Gamma(s2) omega^{s1+s2-1}) L(s1+s2-1)
  SeriesValue body;        // Gamma(1-s1) omega^{1-s1-s2} (F+ + F-) at (1-s2, 1-s1)
};
Thm5Parts thm5_parts(const EvalPoint& s, double alpha, Complex omega, const CoefficientSequence& seq,
                     FSeriesOptions opt = {});

/// zeta2(s; alpha, beta, omega) from the divisor-coefficient form with the
/// (alpha, beta) swap and the negated alpha in the F_- term.
SeriesValue thm1_rhs(const EvalPoint& s, double alpha, double beta, Complex omega, FSeriesOptions opt = {});

/// zeta2(s; alpha, beta, omega) minus its additional term.
SeriesValue g_func(const EvalPoint& s, double alpha, double beta, Complex omega, FSeriesOptions opt = {});

/// (2 pi i / (f w1 w2))^exponent with the argument taken as pi/2 - arg w1 - arg w2.
Complex xi_prefactor(Complex exponent, Complex w1, Complex w2, double f = 1.0);

SeriesValue xi_func(const EvalPoint& s, Complex w1, Complex w2, FSeriesOptions opt = {});

/// Gamma(s2)/Gamma(1-s1) L2(s; alpha; omega; f) through H at (-s1, kappa-s2+1).
SeriesValue thm6_rhs(const EvalPoint& s, double alpha, Complex omega, const CoefficientSequence& f,
                     const HOptions& opt = {});

/// L2(s; a1, a2; w1, w2) through decompose_periodic and the F route for each
/// instance. The additional terms are combined before evaluation and omitted
/// when sum_nu a1(nu) vanishes.
SeriesValue double_L_continued(const EvalPoint& s, std::span<const Complex> a1,
                               std::span<const Complex> a2, Complex w1, Complex w2,
                               FSeriesOptions opt = {});

// ---------------------------------------------------------------------------
// Reports

enum class TheoremId { riemann, hurwitz, f_relation, t1, t2, t3, t4, t5, t6, oracle, modular };

const char* to_string(TheoremId t);
std::optional<TheoremId> parse_theorem(const std::string& s);

struct HyperplaneSpec {
  int k = 0;
  bool odd_sum = true;  // s1 + s2 = 2k+1 when true, 2k otherwise
  Complex value() const { return odd_sum ? 2.0 * k + 1.0 : 2.0 * k; }
};

struct FEParams {
  double alpha = 1.0;
  double beta = 0.0;
  Complex omega{1.0, 0.0};
  Complex omega1{1.0, 0.0};
  Complex omega2{1.0, 0.0};
  CoefficientSequence seq = CoefficientSequence::constant();
  std::vector<Complex> a1, a2;  // periodic tables for T4
  int sign = +1;                // F-relation sign
  bool sigma_form = false;      // F-relation with divisor coefficients sigma_c(k; alpha, beta)
  Complex tau{0.0, 1.0};        // modular residual point
  long L_max = 200;
  double tolerance = 1e-8;
};

struct FEReport {
  TheoremId theorem = TheoremId::t5;
  EvalPoint point;
  std::map<std::string, std::string> params;
  Complex lhs{}, rhs{};
  double lhs_err = 0.0, rhs_err = 0.0;
  double residual_abs = 0.0, residual_rel = 0.0;
  double tolerance = 0.0;
  std::string lhs_route, rhs_route;
  Status status = Status::ok;
  std::string refusal_reason;
  bool pass = false;

  /// Recomputes residuals and the pass flag from lhs/rhs/errors.
  void finish();
  bool refused() const { return status != Status::ok; }
};

FEReport thm4_residual(const EvalPoint& s, std::span<const Complex> a1, std::span<const Complex> a2,
                       Complex w1, Complex w2, const HyperplaneSpec& k, double tol, long L_max = 200);

FEReport verify(TheoremId theorem, const EvalPoint& point, const FEParams& params);

}  // namespace dzeta
