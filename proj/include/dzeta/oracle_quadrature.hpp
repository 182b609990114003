#pragma once

#include "dzeta/coefficients.hpp"
#include "dzeta/types.hpp"

namespace dzeta {

/// Fixed double-exponential grid for the two nested half-line integrals.
/// Node counts are nodes per unit length of the transformed variable
/// (step h = 1/nodes); the finite ranges are cut where the integrand falls
/// below 1e-19 of its peak.
struct QuadratureGrid {
  int outer_nodes = 64;
  int inner_nodes = 64;
  double outer_scale = 0.25;
  double inner_scale = 0.25;

  QuadratureGrid refined() const { return {2 * outer_nodes, 2 * inner_nodes, outer_scale, inner_scale}; }
};

/// f(tau) = sum a(n) e^{2 pi i n tau} (or the same with ~a when `tilde`).
/// Refuses Im tau < 1e-3 and stops on the tail bound C n^{(kappa-1)/2+eps} |q|^n.
Complex cusp_form_eval(Complex tau, const CuspForm& f, bool tilde = false);

/// (sqrt(N) tau)^{-kappa} f(-1/(N tau)) - ~f(tau).
Complex modular_residual(Complex tau, const CuspForm& f);

/// sum a(n) e^{-2 pi n omega y}, closed form where the sequence allows it.
Complex generating_function(const CoefficientSequence& seq, Complex omega, double y);

/// e^{-2 pi alpha u} / (1 - e^{-2 pi u}) for u > 0.
double lambda_kernel(double u, double alpha);

/// |sum_{m=0}^{terms-1} e^{-2 pi (m + alpha) u} - kernel(u)|.
double kernel_geometric_residual(double u, double alpha, int terms);

/// int_0^inf f(i omega y) int_0^inf kernel(x + y) x^{s1-1} y^{s2-1} dx dy.
SeriesValue lambda_integral(const EvalPoint& s, double alpha, Complex omega, const CoefficientSequence& seq,
                            const QuadratureGrid& grid = {});

/// (2 pi)^{s1+s2} / (Gamma(s1) Gamma(s2)) times lambda_integral.
SeriesValue lambda_L2(const EvalPoint& s, double alpha, Complex omega, const CoefficientSequence& seq,
                      const QuadratureGrid& grid = {});

}  // namespace dzeta
