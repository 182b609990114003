#include "dzeta/oracle_quadrature.hpp"

#include <cmath>
#include <string>

#include "dzeta/quadrature.hpp"
#include "dzeta/special_functions.hpp"

namespace dzeta {

namespace {

// e^z - 1 without cancellation near z = 0.
Complex expm1_c(Complex z) {
  if (std::abs(z) > 0.5) return std::exp(z) - 1.0;
  Complex term = z, sum = z;
  for (int k = 2; k < 30; ++k) {
    term *= z / static_cast<double>(k);
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

int level_for(int nodes) {
  if (nodes < 32 || (nodes & (nodes - 1)) != 0)
    throw Refusal("quadrature node counts must be powers of two >= 32, got " + std::to_string(nodes));
  int level = 0;
  while ((2 << level) < nodes) ++level;
  return level;
}

}  // namespace

Complex cusp_form_eval(Complex tau, const CuspForm& f, bool tilde) {
  const double y = tau.imag();
  if (!(y > 0.0)) throw Refusal("cusp form needs Im tau > 0");
  if (y < 1e-3) throw Refusal("q-expansion converges too slowly: Im tau = " + std::to_string(y) + " < 1e-3");
  const Complex q = std::exp(kTwoPi * kI * tau);
  const double aq = std::abs(q);
  const double g = 0.5 * (f.weight - 1) + 0.5;  // d(n) <= 2 sqrt(n)
  const double c = std::max(1.0, std::abs(tilde ? f.tilde_a(1) : f.a(1)));
  Complex sum{}, qn{1.0, 0.0};
  for (long n = 1; n <= f.available(); ++n) {
    qn *= q;
    sum += (tilde ? f.tilde_a(n) : f.a(n)) * qn;
    const double tail = 2.0 * c * std::pow(static_cast<double>(n + 1), g) * std::abs(qn) * aq / (1.0 - aq);
    if (tail < 1e-17 * std::abs(sum) || tail < 1e-300) return sum;
  }
  throw Refusal("q-expansion at Im tau = " + std::to_string(y) + " needs more than " +
                std::to_string(f.available()) + " coefficients");
}

Complex modular_residual(Complex tau, const CuspForm& f) {
  const double N = f.level;
  const Complex lhs = cpow(std::sqrt(N) * tau, -static_cast<double>(f.weight)) * cusp_form_eval(-1.0 / (N * tau), f);
  return lhs - cusp_form_eval(tau, f, true);
}

Complex generating_function(const CoefficientSequence& seq, Complex omega, double y) {
  const Complex z = kTwoPi * omega * y;
  switch (seq.kind()) {
    case SequenceKind::constant:
      return seq.scale() / expm1_c(z);
    case SequenceKind::exponential: {
      double b = seq.beta() - std::floor(seq.beta());
      if (b > 0.5) b -= 1.0;
      return seq.scale() / expm1_c(z - kTwoPi * kI * b);
    }
    case SequenceKind::delta:
      return seq(seq.delta_index()) * std::exp(-z * static_cast<double>(seq.delta_index()));
    case SequenceKind::finite: {
      Complex v{};
      for (long n = 1; n <= *seq.support_end(); ++n) v += seq(n) * std::exp(-z * static_cast<double>(n));
      return v;
    }
    case SequenceKind::periodic:
    case SequenceKind::character: {
      const auto t = seq.table();
      const double f = static_cast<double>(t.size());
      Complex v{};
      for (std::size_t nu = 1; nu <= t.size(); ++nu) v += t[nu - 1] * std::exp(-z * static_cast<double>(nu));
      return v / (-expm1_c(-f * z));
    }
    case SequenceKind::cusp_form: {
      const CuspForm& f = seq.cusp();
      const Complex tau = kI * omega * y;
      if (tau.imag() >= 0.3) return seq.scale() * cusp_form_eval(tau, f);
      // f(tau') = (sqrt(N) tau)^kappa ~f(tau) with tau = -1/(N tau')
      const double N = f.level;
      const Complex t2 = -1.0 / (N * tau);
      return seq.scale() * cpow(std::sqrt(N) * t2, static_cast<double>(f.weight)) * cusp_form_eval(t2, f, true);
    }
  }
  return {};
}

double lambda_kernel(double u, double alpha) { return std::exp(-kTwoPi * alpha * u) / -std::expm1(-kTwoPi * u); }

double kernel_geometric_residual(double u, double alpha, int terms) {
  double sum = 0.0;
  for (int m = terms - 1; m >= 0; --m) sum += std::exp(-kTwoPi * (m + alpha) * u);
  return std::abs(sum - lambda_kernel(u, alpha));
}

SeriesValue lambda_integral(const EvalPoint& s, double alpha, Complex omega, const CoefficientSequence& seq,
                            const QuadratureGrid& grid) {
  return guarded([&]() -> SeriesValue {
    const double kappa = seq.kappa();
    if (!(s.sigma1() > 0.0)) throw Refusal("integral needs sigma1 > 0");
    if (!(s.sigma2() > 0.5 * (kappa + 1.0)))
      throw Refusal("integral needs sigma2 > (kappa+1)/2 = " + std::to_string(0.5 * (kappa + 1.0)));
    if (!(s.sum().real() > 0.5 * (kappa + 3.0)))
      throw Refusal("integral needs sigma1 + sigma2 > (kappa+3)/2 = " + std::to_string(0.5 * (kappa + 3.0)));
    if (!(alpha > 0.0 && alpha <= 1.0)) throw Refusal("integral needs 0 < alpha <= 1");
    if (std::abs(omega) == 0.0 || std::abs(std::arg(omega)) > 0.25 * kPi + 1e-15)
      throw Refusal("integral is restricted to |arg omega| <= pi/4");

    quad::HalfLineOptions inner;
    inner.scale = grid.inner_scale;
    inner.rel_tol = 0.0;
    inner.max_level = level_for(grid.inner_nodes);
    quad::HalfLineOptions outer = inner;
    outer.scale = grid.outer_scale;
    outer.max_level = level_for(grid.outer_nodes);

    const Complex e1 = s.s1 - 1.0, e2 = s.s2 - 1.0;
    long evals = 0;
    auto outer_f = [&](double y, double logy) -> Complex {
      const auto in = quad::integrate_half_line(
          [&](double x, double logx) -> Complex { return std::exp(e1 * logx) * lambda_kernel(x + y, alpha); }, inner);
      evals += in.evaluations;
      return generating_function(seq, omega, y) * std::exp(e2 * logy) * in.value;
    };
    const auto res = quad::integrate_half_line(outer_f, outer);
    SeriesValue out;
    out.value = res.value;
    out.error = res.error;
    out.terms = evals;
    out.route = "double-exp-sinh";
    return out;
  });
}

SeriesValue lambda_L2(const EvalPoint& s, double alpha, Complex omega, const CoefficientSequence& seq,
                      const QuadratureGrid& grid) {
  auto v = lambda_integral(s, alpha, omega, seq, grid);
  if (!v.ok()) return v;
  const Complex f = cpow(kTwoPi, s.sum()) * rgamma(s.s1) * rgamma(s.s2);
  v.value *= f;
  v.error *= std::abs(f);
  return v;
}

}  // namespace dzeta
