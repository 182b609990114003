#pragma once

#include <cmath>
#include <vector>

#include "dzeta/types.hpp"

namespace dzeta::quad {

struct QuadResult {
  Complex value{};
  double error = 0.0;
  int evaluations = 0;
  bool converged = false;
};

struct HalfLineOptions {
  double scale = 1.0;      // bulk of the integrand is expected near x ~ scale
  double rel_tol = 1e-14;
  double abs_tol = 0.0;
  int max_level = 8;       // step h = 2^-level starting from h = 1/2
  double t_cap = 6.5;
};

/// Double-exponential (exp-sinh) rule for integrals over (0, inf):
/// x = scale * exp(pi/2 sinh t). The integrand receives (x, log x) so that
/// algebraic endpoint factors can be formed from log x without underflow.
/// Level refinement halves h and reuses previous nodes; the error estimate is
/// the difference of the last two levels.
template <class F>
QuadResult integrate_half_line(F&& f, const HalfLineOptions& opt = {}) {
  const double log_scale = std::log(opt.scale);
  auto term = [&](double t) -> Complex {
    const double half_pi_sinh = 0.5 * kPi * std::sinh(t);
    const double logx = log_scale + half_pi_sinh;
    if (logx > 700.0) return {0.0, 0.0};
    const double x = std::exp(logx);
    const Complex v = f(x, logx);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return {0.0, 0.0};
    return v * (x * 0.5 * kPi * std::cosh(t));
  };

  QuadResult res;
  // Locate the effective support with a coarse scan.
  const double h0 = 0.5;
  double peak = 0.0;
  std::vector<std::pair<double, Complex>> coarse;
  Complex sum = term(0.0);
  ++res.evaluations;
  peak = std::abs(sum);
  double t_hi = 0.0, t_lo = 0.0;
  for (int dir : {+1, -1}) {
    int small = 0;
    for (int k = 1;; ++k) {
      const double t = dir * k * h0;
      if (std::abs(t) > opt.t_cap) break;
      const Complex v = term(t);
      ++res.evaluations;
      sum += v;
      const double a = std::abs(v);
      peak = std::max(peak, a);
      (dir > 0 ? t_hi : t_lo) = t;
      if (a <= 1e-19 * peak) {
        if (++small >= 2) break;
      } else {
        small = 0;
      }
    }
  }
  Complex prev = sum * h0;
  double h = h0;
  res.value = prev;
  res.error = std::abs(prev);
  for (int level = 1; level <= opt.max_level; ++level) {
    h *= 0.5;
    Complex add{};
    const long n_new = std::lround((t_hi - t_lo) / (2.0 * h));
    for (long j = 0; j < n_new; ++j) {
      add += term(t_lo + static_cast<double>(2 * j + 1) * h);
      ++res.evaluations;
    }
    const Complex cur = 0.5 * prev + h * add;
    res.value = cur;
    res.error = std::abs(cur - prev);
    prev = cur;
    const double tol = std::max(opt.abs_tol, opt.rel_tol * std::abs(cur));
    if (level >= 2 && res.error <= tol) {
      res.converged = true;
      break;
    }
  }
  return res;
}

}  // namespace dzeta::quad
