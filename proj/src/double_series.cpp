#include "dzeta/double_series.hpp"

#include <cmath>
#include <sstream>

#include "dzeta/classical_zetas.hpp"
#include "dzeta/special_functions.hpp"

namespace dzeta {

namespace {

constexpr int kMaxJ = 90;

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

// (base)^{-s} for real base > 0.
Complex rpow_neg(double base, Complex s) { return std::exp(-s * std::log(base)); }

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw Refusal("0 < alpha <= 1 violated (alpha = " + fmt(alpha) + ")");
}

void check_omega_arg(Complex w) {
  if (w == Complex{}) throw Refusal("omega must be nonzero");
  if (!(std::fabs(std::arg(w)) < kPi) || (std::fabs(w.imag()) <= 1e-12 * std::abs(w) && w.real() < 0.0)) {
    throw Refusal("|arg omega| < pi violated (omega on or within 1e-12 of the negative real axis)");
  }
}

void check_right_half(Complex w, const char* name) {
  if (!(w.real() > 0.0)) throw Refusal(std::string("Re ") + name + " > 0 violated");
}

// C(-s, j) = (-1)^j (s)_j / j!, updated incrementally.
struct NegBinomial {
  Complex s;
  Complex value{1.0, 0.0};
  int j = 0;
  void next() {
    value *= -(s + static_cast<double>(j)) / static_cast<double>(j + 1);
    ++j;
  }
};

// Mellin-Barnes route for the single series at large |X|, summed over n >= n0 against a(n).
SeriesValue general_tail_route(Complex s1, Complex s2, double alpha, Complex omega,
                               const CoefficientSequence& seq, long n0) {
  auto tail_L = [&](Complex w) { return value_or_throw(sequence_L_tail(w, seq, n0)); };
  SeriesValue out;
  const Complex w_add = s1 + s2 - 1.0;
  Complex total = gamma(1.0 - s1) * gamma(w_add) * rgamma(s2) * cpow(omega, -w_add) * tail_L(w_add);
  NegBinomial c{s2};
  int small = 0;
  bool done = false;
  for (int j = 0; j <= kMaxJ; ++j, c.next()) {
    const Complex z = hurwitz_zeta(s1 - static_cast<double>(j), alpha);
    const Complex w = s2 + static_cast<double>(j);
    const Complex term = c.value * z * cpow(omega, -w) * tail_L(w);
    total += term;
    out.error = std::abs(term);
    if (std::abs(term) <= 1e-17 * std::abs(total)) {
      if (++small >= 2) {
        done = true;
        break;
      }
    } else {
      small = 0;
    }
  }
  out.value = total;
  out.terms = kMaxJ;
  if (!done) {
    out.status = Status::nonconvergent;
    out.reason = "Mellin-Barnes tail did not settle within " + std::to_string(kMaxJ) + " terms";
  }
  return out;
}

SeriesValue general_route_raw(Complex s1, Complex s2, double alpha, Complex omega,
                              const CoefficientSequence& seq) {
  const double x_min = 15.0 + 2.0 * (std::abs(s1) + std::abs(s2));
  const long n0 = std::max(1L, static_cast<long>(std::ceil(x_min / std::abs(omega))));
  SeriesValue out;
  Complex head{};
  double err = 0.0;
  for (long n = 1; n < n0; ++n) {
    const Complex an = seq(n);
    if (an == Complex{}) continue;
    auto sn = single_series(s1, s2, alpha, static_cast<double>(n) * omega);
    if (!sn.ok()) return sn;
    head += an * sn.value;
    err += std::abs(an) * sn.error;
  }
  auto tail = general_tail_route(s1, s2, alpha, omega, seq, n0);
  if (!tail.ok()) return tail;
  out.value = head + tail.value;
  out.error = err + tail.error + 1e-15 * std::abs(out.value) * n0;
  out.terms = n0;
  out.route = "single-series+mellin-barnes-tail";
  return out;
}

double distance_to_positive_integer(Complex z) {
  const double k = std::max(1.0, std::round(z.real()));
  return std::abs(z - k);
}

SeriesValue general_route(Complex s1, Complex s2, double alpha, Complex omega,
                          const CoefficientSequence& seq) {
  if (distance_to_positive_integer(s1) >= 0.2) return general_route_raw(s1, s2, alpha, omega, seq);
  // Gamma(1-s1) and zeta(s1-j, alpha) have cancelling poles here; average over
  // a circle in s1 instead (mean value property).
  const double sigma = (s1 + s2).real();
  const double r = std::min(0.25, 0.3 * (sigma - 2.0));
  if (!(r > 0.05)) {
    return SeriesValue::refused("integer s1 with Re(s1+s2) too close to 2 for the circle mean");
  }
  constexpr int kPoints = 32;
  Complex acc{};
  double err = 0.0;
  for (int k = 0; k < kPoints; ++k) {
    const Complex z = s1 + std::polar(r, kTwoPi * (k + 0.5) / kPoints);
    auto v = general_route_raw(z, s2, alpha, omega, seq);
    if (!v.ok()) return v;
    acc += v.value;
    err = std::max(err, v.error);
  }
  SeriesValue out;
  out.value = acc / static_cast<double>(kPoints);
  out.error = err + 1e-14 * std::abs(out.value);
  out.route = "circle-mean(single-series+mellin-barnes-tail)";
  return out;
}

}  // namespace

RegionCheck convergence_region(const EvalPoint& s, double kappa) {
  RegionCheck r;
  r.margin_s2 = s.sigma2() - 0.5 * (kappa + 1.0);
  r.margin_sum = s.sum().real() - 0.5 * (kappa + 3.0);
  if (!(r.margin_s2 > 0.0)) {
    r.violated = "Re s2 > (kappa+1)/2 = " + fmt(0.5 * (kappa + 1.0)) + " violated (Re s2 = " + fmt(s.sigma2()) + ")";
  } else if (!(r.margin_sum > 0.0)) {
    r.violated = "Re(s1+s2) > (kappa+3)/2 = " + fmt(0.5 * (kappa + 3.0)) +
                 " violated (Re(s1+s2) = " + fmt(s.sum().real()) + ")";
  }
  r.inside = r.violated.empty();
  return r;
}

SeriesValue single_series(Complex s1, Complex s2, double alpha, Complex X) {
  return guarded([&]() -> SeriesValue {
    if (!(alpha > 0.0)) throw Refusal("single series needs alpha > 0");
    const long M = static_cast<long>(std::ceil(2.0 * std::abs(X) + 20.0));
    Complex direct{};
    for (long m = M - 1; m >= 0; --m) {
      const double b = alpha + static_cast<double>(m);
      const Complex z = b + X;
      if (std::fabs(z.imag()) <= 1e-12 * std::abs(z) && z.real() <= 0.0) {
        throw Refusal("base alpha+m+X lies on the branch cut of the principal power");
      }
      direct += rpow_neg(b, s1) * cpow(z, -s2);
    }
    const double a = alpha + static_cast<double>(M);
    Complex tail{};
    NegBinomial c{s2};
    Complex xj{1.0, 0.0};
    int small = 0;
    int j = 0;
    for (; j < 200; ++j, c.next(), xj *= X) {
      const Complex term = c.value * xj * hurwitz_zeta_shifted(s1 + s2 + static_cast<double>(j), a);
      tail += term;
      if (std::abs(term) <= 1e-18 * std::abs(direct + tail)) {
        if (++small >= 2) break;
      } else {
        small = 0;
      }
    }
    SeriesValue out;
    out.value = direct + tail;
    out.error = 1e-15 * (std::abs(direct) + std::abs(tail)) + 1e-16 * M * std::abs(out.value);
    out.terms = M + j;
    out.route = "direct+binomial-tail";
    return out;
  });
}

SeriesValue L2_direct(const EvalPoint& s, const DoubleSeriesParams& p) {
  return guarded([&]() -> SeriesValue {
    check_alpha(p.alpha);
    check_omega_arg(p.omega);
    const auto& seq = p.seq;
    if (auto end = seq.support_end()) {
      if (!(s.sum().real() > 1.0)) {
        throw Refusal("Re(s1+s2) > 1 violated for a finitely supported sequence (Re(s1+s2) = " +
                      fmt(s.sum().real()) + ")");
      }
      SeriesValue out;
      out.route = "single-series";
      for (long n = 1; n <= *end; ++n) {
        const Complex an = seq(n);
        if (an == Complex{}) continue;
        auto v = single_series(s.s1, s.s2, p.alpha, static_cast<double>(n) * p.omega);
        if (!v.ok()) return v;
        out.value += an * v.value;
        out.error += std::abs(an) * v.error;
        out.terms += v.terms;
      }
      return out;
    }
    const auto region = convergence_region(s, p.kappa_override.value_or(seq.kappa()));
    if (!region.inside) throw Refusal(region.violated);
    auto out = general_route(s.s1, s.s2, p.alpha, p.omega, seq);
    if (out.ok() && out.error > p.target_tol * std::max(1.0, std::abs(out.value))) {
      out.status = Status::tail_too_large;
      out.reason = "error estimate " + fmt(out.error) + " exceeds target " + fmt(p.target_tol);
    }
    return out;
  });
}

SeriesValue zeta2_two_omega_direct(const EvalPoint& s, Complex w1, Complex w2) {
  return guarded([&]() -> SeriesValue {
    check_right_half(w1, "omega1");
    check_right_half(w2, "omega2");
    const auto region = convergence_region(s, 1.0);
    if (!region.inside) throw Refusal(region.violated);
    const Complex s1 = s.s1, s2 = s.s2;
    const Complex rho = w1 / w2;
    // Inner sum over n for fixed m: w2^{-s2} (zeta(s2, m rho) - (m rho)^{-s2}).
    const long m_cut = std::max(
        30L, static_cast<long>(std::ceil((std::abs(s2) + 60.0) / (kPi * std::abs(rho)))));
    Complex head{};
    const Complex w2s = cpow(w2, -s2);
    for (long m = m_cut; m >= 1; --m) {
      const Complex a = static_cast<double>(m) * rho;
      const Complex inner = w2s * (hurwitz_zeta_cshift(s2, a) - cpow(a, -s2));
      head += cpow(static_cast<double>(m) * w1, -s1) * inner;
    }
    // m > m_cut: asymptotic expansion of the inner sum in 1/(m rho).
    auto Z = [&](Complex w) { return hurwitz_zeta_shifted(w, static_cast<double>(m_cut + 1)); };
    const Complex pre = cpow(w1, -s1) * w2s;
    Complex tail = cpow(rho, 1.0 - s2) / (s2 - 1.0) * Z(s1 + s2 - 1.0) - 0.5 * cpow(rho, -s2) * Z(s1 + s2);
    Complex poch = s2;
    Complex rp = cpow(rho, -s2 - 1.0);
    const Complex inv_rho2 = 1.0 / (rho * rho);
    int small = 0;
    for (int k = 1; k <= kMaxBernoulli; ++k) {
      const Complex term = static_cast<double>(bernoulli_ratio(k)) * poch * rp *
                           Z(s1 + s2 + static_cast<double>(2 * k - 1));
      tail += term;
      if (std::abs(term) <= 1e-18 * std::abs(tail)) {
        if (++small >= 2) break;
      } else {
        small = 0;
      }
      poch *= (s2 + static_cast<double>(2 * k - 1)) * (s2 + static_cast<double>(2 * k));
      rp *= inv_rho2;
    }
    SeriesValue out;
    out.value = head + pre * tail;
    out.error = 1e-14 * (std::abs(head) + std::abs(pre * tail));
    out.terms = m_cut;
    out.route = "m-outer+euler-maclaurin";
    return out;
  });
}

SeriesValue double_L_direct(const EvalPoint& s, std::span<const Complex> a1,
                            std::span<const Complex> a2, Complex w1, Complex w2) {
  return guarded([&]() -> SeriesValue {
    if (a1.size() != a2.size()) throw Refusal("period mismatch between a1 and a2");
    check_right_half(w1, "omega1");
    check_right_half(w2, "omega2");
    const auto region = convergence_region(s, 1.0);
    if (!region.inside) throw Refusal(region.violated);
    const int f = static_cast<int>(a1.size());
    const Complex fw1 = static_cast<double>(f) * w1;
    DoubleSeriesParams p;
    p.seq = CoefficientSequence::periodic(std::vector<Complex>(a2.begin(), a2.end()));
    p.omega = w2 / fw1;
    p.kappa_override = 1.0;
    SeriesValue out;
    for (int nu = 1; nu <= f; ++nu) {
      if (a1[nu - 1] == Complex{}) continue;
      p.alpha = static_cast<double>(nu) / f;
      auto v = L2_direct(s, p);
      if (!v.ok()) return v;
      out.value += a1[nu - 1] * v.value;
      out.error += std::abs(a1[nu - 1]) * v.error;
      out.terms += v.terms;
    }
    const Complex scale = cpow(fw1, -s.sum());
    out.value *= scale;
    out.error *= std::abs(scale);
    out.route = "residue-classes+L2";
    return out;
  });
}

SeriesValue zeta2_hl_two_omega(const EvalPoint& s, double alpha, double beta, Complex w1, Complex w2) {
  return guarded([&]() -> SeriesValue {
    check_right_half(w1, "omega1");
    check_right_half(w2, "omega2");
    if (!(beta >= 0.0 && beta <= 1.0)) throw Refusal("0 <= beta <= 1 violated");
    DoubleSeriesParams p;
    p.alpha = alpha;
    p.beta = beta;
    p.omega = w2 / w1;
    p.seq = CoefficientSequence::exponential(beta);
    auto v = L2_direct(s, p);
    if (!v.ok()) return v;
    const Complex scale = cpow(w1, -s.sum());
    v.value *= scale;
    v.error *= std::abs(scale);
    return v;
  });
}

std::vector<Zeta2Instance> decompose_periodic(std::span<const Complex> a1,
                                              std::span<const Complex> a2, Complex w1, Complex w2) {
  if (a1.size() != a2.size()) throw Refusal("period mismatch between a1 and a2");
  const int f = static_cast<int>(a1.size());
  const auto hat2 = finite_fourier(a2);
  std::vector<Zeta2Instance> out;
  out.reserve(static_cast<std::size_t>(f) * f);
  for (int nu = 1; nu <= f; ++nu) {
    for (int mu = 1; mu <= f; ++mu) {
      out.push_back({a1[nu - 1] * hat2[mu - 1], static_cast<double>(nu) / f,
                     static_cast<double>(mu) / f, static_cast<double>(f) * w1, w2});
    }
  }
  return out;
}

}  // namespace dzeta
