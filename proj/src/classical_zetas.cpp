#include "dzeta/classical_zetas.hpp"

#include <array>
#include <cmath>

#include "dzeta/quadrature.hpp"
#include "dzeta/special_functions.hpp"

namespace dzeta {

namespace {

using LComplex = std::complex<long double>;

constexpr double kPoleRadius = 1e-6;

const std::array<long double, kMaxBernoulli + 1>& bernoulli_table() {
  // B_{2k}/(2k)! = (-1)^{k+1} 2 zeta(2k) / (2 pi)^{2k}
  static const std::array<long double, kMaxBernoulli + 1> table = [] {
    std::array<long double, kMaxBernoulli + 1> t{};
    const long double pi = 3.141592653589793238462643383279502884L;
    const long double two_pi = 2.0L * pi;
    for (int k = 1; k <= kMaxBernoulli; ++k) {
      const int e = 2 * k;
      long double z;
      switch (k) {
        case 1: z = pi * pi / 6.0L; break;
        case 2: z = std::pow(pi, 4) / 90.0L; break;
        case 3: z = std::pow(pi, 6) / 945.0L; break;
        case 4: z = std::pow(pi, 8) / 9450.0L; break;
        default: {
          z = 0.0L;
          for (int n = 40; n >= 1; --n) z += std::pow(static_cast<long double>(n), -e);
          const long double x = 41.0L;
          z += std::pow(x, 1 - e) / (e - 1) + 0.5L * std::pow(x, -e);
        }
      }
      const long double sign = (k % 2 == 1) ? 1.0L : -1.0L;
      t[k] = sign * 2.0L * z / std::pow(two_pi, e);
    }
    return t;
  }();
  return table;
}

LComplex to_l(Complex z) { return {static_cast<long double>(z.real()), static_cast<long double>(z.imag())}; }
Complex from_l(LComplex z) { return {static_cast<double>(z.real()), static_cast<double>(z.imag())}; }

// x^{-s} for real x > 0.
LComplex lpow_neg(long double x, LComplex s) { return std::exp(-s * std::log(x)); }

void check_pole_one(Complex s, const char* what) {
  if (std::abs(s - 1.0) < kPoleRadius) {
    throw Refusal(std::string(what) + " has a pole at s = 1 (|s - 1| < 1e-6)", Status::pole);
  }
}

// Euler-Maclaurin for sum_{n>=0} (n + a)^{-s}, a > 0, any s != 1.
Complex hurwitz_em(Complex s_in, double a) {
  const LComplex s = to_l(s_in);
  const double abs_s = std::abs(s_in);
  long n_cut = static_cast<long>(std::ceil((abs_s + 60.0) / kPi - a));
  n_cut = std::max(n_cut, 0L);
  LComplex sum{};
  for (long n = n_cut - 1; n >= 0; --n) sum += lpow_neg(static_cast<long double>(n) + a, s);
  const long double x = static_cast<long double>(n_cut) + a;
  const LComplex xs = lpow_neg(x, s);
  sum += xs * x / (s - 1.0L) + 0.5L * xs;
  LComplex poch = s;
  LComplex xp = xs / x;
  const long double inv_x2 = 1.0L / (x * x);
  int small = 0;
  for (int k = 1; k <= kMaxBernoulli; ++k) {
    const LComplex term = bernoulli_table()[k] * poch * xp;
    sum += term;
    if (std::abs(term) <= 1e-21L * std::abs(sum)) {
      if (++small >= 2) break;
    } else {
      small = 0;
    }
    poch *= (s + static_cast<long double>(2 * k - 1)) * (s + static_cast<long double>(2 * k));
    xp *= inv_x2;
  }
  return from_l(sum);
}

// Euler-Maclaurin for sum_{n>=n_start} e^{i theta n} n^{-s}, 0 < |theta| <= pi.
Complex lerch_em(Complex s_in, double theta, long n_start = 1) {
  const LComplex s = to_l(s_in);
  constexpr int kTerms = 40;
  const long n_cut = std::max(
      n_start, static_cast<long>(std::ceil(2.0 * (std::abs(s_in) + 2.0 * kTerms) + 10.0)));
  LComplex sum{};
  for (long n = n_cut - 1; n >= n_start; --n) {
    const long double ph = static_cast<long double>(theta) * static_cast<long double>(n);
    sum += std::polar(1.0L, ph) * lpow_neg(static_cast<long double>(n), s);
  }
  const long double N = static_cast<long double>(n_cut);
  const long double th = theta;
  const LComplex phase = std::polar(1.0L, th * N);
  const LComplex base = phase * lpow_neg(N, s);  // g(N)

  // Integral over [N, inf) along N + i sgn(theta) u.
  const double sg = theta > 0 ? 1.0 : -1.0;
  const double abs_th = std::fabs(theta);
  auto integrand = [&](double u, double) -> Complex {
    const Complex z{static_cast<double>(N), sg * u};
    return std::exp(-abs_th * u - s_in * std::log(z));
  };
  quad::HalfLineOptions opt;
  opt.scale = 1.0 / abs_th;
  opt.rel_tol = 1e-16;
  opt.max_level = 10;
  const auto q = quad::integrate_half_line(integrand, opt);
  const LComplex integral = LComplex{0.0L, static_cast<long double>(sg)} * phase * to_l(q.value);

  // Derivatives g^{(j)}(N) = g(N) sum_r C(j,r) (i theta)^{j-r} (-1)^r (s)_r N^{-r}.
  const int jmax = 2 * kTerms - 1;
  std::vector<LComplex> d(jmax + 1);
  d[0] = 1.0L;
  for (int r = 1; r <= jmax; ++r) d[r] = -d[r - 1] * (s + static_cast<long double>(r - 1)) / N;
  const LComplex ith{0.0L, th};
  std::vector<LComplex> ith_pow(jmax + 1);
  ith_pow[0] = 1.0L;
  for (int r = 1; r <= jmax; ++r) ith_pow[r] = ith_pow[r - 1] * ith;

  LComplex tail = integral + 0.5L * base;
  std::vector<long double> binom(jmax + 1);
  int small = 0;
  for (int k = 1; k <= kTerms; ++k) {
    const int j = 2 * k - 1;
    // binomial row j
    binom[0] = 1.0L;
    for (int r = 1; r <= j; ++r) binom[r] = binom[r - 1] * static_cast<long double>(j - r + 1) / r;
    LComplex deriv{};
    for (int r = 0; r <= j; ++r) deriv += binom[r] * ith_pow[j - r] * d[r];
    const LComplex term = bernoulli_table()[k] * base * deriv;
    tail -= term;
    if (std::abs(term) <= 1e-21L * std::abs(sum + tail)) {
      if (++small >= 2) break;
    } else {
      small = 0;
    }
  }
  return from_l(sum + tail);
}

Complex riemann_fe_left(Complex s) {
  // zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)
  return cpow(2.0, s) * cpow(kPi, s - 1.0) * sin_pi(0.5 * s) * gamma(1.0 - s) *
         riemann_zeta(1.0 - s);
}

}  // namespace

long double bernoulli_ratio(int k) {
  if (k < 1 || k > kMaxBernoulli) throw std::domain_error("bernoulli_ratio index out of range");
  return bernoulli_table()[k];
}

const char* to_string(ContinuationKind k) {
  switch (k) {
    case ContinuationKind::euler_maclaurin: return "euler-maclaurin";
    case ContinuationKind::hurwitz_decomposition: return "hurwitz-decomposition";
    case ContinuationKind::completed_integral: return "completed-integral";
    case ContinuationKind::direct_sum_only: return "direct-sum-only";
  }
  return "unknown";
}

ContinuationStrategy continuation_strategy(const CoefficientSequence& a) {
  switch (a.kind()) {
    case SequenceKind::constant:
    case SequenceKind::exponential: return {ContinuationKind::euler_maclaurin, 0, 0};
    case SequenceKind::periodic:
    case SequenceKind::character: return {ContinuationKind::hurwitz_decomposition, 0, 0};
    case SequenceKind::cusp_form: return {ContinuationKind::completed_integral, 0, 0};
    case SequenceKind::delta:
    case SequenceKind::finite: return {ContinuationKind::direct_sum_only, 0, 0};
  }
  return {};
}

Complex riemann_zeta(Complex s) {
  check_pole_one(s, "zeta");
  if (s.real() <= -3.0) return riemann_fe_left(s);
  return hurwitz_em(s, 1.0);
}

Complex hurwitz_zeta(Complex s, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw Refusal("hurwitz_zeta requires 0 < alpha <= 1 (alpha = " + std::to_string(alpha) + ")");
  }
  check_pole_one(s, "zeta(s, alpha)");
  if (alpha == 1.0) return riemann_zeta(s);
  if (s.real() <= -3.0) {
    const Complex w = 1.0 - s;
    const Complex pre = gamma(w) / (kI * cpow(kTwoPi, w));
    return pre * (std::exp(0.5 * kPi * kI * s) * lerch_phi(w, alpha) -
                  std::exp(-0.5 * kPi * kI * s) * lerch_phi(w, -alpha));
  }
  return hurwitz_em(s, alpha);
}

Complex hurwitz_zeta_shifted(Complex s, double a) {
  if (!(a > 0.0)) throw Refusal("shifted Hurwitz zeta requires a > 0");
  check_pole_one(s, "zeta(s, a)");
  if (s.real() > -3.0) return hurwitz_em(s, a);
  double frac = a - std::floor(a);
  if (frac == 0.0) frac = 1.0;
  Complex v = hurwitz_zeta(s, frac);
  for (double x = frac; x < a - 0.5; x += 1.0) v -= cpow(x, -s);
  return v;
}

Complex hurwitz_zeta_cshift(Complex s_in, Complex a_in) {
  if (!(a_in.real() > 0.0)) throw Refusal("complex-shift Hurwitz zeta requires Re a > 0");
  check_pole_one(s_in, "zeta(s, a)");
  const LComplex s = to_l(s_in);
  const LComplex a = to_l(a_in);
  long n_cut = static_cast<long>(std::ceil((std::abs(s_in) + 60.0) / kPi - a_in.real()));
  n_cut = std::max(n_cut, 0L);
  LComplex sum{};
  for (long n = n_cut - 1; n >= 0; --n) sum += std::exp(-s * std::log(a + static_cast<long double>(n)));
  const LComplex x = a + static_cast<long double>(n_cut);
  const LComplex lx = std::log(x);
  const LComplex xs = std::exp(-s * lx);
  sum += xs * x / (s - 1.0L) + 0.5L * xs;
  LComplex poch = s;
  LComplex xp = xs / x;
  const LComplex inv_x2 = 1.0L / (x * x);
  int small = 0;
  for (int k = 1; k <= kMaxBernoulli; ++k) {
    const LComplex term = bernoulli_table()[k] * poch * xp;
    sum += term;
    if (std::abs(term) <= 1e-21L * std::abs(sum)) {
      if (++small >= 2) break;
    } else {
      small = 0;
    }
    poch *= (s + static_cast<long double>(2 * k - 1)) * (s + static_cast<long double>(2 * k));
    xp *= inv_x2;
  }
  return from_l(sum);
}

Complex lerch_phi(Complex s, double alpha) {
  double r = alpha - std::round(alpha);
  if (r == -0.5) r = 0.5;
  if (r == 0.0) return riemann_zeta(s);
  if (s.real() < 0.5 && std::abs(s) >= 0.3) {
    // phi(w, a) = Gamma(1-w) (2 pi)^{w-1} [e^{pi i (1-w)/2} zeta(1-w, a) + e^{-pi i (1-w)/2} zeta(1-w, 1-a)]
    const double a = r < 0.0 ? r + 1.0 : r;
    const Complex v = 1.0 - s;
    const Complex e = std::exp(0.5 * kPi * kI * v);
    return gamma(v) * cpow(kTwoPi, -v) *
           (e * hurwitz_zeta(v, a) + hurwitz_zeta(v, 1.0 - a) / e);
  }
  return lerch_em(s, kTwoPi * r);
}

Complex lerch_tail(Complex s, double alpha, long n_start) {
  if (n_start < 1) throw std::domain_error("lerch_tail needs n_start >= 1");
  double r = alpha - std::round(alpha);
  if (r == -0.5) r = 0.5;
  if (r == 0.0) return hurwitz_zeta_shifted(s, static_cast<double>(n_start));
  if (n_start == 1) return lerch_phi(s, alpha);
  if (s.real() < 0.5) {
    Complex head{};
    for (long n = 1; n < n_start; ++n) head += expi2pi(r * static_cast<double>(n)) * cpow(static_cast<double>(n), -s);
    return lerch_phi(s, alpha) - head;
  }
  return lerch_em(s, kTwoPi * r, n_start);
}

Complex periodic_tail(Complex s, std::span<const Complex> table, long n_start) {
  const long f = static_cast<long>(table.size());
  if (n_start <= 1) return periodic_L(s, table);
  Complex v{};
  for (long nu = 1; nu <= f; ++nu) {
    if (table[nu - 1] == Complex{}) continue;
    const long k0 = nu >= n_start ? 0 : (n_start - nu + f - 1) / f;
    v += table[nu - 1] * hurwitz_zeta_shifted(s, static_cast<double>(nu) / f + static_cast<double>(k0));
  }
  return cpow(static_cast<double>(f), -s) * v;
}

Complex periodic_L(Complex s, std::span<const Complex> table) {
  const int f = static_cast<int>(table.size());
  if (f < 2) throw Refusal("periodic_L requires period f >= 2");
  Complex mean{};
  for (auto v : table) mean += v;
  if (std::abs(s - 1.0) < 0.1) {
    if (std::abs(mean) > 1e-14 * f) check_pole_one(s, "L(s, a) with nonzero mean");
    // Near s = 1 use the Fourier route: L = sum_nu hat a(nu) phi(s, nu/f).
    const auto hat = finite_fourier(table);
    Complex v{};
    for (int nu = 1; nu < f; ++nu) {
      if (hat[nu - 1] != Complex{}) v += hat[nu - 1] * lerch_phi(s, static_cast<double>(nu) / f);
    }
    if (std::abs(mean) > 1e-14 * f) v += hat[f - 1] * riemann_zeta(s);
    return v;
  }
  Complex v{};
  for (int nu = 1; nu <= f; ++nu) {
    if (table[nu - 1] == Complex{}) continue;
    v += table[nu - 1] * hurwitz_zeta(s, static_cast<double>(nu) / f);
  }
  return cpow(static_cast<double>(f), -s) * v;
}

Complex cusp_q_series(const CuspForm& f, double y) {
  if (!(y > 0.0)) throw Refusal("q-expansion needs Im tau > 0");
  const double q = std::exp(-kTwoPi * y);
  const double g = 0.5 * (f.weight - 1);
  Complex sum{};
  double qn = 1.0;
  for (long n = 1; n <= f.available(); ++n) {
    qn *= q;
    sum += f.a(n) * qn;
    // |a(n)| <= d(n) n^g; d(n) <= 2 sqrt(n)
    const double bound = 2.0 * std::pow(static_cast<double>(n), g + 0.5) * qn;
    if (n > 4 && bound < 1e-18 * std::max(std::abs(sum), 1e-300)) return sum;
    if (n > 4 && bound < 1e-300) return sum;
  }
  throw Refusal("q-expansion at y = " + std::to_string(y) + " needs more than " +
                std::to_string(f.available()) + " coefficients");
}

namespace {

// int_c^inf F(iy) y^{w-1} dy with F given by coefficient accessor.
template <class Coef>
Complex half_line_mellin(Complex w, double c, int weight, long available, Coef&& coef) {
  const double g = 0.5 * (weight - 1);
  auto integrand = [&](double x, double) -> Complex {
    const double y = c + x;
    const double q = std::exp(-kTwoPi * y);
    Complex sum{};
    double qn = 1.0;
    for (long n = 1; n <= available; ++n) {
      qn *= q;
      sum += coef(n) * qn;
      if (n > 4 && 2.0 * std::pow(static_cast<double>(n), g + 0.5) * qn < 1e-18 * std::abs(sum)) break;
    }
    return sum * std::exp((w - 1.0) * std::log(y));
  };
  quad::HalfLineOptions opt;
  opt.scale = 1.0 / kTwoPi;
  opt.rel_tol = 1e-15;
  opt.max_level = 10;
  return quad::integrate_half_line(integrand, opt).value;
}

}  // namespace

Complex cusp_completed(Complex s, const CuspForm& f) {
  const double n_level = f.level;
  const double c = 1.0 / std::sqrt(n_level);
  const int k = f.weight;
  const double sign = (k / 2) % 2 == 0 ? 1.0 : -1.0;  // i^k
  const Complex first =
      half_line_mellin(s, c, k, f.available(), [&](long n) { return f.a(n); });
  const Complex second = half_line_mellin(static_cast<double>(k) - s, c, k,
                                          static_cast<long>(f.tilde_coefficients->size()),
                                          [&](long n) { return f.tilde_a(n); });
  return first + sign * cpow(n_level, 0.5 * k - s) * second;
}

namespace {

bool cusp_direct_regime(Complex s, const CuspForm& f) {
  return s.real() >= 0.5 * (f.weight + 1) + 8.0;
}

Complex cusp_direct(Complex s, const CuspForm& f) {
  const long n_max = std::min<long>(f.available(), 1000);
  Complex sum{};
  for (long n = n_max; n >= 1; --n) sum += f.a(n) * cpow(static_cast<double>(n), -s);
  return sum;
}

}  // namespace

Complex cusp_L(Complex s, const CuspForm& f) {
  if (cusp_direct_regime(s, f)) return cusp_direct(s, f);
  return cpow(kTwoPi, s) * cusp_completed(s, f) * rgamma(s);
}

SeriesValue sequence_L(Complex s, const CoefficientSequence& a) {
  return guarded([&]() -> SeriesValue {
    SeriesValue out;
    out.route = to_string(continuation_strategy(a).kind);
    switch (a.kind()) {
      case SequenceKind::constant: out.value = a.scale() * riemann_zeta(s); break;
      case SequenceKind::exponential: out.value = a.scale() * lerch_phi(s, a.beta()); break;
      case SequenceKind::periodic:
      case SequenceKind::character: out.value = periodic_L(s, a.table()); break;
      case SequenceKind::delta:
        out.value = a.scale() * cpow(static_cast<double>(a.delta_index()), -s);
        out.route = "single-term";
        break;
      case SequenceKind::cusp_form: out.value = a.scale() * cusp_L(s, a.cusp()); break;
      case SequenceKind::finite: {
        Complex v{};
        for (long n = *a.support_end(); n >= 1; --n) v += a(n) * cpow(static_cast<double>(n), -s);
        out.value = v;
        out.route = "finite-sum";
        break;
      }
    }
    out.error = 1e-13 * std::abs(out.value);
    return out;
  });
}

SeriesValue sequence_L_tail(Complex s, const CoefficientSequence& a, long n_start) {
  if (n_start <= 1) return sequence_L(s, a);
  return guarded([&]() -> SeriesValue {
    SeriesValue out;
    out.route = "tail";
    switch (a.kind()) {
      case SequenceKind::constant: out.value = a.scale() * hurwitz_zeta_shifted(s, static_cast<double>(n_start)); break;
      case SequenceKind::exponential: out.value = a.scale() * lerch_tail(s, a.beta(), n_start); break;
      case SequenceKind::periodic:
      case SequenceKind::character: out.value = periodic_tail(s, a.table(), n_start); break;
      case SequenceKind::delta:
        out.value = a.delta_index() >= n_start ? a.scale() * cpow(static_cast<double>(a.delta_index()), -s) : Complex{};
        break;
      case SequenceKind::finite: {
        Complex v{};
        for (long n = *a.support_end(); n >= n_start; --n) v += a(n) * cpow(static_cast<double>(n), -s);
        out.value = v;
        break;
      }
      case SequenceKind::cusp_form: {
        const auto& f = a.cusp();
        const double excess = s.real() - 0.5 * (f.weight + 1);
        if (excess < 8.0) {
          Complex head{};
          for (long n = 1; n < n_start; ++n) head += f.a(n) * cpow(static_cast<double>(n), -s);
          out.value = a.scale() * (cusp_L(s, f) - head);
        } else {
          // Terms decay like n^{-excess}.
          Complex v{};
          const long n_end = std::min<long>(f.available(), n_start * 40);
          for (long n = n_end; n >= n_start; --n) v += f.a(n) * cpow(static_cast<double>(n), -s);
          out.value = a.scale() * v;
        }
        break;
      }
    }
    out.error = 1e-13 * std::abs(out.value);
    return out;
  });
}

SeriesValue gamma_times_L(Complex s, const CoefficientSequence& a) {
  return guarded([&]() -> SeriesValue {
    SeriesValue out;
    if (a.kind() == SequenceKind::cusp_form && !cusp_direct_regime(s, a.cusp())) {
      out.value = a.scale() * cpow(kTwoPi, s) * cusp_completed(s, a.cusp());
      out.route = "completed-integral";
    } else if (a.kind() == SequenceKind::constant && s.real() < 0.5) {
      // Gamma(s) zeta(s) = (2 pi)^s zeta(1-s) / (2 cos(pi s / 2))
      const Complex c = sin_pi(0.5 * (s + 1.0));
      if (std::abs(c) < 1e-10) throw Refusal("Gamma(s) zeta(s) has a pole at s = " + format_complex(s), Status::pole);
      out.value = a.scale() * cpow(kTwoPi, s) * riemann_zeta(1.0 - s) / (2.0 * c);
      out.route = "functional-equation";
    } else {
      auto l = sequence_L(s, a);
      if (!l.ok()) return l;
      out.value = gamma(s) * l.value;
      out.route = l.route;
    }
    out.error = 1e-13 * std::abs(out.value);
    return out;
  });
}

}  // namespace dzeta
