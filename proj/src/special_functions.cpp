#include "dzeta/special_functions.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "dzeta/quadrature.hpp"

namespace dzeta {

const char* to_string(Status s) {
  switch (s) {
    case Status::ok: return "ok";
    case Status::refused: return "refused";
    case Status::pole: return "pole";
    case Status::tail_too_large: return "tail_too_large";
    case Status::nonconvergent: return "nonconvergent";
  }
  return "unknown";
}

std::string format_complex(Complex z) {
  std::ostringstream os;
  os.precision(10);
  os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

double sin_pi(double x) {
  double r = x - 2.0 * std::round(0.5 * x);  // r in [-1, 1]
  if (r > 0.5) r = 1.0 - r;
  else if (r < -0.5) r = -1.0 - r;
  return std::sin(kPi * r);
}

double cos_pi(double x) {
  double r = std::fabs(x - 2.0 * std::round(0.5 * x));  // [0, 1]
  if (r == 0.5) return 0.0;
  return r < 0.5 ? std::sin(kPi * (0.5 - r)) : -std::sin(kPi * (r - 0.5));
}

Complex sin_pi(Complex z) {
  const double x = z.real();
  const double y = z.imag();
  return {sin_pi(x) * std::cosh(kPi * y), cos_pi(x) * std::sinh(kPi * y)};
}

Complex cpow(Complex base, Complex exponent) {
  if (base == Complex{}) {
    if (exponent.real() > 0.0) return {};
    if (exponent == Complex{}) return {1.0, 0.0};
    throw Refusal("power of zero with non-positive exponent", Status::pole);
  }
  // Normalize -0.0 imaginary parts so the negative real axis maps to arg = +pi.
  if (base.imag() == 0.0) base = {base.real(), 0.0};
  return std::exp(exponent * std::log(base));
}

namespace {

// B_{2k} / (2k (2k-1)), k = 1..10.
constexpr std::array<double, 10> kStirling = {
    1.0 / 12.0,         -1.0 / 360.0,         1.0 / 1260.0,     -1.0 / 1680.0,
    1.0 / 1188.0,       -691.0 / 360360.0,    1.0 / 156.0,      -3617.0 / 122400.0,
    43867.0 / 244188.0, -174611.0 / 125400.0};

// log Gamma(w) for Re w >= 20 (Stirling series).
Complex log_gamma_large(Complex w) {
  Complex r = (w - 0.5) * std::log(w) - w + 0.5 * std::log(kTwoPi);
  const Complex inv = 1.0 / w;
  const Complex inv2 = inv * inv;
  Complex p = inv;
  for (double c : kStirling) {
    r += c * p;
    p *= inv2;
  }
  return r;
}

bool is_gamma_pole(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real());
}

// Gamma for Re z >= 0.5.
Complex gamma_right(Complex z) {
  int n = 0;
  if (z.real() < 20.0) n = static_cast<int>(std::ceil(20.0 - z.real()));
  Complex prod{1.0, 0.0};
  for (int k = 0; k < n; ++k) prod *= (z + static_cast<double>(k));
  return std::exp(log_gamma_large(z + static_cast<double>(n))) / prod;
}

Complex rgamma_right(Complex z) {
  int n = 0;
  if (z.real() < 20.0) n = static_cast<int>(std::ceil(20.0 - z.real()));
  Complex prod{1.0, 0.0};
  for (int k = 0; k < n; ++k) prod *= (z + static_cast<double>(k));
  return std::exp(-log_gamma_large(z + static_cast<double>(n))) * prod;
}

}  // namespace

Complex gamma(Complex z) {
  if (is_gamma_pole(z)) {
    throw Refusal("Gamma pole at z = " + format_complex(z), Status::pole);
  }
  if (z.real() >= 0.5) return gamma_right(z);
  return kPi / (sin_pi(z) * gamma_right(1.0 - z));
}

Complex rgamma(Complex z) {
  if (z.real() >= 0.5) return rgamma_right(z);
  return sin_pi(z) * gamma_right(1.0 - z) / kPi;
}

Complex pochhammer(Complex a, int n) {
  Complex r{1.0, 0.0};
  for (int k = 0; k < n; ++k) r *= (a + static_cast<double>(k));
  return r;
}

double gamma_pole_distance(Complex z) {
  if (z.real() > 0.5) return std::abs(z);  // nearest pole is 0
  const double k = std::min(0.0, std::round(z.real()));
  return std::abs(z - Complex{k, 0.0});
}

// ---------------------------------------------------------------------------
// Psi(a, c; x)

double default_ray_angle(Complex x) {
  constexpr double delta = 0.1;
  const double lim = 0.5 * kPi - delta;
  return std::clamp(-std::arg(x), -lim, lim);
}

AsymptoticSum psi_asymptotic(Complex a, Complex c, Complex x, int terms) {
  AsymptoticSum out;
  const Complex b = a - c + 1.0;
  Complex term = cpow(x, -a);
  for (int k = 0; k < terms; ++k) {
    out.value += term;
    term *= -(a + static_cast<double>(k)) * (b + static_cast<double>(k)) /
            (static_cast<double>(k + 1) * x);
  }
  out.first_omitted = std::abs(term);
  out.terms = terms;
  return out;
}

AsymptoticSum psi_asymptotic_optimal(Complex a, Complex c, Complex x, int max_terms,
                                     double rel_tol) {
  AsymptoticSum out;
  const Complex b = a - c + 1.0;
  Complex term = cpow(x, -a);
  for (int k = 0; k < max_terms; ++k) {
    out.value += term;
    ++out.terms;
    const Complex next = term * (-(a + static_cast<double>(k)) * (b + static_cast<double>(k)) /
                                 (static_cast<double>(k + 1) * x));
    out.first_omitted = std::abs(next);
    if (out.first_omitted <= rel_tol * std::abs(out.value)) break;
    if (out.first_omitted > std::abs(term)) break;  // divergence sets in
    term = next;
  }
  return out;
}

SeriesValue psi_quadrature(Complex a, Complex c, Complex x, const PsiEvalConfig& cfg) {
  if (x == Complex{}) return SeriesValue::refused("Psi requires x != 0");
  if (!(a.real() > 0.0)) return SeriesValue::refused("ray integral requires Re a > 0");
  if (cfg.quadrature_points < 16) return SeriesValue::refused("quadrature_points >= 16 required");
  const double phi = cfg.ray_angle.value_or(default_ray_angle(x));
  if (!(std::fabs(phi) < kPi) || !(std::fabs(phi + std::arg(x)) < 0.5 * kPi)) {
    return SeriesValue::refused("no admissible ray: |phi + arg x| < pi/2 violated (arg x = " +
                                std::to_string(std::arg(x)) + ")");
  }
  const Complex rot = std::polar(1.0, phi);
  const Complex xr = x * rot;
  const Complex am1 = a - 1.0;
  const Complex cam1 = c - a - 1.0;
  auto integrand = [&](double t, double logt) -> Complex {
    return std::exp(-xr * t + am1 * logt + cam1 * std::log(1.0 + rot * t));
  };
  quad::HalfLineOptions opt;
  opt.scale = std::clamp(std::max(1.0, a.real()) / std::abs(x), 1e-6, 1e6);
  opt.rel_tol = cfg.tolerance;
  auto r = quad::integrate_half_line(integrand, opt);
  while (r.evaluations < cfg.quadrature_points && opt.max_level < 12) {
    ++opt.max_level;
    opt.rel_tol *= 0.1;
    r = quad::integrate_half_line(integrand, opt);
  }
  const Complex pref = std::exp(kI * phi * a) * rgamma(a);
  SeriesValue out;
  out.value = pref * r.value;
  out.error = std::abs(pref) * r.error;
  out.terms = r.evaluations;
  out.route = "quadrature";
  if (!r.converged && out.error > 1e-8 * std::abs(out.value)) {
    out.status = Status::nonconvergent;
    out.reason = "Psi quadrature did not converge";
  }
  return out;
}

SeriesValue psi(Complex a, Complex c, Complex x, const PsiEvalConfig& cfg) {
  if (x == Complex{}) return SeriesValue::refused("Psi requires x != 0");
  if (cfg.asymptotic_terms < 1) return SeriesValue::refused("asymptotic_terms >= 1 required");
  const double ray = cfg.ray_angle.value_or(default_ray_angle(x));
  if (!(std::fabs(ray + std::arg(x)) < 0.5 * kPi)) {
    return SeriesValue::refused("no admissible ray: |phi + arg x| < pi/2 fails for arg x = " +
                                std::to_string(std::arg(x)));
  }
  const double crossover = cfg.crossover_magnitude > 0.0
                               ? cfg.crossover_magnitude
                               : 30.0 * (1.0 + std::abs(a) + std::abs(c));
  if (std::abs(x) >= crossover) {
    auto as = psi_asymptotic_optimal(a, c, x, cfg.asymptotic_terms, 0.1 * cfg.tolerance);
    if (as.first_omitted <= cfg.tolerance * std::abs(as.value) || as.first_omitted == 0.0) {
      SeriesValue out;
      out.value = as.value;
      out.error = as.first_omitted;
      out.terms = as.terms;
      out.route = "asymptotic";
      return out;
    }
  }
  constexpr double kMinRe = 0.25;
  if (a.real() >= kMinRe) return psi_quadrature(a, c, x, cfg);

  const Complex a2 = a - c + 1.0;
  if (a2.real() >= kMinRe) {
    auto inner = psi_quadrature(a2, 2.0 - c, x, cfg);
    if (!inner.ok()) return inner;
    const Complex f = cpow(x, 1.0 - c);
    inner.value *= f;
    inner.error *= std::abs(f);
    inner.route = "kummer+quadrature";
    return inner;
  }

  // Downward three-term recurrence in a:
  // U(a-1) = -(c - 2a - x) U(a) - a (a - c + 1) U(a+1).
  const int n = static_cast<int>(std::ceil(kMinRe - a.real()));
  auto u1 = psi_quadrature(a + static_cast<double>(n), c, x, cfg);
  auto u2 = psi_quadrature(a + static_cast<double>(n + 1), c, x, cfg);
  if (!u1.ok()) return u1;
  if (!u2.ok()) return u2;
  Complex hi = u2.value, lo = u1.value;
  double err = std::max(u1.error, u2.error);
  for (int j = n; j >= 1; --j) {
    const Complex A = a + static_cast<double>(j);
    const Complex coef1 = -(c - 2.0 * A - x);
    const Complex coef2 = -A * (A - c + 1.0);
    const Complex next = coef1 * lo + coef2 * hi;
    err = std::abs(coef1) * err + std::abs(coef2) * err;
    hi = lo;
    lo = next;
  }
  SeriesValue out;
  out.value = lo;
  out.error = err;
  out.terms = u1.terms + u2.terms;
  out.route = "recurrence+quadrature";
  return out;
}

double kummer_residual(Complex a, Complex c, Complex x) {
  PsiEvalConfig left;
  PsiEvalConfig right;
  // Second side on a different admissible ray, halfway to the real axis.
  right.ray_angle = 0.5 * default_ray_angle(x);
  const Complex a2 = a - c + 1.0;
  auto lhs = (a.real() > 0.0) ? psi_quadrature(a, c, x, left) : psi(a, c, x, left);
  auto rhs = (a2.real() > 0.0) ? psi_quadrature(a2, 2.0 - c, x, right) : psi(a2, 2.0 - c, x, right);
  const Complex l = value_or_throw(lhs);
  const Complex r = cpow(x, 1.0 - c) * value_or_throw(rhs);
  return std::abs(l - r);
}

}  // namespace dzeta
