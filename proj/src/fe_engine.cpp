#include "dzeta/fe_engine.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>

#include "dzeta/classical_zetas.hpp"
#include "dzeta/double_series.hpp"
#include "dzeta/oracle_quadrature.hpp"

namespace dzeta {

namespace {

std::string num(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::string num17(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void check_omega(Complex omega) {
  if (omega == Complex{}) throw Refusal("omega must be nonzero");
  if (std::abs(std::arg(omega)) >= 0.5 * kPi)
    throw Refusal("|arg omega| < pi/2 violated: arg omega = " + num(std::arg(omega)));
}

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw Refusal("0 < alpha <= 1 violated: alpha = " + num(alpha));
}

bool is_integer(double x, double tol = 1e-12) { return std::abs(x - std::round(x)) <= tol; }

CoefficientSequence exponential_or_constant(double beta) {
  return is_integer(beta, 0.0) ? CoefficientSequence::constant() : CoefficientSequence::exponential(beta);
}

SeriesValue combine(const SeriesValue& a, const SeriesValue& b, Complex ca, Complex cb, std::string route) {
  if (!a.ok()) return a;
  if (!b.ok()) return b;
  SeriesValue out;
  out.value = ca * a.value + cb * b.value;
  out.error = std::abs(ca) * a.error + std::abs(cb) * b.error;
  out.terms = a.terms + b.terms;
  out.route = std::move(route);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Divisor-convolution coefficients

Complex DivisorFamily::operator()(long l) const {
  const auto end = seq.support_end();
  Complex v{};
  for (long n : divisors(l)) {
    if (end && n > *end) break;
    const Complex an = seq(n);
    if (an == Complex{}) continue;
    const long m = l / n;
    Complex t = an * expi2pi(phase * static_cast<double>(m));
    if (c_m != Complex{}) t *= cpow(static_cast<double>(m), c_m);
    if (c_n != Complex{}) t *= cpow(static_cast<double>(n), c_n);
    v += t;
  }
  return v;
}

double DivisorFamily::growth() const {
  if (seq.support_end()) return c_m.real();
  return std::max(c_m.real(), c_n.real() + seq.growth_exponent());
}

Complex DivisorFamily::dirichlet(Complex w) const {
  return lerch_phi(w - c_m, phase) * value_or_throw(sequence_L(w - c_n, seq));
}

Complex DivisorFamily::tail(Complex w, long l0) const {
  if (l0 <= 1) return dirichlet(w);
  // n < l0 pairs with m >= ceil(l0/n); group equal starting points.
  const auto end = seq.support_end();
  const long n_hi = end ? std::min(l0 - 1, *end) : l0 - 1;
  std::map<long, Complex> groups;
  for (long n = 1; n <= n_hi; ++n) {
    const Complex an = seq(n);
    if (an == Complex{}) continue;
    groups[(l0 + n - 1) / n] += an * cpow(static_cast<double>(n), c_n - w);
  }
  Complex total{};
  for (const auto& [m0, weight] : groups) total += weight * lerch_tail(w - c_m, phase, m0);
  if (!end || *end >= l0) total += lerch_phi(w - c_m, phase) * value_or_throw(sequence_L_tail(w - c_n, seq, l0));
  return total;
}

std::string DecayCheck::describe() const {
  return "coefficient growth minus Re a = " + num(exponent) + ", absolute convergence needs < -1";
}

DecayCheck psi_dirichlet_decay(const DivisorFamily& coef, Complex a) {
  DecayCheck d;
  d.exponent = coef.growth() - a.real();
  d.convergent = d.exponent < -1.0;
  return d;
}

SeriesValue psi_dirichlet(const DivisorFamily& coef, Complex a, Complex c, Complex x, const FSeriesOptions& opt) {
  return guarded([&]() -> SeriesValue {
    if (x == Complex{}) throw Refusal("Psi argument must be nonzero");
    const DecayCheck d = psi_dirichlet_decay(coef, a);
    if (!d.convergent && !opt.allow_continuation) throw Refusal("series diverges: " + d.describe(), Status::nonconvergent);
    const long L = std::max<long>(8, opt.L_max);

    std::vector<Complex> cl(L + 1);
    Complex direct{};
    double err = 0.0;
    long terms = 0;
    for (long l = 1; l <= L; ++l) {
      cl[l] = coef(l);
      if (cl[l] == Complex{}) continue;
      const SeriesValue p = psi(a, c, x * static_cast<double>(l), opt.psi);
      if (!p.ok()) throw Refusal("Psi at l = " + std::to_string(l) + ": " + p.reason, p.status);
      direct += cl[l] * p.value;
      err += std::abs(cl[l]) * p.error;
      ++terms;
    }

    // Tail l > L from the asymptotic expansion of Psi, term by term against
    // sum_{l>L} c(l) l^{-a-k}.
    std::vector<Complex> lw(L + 1);
    for (long l = 1; l <= L; ++l) lw[l] = cl[l] * cpow(static_cast<double>(l), -a);
    const int k_min = std::max(1, static_cast<int>(std::ceil(d.exponent + 1.0)) + 1);
    Complex pref = cpow(x, -a);
    Complex tail{};
    double prev_abs = 0.0, last_abs = 0.0;
    int small = 0, k = 0;
    for (; k < 80; ++k) {
      const Complex w = a + static_cast<double>(k);
      Complex head{};
      double head_abs = 0.0;
      for (long l = 1; l <= L; ++l) {
        head += lw[l];
        head_abs += std::abs(lw[l]);
        lw[l] /= static_cast<double>(l);
      }
      const Complex D = coef.dirichlet(w);
      Complex T = D - head;
      const double sub_err = std::abs(pref) * (1e-14 * std::abs(D) + 1e-16 * head_abs);
      if (sub_err > 1e-14 * std::max(std::abs(direct), 1e-300)) {
        T = coef.tail(w, L + 1);
        err += 1e-14 * std::abs(pref * T);
      } else {
        err += sub_err;
      }
      const Complex term = pref * T;
      tail += term;
      last_abs = std::abs(term);
      if (k >= k_min) {
        if (last_abs <= 1e-17 * std::abs(direct + tail)) {
          if (++small >= 2) break;
        } else {
          small = 0;
        }
        // asymptotic terms started growing: stop at the smallest
        if (k > k_min + 2 && last_abs > prev_abs) break;
      }
      prev_abs = last_abs;
      pref *= -(a + static_cast<double>(k)) * (a - c + 1.0 + static_cast<double>(k)) /
              (static_cast<double>(k + 1) * x);
    }
    SeriesValue out;
    out.value = direct + tail;
    out.error = err + last_abs;
    out.terms = terms + k;
    out.route = d.convergent ? "direct+tail" : "continued";
    return out;
  });
}

Complex twopi_i_omega(int sign, Complex omega) { return static_cast<double>(sign) * kTwoPi * kI * omega; }

namespace {

SeriesValue run_family(int sign, const DivisorFamily& fam, Complex a, Complex c, Complex omega,
                       const FSeriesOptions& opt, const char* name) {
  return guarded([&]() -> SeriesValue {
    if (sign != 1 && sign != -1) throw Refusal("sign must be +1 or -1");
    check_omega(omega);
    auto v = psi_dirichlet(fam, a, c, twopi_i_omega(sign, omega), opt);
    if (v.ok()) v.route = std::string(name) + ":" + v.route;
    return v;
  });
}

}  // namespace

SeriesValue F_pm(int sign, const EvalPoint& s, double alpha, Complex omega, const CoefficientSequence& seq,
                 const FSeriesOptions& opt) {
  const DivisorFamily fam{sign * alpha, Complex{}, s.sum() - 1.0, seq};
  return run_family(sign, fam, s.s2, s.sum(), omega, opt, "F");
}

SeriesValue F0_pm(int sign, const EvalPoint& s, double alpha, Complex omega, const CoefficientSequence& seq,
                  const FSeriesOptions& opt) {
  const DivisorFamily fam{sign * alpha, s.sum() - 1.0, Complex{}, seq};
  return run_family(sign, fam, s.s2, s.sum(), omega, opt, "F0");
}

SeriesValue F_sigma(int sign, const EvalPoint& s, double alpha, double beta, Complex omega,
                    const FSeriesOptions& opt) {
  const DivisorFamily fam{alpha, s.sum() - 1.0, Complex{}, exponential_or_constant(beta)};
  return run_family(sign, fam, s.s2, s.sum(), omega, opt, "F-sigma");
}

// ---------------------------------------------------------------------------
// H series

std::string HDecay::describe() const {
  return "n-exponent " + num(n_exponent) + " and m-exponent " + num(m_exponent) + ", both must be < -1";
}

HDecay H_decay(const EvalPoint& s, double kappa) {
  const double g = 0.5 * (kappa - 1.0) + CoefficientSequence::kEps;
  const double A = s.sum().real();
  const double p = std::max(s.sigma2() - 1.0, 0.0);  // Psi ~ x^{1-c} as x -> 0
  HDecay d;
  d.n_exponent = g - A;
  d.m_exponent = -A + p + std::max(0.0, g - p + 1.0);
  d.convergent = d.n_exponent < -1.0 && d.m_exponent < -1.0;
  return d;
}

SeriesValue H_pm(int sign, const EvalPoint& s, double alpha, Complex omega, const CuspForm& ftilde, int level,
                 const HOptions& opt) {
  return guarded([&]() -> SeriesValue {
    if (sign != 1 && sign != -1) throw Refusal("sign must be +1 or -1");
    check_omega(omega);
    const HDecay d = H_decay(s, ftilde.weight);
    if (!d.convergent) throw Refusal("H series diverges: " + d.describe(), Status::nonconvergent);
    const Complex a = s.sum(), c = s.s2;
    const Complex x0 = static_cast<double>(sign) * kTwoPi * kI / (static_cast<double>(level) * omega);
    std::map<std::pair<long, long>, std::pair<Complex, double>> cache;  // Psi depends on n/m only
    Complex total{}, block{};
    double err = 0.0, last_term = 0.0;
    long terms = 0;
    for (long m = 1; m <= opt.m_max; ++m) {
      const long n_end = std::min(opt.n_slope * m + opt.n_offset, ftilde.available());
      block = {};
      double edge = 0.0, block_err = 0.0;
      for (long n = 1; n <= n_end; ++n) {
        const Complex tn = ftilde.tilde_a(n);
        if (tn == Complex{}) continue;
        const long g = std::gcd(n, m);
        const auto key = std::make_pair(n / g, m / g);
        auto it = cache.find(key);
        if (it == cache.end()) {
          const SeriesValue p = psi(a, c, x0 * (static_cast<double>(key.first) / static_cast<double>(key.second)), opt.psi);
          if (!p.ok()) throw Refusal("Psi in H: " + p.reason, p.status);
          it = cache.emplace(key, std::make_pair(p.value, p.error)).first;
        }
        const Complex t = tn * it->second.first;
        block_err += std::abs(tn) * it->second.second;
        block += t;
        if (n == n_end) edge = std::abs(t) * n_end;
        ++terms;
      }
      const Complex mw = cpow(static_cast<double>(m), -a);
      block *= expi2pi(-sign * alpha * static_cast<double>(m)) * mw;
      total += block;
      last_term = std::max(last_term, edge * std::abs(mw));
      err += block_err * std::abs(mw);
    }
    SeriesValue out;
    out.value = total;
    // m beyond m_max: blocks decay like m^{m_exponent}
    out.error = err + last_term + std::abs(block) * opt.m_max / std::max(0.5, -d.m_exponent - 1.0);
    out.terms = terms;
    out.route = "double-sum";
    return out;
  });
}

// ---------------------------------------------------------------------------
// Right-hand sides

namespace {

SeriesValue thm5_additional(const EvalPoint& s, Complex omega, const CoefficientSequence& seq) {
  return guarded([&]() -> SeriesValue {
    const Complex sum = s.sum();
    auto gl = gamma_times_L(sum - 1.0, seq);
    if (!gl.ok()) return gl;
    const Complex f = gamma(1.0 - s.s1) * rgamma(s.s2) * cpow(omega, 1.0 - sum);
    SeriesValue out;
    out.value = f * gl.value;
    out.error = std::abs(f) * gl.error;
    out.route = "additional:" + gl.route;
    return out;
  });
}

SeriesValue thm5_body(const EvalPoint& s, double alpha, Complex omega, const CoefficientSequence& seq,
                      FSeriesOptions opt) {
  return guarded([&]() -> SeriesValue {
    opt.allow_continuation = true;
    const EvalPoint r = s.reflected();
    const auto fp = F_pm(+1, r, alpha, omega, seq, opt);
    const auto fm = F_pm(-1, r, alpha, omega, seq, opt);
    const Complex f = gamma(1.0 - s.s1) * cpow(omega, 1.0 - s.sum());
    return combine(fp, fm, f, f, fp.ok() ? fp.route : "");
  });
}

// Same pieces for zeta2(s; alpha, beta, omega) with divisor coefficients.
SeriesValue thm1_additional(const EvalPoint& s, double beta, Complex omega) {
  return thm5_additional(s, omega, exponential_or_constant(beta));
}

SeriesValue thm1_body(const EvalPoint& s, double alpha, double beta, Complex omega, FSeriesOptions opt) {
  return guarded([&]() -> SeriesValue {
    opt.allow_continuation = true;
    const EvalPoint r = s.reflected();
    const auto fp = F_sigma(+1, r, beta, alpha, omega, opt);
    const auto fm = F_sigma(-1, r, beta, -alpha, omega, opt);
    const Complex f = gamma(1.0 - s.s1) * cpow(omega, 1.0 - s.sum());
    return combine(fp, fm, f, f, fp.ok() ? fp.route : "");
  });
}

}  // namespace

Thm5Parts thm5_parts(const EvalPoint& s, double alpha, Complex omega, const CoefficientSequence& seq,
                     FSeriesOptions opt) {
  Thm5Parts parts;
  try {
    check_alpha(alpha);
    check_omega(omega);
  } catch (const Refusal& r) {
    parts.additional = parts.body = SeriesValue::refused(r.what(), r.status());
    return parts;
  }
  parts.additional = thm5_additional(s, omega, seq);
  parts.body = thm5_body(s, alpha, omega, seq, opt);
  return parts;
}

SeriesValue thm5_rhs(const EvalPoint& s, double alpha, Complex omega, const CoefficientSequence& seq,
                     FSeriesOptions opt) {
  const auto p = thm5_parts(s, alpha, omega, seq, opt);
  return combine(p.additional, p.body, 1.0, 1.0, "additional+" + (p.body.ok() ? p.body.route : std::string{}));
}

SeriesValue thm1_rhs(const EvalPoint& s, double alpha, double beta, Complex omega, FSeriesOptions opt) {
  return guarded([&]() -> SeriesValue {
    check_alpha(alpha);
    check_omega(omega);
    const auto add = thm1_additional(s, beta, omega);
    const auto body = thm1_body(s, alpha, beta, omega, opt);
    return combine(add, body, 1.0, 1.0, "additional+" + (body.ok() ? body.route : std::string{}));
  });
}

SeriesValue g_func(const EvalPoint& s, double alpha, double beta, Complex omega, FSeriesOptions opt) {
  return guarded([&]() -> SeriesValue {
    check_alpha(alpha);
    check_omega(omega);
    const auto seq = exponential_or_constant(beta);
    if (convergence_region(s, seq.kappa()).inside) {
      DoubleSeriesParams p;
      p.alpha = alpha;
      p.omega = omega;
      p.seq = seq;
      const auto z = L2_direct(s, p);
      const auto add = thm1_additional(s, beta, omega);
      return combine(z, add, 1.0, -1.0, "direct-minus-additional");
    }
    return thm1_body(s, alpha, beta, omega, opt);
  });
}

Complex xi_prefactor(Complex exponent, Complex w1, Complex w2, double f) {
  const Complex log_base{std::log(kTwoPi / (f * std::abs(w1 * w2))), 0.5 * kPi - std::arg(w1) - std::arg(w2)};
  return std::exp(exponent * log_base);
}

SeriesValue xi_func(const EvalPoint& s, Complex w1, Complex w2, FSeriesOptions opt) {
  return guarded([&]() -> SeriesValue {
    if (!(w1.real() > 0.0 && w2.real() > 0.0)) throw Refusal("Re omega1 > 0 and Re omega2 > 0 required");
    const Complex sum = s.sum();
    const Complex P = xi_prefactor(0.5 * (1.0 - sum), w1, w2);
    SeriesValue out;
    if (s.sigma2() > 1.0 && sum.real() > 2.0) {
      const auto z = zeta2_two_omega_direct(s, w1, w2);
      if (!z.ok()) return z;
      const auto gl = gamma_times_L(sum - 1.0, CoefficientSequence::constant());
      if (!gl.ok()) return gl;
      const Complex add = gamma(1.0 - s.s1) * gl.value / w1 * cpow(w2, 1.0 - sum);
      const Complex g2 = gamma(s.s2);
      out.value = P * (g2 * z.value - add);
      out.error = std::abs(P) * (std::abs(g2) * z.error + 1e-13 * std::abs(add));
      out.route = "direct-minus-additional";
      return out;
    }
    const auto body = thm5_body(s, 1.0, w2 / w1, CoefficientSequence::constant(), opt);
    if (!body.ok()) return body;
    const Complex f = P * gamma(s.s2) * cpow(w1, -sum);
    out.value = f * body.value;
    out.error = std::abs(f) * body.error;
    out.route = body.route;
    return out;
  });
}

SeriesValue thm6_rhs(const EvalPoint& s, double alpha, Complex omega, const CoefficientSequence& seq,
                     const HOptions& opt) {
  return guarded([&]() -> SeriesValue {
    if (seq.kind() != SequenceKind::cusp_form) throw Refusal("the H route needs a cusp form");
    check_alpha(alpha);
    check_omega(omega);
    const CuspForm& f = seq.cusp();
    const double kappa = f.weight;
    if (!(s.sigma1() < 0.0)) throw Refusal("sigma1 < 0 violated: sigma1 = " + num(s.sigma1()));
    if (!(s.sigma2() < 0.5 * (kappa - 1.0)))
      throw Refusal("sigma2 < (kappa-1)/2 violated: sigma2 = " + num(s.sigma2()));
    const EvalPoint sp{-s.s1, kappa - s.s2 + 1.0};
    const auto hp = H_pm(+1, sp, alpha, omega, f, f.level, opt);
    const auto hm = H_pm(-1, sp, alpha, omega, f, f.level, opt);
    const Complex sum = s.sum();
    const auto gl = gamma_times_L(sum - 1.0, seq);
    if (!gl.ok()) return gl;
    const Complex c = seq.scale() * cpow(kTwoPi, sum - 1.0) * std::pow(static_cast<double>(f.level), -0.5 * kappa) *
                      cpow(omega, -kappa) * gamma(kappa - sum + 1.0);
    const Complex ep = std::exp(kI * (0.5 * kPi) * (1.0 - sum));
    const Complex em = std::exp(kI * (0.5 * kPi) * (sum - 1.0));
    auto h = combine(hp, hm, c * ep, c * em, "H");
    if (!h.ok()) return h;
    const Complex wpow = cpow(omega, 1.0 - sum);
    h.value += wpow * gl.value;
    h.error += std::abs(wpow) * gl.error;
    h.route = "additional+H";
    return h;
  });
}

SeriesValue double_L_continued(const EvalPoint& s, std::span<const Complex> a1, std::span<const Complex> a2,
                               Complex w1, Complex w2, FSeriesOptions opt) {
  return guarded([&]() -> SeriesValue {
    const auto inst = decompose_periodic(a1, a2, w1, w2);
    Complex sum_a1{};
    double abs_a1 = 0.0;
    for (const Complex& v : a1) {
      sum_a1 += v;
      abs_a1 += std::abs(v);
    }
    const bool with_additional = std::abs(sum_a1) > 1e-13 * abs_a1;
    const Complex sum = s.sum();
    SeriesValue out;
    out.route = with_additional ? "decomposed:additional+F" : "decomposed:F";
    for (const auto& z : inst) {
      if (std::abs(z.weight) < 1e-15) continue;
      const Complex omega = z.omega2 / z.omega1;
      const auto seq = exponential_or_constant(z.beta);
      const Complex pre = z.weight * cpow(z.omega1, -sum);
      const auto body = thm5_body(s, z.alpha, omega, seq, opt);
      if (!body.ok()) return body;
      out.value += pre * body.value;
      out.error += std::abs(pre) * body.error;
      out.terms += body.terms;
      if (with_additional) {
        const auto add = thm5_additional(s, omega, seq);
        if (!add.ok()) return add;
        out.value += pre * add.value;
        out.error += std::abs(pre) * add.error;
      }
    }
    return out;
  });
}

// ---------------------------------------------------------------------------
// Reports

const char* to_string(TheoremId t) {
  switch (t) {
    case TheoremId::riemann: return "riemann";
    case TheoremId::hurwitz: return "hurwitz";
    case TheoremId::f_relation: return "F-relation";
    case TheoremId::t1: return "T1";
    case TheoremId::t2: return "T2";
    case TheoremId::t3: return "T3";
    case TheoremId::t4: return "T4";
    case TheoremId::t5: return "T5";
    case TheoremId::t6: return "T6";
    case TheoremId::oracle: return "oracle";
    case TheoremId::modular: return "modular";
  }
  return "?";
}

std::optional<TheoremId> parse_theorem(const std::string& s) {
  std::string l = s;
  std::transform(l.begin(), l.end(), l.begin(), [](unsigned char c) { return std::tolower(c); });
  for (TheoremId t : {TheoremId::riemann, TheoremId::hurwitz, TheoremId::f_relation, TheoremId::t1, TheoremId::t2,
                      TheoremId::t3, TheoremId::t4, TheoremId::t5, TheoremId::t6, TheoremId::oracle,
                      TheoremId::modular}) {
    std::string n = to_string(t);
    std::transform(n.begin(), n.end(), n.begin(), [](unsigned char c) { return std::tolower(c); });
    if (n == l) return t;
  }
  return std::nullopt;
}

void FEReport::finish() {
  if (status != Status::ok) {
    pass = false;
    return;
  }
  residual_abs = std::abs(lhs - rhs);
  residual_rel = residual_abs / std::max({std::abs(lhs), std::abs(rhs), 1e-300});
  pass = residual_abs <= std::max(tolerance, 10.0 * (lhs_err + rhs_err));
}

namespace {

void set_side(FEReport& r, bool left, const SeriesValue& v) {
  if (!v.ok() && r.status == Status::ok) {
    r.status = v.status;
    r.refusal_reason = std::string(left ? "lhs: " : "rhs: ") + v.reason;
  }
  (left ? r.lhs : r.rhs) = v.value;
  (left ? r.lhs_err : r.rhs_err) = v.error;
  (left ? r.lhs_route : r.rhs_route) = v.route;
}

std::string cnum(Complex z) { return format_complex(z); }

SeriesValue plain(Complex v, std::string route, double rel_err = 1e-13) {
  SeriesValue out;
  out.value = v;
  out.error = rel_err * std::abs(v);
  out.route = std::move(route);
  return out;
}

// Picks the hyperplane s1 + s2 = n from the point itself.
HyperplaneSpec hyperplane_of(const EvalPoint& s) {
  const Complex sum = s.sum();
  if (std::abs(sum.imag()) > 1e-10 || !is_integer(sum.real(), 1e-10))
    throw Refusal("s1 + s2 must be a real integer on the symmetry hyperplane, got " + cnum(sum));
  const long n = std::lround(sum.real());
  HyperplaneSpec h;
  h.odd_sum = (n % 2 != 0);
  h.k = static_cast<int>(h.odd_sum ? (n - 1) / 2 : n / 2);
  return h;
}

}  // namespace

FEReport thm4_residual(const EvalPoint& s, std::span<const Complex> a1, std::span<const Complex> a2, Complex w1,
                       Complex w2, const HyperplaneSpec& k, double tol, long L_max) {
  FEReport r;
  r.theorem = TheoremId::t4;
  r.point = s;
  r.tolerance = tol;
  r.params["hyperplane"] = cnum(k.value());
  r.params["omega1"] = cnum(w1);
  r.params["omega2"] = cnum(w2);
  try {
    if (a1.size() != a2.size() || a1.size() < 2) throw Refusal("a1 and a2 need the same period f >= 2");
    const auto p1 = parity(a1), p2 = parity(a2);
    if (!p1 || !p2) throw Refusal("a1 and a2 must each be even or odd: a(f-m) = +-a(m)");
    const int lambda = *p1 * *p2;
    if ((lambda == 1) != k.odd_sum)
      throw Refusal(lambda == 1 ? "parity product +1 needs s1 + s2 = 2k+1" : "parity product -1 needs s1 + s2 = 2k");
    if (std::abs(s.sum() - k.value()) > 1e-10)
      throw Refusal("point is off the hyperplane s1 + s2 = " + cnum(k.value()));
    if (!(w1.real() > 0.0 && w2.real() > 0.0)) throw Refusal("Re omega1 > 0 and Re omega2 > 0 required");

    const double f = static_cast<double>(a1.size());
    const auto h1 = finite_fourier(a1), h2 = finite_fourier(a2);
    Complex sum_a1{}, sum_h2{};
    double abs_a1 = 0.0, abs_h2 = 0.0;
    for (std::size_t i = 0; i < a1.size(); ++i) {
      sum_a1 += a1[i];
      abs_a1 += std::abs(a1[i]);
      sum_h2 += h2[i];
      abs_h2 += std::abs(h2[i]);
    }
    const bool vanish1 = std::abs(sum_a1) <= 1e-13 * abs_a1;
    const bool vanish2 = std::abs(sum_h2) <= 1e-13 * abs_h2;
    r.params["additional_terms"] = (vanish1 && vanish2) ? "vanish" : "present";

    FSeriesOptions lopt, ropt;
    lopt.L_max = L_max;
    ropt.L_max = static_cast<long>(std::lround(1.37 * L_max));
    const Complex sum = s.sum();
    const Complex P = xi_prefactor(0.5 * (1.0 - sum), w1, w2, f);
    const Complex Pinv = xi_prefactor(0.5 * (sum - 1.0), w1, w2, f);

    // left side
    const bool in_region = s.sigma2() > 1.0 && sum.real() > 2.0;
    SeriesValue L2 = in_region ? double_L_direct(s, a1, a2, w1, w2) : double_L_continued(s, a1, a2, w1, w2, lopt);
    if (!L2.ok()) throw Refusal(L2.reason, L2.status);
    Complex lhs = gamma(s.s2) * L2.value;
    double lerr = std::abs(gamma(s.s2)) * L2.error;
    if (!vanish1) {
      const auto lv = gamma_times_L(sum - 1.0, CoefficientSequence::periodic({a2.begin(), a2.end()}));
      if (!lv.ok()) throw Refusal(lv.reason, lv.status);
      const Complex add = cpow(w2, 1.0 - sum) / (f * w1) * gamma(1.0 - s.s1) * lv.value * sum_a1;
      lhs -= add;
      lerr += 1e-13 * std::abs(add);
    }
    r.lhs = P * lhs;
    r.lhs_err = std::abs(P) * lerr;
    r.lhs_route = in_region ? "direct" : L2.route;

    // right side at the dual point with the transformed tables swapped
    const EvalPoint d = s.reflected();
    const SeriesValue R2 = double_L_continued(d, h2, h1, w1, w2, ropt);
    if (!R2.ok()) throw Refusal(R2.reason, R2.status);
    Complex rhs = gamma(1.0 - s.s1) * R2.value;
    double rerr = std::abs(gamma(1.0 - s.s1)) * R2.error;
    if (!vanish2) {
      const auto lv = gamma_times_L(1.0 - sum, CoefficientSequence::periodic(h1));
      if (!lv.ok()) throw Refusal(lv.reason, lv.status);
      const Complex add = cpow(w2, sum - 1.0) / (f * w1) * gamma(s.s2) * lv.value * sum_h2;
      rhs -= add;
      rerr += 1e-13 * std::abs(add);
    }
    // The two sides differ by lambda(a1) f as printed; the dual side carries it.
    const double norm = *p1 * f;
    r.params["dual_factor"] = num(norm);
    r.rhs = norm * Pinv * rhs;
    r.rhs_err = std::abs(norm * Pinv) * rerr;
    r.rhs_route = R2.route;
  } catch (const Refusal& e) {
    r.status = e.status();
    r.refusal_reason = e.what();
  } catch (const std::domain_error& e) {
    r.status = Status::refused;
    r.refusal_reason = e.what();
  }
  r.finish();
  return r;
}

FEReport verify(TheoremId theorem, const EvalPoint& s, const FEParams& p) {
  if (theorem == TheoremId::t4) {
    FEReport r;
    try {
      r = thm4_residual(s, p.a1, p.a2, p.omega1, p.omega2, hyperplane_of(s), p.tolerance, p.L_max);
    } catch (const Refusal& e) {
      r.theorem = TheoremId::t4;
      r.point = s;
      r.tolerance = p.tolerance;
      r.status = e.status();
      r.refusal_reason = e.what();
      r.finish();
    }
    return r;
  }

  FEReport r;
  r.theorem = theorem;
  r.point = s;
  r.tolerance = p.tolerance;
  FSeriesOptions lopt, ropt;
  lopt.L_max = p.L_max;
  ropt.L_max = static_cast<long>(std::lround(1.37 * p.L_max));
  const Complex sum = s.sum();

  auto put = [&](const char* k, const std::string& v) { r.params[k] = v; };

  try {
    switch (theorem) {
      case TheoremId::riemann: {
        const Complex z = s.s1;
        put("s", cnum(z));
        const auto side = [](Complex w) {
          return cpow(kPi, -0.5 * w) * gamma(0.5 * w) * riemann_zeta(w);
        };
        set_side(r, true, plain(side(z), "euler-maclaurin"));
        set_side(r, false, plain(side(1.0 - z), "euler-maclaurin"));
        break;
      }
      case TheoremId::hurwitz: {
        const Complex z = s.s1;
        check_alpha(p.alpha);
        put("s", cnum(z));
        put("alpha", num17(p.alpha));
        set_side(r, true, plain(hurwitz_zeta(z, p.alpha), "hurwitz"));
        const Complex w = 1.0 - z;
        const Complex v = gamma(w) / (kI * cpow(kTwoPi, w)) *
                          (std::exp(kI * (0.5 * kPi) * z) * lerch_phi(w, p.alpha) -
                           std::exp(-kI * (0.5 * kPi) * z) * lerch_phi(w, -p.alpha));
        set_side(r, false, plain(v, "lerch"));
        break;
      }
      case TheoremId::f_relation: {
        put("alpha", num17(p.alpha));
        put("omega", cnum(p.omega));
        put("sign", std::to_string(p.sign));
        const Complex x = twopi_i_omega(p.sign, p.omega);
        if (p.sigma_form) {
          put("beta", num17(p.beta));
          put("coefficients", "divisor");
          set_side(r, true, F_sigma(p.sign, s.reflected(), p.beta, p.alpha, p.omega, lopt));
          auto rv = F_sigma(p.sign, s, p.alpha, p.beta, p.omega, ropt);
          if (rv.ok()) {
            const Complex f = cpow(x, sum - 1.0);
            rv.value *= f;
            rv.error *= std::abs(f);
          }
          set_side(r, false, rv);
        } else {
          put("sequence", p.seq.describe());
          set_side(r, true, F0_pm(p.sign, s, p.alpha, p.omega, p.seq, lopt));
          auto rv = F_pm(p.sign, s.reflected(), p.alpha, p.omega, p.seq, ropt);
          if (rv.ok()) {
            const Complex f = cpow(x, 1.0 - sum);
            rv.value *= f;
            rv.error *= std::abs(f);
          }
          set_side(r, false, rv);
        }
        break;
      }
      case TheoremId::t1: {
        put("alpha", num17(p.alpha));
        put("beta", num17(p.beta));
        put("omega", cnum(p.omega));
        const auto seq = exponential_or_constant(p.beta);
        if (convergence_region(s, seq.kappa()).inside) {
          DoubleSeriesParams dp;
          dp.alpha = p.alpha;
          dp.omega = p.omega;
          dp.seq = seq;
          set_side(r, true, L2_direct(s, dp));
        } else {
          set_side(r, true, thm5_rhs(s, p.alpha, p.omega, seq, lopt));
        }
        set_side(r, false, thm1_rhs(s, p.alpha, p.beta, p.omega, ropt));
        break;
      }
      case TheoremId::t2: {
        put("alpha", num17(p.alpha));
        put("beta", num17(p.beta));
        put("omega", cnum(p.omega));
        check_alpha(p.alpha);
        check_omega(p.omega);
        const bool symmetric = p.alpha == 1.0 && p.beta == 1.0;
        if (!symmetric && !(p.beta >= 0.0 && p.beta < 1.0))
          throw Refusal("0 <= beta < 1 violated: beta = " + num(p.beta));
        put("form", symmetric ? "alpha=beta=1" : "general");
        auto lv = g_func(s, p.alpha, p.beta, p.omega, lopt);
        if (lv.ok()) {
          const Complex f = cpow(kTwoPi, 1.0 - sum) * rgamma(1.0 - s.s1);
          lv.value *= f;
          lv.error *= std::abs(f);
        }
        set_side(r, true, lv);
        FSeriesOptions fopt = ropt;
        fopt.allow_continuation = true;
        const EvalPoint d = s.reflected();
        SeriesValue rv;
        const Complex gpre = cpow(kI * p.omega, 1.0 - sum) * rgamma(s.s2);
        if (symmetric) {
          const auto gd = g_func(d, 1.0, 1.0, p.omega, ropt);
          const auto fp = F_sigma(+1, s, 1.0, 1.0, p.omega, fopt);
          rv = combine(gd, fp, gpre, 2.0 * kI * sin_pi(0.5 * (sum - 1.0)), "g+F");
        } else {
          const auto gd = g_func(d, 1.0 - p.beta, 1.0 - p.alpha, p.omega, ropt);
          const auto f1 = F_sigma(+1, s, p.alpha, p.beta, p.omega, fopt);
          const auto f2 = F_sigma(+1, s, 1.0 - p.alpha, 1.0 - p.beta, p.omega, fopt);
          const auto ff = combine(f1, f2, std::exp(kI * (0.5 * kPi) * (sum - 1.0)),
                                  -std::exp(kI * (0.5 * kPi) * (1.0 - sum)), "F");
          rv = combine(gd, ff, gpre, 1.0, "g+F");
        }
        set_side(r, false, rv);
        break;
      }
      case TheoremId::t3: {
        put("omega1", cnum(p.omega1));
        put("omega2", cnum(p.omega2));
        const auto h = hyperplane_of(s);
        if (!h.odd_sum || h.k == 0) throw Refusal("symmetry needs s1 + s2 = 2k+1 with k != 0");
        put("hyperplane", cnum(h.value()));
        set_side(r, true, xi_func(s, p.omega1, p.omega2, lopt));
        set_side(r, false, xi_func(s.reflected(), p.omega1, p.omega2, ropt));
        break;
      }
      case TheoremId::t5: {
        put("alpha", num17(p.alpha));
        put("omega", cnum(p.omega));
        put("sequence", p.seq.describe());
        DoubleSeriesParams dp;
        dp.alpha = p.alpha;
        dp.omega = p.omega;
        dp.seq = p.seq;
        set_side(r, true, L2_direct(s, dp));
        set_side(r, false, thm5_rhs(s, p.alpha, p.omega, p.seq, ropt));
        break;
      }
      case TheoremId::t6: {
        put("alpha", num17(p.alpha));
        put("omega", cnum(p.omega));
        put("sequence", p.seq.describe());
        set_side(r, true, thm5_rhs(s, p.alpha, p.omega, p.seq, lopt));
        auto rv = thm6_rhs(s, p.alpha, p.omega, p.seq);
        if (rv.ok()) {
          const Complex f = gamma(1.0 - s.s1) * rgamma(s.s2);
          rv.value *= f;
          rv.error *= std::abs(f);
        }
        set_side(r, false, rv);
        break;
      }
      case TheoremId::oracle: {
        put("alpha", num17(p.alpha));
        put("omega", cnum(p.omega));
        put("sequence", p.seq.describe());
        DoubleSeriesParams dp;
        dp.alpha = p.alpha;
        dp.omega = p.omega;
        dp.seq = p.seq;
        set_side(r, true, L2_direct(s, dp));
        set_side(r, false, lambda_L2(s, p.alpha, p.omega, p.seq));
        break;
      }
      case TheoremId::modular: {
        if (p.seq.kind() != SequenceKind::cusp_form) throw Refusal("modular residual needs a cusp form");
        put("tau", cnum(p.tau));
        const CuspForm& f = p.seq.cusp();
        const double N = f.level;
        set_side(r, true, plain(cpow(std::sqrt(N) * p.tau, -static_cast<double>(f.weight)) *
                                    cusp_form_eval(-1.0 / (N * p.tau), f), "q-expansion", 1e-15));
        set_side(r, false, plain(cusp_form_eval(p.tau, f, true), "q-expansion", 1e-15));
        break;
      }
      case TheoremId::t4:
        break;
    }
  } catch (const Refusal& e) {
    r.status = e.status();
    r.refusal_reason = e.what();
  } catch (const std::domain_error& e) {
    r.status = Status::refused;
    r.refusal_reason = e.what();
  }
  r.finish();
  return r;
}

}  // namespace dzeta
