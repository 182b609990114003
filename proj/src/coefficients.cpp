#include "dzeta/coefficients.hpp"

#include <cmath>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "dzeta/special_functions.hpp"

namespace dzeta {

Complex expi2pi(double x) {
  const double r = x - std::round(x);
  return {cos_pi(2.0 * r), sin_pi(2.0 * r)};
}

// ---------------------------------------------------------------------------
// Divisors

namespace {

constexpr long kDivisorTableSize = 1L << 16;

const std::vector<std::vector<long>>& divisor_table() {
  static const std::vector<std::vector<long>> table = [] {
    std::vector<std::vector<long>> t(kDivisorTableSize + 1);
    for (long d = 1; d <= kDivisorTableSize; ++d) {
      for (long m = d; m <= kDivisorTableSize; m += d) t[m].push_back(d);
    }
    return t;
  }();
  return table;
}

}  // namespace

std::vector<long> divisors(long l) {
  if (l < 1) throw std::domain_error("divisors: l >= 1 required");
  if (l <= kDivisorTableSize) return divisor_table()[l];
  std::vector<long> lo, hi;
  for (long d = 1; d * d <= l; ++d) {
    if (l % d == 0) {
      lo.push_back(d);
      if (d != l / d) hi.push_back(l / d);
    }
  }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

int divisor_count(long l) { return static_cast<int>(divisors(l).size()); }

// ---------------------------------------------------------------------------
// Ramanujan tau

namespace {

using i128 = __int128;

// Coefficients of prod_{n>=1} (1 - q^n)^24 up to q^{len-1}, via
// prod (1 - q^n)^3 = sum_k (-1)^k (2k+1) q^{k(k+1)/2} and three squarings.
std::vector<i128> eta24_series(int len) {
  std::vector<i128> p(len, 0);
  for (long k = 0;; ++k) {
    const long e = k * (k + 1) / 2;
    if (e >= len) break;
    p[e] = (k % 2 == 0 ? 1 : -1) * static_cast<i128>(2 * k + 1);
  }
  auto square = [len](const std::vector<i128>& x) {
    std::vector<i128> y(len, 0);
    for (int i = 0; i < len; ++i) {
      if (x[i] == 0) continue;
      for (int j = 0; i + j < len; ++j) y[i + j] += x[i] * x[j];
    }
    return y;
  };
  return square(square(square(p)));
}

std::mutex g_tau_mutex;
std::shared_ptr<const std::vector<i128>> g_tau_cache;

std::shared_ptr<const std::vector<i128>> tau_series(int n_max) {
  std::lock_guard lock(g_tau_mutex);
  if (!g_tau_cache || static_cast<int>(g_tau_cache->size()) < n_max) {
    g_tau_cache = std::make_shared<const std::vector<i128>>(eta24_series(n_max));
  }
  return g_tau_cache;
}

}  // namespace

std::vector<std::int64_t> ramanujan_tau(int n_max) {
  if (n_max < 1) throw std::domain_error("ramanujan_tau: N_max >= 1 required");
  const auto series = tau_series(n_max);
  std::vector<std::int64_t> out(n_max);
  for (int n = 1; n <= n_max; ++n) {
    const i128 v = (*series)[n - 1];
    if (v > INT64_MAX || v < INT64_MIN) {
      throw std::overflow_error("tau(" + std::to_string(n) + ") exceeds int64");
    }
    out[n - 1] = static_cast<std::int64_t>(v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cusp forms

Complex CuspForm::a(long n) const {
  if (n < 1) return {};
  if (n > available()) {
    throw Refusal("cusp form coefficient a(" + std::to_string(n) + ") not available (have " +
                  std::to_string(available()) + ")");
  }
  return (*coefficients)[n - 1];
}

Complex CuspForm::tilde_a(long n) const {
  if (n < 1) return {};
  if (n > static_cast<long>(tilde_coefficients->size())) {
    throw Refusal("tilde coefficient ~a(" + std::to_string(n) + ") not available");
  }
  return (*tilde_coefficients)[n - 1];
}

std::shared_ptr<const CuspForm> delta_form(int n_max) {
  static std::mutex m;
  static std::shared_ptr<const CuspForm> cached;
  std::lock_guard lock(m);
  if (!cached || cached->available() < n_max) {
    const auto series = tau_series(n_max);
    auto coeffs = std::make_shared<std::vector<Complex>>(n_max);
    for (int n = 0; n < n_max; ++n) (*coeffs)[n] = static_cast<double>((*series)[n]);
    auto f = std::make_shared<CuspForm>();
    f->weight = 12;
    f->level = 1;
    f->coefficients = coeffs;
    f->tilde_coefficients = coeffs;
    cached = f;
  }
  return cached;
}

std::shared_ptr<const CuspForm> make_cusp_form(int weight, int level, std::vector<Complex> a,
                                               std::vector<Complex> tilde_a) {
  if (weight < 2 || weight % 2 != 0) throw std::domain_error("cusp form weight must be even and >= 2");
  if (level < 1) throw std::domain_error("cusp form level must be >= 1");
  auto f = std::make_shared<CuspForm>();
  f->weight = weight;
  f->level = level;
  f->coefficients = std::make_shared<const std::vector<Complex>>(std::move(a));
  if (tilde_a.empty()) {
    if (level != 1) throw std::domain_error("level N > 1 requires user-supplied tilde coefficients");
    f->tilde_coefficients = f->coefficients;
  } else {
    f->tilde_coefficients = std::make_shared<const std::vector<Complex>>(std::move(tilde_a));
  }
  return f;
}

// ---------------------------------------------------------------------------
// Dirichlet characters

Complex DirichletCharacter::operator()(long m) const {
  long r = m % modulus;
  if (r <= 0) r += modulus;
  return table[r - 1];
}

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int primitive_root(int p) {
  for (int g = 2; g < p; ++g) {
    int x = 1, order = 0;
    do {
      x = x * g % p;
      ++order;
    } while (x != 1);
    if (order == p - 1) return g;
  }
  return 1;
}

}  // namespace

std::vector<DirichletCharacter> dirichlet_characters(int f) {
  std::vector<DirichletCharacter> out;
  if (f == 4) {
    for (int j = 0; j < 2; ++j) {
      DirichletCharacter chi{4, j, {1.0, 0.0, j == 0 ? 1.0 : -1.0, 0.0}, j == 1};
      out.push_back(chi);
    }
    return out;
  }
  if (!is_prime(f) || f == 2) {
    throw std::domain_error("characters are generated for f = 4 and odd primes only");
  }
  const int g = primitive_root(f);
  std::vector<int> dlog(f, -1);
  for (int k = 0, x = 1; k < f - 1; ++k, x = x * g % f) dlog[x] = k;
  for (int j = 0; j < f - 1; ++j) {
    DirichletCharacter chi;
    chi.modulus = f;
    chi.index = j;
    chi.primitive = j != 0;
    chi.table.assign(f, Complex{});
    for (int m = 1; m < f; ++m) {
      chi.table[m - 1] = expi2pi(static_cast<double>(j * dlog[m] % (f - 1)) / (f - 1));
    }
    out.push_back(std::move(chi));
  }
  return out;
}

DirichletCharacter dirichlet_character(int f, int index) {
  auto all = dirichlet_characters(f);
  if (index < 0 || index >= static_cast<int>(all.size())) {
    throw std::domain_error("character index out of range for modulus " + std::to_string(f));
  }
  return all[index];
}

Complex gauss_sum(const DirichletCharacter& chi) {
  Complex s{};
  for (int m = 1; m <= chi.modulus; ++m) {
    s += chi.table[m - 1] * expi2pi(static_cast<double>(m) / chi.modulus);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Sequences

const char* to_string(SequenceKind k) {
  switch (k) {
    case SequenceKind::constant: return "constant";
    case SequenceKind::exponential: return "exponential";
    case SequenceKind::periodic: return "periodic";
    case SequenceKind::character: return "character";
    case SequenceKind::delta: return "delta";
    case SequenceKind::cusp_form: return "cusp_form";
    case SequenceKind::finite: return "finite";
  }
  return "unknown";
}

namespace {

double max_abs(const std::vector<Complex>& v) {
  double m = 0.0;
  for (auto z : v) m = std::max(m, std::abs(z));
  return m;
}

}  // namespace

CoefficientSequence CoefficientSequence::constant() { return {}; }

CoefficientSequence CoefficientSequence::exponential(double beta) {
  CoefficientSequence s;
  s.kind_ = SequenceKind::exponential;
  s.beta_ = beta;
  return s;
}

CoefficientSequence CoefficientSequence::periodic(std::vector<Complex> table) {
  if (table.size() < 2) throw std::domain_error("periodic sequence needs period f >= 2");
  CoefficientSequence s;
  s.kind_ = SequenceKind::periodic;
  s.bound_ = max_abs(table);
  s.table_ = std::make_shared<const std::vector<Complex>>(std::move(table));
  return s;
}

CoefficientSequence CoefficientSequence::character(const DirichletCharacter& chi) {
  CoefficientSequence s = periodic(chi.table);
  s.kind_ = SequenceKind::character;
  s.chi_ = chi;
  return s;
}

CoefficientSequence CoefficientSequence::delta(long n0) {
  if (n0 < 1) throw std::domain_error("delta sequence needs n0 >= 1");
  CoefficientSequence s;
  s.kind_ = SequenceKind::delta;
  s.n0_ = n0;
  return s;
}

CoefficientSequence CoefficientSequence::cusp_form(std::shared_ptr<const CuspForm> f) {
  CoefficientSequence s;
  s.kind_ = SequenceKind::cusp_form;
  s.kappa_ = f->weight;
  // Deligne: |a(n)| <= |a(1)| d(n) n^{(kappa-1)/2}. The divisor factor is left
  // to the eps in the exponent.
  s.bound_ = std::abs(f->a(1)) > 0.0 ? std::abs(f->a(1)) : 1.0;
  s.cusp_ = std::move(f);
  return s;
}

CoefficientSequence CoefficientSequence::finite(std::vector<Complex> values) {
  if (values.empty()) throw std::domain_error("finite sequence needs at least one value");
  CoefficientSequence s;
  s.kind_ = SequenceKind::finite;
  s.bound_ = max_abs(values);
  s.table_ = std::make_shared<const std::vector<Complex>>(std::move(values));
  return s;
}

std::span<const Complex> CoefficientSequence::table() const {
  if (!table_) return {};
  return {table_->data(), table_->size()};
}

Complex CoefficientSequence::operator()(long n) const {
  if (n < 1) return {};
  switch (kind_) {
    case SequenceKind::constant: return scale_;
    case SequenceKind::exponential: return scale_ * expi2pi(static_cast<double>(n) * beta_);
    case SequenceKind::periodic:
    case SequenceKind::character: {
      const long f = static_cast<long>(table_->size());
      long r = n % f;
      if (r == 0) r = f;
      return (*table_)[r - 1];
    }
    case SequenceKind::delta: return n == n0_ ? scale_ : Complex{};
    case SequenceKind::cusp_form: return scale_ * cusp_->a(n);
    case SequenceKind::finite:
      return n <= static_cast<long>(table_->size()) ? (*table_)[n - 1] : Complex{};
  }
  return {};
}

std::optional<long> CoefficientSequence::support_end() const {
  if (kind_ == SequenceKind::delta) return n0_;
  if (kind_ == SequenceKind::finite) return static_cast<long>(table_->size());
  return std::nullopt;
}

CoefficientSequence CoefficientSequence::scaled(Complex c) const {
  CoefficientSequence s = *this;
  if (table_) {
    std::vector<Complex> t(*table_);
    for (auto& z : t) z *= c;
    s.table_ = std::make_shared<const std::vector<Complex>>(std::move(t));
    s.bound_ = bound_ * std::abs(c);
    if (s.kind_ == SequenceKind::character) {
      s.kind_ = SequenceKind::periodic;
      s.chi_.reset();
    }
  } else {
    s.scale_ = scale_ * c;
    s.bound_ = bound_ * std::abs(c);
  }
  return s;
}

namespace {

std::vector<Complex> as_finite_values(const CoefficientSequence& x) {
  if (auto end = x.support_end()) {
    std::vector<Complex> v(*end);
    for (long n = 1; n <= *end; ++n) v[n - 1] = x(n);
    return v;
  }
  throw std::domain_error("sequence is not finitely supported");
}

}  // namespace

CoefficientSequence operator+(const CoefficientSequence& x, const CoefficientSequence& y) {
  const bool xp = x.kind() == SequenceKind::periodic || x.kind() == SequenceKind::character;
  const bool yp = y.kind() == SequenceKind::periodic || y.kind() == SequenceKind::character;
  if (xp && yp) {
    if (x.period() != y.period()) throw std::domain_error("period mismatch in sequence sum");
    std::vector<Complex> t(x.period());
    for (int m = 1; m <= x.period(); ++m) t[m - 1] = x(m) + y(m);
    return CoefficientSequence::periodic(std::move(t));
  }
  auto a = as_finite_values(x);
  auto b = as_finite_values(y);
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return CoefficientSequence::finite(std::move(a));
}

std::string CoefficientSequence::describe() const {
  std::ostringstream os;
  os << to_string(kind_);
  switch (kind_) {
    case SequenceKind::exponential: os << "(beta=" << beta_ << ")"; break;
    case SequenceKind::periodic:
    case SequenceKind::character: os << "(f=" << period() << ")"; break;
    case SequenceKind::delta: os << "(n0=" << n0_ << ")"; break;
    case SequenceKind::cusp_form:
      os << "(weight=" << cusp_->weight << ", level=" << cusp_->level << ")";
      break;
    case SequenceKind::finite: os << "(len=" << table_->size() << ")"; break;
    default: break;
  }
  if (scale_ != Complex{1.0, 0.0}) os << "*" << format_complex(scale_);
  return os.str();
}

// ---------------------------------------------------------------------------
// Divisor convolutions

Complex sigma_c(long k, double alpha, double beta, Complex c) {
  Complex s{};
  for (long d : divisors(k)) {
    const long e = k / d;
    s += expi2pi(static_cast<double>(d) * alpha) * expi2pi(static_cast<double>(e) * beta) *
         cpow(static_cast<double>(d), c);
  }
  return s;
}

Complex A_c(long l, int sign, double alpha, const CoefficientSequence& seq, Complex c) {
  Complex s{};
  for (long n : divisors(l)) {
    const Complex an = seq(n);
    if (an == Complex{}) continue;
    const long m = l / n;
    s += expi2pi(sign * static_cast<double>(m) * alpha) * an * cpow(static_cast<double>(n), c);
  }
  return s;
}

Complex A0_c(long l, double alpha, const CoefficientSequence& seq, Complex c) {
  Complex s{};
  for (long n : divisors(l)) {
    const Complex an = seq(n);
    if (an == Complex{}) continue;
    const long m = l / n;
    s += expi2pi(static_cast<double>(m) * alpha) * cpow(static_cast<double>(m), c) * an;
  }
  return s;
}

std::vector<Complex> finite_fourier(std::span<const Complex> a) {
  const int f = static_cast<int>(a.size());
  if (f < 2) throw std::domain_error("finite_fourier needs period f >= 2");
  std::vector<Complex> hat(f);
  for (int nu = 1; nu <= f; ++nu) {
    Complex s{};
    for (int mu = 1; mu <= f; ++mu) {
      s += a[mu - 1] * expi2pi(-static_cast<double>((static_cast<long>(mu) * nu) % f) / f);
    }
    hat[nu - 1] = s / static_cast<double>(f);
  }
  return hat;
}

std::optional<int> parity(std::span<const Complex> a, double tol) {
  const int f = static_cast<int>(a.size());
  auto at = [&](int m) {
    int r = m % f;
    if (r <= 0) r += f;
    return a[r - 1];
  };
  bool even = true, odd = true;
  for (int m = 1; m <= f; ++m) {
    const Complex x = at(m), y = at(f - m);
    if (std::abs(y - x) > tol) even = false;
    if (std::abs(y + x) > tol) odd = false;
  }
  if (even) return 1;
  if (odd) return -1;
  return std::nullopt;
}

}  // namespace dzeta
