#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dzeta/types.hpp"

namespace dzeta {

/// e^{2 pi i x}, with x reduced mod 1 before scaling.
Complex expi2pi(double x);

/// Positive divisors of l in increasing order. Read-only table for small l,
/// trial division beyond it.
std::vector<long> divisors(long l);
int divisor_count(long l);

/// Ramanujan tau(1..n_max) from Delta = q prod (1 - q^n)^24, exact integers.
/// Throws std::overflow_error when a value does not fit in int64.
std::vector<std::int64_t> ramanujan_tau(int n_max);

/// A holomorphic cusp form of even weight on Gamma_0(N), given by its Fourier
/// coefficients a(n) and the coefficients ~a(n) of its Fricke transform.
struct CuspForm {
  int weight = 12;
  int level = 1;
  std::shared_ptr<const std::vector<Complex>> coefficients;        // index n-1
  std::shared_ptr<const std::vector<Complex>> tilde_coefficients;  // index n-1

  Complex a(long n) const;
  Complex tilde_a(long n) const;
  long available() const { return static_cast<long>(coefficients->size()); }
};

/// The discriminant form Delta (weight 12, level 1, self-dual).
std::shared_ptr<const CuspForm> delta_form(int n_max = 4096);

/// A cusp form with user-supplied coefficients; for level 1 the tilde
/// coefficients default to the coefficients themselves.
std::shared_ptr<const CuspForm> make_cusp_form(int weight, int level, std::vector<Complex> a,
                                               std::vector<Complex> tilde_a = {});

struct DirichletCharacter {
  int modulus = 0;
  int index = 0;               // 0 is the principal character
  std::vector<Complex> table;  // chi(1..modulus)
  bool primitive = false;

  Complex operator()(long m) const;
};

/// All Dirichlet characters mod f for f an odd prime or f = 4.
std::vector<DirichletCharacter> dirichlet_characters(int f);
DirichletCharacter dirichlet_character(int f, int index);

enum class SequenceKind { constant, exponential, periodic, character, delta, cusp_form, finite };

const char* to_string(SequenceKind k);

/// A coefficient sequence {a(n)}_{n>=1} with its growth data:
/// |a(n)| <= C n^{(kappa-1)/2 + eps}.
class CoefficientSequence {
 public:
  static constexpr double kEps = 0.01;

  static CoefficientSequence constant();
  static CoefficientSequence exponential(double beta);
  static CoefficientSequence periodic(std::vector<Complex> table);
  static CoefficientSequence character(const DirichletCharacter& chi);
  static CoefficientSequence delta(long n0);
  static CoefficientSequence cusp_form(std::shared_ptr<const CuspForm> f);
  /// a(n) = values[n-1] for n <= values.size(), zero beyond.
  static CoefficientSequence finite(std::vector<Complex> values);

  Complex operator()(long n) const;

  SequenceKind kind() const { return kind_; }
  double kappa() const { return kappa_; }
  double bound_constant() const { return bound_; }
  /// Exponent g with |a(n)| <= C n^g.
  double growth_exponent() const { return 0.5 * (kappa_ - 1.0) + kEps; }

  /// Overall multiplier carried by constant, exponential, delta and cusp kinds.
  Complex scale() const { return scale_; }
  double beta() const { return beta_; }
  long delta_index() const { return n0_; }
  int period() const { return static_cast<int>(table_ ? table_->size() : 0); }
  std::span<const Complex> table() const;
  const CuspForm& cusp() const { return *cusp_; }
  std::shared_ptr<const CuspForm> cusp_ptr() const { return cusp_; }
  const std::optional<DirichletCharacter>& dirichlet() const { return chi_; }

  /// Largest n with a(n) possibly nonzero (finite and delta kinds).
  std::optional<long> support_end() const;

  CoefficientSequence scaled(Complex c) const;
  /// Sum of two sequences; supported for finite/delta pairs and for periodic
  /// sequences of equal period.
  friend CoefficientSequence operator+(const CoefficientSequence& x, const CoefficientSequence& y);

  std::string describe() const;

 private:
  SequenceKind kind_ = SequenceKind::constant;
  double kappa_ = 1.0 + 2.0 * kEps;
  double bound_ = 1.0;
  double beta_ = 0.0;
  long n0_ = 0;
  std::shared_ptr<const std::vector<Complex>> table_;
  std::shared_ptr<const CuspForm> cusp_;
  std::optional<DirichletCharacter> chi_;
  Complex scale_{1.0, 0.0};
};

/// sigma_c(k; alpha, beta) = sum_{d | k} e^{2 pi i d alpha} e^{2 pi i (k/d) beta} d^c.
Complex sigma_c(long k, double alpha, double beta, Complex c);

/// A_c(l; sign alpha; A) = sum_{mn = l} e^{sign 2 pi i m alpha} a(n) n^c.
Complex A_c(long l, int sign, double alpha, const CoefficientSequence& seq, Complex c);

/// A^0_c(l; alpha; A) = sum_{mn = l} e^{2 pi i m alpha} m^c a(n).
Complex A0_c(long l, double alpha, const CoefficientSequence& seq, Complex c);

/// hat a(nu) = (1/f) sum_{mu=1}^f a(mu) e^{-2 pi i mu nu / f}, nu = 1..f.
std::vector<Complex> finite_fourier(std::span<const Complex> a);

/// +1 (even), -1 (odd) or nullopt, using a(f - m) = +-a(m).
std::optional<int> parity(std::span<const Complex> a, double tol = 1e-13);

/// tau(chi) = sum_{m=1}^f chi(m) e^{2 pi i m / f}.
Complex gauss_sum(const DirichletCharacter& chi);

}  // namespace dzeta
