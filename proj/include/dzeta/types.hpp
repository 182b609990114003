#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace dzeta {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

/// A point (s1, s2) of C^2, with s_j = sigma_j + i t_j.
struct EvalPoint {
  Complex s1;
  Complex s2;

  double sigma1() const { return s1.real(); }
  double sigma2() const { return s2.real(); }
  double t1() const { return s1.imag(); }
  double t2() const { return s2.imag(); }
  Complex sum() const { return s1 + s2; }

  /// The dual point (1 - s2, 1 - s1) that every functional equation pairs with.
  EvalPoint reflected() const { return {1.0 - s2, 1.0 - s1}; }
};

enum class Status { ok, refused, pole, tail_too_large, nonconvergent };

const char* to_string(Status s);

/// Outcome of a series or quadrature evaluation.
struct SeriesValue {
  Complex value{};
  double error = 0.0;
  long terms = 0;
  Status status = Status::ok;
  std::string route;
  std::string reason;

  bool ok() const { return status == Status::ok; }

  static SeriesValue refused(std::string why, Status st = Status::refused) {
    SeriesValue v;
    v.status = st;
    v.reason = std::move(why);
    return v;
  }
};

/// Thrown when an input lies outside the region where an evaluator is valid
/// (poles, violated convergence inequalities, invalid parameters). The message
/// names the violated condition.
class Refusal : public std::runtime_error {
 public:
  explicit Refusal(const std::string& what, Status st = Status::refused)
      : std::runtime_error(what), status_(st) {}
  Status status() const { return status_; }

 private:
  Status status_;
};

/// Returns the value or throws the recorded refusal.
inline Complex value_or_throw(const SeriesValue& v) {
  if (!v.ok()) throw Refusal(v.reason, v.status);
  return v.value;
}

/// Runs `fn` (returning SeriesValue) and converts any Refusal into a status.
template <class Fn>
SeriesValue guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const Refusal& r) {
    return SeriesValue::refused(r.what(), r.status());
  } catch (const std::domain_error& e) {
    return SeriesValue::refused(e.what());
  }
}

std::string format_complex(Complex z);

}  // namespace dzeta
