#pragma once

#include <doctest.h>

#include "dzeta/types.hpp"

// |got - want| <= tol * max(1, |want|)
inline void check_close(dzeta::Complex got, dzeta::Complex want, double tol) {
  const double scale = std::max(1.0, std::abs(want));
  INFO("got " << dzeta::format_complex(got) << ", want " << dzeta::format_complex(want));
  CHECK(std::abs(got - want) <= tol * scale);
}

inline void check_rel(dzeta::Complex got, dzeta::Complex want, double tol) {
  INFO("got " << dzeta::format_complex(got) << ", want " << dzeta::format_complex(want));
  CHECK(std::abs(got - want) <= tol * std::abs(want));
}
