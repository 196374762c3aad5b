#pragma once

#include <complex>
#include <cmath>

#include "hilbstab/context.hpp"

namespace testing_support {

inline double rel(std::complex<double> got, std::complex<double> want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

// Fixed parameter point used by the frozen values in the tests.
inline hilbstab::ContextOptions frozen_point() {
  hilbstab::ContextOptions o;
  o.q = std::complex<double>(0.1, 0.05);
  o.a = std::complex<double>(0.9, 0.3);
  o.hbar_half = std::complex<double>(1.1, -0.2);
  return o;
}

}  // namespace testing_support
