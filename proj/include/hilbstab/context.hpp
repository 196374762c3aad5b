#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "hilbstab/monomial.hpp"

namespace hilbstab {

using cd = std::complex<double>;

// Numerical values of the generators, held through fixed logarithms so that half-integer
// powers are single-valued.
struct GeneratorContext {
  int n = 0;
  std::uint64_t seed = 0;
  double theta_tol = 1e-14;
  int jet_order = 0;

  cd log_a, log_hbar_half, log_z, log_q;
  std::vector<cd> log_x, log_zi;  // index i-1

  cd log_of(Generator g) const;
  cd log_of(const Monomial& m) const;
  cd value(Generator g) const { return std::exp(log_of(g)); }
  cd value(const Monomial& m) const { return std::exp(log_of(m)); }
  cd q() const { return std::exp(log_q); }

  void set_log(Generator g, cd log);
  void set_value(Generator g, cd v) { set_log(g, std::log(v)); }
};

struct ContextOptions {
  std::optional<cd> q, a, hbar_half, z;
  double theta_tol = 1e-14;
  int jet_order = -1;  // -1: n^2 + 4
};

// Deterministic in (n, seed, options). |q| in [0.05, 0.3], other moduli in [0.5, 2],
// phases uniform. Redraws until the genericity guards pass; overridden values that fail
// them raise NonGeneric.
GeneratorContext make_context(int n, std::uint64_t seed, const ContextOptions& opts = {});

// |y / q^k - 1| > eps for every integer k
bool off_q_lattice(cd log_y, cd log_q, double eps = 1e-6);

// Additive values for the cohomological limit.
struct CohContext {
  int n = 0;
  std::uint64_t seed = 0;
  cd t1, t2;
  std::vector<cd> x;
};

CohContext make_coh_context(int n, std::uint64_t seed);

}  // namespace hilbstab
