#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hilbstab/json_io.hpp"
#include "hilbstab/kernels.hpp"

namespace hilbstab {

struct Check {
  std::string identity;
  double max_abs_error = 0.0;
  double tolerance = 0.0;
  int trials = 0;
  bool pass = false;
  // recorded for the report but not part of the pass/fail verdict
  bool informational = false;
  std::string detail;
};

struct VerifyOptions {
  RunConfig config;
  Backend backend = Backend::OpenMP;
};

std::vector<Check> elliptic_suite(int n, const VerifyOptions& opt);
std::vector<Check> limits_suite(int n, const VerifyOptions& opt);

// Re-validates a matrix document produced by the matrix command.
std::vector<Check> matrix_suite(const RestrictionMatrix& m, const VerifyOptions& opt);

bool all_pass(const std::vector<Check>& checks);
json to_json(const Check& c);

// Support on the pairs (lambda, mu) with mu dominating lambda (or equal).
bool in_support(const Partition& lambda, const Partition& mu);

// max |T[l][m]| / (max |row l|) over pairs outside the support
double triangular_error(const RestrictionMatrix& m);
// same for the transposed pattern; used to decide the direction
double transposed_triangular_error(const RestrictionMatrix& m);

// Shared suite cap.
inline constexpr int kVerifyCap = 5;

// Brute-force partition count (non-increasing compositions).
long brute_force_partition_count(int n);
// Union-find check that the edges form a spanning tree on n_vertices vertices.
bool is_spanning_tree(int n_vertices, const std::vector<Edge>& edges);

}  // namespace hilbstab
