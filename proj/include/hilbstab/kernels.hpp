#pragma once

#include <vector>

#include "hilbstab/context.hpp"
#include "hilbstab/jet.hpp"
#include "hilbstab/partition.hpp"
#include "hilbstab/term.hpp"

namespace hilbstab {

enum class Backend { Serial, OpenMP };

// x_b = phi_b e^{s d_b} (multiplicative) or phi_b + s d_b (additive) for the boxes b of a
// fixed point, with exact exponents kept next to the numerical values.
struct FixedPoint {
  bool additive = false;
  std::vector<int> e1, e2;   // doubled exps of a, hbar_half | coefficients of t1, t2
  std::vector<cd> value;     // log phi_b | phi_b
  std::vector<double> dir;   // d_b
};

// Default direction d_b = b (1-based canonical position).
FixedPoint fixed_point(const BoxTable& mu, const GeneratorContext& ctx, std::vector<double> dir = {});
FixedPoint fixed_point_additive(const BoxTable& mu, const CohContext& ctx, std::vector<double> dir = {});

std::vector<std::vector<int>> all_permutations(int n);

// A sum of compiled terms bound to a fixed point. Builds a lookup table of factor jets so that
// evaluating a permutation is table lookups and O(K) log-jet arithmetic.
class RestrictionProblem {
 public:
  RestrictionProblem(std::vector<CompiledTerm> terms, FixedPoint fp, const GeneratorContext& ctx,
                     Backend backend = Backend::Serial);
  RestrictionProblem(std::vector<CompiledTerm> terms, FixedPoint fp, const CohContext& ctx, int order,
                     Backend backend = Backend::Serial);

  int n() const { return n_; }
  int order() const { return order_; }
  // sum over terms with x_k bound to box sigma[k]; min_term_valuation gets the smallest term valuation
  // per_term, if given, receives each term's jet
  Jet at(const std::vector<int>& sigma, int* min_term_valuation = nullptr, std::vector<Jet>* per_term = nullptr) const;

 private:
  struct Entry {
    int slots = 0;            // number of x slots, <= 2 uses the table
    std::vector<int> table;   // n^slots jet indices
  };
  struct Key;
  void build(Backend backend);
  LogJet direct(const CompiledTerm& t, std::size_t term, const CompiledFactor& f, const std::vector<int>& boxes) const;

  int n_ = 0;
  int order_ = 0;
  std::vector<CompiledTerm> terms_;
  FixedPoint fp_;
  bool additive_ = false;
  cd log_a_, log_hh_, q_, t1_, t2_;
  double theta_tol_ = 1e-14;
  std::vector<std::vector<cd>> other_logs_;   // per term
  std::vector<std::vector<Entry>> entries_;   // per term, per factor
  std::vector<LogJet> jets_;
};

struct SymmetrizedValue {
  cd value;
  int max_pole_order = 0;            // deepest pole among single terms
  double max_cancel_residual = 0.0;  // worst |sum| / max |term| over negative orders
  int total_valuation = 0;
};

// Sum over all of S_n. Per-permutation jets are reduced in lexicographic order, so the two
// backends agree bit for bit.
SymmetrizedValue symmetrize(const RestrictionProblem& p, Backend backend);
SymmetrizedValue reduce_in_order(const std::vector<Jet>& per_sigma, int min_term_valuation);

}  // namespace hilbstab
