#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "hilbstab/envelope.hpp"

namespace hilbstab {

// ---- K-theory at slope s ----

struct Rational {
  long num = 0;
  long den = 1;
  double value() const { return double(num) / double(den); }
  std::string to_string() const;
};

// a/b with 1 <= b <= n in [lo, hi), increasing, in lowest terms.
std::vector<Rational> walls(int n, double lo, double hi);
bool is_wall(int n, double s, double eps = 1e-9);
void require_admissible(int n, double s);

// S^Kth W^Kth(t) / (t1^{n^2/2} prod x_i^{1/2}): residual read with ahat, Kaehler parts as monomials.
FactorList kth_term(const BoxTable& t, const TreeTermSpec& spec, double s);

RestrictionEntry stab_kth_restriction(const GeneratorContext& ctx, const Partition& lambda, const Partition& mu,
                                      double s, Backend backend = Backend::OpenMP, const std::vector<double>& dir = {});
RestrictionMatrix kth_matrix(const GeneratorContext& ctx, int n, double s, Backend backend = Backend::OpenMP);

// prod ahat(t1^{-leg} t2^{arm+1}) / (t1^{n^2/2} prod (phi_i)^{1/2})
cd kth_diagonal(const GeneratorContext& ctx, const BoxTable& t);
// column normalisation t1^{n^2/2} prod_i (phi^mu_i)^{1/2}
cd polarization_twist(const GeneratorContext& ctx, const BoxTable& mu);

Eigen::MatrixXcd to_eigen(const RestrictionMatrix& m);
// (T^{s1})^{-1} T^{s2}
Eigen::MatrixXcd wall_r_matrix(const GeneratorContext& ctx, int n, double s1, double s2,
                               Backend backend = Backend::OpenMP);

// ---- cohomology ----

LinearFactorList s_coh_spec(const BoxTable& t);
LinearFactorList w_coh_spec(const BoxTable& t, const Tree& tree);
// cancelled S^Coh W^Coh(t)
LinearFactorList coh_term(const BoxTable& t, const Tree& tree);
LinearFactorList shenfeld_spec(const BoxTable& t);
LinearFactorList s_gamma_spec(const BoxTable& t);

// Sym(S^Coh sum_delta W^Coh) at the context's x, from the uncancelled products
cd stab_coh_offshell(const CohContext& ctx, const Partition& lambda);
// Sym(S_lambda) / prod d_k!
cd shenfeld_sym(const CohContext& ctx, const Partition& lambda);
// sum_delta W^Coh(t_delta) and its closed form
cd tree_sum_coh(const CohContext& ctx, const Partition& lambda);
cd tree_sum_closed(const CohContext& ctx, const Partition& lambda);
// sum over content-preserving sigma of S_Gamma(x_sigma)
cd s_gamma_sum(const CohContext& ctx, const Partition& lambda);

RestrictionEntry stab_coh_restriction(const CohContext& ctx, const Partition& lambda, const Partition& mu,
                                      Backend backend = Backend::OpenMP, int order = -1);
RestrictionMatrix coh_matrix(const CohContext& ctx, int n, Backend backend = Backend::OpenMP);
cd coh_diagonal(const CohContext& ctx, const BoxTable& t);

// ---- elliptic -> K-theory ----

struct QLimitReport {
  std::vector<double> q_values;
  std::vector<double> distances;  // max |E - K| / max |K|
  bool decreasing = false;
};

// Elliptic matrix at |q| -> 0 with z = q^{-s}, columns divided by the polarization twist, against
// the K-theory matrix at slope s.
QLimitReport verify_q_limit(const GeneratorContext& ctx, int n, double s, const std::vector<double>& q_values,
                            Backend backend = Backend::OpenMP);

}  // namespace hilbstab
