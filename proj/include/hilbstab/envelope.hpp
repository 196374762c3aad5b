#pragma once

#include <string>
#include <vector>

#include "hilbstab/context.hpp"
#include "hilbstab/kernels.hpp"
#include "hilbstab/partition.hpp"
#include "hilbstab/term.hpp"
#include "hilbstab/tree.hpp"

namespace hilbstab {

enum class KaehlerVariant { SingleZ, MultiZ };

FactorList s_ell_spec(const BoxTable& t);

// (-1)^kappa phi(x_r, Z_r) prod_e phi(U_e, Z_e), U_e = x_h phi_t / (phi_h x_t), h = child.
FactorList w_ell_spec(const BoxTable& t, const Tree& tree, KaehlerVariant variant = KaehlerVariant::SingleZ);

// U for the root (x_r) and for each tree edge, with the data of its Kaehler argument.
struct TreeArg {
  Monomial u;
  Monomial kaehler;  // z^w hbar^v, or the product of z_i over the subtree
  int w = 0;
  int v = 0;
  int child = 0;
  int parent = -1;  // -1 for the root argument
};

std::vector<TreeArg> tree_args(const BoxTable& t, const Tree& tree, KaehlerVariant variant);

// S^Ell W^Ell(t) after cancelling theta(x_r) and theta(U_e) against the numerator of S^Ell.
// residual holds what is left of S^Ell (sign included); args are the Kaehler arguments.
struct TreeTermSpec {
  FactorList residual;
  std::vector<TreeArg> args;

  FactorList elliptic() const;  // residual times theta(U Z)/theta(Z) for each arg
};

TreeTermSpec combined_term_spec(const BoxTable& t, const Tree& tree, KaehlerVariant variant = KaehlerVariant::SingleZ);

cd diagonal_elliptic(const GeneratorContext& ctx, const BoxTable& t);

// Sym_{S_n}(S^Ell sum_delta W^Ell) at the generic x held in ctx.
cd stab_offshell_eval(const GeneratorContext& ctx, const Partition& lambda);
// Same, from the uncancelled product S^Ell * W^Ell; reference for the cancelled path.
cd stab_offshell_uncancelled(const GeneratorContext& ctx, const Partition& lambda);
// Overload setting x from values with principal logs.
cd stab_offshell_eval(GeneratorContext ctx, const Partition& lambda, const std::vector<cd>& x);

struct RestrictionEntry {
  cd value;
  int max_pole_order = 0;
  double max_cancel_residual = 0.0;
};

// Value at x_i = phi^mu_i via x_i = phi^mu_i e^{s d_i}. Throws ResidualPole if the limit diverges.
RestrictionEntry stab_restriction(const GeneratorContext& ctx, const Partition& lambda, const Partition& mu,
                                  Backend backend = Backend::OpenMP, const std::vector<double>& dir = {});

struct RestrictionMatrix {
  std::string kind;  // "ell", "kth", "coh"
  int n = 0;
  double slope = 0.0;
  std::vector<Partition> order;
  std::vector<std::vector<cd>> entries;  // [lambda][mu]
  std::vector<std::vector<RestrictionEntry>> diag;

  int index_of(const Partition& p) const;
};

// Applies the pole checks to a symmetrized value; what names the entry in error messages.
RestrictionEntry finish_entry(const SymmetrizedValue& sv, int order, const std::string& what);

RestrictionMatrix restriction_matrix(const GeneratorContext& ctx, int n, Backend backend = Backend::OpenMP);

// Residual pole threshold shared by all restrictions.
inline constexpr double kPoleThreshold = 1e-6;
inline constexpr int kMatrixCap = 5;

// Permutations of the boxes preserving content.
std::vector<std::vector<int>> content_preserving_permutations(const BoxTable& t);

// F_lambda(x_sigma) at x = phi^lambda with independent Kaehler variables z_i.
cd f_lambda_eval(const GeneratorContext& ctx, const Partition& lambda, const std::vector<int>& sigma);

}  // namespace hilbstab
