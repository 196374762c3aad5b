#pragma once

#include <string>
#include <vector>

#include "hilbstab/context.hpp"
#include "hilbstab/linear_form.hpp"
#include "hilbstab/monomial.hpp"

namespace hilbstab {

// theta(u k) / theta(k)
struct KaehlerPair {
  Monomial u;
  Monomial k;
};

// sign * prod f(num) / prod f(den) * prod kaehler pairs * prod monomials, where f is theta in
// the elliptic case and ahat in K-theory.
struct FactorList {
  int sign = 1;
  std::vector<Monomial> numerator;
  std::vector<Monomial> denominator;
  std::vector<KaehlerPair> kaehler_pairs;
  std::vector<Monomial> monomials;

  std::string to_string(bool elliptic = true) const;
};

FactorList operator*(const FactorList& a, const FactorList& b);

// Same shape with linear forms, for cohomology.
struct LinearFactorList {
  int sign = 1;
  std::vector<LinearForm> numerator;
  std::vector<LinearForm> denominator;
};

// Additive image: x^{n} y^{-m} -> n x - m y, with a^{al} hbar^{et/2} read as t1, t2 exponents.
LinearForm linearize(const Monomial& m);
LinearFactorList linearize(const FactorList& f);

enum class FactorKind : std::uint8_t { Theta, Ahat, Mono, Linear };

struct CompiledFactor {
  FactorKind kind = FactorKind::Theta;
  int power = 1;
  std::vector<std::pair<int, int>> x;  // (0-based slot, doubled exponent | linear coefficient)
  int g1 = 0, g2 = 0;                  // doubled exps of a, hbar_half | coefficients of t1, t2
  int other = -1;                      // index into CompiledTerm::others, -1 when absent
};

struct CompiledTerm {
  int sign = 1;
  std::vector<CompiledFactor> factors;
  std::vector<Monomial> others;  // z, q and z_i parts of the arguments
};

CompiledTerm compile(const FactorList& f, FactorKind base);
CompiledTerm compile(const LinearFactorList& f);

// Direct values of the generators x_1..x_n (no jets).
cd evaluate_offshell(const CompiledTerm& t, const GeneratorContext& ctx, const std::vector<int>& sigma);
cd evaluate_offshell_linear(const CompiledTerm& t, const CohContext& ctx, const std::vector<int>& sigma);

// Straightforward evaluation of a FactorList at the context's x; oracle for the compiled path.
cd evaluate_factor_list(const GeneratorContext& ctx, const FactorList& f, FactorKind base);

}  // namespace hilbstab
