#pragma once

#include "hilbstab/context.hpp"
#include "hilbstab/jet.hpp"
#include "hilbstab/monomial.hpp"

namespace hilbstab {

// theta(x) = prod_{i>=1}(1 - x q^i) (x^{1/2} - x^{-1/2}) prod_{i>=1}(1 - x^{-1} q^i), x = exp(log_x).
// The products stop once |q|^i max(|x|, 1/|x|) < tol.
cd theta_from_log(cd log_x, cd q, double tol);
cd theta(const GeneratorContext& ctx, const Monomial& x);
// phi(x, z) = theta(xz) / (theta(x) theta(z))
cd phi(const GeneratorContext& ctx, const Monomial& x, const Monomial& z);

// x^{1/2} - x^{-1/2}
inline cd ahat_from_log(cd log_x) { return 2.0 * std::sinh(0.5 * log_x); }

// Jets in s of f(x e^{c s}). exact_one says x == 1 as a monomial, so f has a zero at s = 0
// (or vanishes identically when also c == 0). Arguments that are numerically on the
// q-lattice without being exact raise NonGeneric.
LogJet theta_logjet(cd log_x, bool exact_one, double c, cd q, double tol, int order);
LogJet ahat_logjet(cd log_x, bool exact_one, double c, int order);
LogJet monomial_logjet(cd log_x, double c, int order);
// value + c s, with value exactly zero when exact_zero
LogJet linear_logjet(cd value, bool exact_zero, cd c, int order);

// theta(M e^{c s}) as a jet, for a monomial M over the context's generators.
Jet eval_factor_jet(const GeneratorContext& ctx, const Monomial& m, double c, int order);

}  // namespace hilbstab
