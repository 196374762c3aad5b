#include "hilbstab/theta.hpp"

#include <cmath>

#include "hilbstab/errors.hpp"

namespace hilbstab {

namespace {

constexpr double kLatticeEps = 1e-10;
constexpr int kMaxTerms = 100000;

void check_off_lattice(cd factor, double scale) {
  if (std::abs(factor) < kLatticeEps * scale)
    throw NonGeneric("theta argument numerically on the q-lattice");
}

// number of product terms needed for |q|^i r < tol
int product_terms(double absq, double r, double tol) {
  if (absq == 0.0) return 0;
  int i = 1;
  double p = absq * r;
  while (p >= tol && i < kMaxTerms) {
    p *= absq;
    ++i;
  }
  return i;
}

// Accumulate the jet of a unit-or-not factor into a LogJet.
void absorb(LogJet& acc, const Jet& j) { acc *= LogJet::from_jet(j); }

// jet of 1 - y e^{c s}
Jet one_minus(cd y, cd c, int order) {
  Jet e = Jet::exp_linear(c, order) * (-y);
  return e + Jet::constant(1.0, order);
}

}  // namespace

cd theta_from_log(cd log_x, cd q, double tol) {
  const cd x = std::exp(log_x), xi = std::exp(-log_x);
  const cd mid = ahat_from_log(log_x);
  check_off_lattice(mid, std::abs(std::exp(0.5 * log_x)) + std::abs(std::exp(-0.5 * log_x)));
  cd r = mid;
  const int terms = product_terms(std::abs(q), std::max(std::abs(x), std::abs(xi)), tol);
  cd qi = 1.0;
  for (int i = 1; i <= terms; ++i) {
    qi *= q;
    cd f1 = 1.0 - x * qi, f2 = 1.0 - xi * qi;
    check_off_lattice(f1, 1.0 + std::abs(x * qi));
    check_off_lattice(f2, 1.0 + std::abs(xi * qi));
    r *= f1 * f2;
  }
  return r;
}

cd theta(const GeneratorContext& ctx, const Monomial& x) {
  if (x.is_one()) return 0.0;
  return theta_from_log(ctx.log_of(x), ctx.q(), ctx.theta_tol);
}

cd phi(const GeneratorContext& ctx, const Monomial& x, const Monomial& z) {
  if (x.is_one() || z.is_one()) throw NonGeneric("phi is singular at a trivial argument; use jets");
  return theta(ctx, x * z) / (theta(ctx, x) * theta(ctx, z));
}

LogJet ahat_logjet(cd log_x, bool exact_one, double c, int order) {
  LogJet r = LogJet::one(order);
  if (exact_one) {
    if (c == 0.0) {
      r.zero = true;
      return r;
    }
    // 2 sinh(cs/2) = c s * sum (cs/2)^{2k} / (2k+1)!
    std::vector<cd> u(order + 1, 0.0);
    double h = 0.5 * c, term = 1.0;
    for (int k = 0; 2 * k <= order; ++k) {
      u[2 * k] = term;
      term *= h * h / double((2 * k + 2) * (2 * k + 3));
    }
    absorb(r, Jet::from_coeffs(0, std::move(u), order));
    r.valuation += 1;
    r.lead *= c;
    return r;
  }
  const cd e = std::exp(0.5 * log_x), ei = std::exp(-0.5 * log_x);
  check_off_lattice(e - ei, std::abs(e) + std::abs(ei));
  Jet j = Jet::exp_linear(0.5 * c, order) * e - Jet::exp_linear(-0.5 * c, order) * ei;
  absorb(r, j);
  return r;
}

LogJet theta_logjet(cd log_x, bool exact_one, double c, cd q, double tol, int order) {
  LogJet r = ahat_logjet(log_x, exact_one, c, order);
  if (r.zero) return r;
  const cd x = exact_one ? cd(1.0) : std::exp(log_x);
  const cd xi = exact_one ? cd(1.0) : std::exp(-log_x);
  const int terms = product_terms(std::abs(q), std::max(std::abs(x), std::abs(xi)), tol);
  cd qi = 1.0;
  for (int i = 1; i <= terms; ++i) {
    qi *= q;
    check_off_lattice(1.0 - x * qi, 1.0 + std::abs(x * qi));
    check_off_lattice(1.0 - xi * qi, 1.0 + std::abs(xi * qi));
    absorb(r, one_minus(x * qi, c, order));
    absorb(r, one_minus(xi * qi, -c, order));
  }
  return r;
}

LogJet monomial_logjet(cd log_x, double c, int order) {
  LogJet r = LogJet::one(order);
  r.lead = std::exp(log_x);
  if (order >= 1) r.tail[0] = c;
  return r;
}

LogJet linear_logjet(cd value, bool exact_zero, cd c, int order) {
  LogJet r = LogJet::one(order);
  if (exact_zero) {
    if (c == 0.0) {
      r.zero = true;
      return r;
    }
    r.valuation = 1;
    r.lead = c;
    return r;
  }
  if (std::abs(value) < kLatticeEps) throw NonGeneric("linear factor numerically zero");
  // log(1 + r s) = sum (-1)^{k+1} r^k s^k / k
  r.lead = value;
  const cd ratio = c / value;
  cd p = ratio;
  for (int k = 1; k <= order; ++k) {
    r.tail[k - 1] = (k % 2 ? 1.0 : -1.0) * p / double(k);
    p *= ratio;
  }
  return r;
}

Jet eval_factor_jet(const GeneratorContext& ctx, const Monomial& m, double c, int order) {
  return theta_logjet(ctx.log_of(m), m.is_one(), c, ctx.q(), ctx.theta_tol, order).to_jet(order);
}

}  // namespace hilbstab
