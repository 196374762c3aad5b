#include "hilbstab/context.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "hilbstab/errors.hpp"

namespace hilbstab {

cd GeneratorContext::log_of(Generator g) const {
  switch (g.kind) {
    case GenKind::A: return log_a;
    case GenKind::HbarHalf: return log_hbar_half;
    case GenKind::Z: return log_z;
    case GenKind::Q: return log_q;
    case GenKind::X: return log_x.at(g.index - 1);
    case GenKind::Zi: return log_zi.at(g.index - 1);
  }
  return {};
}

cd GeneratorContext::log_of(const Monomial& m) const {
  cd s = 0.0;
  for (const auto& [g, e] : m.terms()) s += 0.5 * e * log_of(g);
  return s;
}

void GeneratorContext::set_log(Generator g, cd log) {
  switch (g.kind) {
    case GenKind::A: log_a = log; break;
    case GenKind::HbarHalf: log_hbar_half = log; break;
    case GenKind::Z: log_z = log; break;
    case GenKind::Q: log_q = log; break;
    case GenKind::X: log_x.at(g.index - 1) = log; break;
    case GenKind::Zi: log_zi.at(g.index - 1) = log; break;
  }
}

bool off_q_lattice(cd log_y, cd log_q, double eps) {
  double k0 = log_y.real() / log_q.real();
  for (double k = std::floor(k0) - 1; k <= std::ceil(k0) + 1; k += 1.0)
    if (std::abs(std::exp(log_y - k * log_q) - 1.0) <= eps) return false;
  return true;
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

cd log_polar(double modulus, double phase) { return {std::log(modulus), phase}; }

// Returns an empty string when the context passes, otherwise what failed.
std::string genericity_failure(const GeneratorContext& c) {
  std::vector<cd> logs{c.log_a, c.log_hbar_half, c.log_z};
  logs.insert(logs.end(), c.log_x.begin(), c.log_x.end());
  logs.insert(logs.end(), c.log_zi.begin(), c.log_zi.end());
  for (std::size_t i = 0; i < logs.size(); ++i) {
    if (std::abs(std::exp(logs[i]) - 1.0) <= 1e-6) return "a generator is too close to 1";
    for (std::size_t j = i + 1; j < logs.size(); ++j)
      if (std::abs(std::exp(logs[i] - logs[j]) - 1.0) <= 1e-6) return "two generators nearly coincide";
  }
  const int n = c.n;
  // equivariant monomials a^alpha hbar^{eta/2} stay off the q-lattice
  for (int alpha = -2 * n; alpha <= 2 * n; ++alpha)
    for (int eta = -4 * n; eta <= 4 * n; ++eta) {
      if (alpha == 0 && eta == 0) continue;
      if (!off_q_lattice(double(alpha) * c.log_a + double(eta) * c.log_hbar_half, c.log_q))
        return "an equivariant monomial lies on the q-lattice";
    }
  // Kaehler arguments z^w hbar^v
  for (int w = 1; w <= n; ++w)
    for (int v = -n; v <= n; ++v)
      if (!off_q_lattice(double(w) * c.log_z + double(2 * v) * c.log_hbar_half, c.log_q))
        return "z^" + std::to_string(w) + " hbar^" + std::to_string(v) + " lies on the q-lattice";
  return {};
}

}  // namespace

GeneratorContext make_context(int n, std::uint64_t seed, const ContextOptions& opts) {
  if (n < 1) throw UsageError("n must be positive");
  if (opts.q) {
    double m = std::abs(*opts.q);
    if (!(m > 0.0) || m >= 1.0) throw UsageError("q override must satisfy 0 < |q| < 1");
  }
  for (const auto* o : {&opts.a, &opts.hbar_half, &opts.z})
    if (*o && std::abs(**o) == 0.0) throw UsageError("generator override must be nonzero");

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> phase(-std::numbers::pi, std::numbers::pi);
  std::uniform_real_distribution<double> mod(0.5, 2.0);
  std::uniform_real_distribution<double> qmod(0.05, 0.3);

  GeneratorContext c;
  c.n = n;
  c.seed = seed;
  c.theta_tol = opts.theta_tol;
  c.jet_order = opts.jet_order >= 0 ? opts.jet_order : n * n + 4;
  bool any_override = opts.q || opts.a || opts.hbar_half || opts.z;

  for (int attempt = 0; attempt < 1000; ++attempt) {
    c.log_q = opts.q ? std::log(*opts.q) : log_polar(qmod(rng), phase(rng));
    c.log_a = opts.a ? std::log(*opts.a) : log_polar(mod(rng), phase(rng));
    c.log_hbar_half = opts.hbar_half ? std::log(*opts.hbar_half) : log_polar(mod(rng), phase(rng));
    c.log_z = opts.z ? std::log(*opts.z) : log_polar(mod(rng), phase(rng));
    c.log_x.assign(n, {});
    c.log_zi.assign(n, {});
    for (auto& l : c.log_x) l = log_polar(mod(rng), phase(rng));
    for (auto& l : c.log_zi) l = log_polar(mod(rng), phase(rng));
    std::string why = genericity_failure(c);
    if (why.empty()) return c;
    if (any_override && attempt > 50) throw NonGeneric("non-generic generator values: " + why);
  }
  throw NonGeneric("could not draw generic generator values");
}

CohContext make_coh_context(int n, std::uint64_t seed) {
  if (n < 1) throw UsageError("n must be positive");
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> phase(0.0, kTwoPi);
  std::uniform_real_distribution<double> mod(0.5, 2.0);
  auto draw = [&] { return std::polar(mod(rng), phase(rng)); };
  CohContext c;
  c.n = n;
  c.seed = seed;
  for (;;) {
    c.t1 = draw();
    c.t2 = draw();
    // keep small integer combinations of t1, t2 away from zero
    bool ok = true;
    for (int i = -2 * n; i <= 2 * n && ok; ++i)
      for (int j = -2 * n; j <= 2 * n && ok; ++j)
        if ((i || j) && std::abs(double(i) * c.t1 + double(j) * c.t2) < 1e-3) ok = false;
    if (ok) break;
  }
  c.x.resize(n);
  for (auto& v : c.x) v = draw();
  return c;
}

}  // namespace hilbstab
