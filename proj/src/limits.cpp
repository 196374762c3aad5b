#include "hilbstab/limits.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hilbstab/errors.hpp"
#include "hilbstab/theta.hpp"

namespace hilbstab {

std::string Rational::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::vector<Rational> walls(int n, double lo, double hi) {
  if (n < 1) throw UsageError("n must be positive");
  if (!(lo < hi)) throw UsageError("empty slope window");
  if (hi - lo > 1e4) throw UsageError("slope window too wide");
  std::vector<Rational> out;
  for (long b = 1; b <= n; ++b)
    for (long a = static_cast<long>(std::ceil(lo * b)) - 1; double(a) < hi * b; ++a) {
      if (double(a) < lo * b || std::gcd(a, b) != 1) continue;
      out.push_back({a, b});
    }
  std::sort(out.begin(), out.end(), [](const Rational& x, const Rational& y) { return x.num * y.den < y.num * x.den; });
  return out;
}

bool is_wall(int n, double s, double eps) {
  for (int b = 1; b <= n; ++b)
    if (std::abs(s * b - std::round(s * b)) < eps * b) return true;
  return false;
}

void require_admissible(int n, double s) {
  if (!std::isfinite(s)) throw UsageError("slope must be finite");
  if (is_wall(n, s)) throw NonGeneric("slope " + std::to_string(s) + " lies on a wall for n=" + std::to_string(n));
}

namespace {

Monomial X(int i) { return mono::x(i + 1); }

Monomial twist_monomial(int n) {
  Monomial m = Monomial::t1().pow_half(n * n);
  for (int i = 0; i < n; ++i) m *= X(i).pow_half(1);
  return m;
}

}  // namespace

FactorList kth_term(const BoxTable& t, const TreeTermSpec& spec, double s) {
  FactorList f = spec.residual;
  for (const auto& a : spec.args) {
    long fl = static_cast<long>(std::floor(a.w * s));
    f.monomials.push_back(a.u.pow_half(static_cast<int>(2 * fl + 1)));
  }
  f.monomials.push_back(twist_monomial(t.n()).inverse());
  return f;
}

RestrictionEntry stab_kth_restriction(const GeneratorContext& ctx, const Partition& lambda, const Partition& mu,
                                      double s, Backend backend, const std::vector<double>& dir) {
  if (lambda.size() != mu.size()) throw UsageError("partitions of different sizes");
  require_admissible(lambda.size(), s);
  const BoxTable tl = box_table(lambda), tm = box_table(mu);
  std::vector<CompiledTerm> terms;
  for (const auto& tree : upsilon_trees(tl))
    terms.push_back(compile(kth_term(tl, combined_term_spec(tl, tree), s), FactorKind::Ahat));
  RestrictionProblem p(std::move(terms), fixed_point(tm, ctx, dir), ctx, backend);
  return finish_entry(symmetrize(p, backend), ctx.jet_order,
                      "T^(s)[" + lambda.to_string() + "][" + mu.to_string() + "]");
}

namespace {

template <class Entry>
RestrictionMatrix fill_matrix(const std::string& kind, int n, Entry&& entry) {
  const int cap = env_cap(kMatrixCap);
  if (n > cap) throw CapExceeded("matrix n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  RestrictionMatrix m;
  m.kind = kind;
  m.n = n;
  m.order = enumerate_partitions_unchecked(n);
  const std::size_t P = m.order.size();
  m.entries.assign(P, std::vector<cd>(P));
  m.diag.assign(P, std::vector<RestrictionEntry>(P));
  for (std::size_t i = 0; i < P; ++i)
    for (std::size_t j = 0; j < P; ++j) {
      m.diag[i][j] = entry(m.order[i], m.order[j]);
      m.entries[i][j] = m.diag[i][j].value;
    }
  return m;
}

}  // namespace

RestrictionMatrix kth_matrix(const GeneratorContext& ctx, int n, double s, Backend backend) {
  require_admissible(n, s);
  RestrictionMatrix m = fill_matrix("kth", n, [&](const Partition& l, const Partition& u) {
    return stab_kth_restriction(ctx, l, u, s, backend);
  });
  m.slope = s;
  return m;
}

cd polarization_twist(const GeneratorContext& ctx, const BoxTable& mu) {
  Monomial m = Monomial::t1().pow_half(mu.n() * mu.n());
  for (const Box& b : mu.boxes) m *= box_character(b).pow_half(1);
  return ctx.value(m);
}

cd kth_diagonal(const GeneratorContext& ctx, const BoxTable& t) {
  cd r = 1.0;
  for (int i = 0; i < t.n(); ++i)
    r *= ahat_from_log(ctx.log_of(Monomial::t1().pow(-t.leg[i]) * Monomial::t2().pow(t.arm[i] + 1)));
  return r / polarization_twist(ctx, t);
}

Eigen::MatrixXcd to_eigen(const RestrictionMatrix& m) {
  const Eigen::Index P = static_cast<Eigen::Index>(m.order.size());
  Eigen::MatrixXcd e(P, P);
  for (Eigen::Index i = 0; i < P; ++i)
    for (Eigen::Index j = 0; j < P; ++j) e(i, j) = m.entries[i][j];
  return e;
}

Eigen::MatrixXcd wall_r_matrix(const GeneratorContext& ctx, int n, double s1, double s2, Backend backend) {
  Eigen::MatrixXcd a = to_eigen(kth_matrix(ctx, n, s1, backend));
  Eigen::MatrixXcd b = to_eigen(kth_matrix(ctx, n, s2, backend));
  return a.partialPivLu().solve(b);
}

// ---- cohomology ----

LinearFactorList s_coh_spec(const BoxTable& t) { return linearize(s_ell_spec(t)); }

LinearFactorList w_coh_spec(const BoxTable& t, const Tree& tree) {
  LinearFactorList f;
  f.sign = tree_weights(t, tree).kappa % 2 ? -1 : 1;
  for (const auto& a : tree_args(t, tree, KaehlerVariant::SingleZ)) f.denominator.push_back(linearize(a.u));
  return f;
}

LinearFactorList coh_term(const BoxTable& t, const Tree& tree) {
  return linearize(combined_term_spec(t, tree).residual);
}

LinearFactorList shenfeld_spec(const BoxTable& t) {
  const int n = t.n();
  LinearFactorList f;
  auto x = [](int i) { return LinearForm::var(i + 1); };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int dc = t.content[j] - t.content[i];
      if (dc > 1) f.numerator.push_back(x(i) - x(j) + LinearForm::of_t(1, 0));
      else if (dc < 1) f.numerator.push_back(x(j) - x(i) + LinearForm::of_t(0, 1));
    }
  for (int i = 0; i < n; ++i) {
    if (t.content[i] < 0) f.numerator.push_back(x(i));
    else if (t.content[i] > 0) f.numerator.push_back(LinearForm::of_t(1, 1) - x(i));
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (t.content[i] < t.content[j]) {
        f.denominator.push_back(x(i) - x(j));
        f.denominator.push_back(x(i) - x(j) + LinearForm::of_t(1, 1));
      }
  return f;
}

LinearFactorList s_gamma_spec(const BoxTable& t) {
  const int n = t.n();
  LinearFactorList f;
  auto x = [](int i) { return LinearForm::var(i + 1); };
  auto adjacent = [&](int i, int j) {
    return std::abs(t.boxes[i].row - t.boxes[j].row) + std::abs(t.boxes[i].col - t.boxes[j].col) == 1;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (t.content[j] != t.content[i] + 1 || adjacent(i, j)) continue;
      if (t.height[i] > t.height[j]) f.numerator.push_back(x(i) - x(j) + LinearForm::of_t(1, 0));
      else f.numerator.push_back(x(j) - x(i) + LinearForm::of_t(0, 1));
    }
  for (int i = 0; i < n; ++i)
    if (t.content[i] == 0 && t.height[i] > 0) f.numerator.push_back(x(i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (t.content[i] == t.content[j] && t.height[i] > t.height[j]) {
        f.denominator.push_back(x(i) - x(j));
        if (t.height[i] > t.height[j] + 2) f.denominator.push_back(x(i) - x(j) + LinearForm::of_t(1, 1));
      }
  return f;
}

namespace {

LinearFactorList product(const LinearFactorList& a, const LinearFactorList& b) {
  LinearFactorList r = a;
  r.sign *= b.sign;
  r.numerator.insert(r.numerator.end(), b.numerator.begin(), b.numerator.end());
  r.denominator.insert(r.denominator.end(), b.denominator.begin(), b.denominator.end());
  return r;
}

std::vector<int> identity(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

cd sym_linear(const CohContext& ctx, const std::vector<CompiledTerm>& terms, int n) {
  cd total = 0.0;
  for (const auto& sigma : all_permutations(n))
    for (const auto& t : terms) total += evaluate_offshell_linear(t, ctx, sigma);
  return total;
}

}  // namespace

cd stab_coh_offshell(const CohContext& ctx, const Partition& lambda) {
  const BoxTable t = box_table(lambda);
  const LinearFactorList s = s_coh_spec(t);
  std::vector<CompiledTerm> terms;
  for (const auto& tree : upsilon_trees(t)) terms.push_back(compile(product(s, w_coh_spec(t, tree))));
  return sym_linear(ctx, terms, t.n());
}

cd shenfeld_sym(const CohContext& ctx, const Partition& lambda) {
  const BoxTable t = box_table(lambda);
  double zeta = 1.0;
  for (auto [k, d] : t.diag_counts)
    for (int i = 2; i <= d; ++i) zeta *= i;
  return sym_linear(ctx, {compile(shenfeld_spec(t))}, t.n()) / zeta;
}

cd tree_sum_coh(const CohContext& ctx, const Partition& lambda) {
  const BoxTable t = box_table(lambda);
  const auto id = identity(t.n());
  cd total = 0.0;
  for (const auto& tree : upsilon_trees(t)) total += evaluate_offshell_linear(compile(w_coh_spec(t, tree)), ctx, id);
  return total;
}

cd tree_sum_closed(const CohContext& ctx, const Partition& lambda) {
  const BoxTable t = box_table(lambda);
  LinearFactorList f;
  auto x = [](int i) { return LinearForm::var(i + 1); };
  f.denominator.push_back(x(t.root));
  for (const auto& l : l_shapes(t)) {
    int lo = t.index_of(l.corner), hi = t.index_of({l.corner.row + 1, l.corner.col + 1});
    f.numerator.push_back(x(hi) - x(lo) + LinearForm::of_t(1, 1));
  }
  for (const Edge& e : skeleton(t)) {
    // head is the box further from the origin
    const Box a = t.boxes[e.lo], b = t.boxes[e.hi];
    int h = (b.row + b.col > a.row + a.col) ? e.hi : e.lo;
    int tl = h == e.hi ? e.lo : e.hi;
    f.denominator.push_back(x(h) - x(tl) - box_character_additive(t.boxes[h]) + box_character_additive(t.boxes[tl]));
  }
  return evaluate_offshell_linear(compile(f), ctx, identity(t.n()));
}

cd s_gamma_sum(const CohContext& ctx, const Partition& lambda) {
  const BoxTable t = box_table(lambda);
  const CompiledTerm c = compile(s_gamma_spec(t));
  cd total = 0.0;
  for (const auto& sigma : content_preserving_permutations(t)) total += evaluate_offshell_linear(c, ctx, sigma);
  return total;
}

RestrictionEntry stab_coh_restriction(const CohContext& ctx, const Partition& lambda, const Partition& mu,
                                      Backend backend, int order) {
  if (lambda.size() != mu.size()) throw UsageError("partitions of different sizes");
  const int n = lambda.size();
  if (order < 0) order = n * n + 4;
  const BoxTable tl = box_table(lambda), tm = box_table(mu);
  std::vector<CompiledTerm> terms;
  for (const auto& tree : upsilon_trees(tl)) terms.push_back(compile(coh_term(tl, tree)));
  RestrictionProblem p(std::move(terms), fixed_point_additive(tm, ctx), ctx, order, backend);
  return finish_entry(symmetrize(p, backend), order, "T^coh[" + lambda.to_string() + "][" + mu.to_string() + "]");
}

RestrictionMatrix coh_matrix(const CohContext& ctx, int n, Backend backend) {
  return fill_matrix("coh", n, [&](const Partition& l, const Partition& u) {
    return stab_coh_restriction(ctx, l, u, backend);
  });
}

cd coh_diagonal(const CohContext& ctx, const BoxTable& t) {
  cd r = 1.0;
  for (int i = 0; i < t.n(); ++i) r *= -double(t.leg[i]) * ctx.t1 + double(t.arm[i] + 1) * ctx.t2;
  return r;
}

QLimitReport verify_q_limit(const GeneratorContext& ctx, int n, double s, const std::vector<double>& q_values,
                            Backend backend) {
  require_admissible(n, s);
  QLimitReport rep;
  const Eigen::MatrixXcd K = to_eigen(kth_matrix(ctx, n, s, backend));
  const double scale = K.cwiseAbs().maxCoeff();
  const double phase = std::arg(ctx.q());
  for (double qm : q_values) {
    GeneratorContext c = ctx;
    c.log_q = cd(std::log(qm), phase);
    c.log_z = -s * c.log_q;
    RestrictionMatrix e = restriction_matrix(c, n, backend);
    Eigen::MatrixXcd E = to_eigen(e);
    for (std::size_t j = 0; j < e.order.size(); ++j) E.col(j) /= polarization_twist(c, box_table(e.order[j]));
    rep.q_values.push_back(qm);
    rep.distances.push_back((E - K).cwiseAbs().maxCoeff() / scale);
  }
  rep.decreasing = true;
  for (std::size_t i = 1; i < rep.distances.size(); ++i)
    if (!(rep.distances[i] < rep.distances[i - 1])) rep.decreasing = false;
  return rep;
}

}  // namespace hilbstab
