#include "hilbstab/envelope.hpp"

#include <algorithm>
#include <functional>

#include "hilbstab/errors.hpp"
#include "hilbstab/theta.hpp"

namespace hilbstab {

namespace {

Monomial X(int i) { return mono::x(i + 1); }  // 0-based box position -> generator

std::vector<std::vector<int>> children(const Tree& tree, int n) {
  std::vector<std::vector<int>> kids(n);
  for (auto [p, c] : tree.edges) kids[p].push_back(c);
  return kids;
}

Monomial subtree_z(const std::vector<std::vector<int>>& kids, int u) {
  Monomial m = mono::zi(u + 1);
  for (int c : kids[u]) m *= subtree_z(kids, c);
  return m;
}

}  // namespace

FactorList s_ell_spec(const BoxTable& t) {
  const int n = t.n();
  const Monomial t1 = Monomial::t1(), t2 = Monomial::t2(), hbar = Monomial::hbar();
  FactorList f;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (rho_exceeds_plus_one(t, j, i)) f.numerator.push_back(X(i) / X(j) * t1);
      else f.numerator.push_back(X(j) / X(i) * t2);
    }
  for (int i = 0; i < n; ++i) f.numerator.push_back(t.content[i] <= 0 ? X(i) : hbar / X(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      f.denominator.push_back(X(i) / X(j));
      f.denominator.push_back(X(i) / X(j) * hbar);
    }
  return f;
}

std::vector<TreeArg> tree_args(const BoxTable& t, const Tree& tree, KaehlerVariant variant) {
  const int n = t.n();
  const TreeWeights tw = tree_weights(t, tree);
  const auto kids = children(tree, n);
  std::vector<TreeArg> args;
  TreeArg root;
  root.u = X(t.root);
  root.w = n;
  root.v = tw.v_root;
  root.child = t.root;
  root.kaehler = variant == KaehlerVariant::SingleZ ? mono::z().pow(n) * Monomial::hbar().pow(tw.v_root)
                                                    : subtree_z(kids, t.root);
  args.push_back(root);
  for (std::size_t e = 0; e < tree.edges.size(); ++e) {
    auto [p, c] = tree.edges[e];
    TreeArg a;
    a.u = X(c) * box_character(t.boxes[p]) / (box_character(t.boxes[c]) * X(p));
    a.w = tw.w[e];
    a.v = tw.v[e];
    a.child = c;
    a.parent = p;
    a.kaehler = variant == KaehlerVariant::SingleZ ? mono::z().pow(a.w) * Monomial::hbar().pow(a.v)
                                                   : subtree_z(kids, c);
    args.push_back(a);
  }
  return args;
}

FactorList w_ell_spec(const BoxTable& t, const Tree& tree, KaehlerVariant variant) {
  FactorList f;
  f.sign = tree_weights(t, tree).kappa % 2 ? -1 : 1;
  for (const auto& a : tree_args(t, tree, variant)) {
    f.kaehler_pairs.push_back({a.u, a.kaehler});
    f.denominator.push_back(a.u);
  }
  return f;
}

FactorList TreeTermSpec::elliptic() const {
  FactorList f = residual;
  for (const auto& a : args) f.kaehler_pairs.push_back({a.u, a.kaehler});
  return f;
}

TreeTermSpec combined_term_spec(const BoxTable& t, const Tree& tree, KaehlerVariant variant) {
  TreeTermSpec spec;
  spec.residual = s_ell_spec(t);
  spec.residual.sign = tree_weights(t, tree).kappa % 2 ? -1 : 1;
  spec.args = tree_args(t, tree, variant);
  auto& num = spec.residual.numerator;
  for (const auto& a : spec.args) {
    auto it = std::find(num.begin(), num.end(), a.u);
    if (it == num.end()) {
      // theta(1/u) = -theta(u)
      it = std::find(num.begin(), num.end(), a.u.inverse());
      if (it == num.end()) throw CancellationMiss("no numerator factor matches theta(" + a.u.to_string() + ")");
      spec.residual.sign = -spec.residual.sign;
    }
    num.erase(it);
  }
  return spec;
}

cd diagonal_elliptic(const GeneratorContext& ctx, const BoxTable& t) {
  cd r = 1.0;
  for (int i = 0; i < t.n(); ++i)
    r *= theta(ctx, Monomial::t1().pow(-t.leg[i]) * Monomial::t2().pow(t.arm[i] + 1));
  return r;
}

namespace {

void check_generic_x(const GeneratorContext& ctx) {
  const int n = static_cast<int>(ctx.log_x.size());
  const cd hb = std::exp(2.0 * ctx.log_hbar_half);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      cd r = std::exp(ctx.log_x[i] - ctx.log_x[j]);
      for (cd target : {cd(1.0), hb, 1.0 / hb})
        if (std::abs(r - target) <= 1e-10 * std::abs(target))
          throw NonGeneric("off-shell point is not generic: x_i/x_j near 1 or hbar^{+-1}");
    }
}

cd sym_sum(const GeneratorContext& ctx, const std::vector<CompiledTerm>& terms, int n) {
  cd total = 0.0;
  for (const auto& sigma : all_permutations(n))
    for (const auto& t : terms) total += evaluate_offshell(t, ctx, sigma);
  return total;
}

}  // namespace

cd stab_offshell_eval(const GeneratorContext& ctx, const Partition& lambda) {
  const BoxTable t = box_table(lambda);
  if (static_cast<int>(ctx.log_x.size()) < t.n()) throw UsageError("context has too few x variables");
  check_generic_x(ctx);
  std::vector<CompiledTerm> terms;
  for (const auto& tree : upsilon_trees(t)) terms.push_back(compile(combined_term_spec(t, tree).elliptic(), FactorKind::Theta));
  return sym_sum(ctx, terms, t.n());
}

cd stab_offshell_uncancelled(const GeneratorContext& ctx, const Partition& lambda) {
  const BoxTable t = box_table(lambda);
  check_generic_x(ctx);
  std::vector<CompiledTerm> terms;
  const FactorList s = s_ell_spec(t);
  for (const auto& tree : upsilon_trees(t)) terms.push_back(compile(s * w_ell_spec(t, tree), FactorKind::Theta));
  return sym_sum(ctx, terms, t.n());
}

cd stab_offshell_eval(GeneratorContext ctx, const Partition& lambda, const std::vector<cd>& x) {
  ctx.log_x.clear();
  for (cd v : x) ctx.log_x.push_back(std::log(v));
  return stab_offshell_eval(ctx, lambda);
}

RestrictionEntry finish_entry(const SymmetrizedValue& sv, int order, const std::string& what) {
  if (sv.max_pole_order > order)
    throw UsageError("jet order " + std::to_string(order) + " below pole order " + std::to_string(sv.max_pole_order) +
                     " in " + what);
  if (sv.max_cancel_residual > kPoleThreshold)
    throw ResidualPole("residual pole in " + what + " (cancellation residual " +
                       std::to_string(sv.max_cancel_residual) + ")");
  return {sv.value, sv.max_pole_order, sv.max_cancel_residual};
}

RestrictionEntry stab_restriction(const GeneratorContext& ctx, const Partition& lambda, const Partition& mu,
                                  Backend backend, const std::vector<double>& dir) {
  if (lambda.size() != mu.size()) throw UsageError("partitions of different sizes");
  const BoxTable tl = box_table(lambda), tm = box_table(mu);
  std::vector<CompiledTerm> terms;
  for (const auto& tree : upsilon_trees(tl))
    terms.push_back(compile(combined_term_spec(tl, tree).elliptic(), FactorKind::Theta));
  RestrictionProblem p(std::move(terms), fixed_point(tm, ctx, dir), ctx, backend);
  return finish_entry(symmetrize(p, backend), ctx.jet_order,
                      "T[" + lambda.to_string() + "][" + mu.to_string() + "]");
}

int RestrictionMatrix::index_of(const Partition& p) const {
  for (std::size_t i = 0; i < order.size(); ++i)
    if (order[i] == p) return static_cast<int>(i);
  return -1;
}

RestrictionMatrix restriction_matrix(const GeneratorContext& ctx, int n, Backend backend) {
  const int cap = env_cap(kMatrixCap);
  if (n > cap) throw CapExceeded("matrix n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  RestrictionMatrix m;
  m.kind = "ell";
  m.n = n;
  m.order = enumerate_partitions_unchecked(n);
  const std::size_t P = m.order.size();
  m.entries.assign(P, std::vector<cd>(P));
  m.diag.assign(P, std::vector<RestrictionEntry>(P));
  for (std::size_t i = 0; i < P; ++i)
    for (std::size_t j = 0; j < P; ++j) {
      m.diag[i][j] = stab_restriction(ctx, m.order[i], m.order[j], backend);
      m.entries[i][j] = m.diag[i][j].value;
    }
  return m;
}

std::vector<std::vector<int>> content_preserving_permutations(const BoxTable& t) {
  std::vector<std::vector<int>> out;
  for (const auto& s : all_permutations(t.n())) {
    bool ok = true;
    for (int i = 0; i < t.n() && ok; ++i) ok = t.content[s[i]] == t.content[i];
    if (ok) out.push_back(s);
  }
  return out;
}

namespace {

FactorList f_lambda_term(const BoxTable& t, const Tree& tree) {
  const int n = t.n();
  const Monomial t1 = Monomial::t1(), t2 = Monomial::t2(), hbar = Monomial::hbar();
  auto in_tree = [&](int i, int j) {
    for (auto [p, c] : tree.edges)
      if ((p == i && c == j) || (p == j && c == i)) return true;
    return false;
  };
  FactorList f;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (t.content[j] != t.content[i] + 1 || in_tree(i, j)) continue;
      if (t.height[i] > t.height[j]) f.numerator.push_back(X(i) / X(j) * t1);
      else f.numerator.push_back(X(j) / X(i) * t2);
    }
  for (int i = 0; i < n; ++i)
    if (t.content[i] == 0 && t.height[i] > 0 && i != t.root) f.numerator.push_back(X(i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (t.content[i] == t.content[j] && t.height[i] > t.height[j]) {
        f.denominator.push_back(X(i) / X(j));
        f.denominator.push_back(X(i) / X(j) * hbar);
      }
  for (const auto& a : tree_args(t, tree, KaehlerVariant::MultiZ)) f.kaehler_pairs.push_back({a.u, a.kaehler});
  return f;
}

}  // namespace

cd f_lambda_eval(const GeneratorContext& ctx, const Partition& lambda, const std::vector<int>& sigma) {
  const BoxTable t = box_table(lambda);
  std::vector<CompiledTerm> terms;
  for (const auto& tree : upsilon_trees(t)) terms.push_back(compile(f_lambda_term(t, tree), FactorKind::Theta));
  RestrictionProblem p(std::move(terms), fixed_point(t, ctx), ctx, Backend::Serial);
  int minval = 0;
  std::vector<Jet> per_tree;
  Jet j = p.at(sigma, &minval, &per_tree);
  SymmetrizedValue sv = reduce_in_order(per_tree, minval);
  (void)j;
  return finish_entry(sv, ctx.jet_order, "F" + lambda.to_string()).value;
}

}  // namespace hilbstab
