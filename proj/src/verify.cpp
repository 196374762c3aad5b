#include "hilbstab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "hilbstab/errors.hpp"
#include "hilbstab/theta.hpp"

namespace hilbstab {

namespace {

struct Acc {
  double err = 0.0;
  int trials = 0;
  void add(double e) {
    if (std::isnan(e)) e = INFINITY;
    err = std::max(err, e);
    ++trials;
  }
};

Check finish(std::string name, const Acc& a, double tol, std::string detail = {}) {
  Check c;
  c.identity = std::move(name);
  c.max_abs_error = a.err;
  c.tolerance = tol;
  c.trials = a.trials;
  c.pass = a.err <= tol;
  c.detail = std::move(detail);
  return c;
}

double rel(cd got, cd want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }

GeneratorContext ctx_for(int n, const VerifyOptions& opt, std::uint64_t offset = 0) {
  return make_context(n, opt.config.seed + offset, opt.config.context_options());
}

cd phi_product(const GeneratorContext& ctx, const BoxTable& t) {
  cd r = 1.0;
  for (const Box& b : t.boxes) r *= ctx.value(box_character(b));
  return r;
}

std::string fmt(double v) {
  std::ostringstream o;
  o.precision(3);
  o << v;
  return o.str();
}

// Runs body and converts library errors into a failed check.
Check guarded(const std::string& name, double tol, const std::function<Check()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    Check c;
    c.identity = name;
    c.max_abs_error = INFINITY;
    c.tolerance = tol;
    c.detail = std::string("error: ") + e.what();
    return c;
  }
}

std::vector<int> component(int n, const std::vector<Edge>& edges, int start) {
  std::vector<std::vector<int>> adj(n);
  for (auto e : edges) {
    adj[e.lo].push_back(e.hi);
    adj[e.hi].push_back(e.lo);
  }
  std::vector<int> seen(n, 0), out{start};
  seen[start] = 1;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (int v : adj[out[k]])
      if (!seen[v]) {
        seen[v] = 1;
        out.push_back(v);
      }
  return out;
}

std::vector<Edge> undirected(const Tree& tree) {
  std::vector<Edge> es;
  for (auto [p, c] : tree.edges) es.push_back(make_edge(p, c));
  std::sort(es.begin(), es.end());
  return es;
}

double scale_of(const Eigen::MatrixXcd& m) { return std::max(m.cwiseAbs().maxCoeff(), 1e-300); }

// T2 against diag(M) T diag(M)^{-1} when inverse is false, diag(M)^{-1} T diag(M) otherwise
double conjugation_error(const Eigen::MatrixXcd& t2, const Eigen::MatrixXcd& t, const std::vector<cd>& m,
                         bool inverse) {
  double err = 0.0;
  for (int i = 0; i < t.rows(); ++i)
    for (int j = 0; j < t.cols(); ++j) {
      cd want = inverse ? t(i, j) * m[j] / m[i] : t(i, j) * m[i] / m[j];
      err = std::max(err, std::abs(t2(i, j) - want));
    }
  return err / scale_of(t2);
}

std::vector<cd> line_bundle(const GeneratorContext& ctx, const RestrictionMatrix& m) {
  std::vector<cd> out;
  for (const auto& p : m.order) out.push_back(phi_product(ctx, box_table(p)));
  return out;
}

double diagonal_error(const RestrictionMatrix& m, const std::function<cd(const BoxTable&)>& oracle) {
  double err = 0.0;
  for (std::size_t i = 0; i < m.order.size(); ++i) err = std::max(err, rel(m.entries[i][i], oracle(box_table(m.order[i]))));
  return err;
}

std::string direction_detail(const RestrictionMatrix& m) {
  const double a = triangular_error(m), b = transposed_triangular_error(m);
  std::string dir = a <= b ? "column partition dominates row partition" : "row partition dominates column partition";
  if (m.order.size() == 1) dir = "1x1";
  return "support: " + dir + "; transposed pattern error " + fmt(b);
}

Check triangular_check(const std::string& name, const RestrictionMatrix& m, double tol) {
  Acc a;
  a.add(triangular_error(m));
  return finish(name, a, tol, direction_detail(m));
}

Check pole_check(const std::string& name, const RestrictionMatrix& m) {
  Acc a;
  int pole = 0;
  for (const auto& row : m.diag)
    for (const auto& e : row) {
      a.add(e.max_cancel_residual);
      pole = std::max(pole, e.max_pole_order);
    }
  return finish(name, a, kPoleThreshold, "max term pole order " + std::to_string(pole));
}

// Interior points of the wall intervals covering [0, 1): (left, right) per interval.
struct Chamber {
  double lo, hi;
  double at(double f) const { return lo + f * (hi - lo); }
};

std::vector<Chamber> chambers(int n) {
  auto ws = walls(n, 0.0, 1.0);
  std::vector<Chamber> out;
  for (std::size_t k = 0; k < ws.size(); ++k)
    out.push_back({ws[k].value(), k + 1 < ws.size() ? ws[k + 1].value() : 1.0});
  return out;
}

}  // namespace

bool in_support(const Partition& lambda, const Partition& mu) {
  Dominance d = dominance_compare(mu, lambda);
  return d == Dominance::Greater || d == Dominance::Equal;
}

namespace {

double pattern_error(const RestrictionMatrix& m, bool transposed) {
  double err = 0.0;
  for (std::size_t i = 0; i < m.order.size(); ++i) {
    double row = 0.0;
    for (cd v : m.entries[i]) row = std::max(row, std::abs(v));
    if (row == 0.0) continue;
    for (std::size_t j = 0; j < m.order.size(); ++j) {
      bool ok = transposed ? in_support(m.order[j], m.order[i]) : in_support(m.order[i], m.order[j]);
      if (!ok) err = std::max(err, std::abs(m.entries[i][j]) / row);
    }
  }
  return err;
}

}  // namespace

double triangular_error(const RestrictionMatrix& m) { return pattern_error(m, false); }
double transposed_triangular_error(const RestrictionMatrix& m) { return pattern_error(m, true); }

long brute_force_partition_count(int n) {
  // non-increasing compositions with largest part at most k
  std::function<long(int, int)> count = [&](int rest, int k) -> long {
    if (rest == 0) return 1;
    long c = 0;
    for (int p = std::min(rest, k); p >= 1; --p) c += count(rest - p, p);
    return c;
  };
  return count(n, n);
}

bool is_spanning_tree(int n_vertices, const std::vector<Edge>& edges) {
  if (static_cast<int>(edges.size()) != n_vertices - 1) return false;
  std::vector<int> up(n_vertices);
  std::iota(up.begin(), up.end(), 0);
  std::function<int(int)> find = [&](int v) { return up[v] == v ? v : up[v] = find(up[v]); };
  for (auto e : edges) {
    int a = find(e.lo), b = find(e.hi);
    if (a == b) return false;
    up[a] = b;
  }
  return true;
}

bool all_pass(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass || c.informational; });
}

json to_json(const Check& c) {
  json j;
  j["identity"] = c.identity;
  j["max_abs_error"] = std::isfinite(c.max_abs_error) ? json(c.max_abs_error) : json(nullptr);
  j["tolerance"] = c.tolerance;
  j["trials"] = c.trials;
  j["pass"] = c.pass;
  if (c.informational) j["informational"] = true;
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

std::vector<Check> elliptic_suite(int n, const VerifyOptions& opt) {
  const int cap = env_cap(kVerifyCap);
  if (n < 1 || n > cap) throw CapExceeded("verify n=" + std::to_string(n) + " outside 1.." + std::to_string(cap));
  const double tol = opt.config.tol;
  const auto parts = enumerate_partitions(n);
  std::vector<Check> out;

  // ---- combinatorics ----
  {
    Acc a;
    a.add(std::abs(double(brute_force_partition_count(n)) - double(parts.size())));
    std::set<Partition> uniq(parts.begin(), parts.end());
    a.add(double(parts.size() - uniq.size()));
    out.push_back(finish("partition_count", a, 0.0, std::to_string(parts.size()) + " partitions"));
  }
  {
    Acc order, beta, chars;
    for (const auto& l : parts) {
      const BoxTable t = box_table(l);
      double bad = 0;
      for (int i = 1; i < t.n(); ++i)
        if (!(std::pair(t.content[i - 1], -t.height[i - 1]) < std::pair(t.content[i], -t.height[i]))) ++bad;
      order.add(bad);
      bad = 0;
      for (int i = 0; i < t.n(); ++i) {
        int c = t.content[i];
        bool rule = c >= 0 ? t.d(c + 1) == t.d(c) : t.d(c + 1) == t.d(c) + 1;
        if (rule != (t.beta[i] == 1)) ++bad;
      }
      beta.add(bad);
      std::set<std::pair<int, int>> seen;
      for (const Box& b : t.boxes) {
        Monomial m = box_character(b);
        seen.insert({m.twice_exponent(gen_a()), m.twice_exponent(gen_hbar_half())});
      }
      chars.add(double(t.n()) - double(seen.size()));
    }
    out.push_back(finish("canonical_order", order, 0.0));
    out.push_back(finish("beta_profile_rule", beta, 0.0));
    out.push_back(finish("box_characters_distinct", chars, 0.0));
  }
  {
    Acc a;
    auto ge = [](const Partition& x, const Partition& y) {
      Dominance d = dominance_compare(x, y);
      return d == Dominance::Greater || d == Dominance::Equal;
    };
    for (const auto& x : parts)
      for (const auto& y : parts) {
        Dominance d = dominance_compare(x, y), e = dominance_compare(y, x);
        bool anti = (d == Dominance::Greater) == (e == Dominance::Less) && (d == Dominance::Equal) == (x == y) &&
                    (d == Dominance::Incomparable) == (e == Dominance::Incomparable);
        a.add(anti ? 0.0 : 1.0);
        for (const auto& z : parts) a.add(ge(x, y) && ge(y, z) && !ge(x, z) ? 1.0 : 0.0);
      }
    out.push_back(finish("dominance_partial_order", a, 0.0));
  }
  {
    Acc sk, ups, weights;
    for (const auto& l : parts) {
      const BoxTable t = box_table(l);
      const auto gamma = skeleton(t);
      int squares = 0;
      for (const Box& b : t.boxes) squares += l.contains({b.row + 1, b.col + 1});
      int expect = 2 * t.n() - l.length() - l.part(1);
      sk.add(std::abs(double(gamma.size()) - expect) +
             std::abs(double(gamma.size()) - t.n() + 1 - squares));

      const auto ls = l_shapes(t);
      int m = 0;
      for (auto [k, d] : t.diag_counts) m += d - 1;
      const auto trees = upsilon_trees(t);
      double bad = std::abs(double(ls.size()) - m) + std::abs(double(trees.size()) - double(1L << m));
      std::set<std::vector<Edge>> distinct;
      std::set<Edge> in_l;
      for (const auto& s : ls) {
        in_l.insert(s.delta1);
        in_l.insert(s.delta2);
      }
      for (const auto& tr : trees) {
        auto es = undirected(tr);
        distinct.insert(es);
        if (!is_spanning_tree(t.n(), es)) ++bad;
        for (auto e : gamma)
          if (!in_l.count(e) && !std::binary_search(es.begin(), es.end(), e)) ++bad;

        const TreeWeights tw = tree_weights(t, tr);
        double wbad = 0;
        int root_sum = 0;
        for (std::size_t e = 0; e < tr.edges.size(); ++e) {
          auto [p, c] = tr.edges[e];
          if (p == t.root) root_sum += tw.w[e];
          if (tw.w[e] < 1 || tw.w[e] > t.n() - 1) ++wbad;
          std::vector<Edge> rest;
          for (auto f : es)
            if (f != make_edge(p, c)) rest.push_back(f);
          if (static_cast<int>(component(t.n(), rest, c).size()) != tw.w[e]) ++wbad;
          int v = t.beta[c];
          for (std::size_t f = 0; f < tr.edges.size(); ++f)
            if (tr.edges[f].first == c) v += tw.v[f];
          if (v != tw.v[e]) ++wbad;
        }
        int vr = t.beta[t.root];
        for (std::size_t f = 0; f < tr.edges.size(); ++f)
          if (tr.edges[f].first == t.root) vr += tw.v[f];
        if (vr != tw.v_root) ++wbad;
        if (root_sum != t.n() - 1) ++wbad;
        if (m == 0 && tw.kappa != 0) ++wbad;
        weights.add(wbad);
      }
      bad += double(trees.size() - distinct.size());
      ups.add(bad);
    }
    out.push_back(finish("skeleton_cycle_count", sk, 0.0));
    out.push_back(finish("upsilon_trees_valid", ups, 0.0));
    out.push_back(finish("tree_weights_valid", weights, 0.0));
  }

  // ---- theta and jets ----
  out.push_back(guarded("theta_quasi_periods", 1e-12, [&] {
    const GeneratorContext ctx = ctx_for(n, opt);
    std::mt19937_64 rng(opt.config.seed * 7919 + 1);
    std::uniform_real_distribution<double> u(-0.7, 0.7), ph(-3.0, 3.0);
    const cd lq = ctx.log_q;
    const double tt = ctx.theta_tol;
    auto th = [&](cd l) { return theta_from_log(l, ctx.q(), tt); };
    Acc a;
    for (int k = 0; k < 10; ++k) {
      cd lx(u(rng), ph(rng)), lz(u(rng), ph(rng));
      cd t = th(lx);
      a.add(std::abs(th(lx + lq) + t / (std::exp(0.5 * lq) * std::exp(lx))) / std::abs(t));
      a.add(std::abs(th(-lx) + t) / std::abs(t));
      auto ph2 = [&](cd x, cd z) { return th(x + z) / (th(x) * th(z)); };
      cd p = ph2(lx, lz);
      a.add(std::abs(ph2(lx + lq, lz) * std::exp(lz) - p) / std::abs(p));
      a.add(std::abs(ph2(lz, lx) - p) / std::abs(p));
    }
    a.add(std::abs(theta(ctx, Monomial{})));
    return finish("theta_quasi_periods", a, 1e-12);
  }));
  out.push_back(guarded("jet_arithmetic", 1e-12, [&] {
    std::mt19937_64 rng(opt.config.seed * 104729 + 3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const int K = n * n + 4;
    Acc a;
    for (int k = 0; k < 10; ++k) {
      std::vector<cd> ca(K + 1), cb(K + 1);
      for (auto& c : ca) c = {u(rng), u(rng)};
      for (auto& c : cb) c = {u(rng), u(rng)};
      ca[0] += 2.0;
      cb[0] += 2.0;
      Jet A = Jet::from_coeffs(0, ca, K), B = Jet::from_coeffs(-1, cb, K);
      Jet back = (A * B) / B;
      for (int p = 0; p <= K; ++p) a.add(std::abs(back.coeff(p) - A.coeff(p)));
      Jet l = jet_log(jet_exp(Jet::from_coeffs(0, ca, K)));
      for (int p = 1; p <= K; ++p) a.add(std::abs(l.coeff(p) - ca[p]));
    }
    Jet s = Jet::variable(4);
    Jet h = (s + s * s) / (s * cd(2.0));
    a.add(std::abs(h.coeff(0) - 0.5) + std::abs(h.coeff(1) - 0.5) + std::abs(double(h.valuation())));
    return finish("jet_arithmetic", a, 1e-12);
  }));
  out.push_back(guarded("factor_jet_consistency", 1e-12, [&] {
    const GeneratorContext ctx = ctx_for(n, opt);
    Acc a;
    for (int i = 1; i <= n; ++i) {
      Monomial m = mono::x(i) * Monomial::t2();
      a.add(rel(eval_factor_jet(ctx, m, 1.5, 1).coeff(0), theta(ctx, m)));
    }
    cd prod = 1.0, qi = 1.0;
    for (int i = 1; i < 200; ++i) {
      qi *= ctx.q();
      prod *= (1.0 - qi) * (1.0 - qi);
      if (std::abs(qi) < 1e-18) break;
    }
    Jet j = eval_factor_jet(ctx, Monomial{}, 1.0, 4);
    a.add(rel(j.coeff(1), prod) + std::abs(j.coeff(0)));
    return finish("factor_jet_consistency", a, 1e-12);
  }));

  // ---- off-shell envelope ----
  out.push_back(guarded("cancelled_term_identity", 1e-9, [&] {
    Acc a;
    for (int trial = 0; trial < 20; ++trial) {
      const GeneratorContext ctx = ctx_for(n, opt, 1000 + trial);
      for (const auto& l : parts) {
        const BoxTable t = box_table(l);
        const FactorList s = s_ell_spec(t);
        for (const auto& tr : upsilon_trees(t)) {
          cd c = evaluate_factor_list(ctx, combined_term_spec(t, tr).elliptic(), FactorKind::Theta);
          cd r = evaluate_factor_list(ctx, s * w_ell_spec(t, tr), FactorKind::Theta);
          a.add(rel(c, r));
        }
      }
    }
    return finish("cancelled_term_identity", a, 1e-9);
  }));
  out.push_back(guarded("kaehler_quasi_period_offshell", tol, [&] {
    const GeneratorContext ctx = ctx_for(n, opt);
    Acc a;
    for (const auto& l : parts) {
      const BoxTable t = box_table(l);
      GeneratorContext c2 = ctx;
      c2.log_z += ctx.log_q;
      cd fac = phi_product(ctx, t);
      for (int i = 0; i < n; ++i) fac /= std::exp(ctx.log_x[i]);
      a.add(rel(stab_offshell_eval(c2, l), fac * stab_offshell_eval(ctx, l)));
    }
    return finish("kaehler_quasi_period_offshell", a, tol);
  }));
  out.push_back(guarded("equivariant_quasi_period_offshell", tol, [&] {
    const GeneratorContext ctx = ctx_for(n, opt);
    Acc a;
    for (const auto& l : parts) {
      GeneratorContext c2 = ctx;
      c2.log_x[0] += ctx.log_q;
      cd fac = -1.0 / (std::exp(0.5 * ctx.log_q) * std::exp(ctx.log_x[0]) * std::exp(ctx.log_z));
      a.add(rel(stab_offshell_eval(c2, l), fac * stab_offshell_eval(ctx, l)));
    }
    return finish("equivariant_quasi_period_offshell", a, tol);
  }));

  // ---- restriction matrix ----
  out.push_back(guarded("elliptic_matrix", tol, [&]() -> Check {
    const GeneratorContext ctx = ctx_for(n, opt);
    const RestrictionMatrix m = restriction_matrix(ctx, n, opt.backend);
    out.push_back(triangular_check("elliptic_triangular", m, tol));
    Acc d;
    d.add(diagonal_error(m, [&](const BoxTable& t) { return diagonal_elliptic(ctx, t); }));
    out.push_back(finish("elliptic_diagonal", d, tol));
    out.push_back(pole_check("elliptic_cancelled_poles", m));
    GeneratorContext c2 = ctx;
    c2.log_z += ctx.log_q;
    const RestrictionMatrix m2 = restriction_matrix(c2, n, opt.backend);
    Acc k;
    k.add(conjugation_error(to_eigen(m2), to_eigen(m), line_bundle(ctx, m), false));
    return finish("elliptic_kaehler_quasi_period", k, tol);
  }));
  out.push_back(guarded("f_lambda_delta", 1e-6, [&] {
    const GeneratorContext ctx = ctx_for(n, opt);
    Acc a, s;
    for (const auto& l : parts) {
      const BoxTable t = box_table(l);
      cd sum = 0.0;
      for (const auto& sigma : content_preserving_permutations(t)) {
        bool id = std::is_sorted(sigma.begin(), sigma.end());
        cd f = f_lambda_eval(ctx, l, sigma);
        sum += f;
        a.add(std::abs(f - (id ? 1.0 : 0.0)));
      }
      s.add(std::abs(sum - 1.0));
    }
    out.push_back(finish("f_lambda_sum", s, 1e-6));
    return finish("f_lambda_delta", a, 1e-6);
  }));
  return out;
}

std::vector<Check> limits_suite(int n, const VerifyOptions& opt) {
  const int cap = env_cap(kVerifyCap);
  if (n < 1 || n > cap) throw CapExceeded("verify n=" + std::to_string(n) + " outside 1.." + std::to_string(cap));
  const double tol = opt.config.tol;
  const auto parts = enumerate_partitions(n);
  std::vector<Check> out;

  {
    Acc a;
    auto w0 = walls(n, 0.0, 1.0), w1 = walls(n, 1.0, 2.0);
    a.add(std::abs(double(w0.size()) - double(w1.size())));
    for (std::size_t k = 0; k < std::min(w0.size(), w1.size()); ++k)
      a.add(w1[k].num - w1[k].den == w0[k].num && w1[k].den == w0[k].den ? 0.0 : 1.0);
    out.push_back(finish("walls_shift_invariance", a, 0.0));
  }

  // ---- K-theory ----
  out.push_back(guarded("kth_local_constancy", 1e-10, [&]() -> Check {
    const GeneratorContext ctx = ctx_for(n, opt);
    const auto ch = chambers(n);
    std::vector<Eigen::MatrixXcd> mats;
    std::vector<RestrictionMatrix> raw;
    Acc lc, tri, diag, slope_free, real;
    for (const auto& c : ch) {
      RestrictionMatrix a = kth_matrix(ctx, n, c.at(0.3), opt.backend);
      RestrictionMatrix b = kth_matrix(ctx, n, c.at(0.7), opt.backend);
      Eigen::MatrixXcd A = to_eigen(a), B = to_eigen(b);
      lc.add((A - B).cwiseAbs().maxCoeff() / scale_of(A));
      tri.add(triangular_error(a));
      diag.add(diagonal_error(a, [&](const BoxTable& t) { return kth_diagonal(ctx, t); }));
      mats.push_back(A);
      raw.push_back(a);
    }
    for (const auto& m : mats)
      for (int i = 0; i < m.rows(); ++i) slope_free.add(rel(m(i, i), mats[0](i, i)));
    out.push_back(finish("kth_triangular", tri, tol, direction_detail(raw[0])));
    out.push_back(finish("kth_diagonal", diag, tol));
    out.push_back(finish("kth_diagonal_slope_independent", slope_free, 1e-10));

    // crossing each wall in (0, 1); the wall at 0 is tracked separately
    Acc cross;
    double least = INFINITY;
    std::string which;
    for (std::size_t k = 1; k < mats.size(); ++k) {
      double change = (mats[k] - mats[k - 1]).cwiseAbs().maxCoeff();
      cross.trials++;
      if (change < least) {
        least = change;
        which = walls(n, 0.0, 1.0)[k].to_string();
      }
    }
    Check c;
    c.identity = "kth_wall_crossing";
    c.tolerance = 1e-6;
    c.trials = cross.trials;
    c.max_abs_error = cross.trials ? least : 0.0;
    c.pass = cross.trials == 0 || least > 1e-6;
    c.detail = cross.trials ? "smallest entry change across the walls in (0,1) is at " + which + "; must exceed tolerance"
                            : "no walls in (0,1)";
    out.push_back(c);

    double below = ch.back().at(0.5) - 1.0;
    const Eigen::MatrixXcd L = to_eigen(kth_matrix(ctx, n, below, opt.backend));
    Check z;
    z.identity = "kth_integral_wall_change";
    z.informational = true;
    z.tolerance = 1e-6;
    z.trials = 1;
    z.max_abs_error = (L - mats[0]).cwiseAbs().maxCoeff();
    z.pass = z.max_abs_error > 1e-6;
    z.detail = "entry change across the wall at 0, slopes " + fmt(below) + " and " + fmt(ch[0].at(0.3));
    out.push_back(z);

    const double s0 = ch[0].at(0.3);
    const Eigen::MatrixXcd S1 = to_eigen(kth_matrix(ctx, n, s0 + 1.0, opt.backend));
    Acc sh;
    sh.add(conjugation_error(S1, mats[0], line_bundle(ctx, raw[0]), true));
    out.push_back(finish("kth_integral_shift", sh, tol));
    return finish("kth_local_constancy", lc, 1e-10);
  }));
  out.push_back(guarded("kth_real_on_positive_axis", 1e-10, [&] {
    RunConfig rc = opt.config;
    rc.q = cd(0.11, 0.0);
    rc.a = cd(0.83, 0.0);
    rc.hbar_half = cd(1.17, 0.0);
    rc.z = cd(1.37, 0.0);
    const GeneratorContext ctx = make_context(n, rc.seed, rc.context_options());
    Acc a;
    for (const auto& c : chambers(n)) {
      Eigen::MatrixXcd T = to_eigen(kth_matrix(ctx, n, c.at(0.5), opt.backend));
      a.add(T.imag().cwiseAbs().maxCoeff() / scale_of(T));
    }
    return finish("kth_real_on_positive_axis", a, 1e-10);
  }));
  out.push_back(guarded("wall_r_identity", tol, [&]() -> Check {
    const GeneratorContext ctx = ctx_for(n, opt);
    const auto ch = chambers(n);
    Eigen::MatrixXcd R = wall_r_matrix(ctx, n, ch[0].at(0.25), ch[0].at(0.75), opt.backend);
    Acc a;
    a.add((R - Eigen::MatrixXcd::Identity(R.rows(), R.cols())).cwiseAbs().maxCoeff());
    if (ch.size() > 1) {
      Eigen::MatrixXcd W = wall_r_matrix(ctx, n, ch[0].at(0.5), ch[1].at(0.5), opt.backend);
      RestrictionMatrix rm;
      rm.order = enumerate_partitions(n);
      rm.entries.assign(W.rows(), std::vector<cd>(W.cols()));
      for (int i = 0; i < W.rows(); ++i)
        for (int j = 0; j < W.cols(); ++j) rm.entries[i][j] = W(i, j);
      double dev = (W - Eigen::MatrixXcd::Identity(W.rows(), W.cols())).cwiseAbs().maxCoeff();
      Acc t;
      t.add(triangular_error(rm));
      Check c = finish("wall_r_triangular", t, tol,
                       "crossing " + walls(n, 0.0, 1.0)[1].to_string() + ", deviation from identity " + fmt(dev));
      c.pass = c.pass && dev > 1e-6;
      out.push_back(c);
    }
    return finish("wall_r_identity", a, tol);
  }));

  // ---- cohomology ----
  out.push_back(guarded("coh_tree_sum", 1e-9, [&] {
    Acc a;
    for (int trial = 0; trial < 10; ++trial) {
      const CohContext ctx = make_coh_context(n, opt.config.seed + 2000 + trial);
      for (const auto& l : parts) a.add(rel(tree_sum_coh(ctx, l), tree_sum_closed(ctx, l)));
    }
    return finish("coh_tree_sum", a, 1e-9);
  }));
  out.push_back(guarded("coh_shenfeld", tol, [&] {
    Acc a;
    for (int trial = 0; trial < 5; ++trial) {
      const CohContext ctx = make_coh_context(n, opt.config.seed + 3000 + trial);
      for (const auto& l : parts) a.add(rel(stab_coh_offshell(ctx, l), shenfeld_sym(ctx, l)));
    }
    return finish("coh_shenfeld", a, tol);
  }));
  out.push_back(guarded("coh_s_gamma_sum", 1e-9, [&] {
    Acc a;
    for (int trial = 0; trial < 10; ++trial) {
      const CohContext ctx = make_coh_context(n, opt.config.seed + 4000 + trial);
      for (const auto& l : parts) a.add(std::abs(s_gamma_sum(ctx, l) - 1.0));
    }
    return finish("coh_s_gamma_sum", a, 1e-9);
  }));
  out.push_back(guarded("coh_matrix", tol, [&]() -> Check {
    const CohContext ctx = make_coh_context(n, opt.config.seed);
    const RestrictionMatrix m = coh_matrix(ctx, n, opt.backend);
    out.push_back(triangular_check("coh_triangular", m, tol));
    out.push_back(pole_check("coh_cancelled_poles", m));
    Acc d;
    d.add(diagonal_error(m, [&](const BoxTable& t) { return coh_diagonal(ctx, t); }));
    return finish("coh_diagonal", d, tol);
  }));

  // ---- elliptic to K-theory ----
  if (n <= 3) {
    out.push_back(guarded("q_limit_decreasing", 0.0, [&] {
      const GeneratorContext ctx = ctx_for(n, opt);
      const double s = 0.23;
      QLimitReport r = verify_q_limit(ctx, n, s, {1e-2, 1e-3}, opt.backend);
      std::string d = "s=0.23, distances";
      for (double v : r.distances) d += " " + fmt(v);
      Check c;
      c.identity = "q_limit_decreasing";
      c.trials = static_cast<int>(r.distances.size());
      c.max_abs_error = r.distances.back();
      c.pass = r.decreasing;
      c.detail = d + "; pass requires strict decrease";
      out.push_back(c);
      Check f = c;
      f.identity = "q_limit_final_distance";
      f.informational = true;
      f.tolerance = 1e-2;
      f.pass = r.distances.back() < 1e-2;
      f.detail = d;
      return f;
    }));
  }
  return out;
}

std::vector<Check> matrix_suite(const RestrictionMatrix& m, const VerifyOptions& opt) {
  const double tol = opt.config.tol;
  std::vector<Check> out;
  {
    Acc a;
    for (const auto& row : m.entries)
      for (cd v : row) a.add(std::isfinite(v.real()) && std::isfinite(v.imag()) ? 0.0 : 1.0);
    out.push_back(finish("entries_finite", a, 0.0));
  }
  {
    Acc a;
    const auto expect = enumerate_partitions_unchecked(m.n);
    a.add(expect == m.order ? 0.0 : 1.0);
    out.push_back(finish("partition_order", a, 0.0));
  }
  out.push_back(triangular_check(m.kind + "_triangular", m, tol));

  auto compare = [&](const std::string& name, const RestrictionMatrix& fresh) {
    Acc a;
    a.add((to_eigen(fresh) - to_eigen(m)).cwiseAbs().maxCoeff() / scale_of(to_eigen(m)));
    out.push_back(finish(name, a, tol));
  };

  if (m.kind == "coh") {
    out.push_back(guarded("coh_diagonal", tol, [&] {
      const CohContext ctx = make_coh_context(m.n, opt.config.seed);
      Acc d;
      d.add(diagonal_error(m, [&](const BoxTable& t) { return coh_diagonal(ctx, t); }));
      compare("coh_reproduced", coh_matrix(ctx, m.n, opt.backend));
      return finish("coh_diagonal", d, tol);
    }));
    return out;
  }

  out.push_back(guarded(m.kind + "_diagonal", tol, [&] {
    const GeneratorContext ctx = make_context(m.n, opt.config.seed, opt.config.context_options());
    Acc d;
    if (m.kind == "ell") {
      d.add(diagonal_error(m, [&](const BoxTable& t) { return diagonal_elliptic(ctx, t); }));
      GeneratorContext c2 = ctx;
      c2.log_z += ctx.log_q;
      Acc k;
      k.add(conjugation_error(to_eigen(restriction_matrix(c2, m.n, opt.backend)), to_eigen(m), line_bundle(ctx, m), false));
      out.push_back(finish("ell_kaehler_quasi_period", k, tol));
      compare("ell_reproduced", restriction_matrix(ctx, m.n, opt.backend));
    } else {
      require_admissible(m.n, m.slope);
      d.add(diagonal_error(m, [&](const BoxTable& t) { return kth_diagonal(ctx, t); }));
      // another slope in the same wall interval
      auto ws = walls(m.n, m.slope - 1.0, m.slope + 1.0);
      double lo = -INFINITY, hi = INFINITY;
      for (const auto& w : ws) {
        if (w.value() < m.slope) lo = w.value();
        else if (hi == INFINITY) hi = w.value();
      }
      compare("kth_local_constancy", kth_matrix(ctx, m.n, 0.5 * (lo + hi), opt.backend));
      Acc sh;
      sh.add(conjugation_error(to_eigen(kth_matrix(ctx, m.n, m.slope + 1.0, opt.backend)), to_eigen(m),
                               line_bundle(ctx, m), true));
      out.push_back(finish("kth_integral_shift", sh, tol));
    }
    return finish(m.kind + "_diagonal", d, tol);
  }));
  return out;
}

}  // namespace hilbstab
