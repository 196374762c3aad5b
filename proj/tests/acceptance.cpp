// Prints one PASS/FAIL line per acceptance criterion.
//   acceptance [--known-failures 9,10]
// With --known-failures the exit status is 0 exactly when the failing set
// equals the given set; without it, 0 means everything passed.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hilbstab/envelope.hpp"
#include "hilbstab/theta.hpp"
#include "hilbstab/verify.hpp"

using namespace hilbstab;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

double rel(cd got, cd want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }

struct Outcome {
  bool pass = true;
  std::string note;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!note.empty()) note += "; ";
      note += what;
    }
  }
};

std::string num(double v) {
  std::ostringstream o;
  o.precision(3);
  o << v;
  return o.str();
}

// Suite checks keyed by (n, identity).
std::map<std::pair<int, std::string>, Check> collected;

void collect(int n, const std::vector<Check>& checks) {
  for (const auto& c : checks) collected[{n, c.identity}] = c;
}

void use(Outcome& o, int n, const std::string& id) {
  auto it = collected.find({n, id});
  if (it == collected.end()) {
    o.require(false, id + " missing at n=" + std::to_string(n));
    return;
  }
  const Check& c = it->second;
  o.require(c.pass, id + " n=" + std::to_string(n) + " err " + num(c.max_abs_error) + " vs " + num(c.tolerance) +
                        (c.detail.empty() ? "" : " (" + c.detail + ")"));
}

const Monomial t1 = Monomial::t1(), t2 = Monomial::t2(), hb = Monomial::hbar(), zz = mono::z();
Monomial x(int i) { return mono::x(i); }

Outcome worked_trees() {
  Outcome o;
  const auto t0 = Clock::now();
  const BoxTable t = box_table(Partition({2, 2}));
  const auto trees = upsilon_trees(t);
  o.require(trees.size() == 2, "expected two trees");
  if (trees.size() != 2) return o;
  const TreeWeights a = tree_weights(t, trees[0]), b = tree_weights(t, trees[1]);
  o.require(a.w == std::vector<int>{2, 1, 1} && a.v == std::vector<int>{1, 0, 0} && a.v_root == 1 && a.kappa == 0,
            "first tree weights");
  o.require(b.w == std::vector<int>{3, 2, 1} && b.v == std::vector<int>{1, 0, 0} && b.v_root == 1 && b.kappa == 1,
            "second tree weights");
  double err = 0.0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const GeneratorContext c = make_context(4, seed);
    auto ph = [&](const Monomial& u, const Monomial& k) { return phi(c, u, k); };
    cd w1 = ph(x(3), zz.pow(4) * hb) * ph(x(1) / x(3) * t1, zz.pow(2) * hb) * ph(x(2) / x(1) * t2, zz) *
            ph(x(4) / x(3) * t2, zz);
    cd w2 = -ph(x(3), zz.pow(4) * hb) * ph(x(1) / x(3) * t1, zz.pow(3) * hb) * ph(x(2) / x(1) * t2, zz.pow(2)) *
            ph(x(4) / x(2) / t1, zz);
    err = std::max(err, rel(evaluate_factor_list(c, w_ell_spec(t, trees[0]), FactorKind::Theta), w1));
    err = std::max(err, rel(evaluate_factor_list(c, w_ell_spec(t, trees[1]), FactorKind::Theta), w2));
  }
  const double sec = seconds_since(t0);
  o.require(err < 1e-10, "phi products differ by " + num(err));
  o.require(sec < 1.0, "took " + num(sec) + " s");
  o.note = o.pass ? "max rel err " + num(err) + ", " + num(sec) + " s" : o.note;
  return o;
}

Outcome beta_table() {
  Outcome o;
  const auto t0 = Clock::now();
  const BoxTable t = box_table(Partition({4, 4, 4, 3, 3, 2}));
  // beta by content -3..5, read off the figure
  const int by_content[] = {1, 1, 0, 1, 1, 0, 1, 0, 0};
  o.require(t.n() == 20, "box count");
  int bad = 0;
  for (int i = 0; i < t.n(); ++i) {
    const int k = t.content[i];
    if (k < -3 || k > 5 || t.beta[i] != by_content[k + 3]) ++bad;
  }
  const double sec = seconds_since(t0);
  o.require(bad == 0, std::to_string(bad) + " boxes differ");
  o.require(sec < 1.0, "took " + num(sec) + " s");
  if (o.pass) o.note = "20/20 boxes, " + num(sec) + " s";
  return o;
}

Outcome s_ell_closed_forms() {
  Outcome o;
  double err = 0.0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const GeneratorContext c = make_context(2, seed);
    auto th = [&](const Monomial& m) { return theta(c, m); };
    auto ev = [&](const Partition& l) { return evaluate_factor_list(c, s_ell_spec(box_table(l)), FactorKind::Theta); };
    err = std::max(err, rel(ev(Partition({1})), th(t2) * th(x(1))));
    cd one_one = th(t2) * th(t2) * th(x(2) / x(1) * t2) * th(x(1) / x(2) * t2) * th(x(1)) * th(t1 * t2 / x(2)) /
                 (th(x(1) / x(2)) * th(x(1) / x(2) * t1 * t2));
    err = std::max(err, rel(ev(Partition({1, 1})), one_one));
    cd two = th(t2) * th(t2) * th(x(1) / x(2) * t2) * th(x(1) / x(2) * t1) * th(x(1)) * th(x(2)) /
             (th(x(1) / x(2)) * th(x(1) / x(2) * t1 * t2));
    err = std::max(err, rel(ev(Partition({2})), two));
  }
  o.require(err < 1e-10, "rel err " + num(err));
  if (o.pass) o.note = "max rel err " + num(err);
  return o;
}

Outcome elliptic_matrices() {
  Outcome o;
  for (int n = 2; n <= 4; ++n)
    for (const char* id : {"elliptic_triangular", "elliptic_diagonal", "elliptic_kaehler_quasi_period"}) use(o, n, id);
  // the same direction for every n: the suite measures against one fixed pattern
  const GeneratorContext ctx = make_context(4, 1);
  const auto t0 = Clock::now();
  const RestrictionMatrix m = restriction_matrix(ctx, 4, Backend::Serial);
  const double sec = seconds_since(t0);
  o.require(sec < 60.0, "serial n=4 took " + num(sec) + " s");
  o.require(triangular_error(m) < 1e-8, "serial n=4 matrix not triangular");
  if (o.pass) o.note = "n=2,3,4; serial n=4 matrix " + num(sec) + " s";
  return o;
}

Outcome table_of(const std::vector<std::pair<int, std::vector<std::string>>>& rows, const std::string& ok_note) {
  Outcome o;
  for (const auto& [n, ids] : rows)
    for (const auto& id : ids) use(o, n, id);
  if (o.pass) o.note = ok_note;
  return o;
}

Outcome tree_counts() {
  Outcome o;
  int checked = 0;
  for (int n = 1; n <= 7; ++n)
    for (const auto& l : enumerate_partitions_unchecked(n)) {
      const BoxTable t = box_table(l);
      int m = 0;
      for (auto [k, d] : t.diag_counts) m += d - 1;
      const auto trees = upsilon_trees(t);
      std::set<std::vector<std::pair<int, int>>> distinct;
      bool all_spanning = true;
      for (const auto& tr : trees) {
        std::vector<Edge> es;
        std::vector<std::pair<int, int>> key;
        for (auto [p, c] : tr.edges) {
          es.push_back(make_edge(p, c));
          key.emplace_back(std::min(p, c), std::max(p, c));
        }
        std::sort(key.begin(), key.end());
        distinct.insert(key);
        all_spanning = all_spanning && is_spanning_tree(t.n(), es);
      }
      const std::string name = l.to_string();
      o.require(trees.size() == (std::size_t{1} << m), name + " has " + std::to_string(trees.size()) + " trees");
      o.require(distinct.size() == trees.size(), name + " repeats a tree");
      o.require(all_spanning, name + " has a non-spanning tree");
      if (l.part(2) <= 1) o.require(trees.size() == 1, "hook " + name + " has several trees");
      ++checked;
    }
  if (o.pass) o.note = std::to_string(checked) + " partitions, n <= 7";
  return o;
}

std::set<int> parse_set(const std::string& s) {
  std::set<int> out;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ','))
    if (!tok.empty()) out.insert(std::stoi(tok));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> known;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--known-failures" && i + 1 < argc) known = parse_set(argv[++i]);
  }

  VerifyOptions opt;
  for (int n = 1; n <= 4; ++n) collect(n, elliptic_suite(n, opt));
  for (int n = 1; n <= 5; ++n) collect(n, limits_suite(n, opt));

  std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
      {1, worked_trees},
      {2, beta_table},
      {3, s_ell_closed_forms},
      {4, elliptic_matrices},
      {5,
       [] {
         return table_of({{1, {"kaehler_quasi_period_offshell", "equivariant_quasi_period_offshell"}},
                          {2, {"kaehler_quasi_period_offshell", "equivariant_quasi_period_offshell"}},
                          {3, {"kaehler_quasi_period_offshell", "equivariant_quasi_period_offshell"}}},
                         "n <= 3");
       }},
      {6,
       [] {
         std::vector<std::pair<int, std::vector<std::string>>> rows;
         for (int n = 1; n <= 4; ++n) rows.push_back({n, {"f_lambda_delta", "f_lambda_sum"}});
         return table_of(rows, "n <= 4");
       }},
      {7,
       [] {
         std::vector<std::pair<int, std::vector<std::string>>> rows;
         for (int n = 1; n <= 5; ++n) rows.push_back({n, {"coh_s_gamma_sum"}});
         return table_of(rows, "10 points, n <= 5");
       }},
      {8,
       [] {
         std::vector<std::pair<int, std::vector<std::string>>> rows;
         for (int n = 1; n <= 5; ++n) rows.push_back({n, {"coh_tree_sum"}});
         for (int n = 1; n <= 4; ++n) rows.push_back({n, {"coh_shenfeld"}});
         return table_of(rows, "tree sum n <= 5, symmetrization n <= 4");
       }},
      {9,
       [] {
         std::vector<std::pair<int, std::vector<std::string>>> rows;
         for (int n = 1; n <= 3; ++n)
           rows.push_back({n,
                           {"kth_local_constancy", "kth_wall_crossing", "kth_integral_wall_change",
                            "kth_diagonal_slope_independent", "kth_integral_shift"}});
         return table_of(rows, "n <= 3, walls in [0,1)");
       }},
      {10,
       [] {
         std::vector<std::pair<int, std::vector<std::string>>> rows;
         for (int n = 1; n <= 2; ++n) rows.push_back({n, {"q_limit_decreasing", "q_limit_final_distance"}});
         return table_of(rows, "n <= 2, q = 1e-2, 1e-3");
       }},
      {11, tree_counts},
  };

  std::set<int> failed;
  for (auto& [k, f] : criteria) {
    Outcome o;
    try {
      o = f();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string("error: ") + e.what();
    }
    if (!o.pass) failed.insert(k);
    std::printf("criterion %d: %s  %s\n", k, o.pass ? "PASS" : "FAIL", o.note.c_str());
  }
  std::fflush(stdout);
  if (argc > 1) return failed == known ? 0 : 1;
  return failed.empty() ? 0 : 1;
}
