#include <doctest.h>

#include <algorithm>
#include <set>

#include "hilbstab/tree.hpp"
#include "hilbstab/verify.hpp"

using namespace hilbstab;

namespace {

int pos(const BoxTable& t, Box b) { return t.index_of(b); }

std::vector<std::pair<int, int>> edges_of(const BoxTable& t, std::vector<std::pair<Box, Box>> boxes) {
  std::vector<std::pair<int, int>> out;
  for (auto [p, c] : boxes) out.push_back({pos(t, p), pos(t, c)});
  return out;
}

std::vector<Edge> undirected(const Tree& tr) {
  std::vector<Edge> es;
  for (auto [p, c] : tr.edges) es.push_back(make_edge(p, c));
  std::sort(es.begin(), es.end());
  return es;
}

bool is_hook(const Partition& l) { return l.length() == 1 || l.part(2) <= 1; }

}  // namespace

TEST_CASE("skeleton sizes") {
  CHECK(skeleton(box_table(Partition({1}))).empty());
  CHECK(skeleton(box_table(Partition({2, 2}))).size() == 4);
  // 2n - rows - columns, with one cycle from the square at (1,1)
  CHECK(skeleton(box_table(Partition({4, 2, 1}))).size() == 7);
  for (int n = 1; n <= 7; ++n)
    for (const auto& l : enumerate_partitions(n)) {
      BoxTable t = box_table(l);
      for (auto e : skeleton(t)) {
        Box a = t.boxes[e.lo], b = t.boxes[e.hi];
        CHECK(std::abs(a.row - b.row) + std::abs(a.col - b.col) == 1);
      }
    }
}

TEST_CASE("L-shapes") {
  BoxTable s = box_table(Partition({2, 2}));
  auto ls = l_shapes(s);
  REQUIRE(ls.size() == 1);
  CHECK(ls[0].delta1 == make_edge(pos(s, {1, 1}), pos(s, {2, 1})));
  CHECK(ls[0].delta2 == make_edge(pos(s, {2, 1}), pos(s, {2, 2})));
  CHECK(l_shapes(box_table(Partition({4, 1, 1}))).empty());
  CHECK(l_shapes(box_table(Partition({3, 2}))).size() == 1);
  CHECK(l_shapes(box_table(Partition({3, 3, 1}))).size() == 2);
}

TEST_CASE("the two trees of (2,2) and their weights") {
  BoxTable t = box_table(Partition({2, 2}));
  auto trees = upsilon_trees(t);
  REQUIRE(trees.size() == 2);
  CHECK(trees[0].edges == edges_of(t, {{{1, 1}, {1, 2}}, {{1, 2}, {2, 2}}, {{1, 1}, {2, 1}}}));
  CHECK(trees[1].edges == edges_of(t, {{{1, 1}, {1, 2}}, {{1, 2}, {2, 2}}, {{2, 2}, {2, 1}}}));

  TreeWeights a = tree_weights(t, trees[0]);
  CHECK(a.w == std::vector<int>{2, 1, 1});
  CHECK(a.v == std::vector<int>{1, 0, 0});
  CHECK(a.v_root == 1);
  CHECK(a.kappa == 0);
  TreeWeights b = tree_weights(t, trees[1]);
  CHECK(b.w == std::vector<int>{3, 2, 1});
  CHECK(b.v == std::vector<int>{1, 0, 0});
  CHECK(b.v_root == 1);
  CHECK(b.kappa == 1);
}

TEST_CASE("single box") {
  BoxTable t = box_table(Partition({1}));
  auto trees = upsilon_trees(t);
  REQUIRE(trees.size() == 1);
  TreeWeights w = tree_weights(t, trees[0]);
  CHECK(w.w.empty());
  CHECK(w.v_root == t.beta[0]);
  CHECK(w.kappa == 0);
}

TEST_CASE("tree counts") {
  CHECK(upsilon_trees(box_table(Partition({3, 1}))).size() == 1);
  CHECK(upsilon_trees(box_table(Partition({3, 1, 1}))).size() == 1);
  CHECK(upsilon_trees(box_table(Partition({3, 3, 1}))).size() == 4);
}

TEST_CASE("distinguished trees against brute-force spanning trees, n <= 7") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& l : enumerate_partitions(n)) {
      BoxTable t = box_table(l);
      auto gamma = skeleton(t);
      // every spanning tree of the skeleton, by subsets of n-1 edges
      std::set<std::vector<Edge>> spanning;
      const int E = static_cast<int>(gamma.size());
      for (long mask = 0; mask < (1L << E); ++mask) {
        if (__builtin_popcountl(mask) != n - 1) continue;
        std::vector<Edge> es;
        for (int k = 0; k < E; ++k)
          if (mask >> k & 1) es.push_back(gamma[k]);
        if (is_spanning_tree(n, es)) spanning.insert(es);
      }
      int m = 0;
      for (auto [k, d] : t.diag_counts) m += d - 1;
      auto trees = upsilon_trees(t);
      CHECK(trees.size() == std::size_t(1) << m);
      std::set<std::vector<Edge>> seen;
      for (const auto& tr : trees) {
        auto es = undirected(tr);
        CHECK(spanning.count(es) == 1);
        seen.insert(es);
        TreeWeights w = tree_weights(t, tr);
        int root_sum = 0;
        for (std::size_t e = 0; e < tr.edges.size(); ++e) {
          CHECK(w.w[e] >= 1);
          CHECK(w.w[e] <= n - 1);
          if (tr.edges[e].first == t.root) root_sum += w.w[e];
        }
        CHECK(root_sum == n - 1);
        if (is_hook(l)) CHECK(w.kappa == 0);
      }
      CHECK(seen.size() == trees.size());
      if (is_hook(l)) CHECK(trees.size() == 1);
    }
}
