#include "hilbstab/tree.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace hilbstab {

Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

std::vector<Edge> skeleton(const BoxTable& t) {
  std::vector<Edge> out;
  for (int i = 0; i < t.n(); ++i) {
    const Box b = t.boxes[i];
    for (Box nb : {Box{b.row + 1, b.col}, Box{b.row, b.col + 1}})
      if (int k = t.index_of(nb); k >= 0) out.push_back(make_edge(i, k));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LShape> l_shapes(const BoxTable& t) {
  std::vector<LShape> out;
  const Partition& lam = t.lambda;
  for (int i = 1; i < lam.length(); ++i)
    for (int j = 1; j < lam.part(i + 1); ++j) {
      int c = t.index_of({i, j}), below = t.index_of({i + 1, j}), diag = t.index_of({i + 1, j + 1});
      out.push_back({Box{i, j}, make_edge(c, below), make_edge(below, diag)});
    }
  return out;
}

Tree orient_tree(const BoxTable& t, const std::vector<Edge>& undirected) {
  const int n = t.n();
  std::vector<std::vector<int>> adj(n);
  for (const Edge& e : undirected) {
    adj[e.lo].push_back(e.hi);
    adj[e.hi].push_back(e.lo);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  Tree tree;
  tree.parent.assign(n, -2);
  tree.parent[t.root] = -1;
  std::function<void(int)> dfs = [&](int u) {
    for (int c : adj[u]) {
      if (tree.parent[c] != -2) continue;
      tree.parent[c] = u;
      tree.edges.emplace_back(u, c);
      dfs(c);
    }
  };
  dfs(t.root);
  if (static_cast<int>(tree.edges.size()) != n - 1 ||
      std::count(tree.parent.begin(), tree.parent.end(), -2) != 0)
    throw std::logic_error("edge set is not a spanning tree");
  if (static_cast<int>(undirected.size()) != n - 1) throw std::logic_error("edge set has a cycle");
  return tree;
}

std::vector<Tree> upsilon_trees(const BoxTable& t) {
  const auto gamma = skeleton(t);
  const auto ls = l_shapes(t);
  const std::size_t m = ls.size();
  std::vector<Tree> out;
  out.reserve(std::size_t{1} << m);
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    std::vector<Edge> removed;
    for (std::size_t k = 0; k < m; ++k) removed.push_back((mask >> k) & 1 ? ls[k].delta1 : ls[k].delta2);
    std::vector<Edge> kept;
    for (const Edge& e : gamma)
      if (std::find(removed.begin(), removed.end(), e) == removed.end()) kept.push_back(e);
    out.push_back(orient_tree(t, kept));
  }
  return out;
}

TreeWeights tree_weights(const BoxTable& t, const Tree& tree) {
  const int n = t.n();
  std::vector<std::vector<int>> kids(n);
  for (auto [p, c] : tree.edges) kids[p].push_back(c);
  std::vector<int> size(n, 1), vsum(n, 0);  // vsum[u] = v of the edge into u
  std::function<void(int)> rec = [&](int u) {
    int acc = 0;
    for (int c : kids[u]) {
      rec(c);
      size[u] += size[c];
      acc += vsum[c];
    }
    vsum[u] = t.beta[u] + acc;
  };
  rec(t.root);
  TreeWeights tw;
  for (auto [p, c] : tree.edges) {
    tw.w.push_back(size[c]);
    tw.v.push_back(vsum[c]);
    const Box bp = t.boxes[p], bc = t.boxes[c];
    tw.kappa += (bc.row < bp.row) + (bc.col < bp.col);
  }
  tw.v_root = vsum[t.root];
  return tw;
}

}  // namespace hilbstab
