#pragma once

#include <vector>

#include "hilbstab/partition.hpp"

namespace hilbstab {

// Unordered pair of adjacent boxes, stored with lo < hi (canonical positions, 0-based).
struct Edge {
  int lo = 0;
  int hi = 0;
  auto operator<=>(const Edge&) const = default;
};

Edge make_edge(int u, int v);

// Edges of the skeleton graph Gamma_lambda, sorted.
std::vector<Edge> skeleton(const BoxTable& t);

// One per (i,j) with (i+1,j), (i+1,j+1) in lambda. Listed row-major by (i,j).
struct LShape {
  Box corner;
  Edge delta1;  // {(i,j), (i+1,j)}
  Edge delta2;  // {(i+1,j), (i+1,j+1)}
};

std::vector<LShape> l_shapes(const BoxTable& t);

// Rooted tree over the boxes. edges are (parent, child) in DFS preorder from the root,
// children visited in canonical order.
struct Tree {
  std::vector<int> parent;  // -1 at the root
  std::vector<std::pair<int, int>> edges;
};

Tree orient_tree(const BoxTable& t, const std::vector<Edge>& undirected);

// The 2^m trees Gamma minus one edge of each L-shape. Bit k of the index selects the edge
// removed from L-shape k: 0 removes delta2 (the tree keeps delta1), 1 removes delta1.
std::vector<Tree> upsilon_trees(const BoxTable& t);

struct TreeWeights {
  std::vector<int> w;  // per edge, subtree size at the child
  std::vector<int> v;  // per edge
  int v_root = 0;
  int kappa = 0;
};

TreeWeights tree_weights(const BoxTable& t, const Tree& tree);

}  // namespace hilbstab
