#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hilbstab/linear_form.hpp"
#include "hilbstab/monomial.hpp"

namespace hilbstab {

// Box (row, column), both 1-based. Row i has lambda_i boxes.
struct Box {
  int row = 1;
  int col = 1;

  int content() const { return row - col; }
  int height() const { return row + col - 2; }

  auto operator<=>(const Box&) const = default;
  std::string to_string() const;
};

class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }
  bool contains(Box b) const { return b.row >= 1 && b.col >= 1 && b.col <= part(b.row); }
  Partition conjugate() const;
  std::string to_string() const;

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// Default cap on |lambda| for enumeration-driven work. HILBSTAB_MAX_N overrides.
inline constexpr int kDefaultEnumerationCap = 8;
int env_cap(int fallback);

Partition parse_partition(std::string_view text);

// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Partition> enumerate_partitions(int n, int cap = -1);
std::vector<Partition> enumerate_partitions_unchecked(int n);

enum class Dominance { Less, Greater, Equal, Incomparable };
Dominance dominance_compare(const Partition& lhs, const Partition& rhs);

// Per-box data in canonical order: ascending content, ties by descending height.
struct BoxTable {
  Partition lambda;
  std::vector<Box> boxes;
  std::vector<int> content, height, beta, arm, leg;
  std::map<int, int> diag_counts;  // content -> d_k
  int root = 0;                    // 0-based position of (1,1)

  int n() const { return static_cast<int>(boxes.size()); }
  int index_of(Box b) const;  // 0-based, -1 when absent
  int d(int k) const;
};

BoxTable box_table(const Partition& lambda);

// beta(k) from the boundary profile A_k = |k| + 2 d_k
int profile_beta(const std::map<int, int>& diag_counts, int k);

// "rho_j > rho_i + 1" for the rho-ordering of boxes
bool rho_exceeds_plus_one(const BoxTable& t, int j, int i);

// Multiplicative box character t1^{-(j-1)} t2^{-(i-1)}.
Monomial box_character(Box b);

// Additive box character (1-j) t1 + (1-i) t2.
LinearForm box_character_additive(Box b);

}  // namespace hilbstab
