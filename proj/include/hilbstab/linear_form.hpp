#pragma once

#include <string>
#include <utility>
#include <vector>

namespace hilbstab {

// Integer linear form sum c_k x_k + n1 t1 + n2 t2 in the additive (cohomological) variables.
struct LinearForm {
  std::vector<std::pair<int, int>> x;  // (1-based slot, coefficient), sorted, nonzero
  int t1 = 0;
  int t2 = 0;

  static LinearForm var(int slot, int coeff = 1) {
    LinearForm f;
    if (coeff != 0) f.x.emplace_back(slot, coeff);
    return f;
  }
  static LinearForm of_t(int n1, int n2) {
    LinearForm f;
    f.t1 = n1;
    f.t2 = n2;
    return f;
  }

  LinearForm operator+(const LinearForm& o) const;
  LinearForm operator-(const LinearForm& o) const { return *this + o.scaled(-1); }
  LinearForm scaled(int k) const;
  bool is_zero() const { return x.empty() && t1 == 0 && t2 == 0; }
  std::string to_string() const;

  bool operator==(const LinearForm&) const = default;
};

}  // namespace hilbstab
