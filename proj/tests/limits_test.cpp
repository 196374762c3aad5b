#include <doctest.h>

#include "hilbstab/errors.hpp"
#include "hilbstab/limits.hpp"
#include "hilbstab/verify.hpp"
#include "support.hpp"

using namespace hilbstab;
using testing_support::frozen_point;
using testing_support::rel;

namespace {

std::vector<std::string> names(const std::vector<Rational>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(w.to_string());
  return out;
}

std::vector<cd> line_bundle(const GeneratorContext& c, int n) {
  std::vector<cd> out;
  for (const auto& p : enumerate_partitions(n)) {
    cd m = 1.0;
    for (const Box& b : box_table(p).boxes) m *= c.value(box_character(b));
    out.push_back(m);
  }
  return out;
}

}  // namespace

TEST_CASE("walls") {
  CHECK(names(walls(1, 0, 1)) == std::vector<std::string>{"0"});
  CHECK(names(walls(2, 0, 1)) == std::vector<std::string>{"0", "1/2"});
  CHECK(names(walls(3, 0, 1)) == std::vector<std::string>{"0", "1/3", "1/2", "2/3"});
  CHECK(names(walls(1, -1, 1)) == std::vector<std::string>{"-1", "0"});
  CHECK(names(walls(2, -1, 0)) == std::vector<std::string>{"-1", "-1/2"});
  CHECK_THROWS_AS(walls(2, 1, 0), UsageError);
  CHECK(is_wall(3, 2.0 / 3.0));
  CHECK(!is_wall(3, 0.7));
  CHECK_THROWS_AS(require_admissible(2, 0.5), NonGeneric);
  CHECK_THROWS_AS(require_admissible(2, 1.0), NonGeneric);
  CHECK_NOTHROW(require_admissible(2, 0.3));
}

TEST_CASE("single box in K-theory") {
  GeneratorContext c = make_context(1, 1, frozen_point());
  // ahat(t2) / t1^{1/2}
  const cd frozen(0.11999999999999998, -0.4933333333333334);
  for (double s : {0.3, 0.7, -2.4}) CHECK(rel(kth_matrix(c, 1, s).entries[0][0], frozen) < 1e-12);
}

TEST_CASE("K-theory matrices for n = 2") {
  GeneratorContext c = make_context(2, 31);
  Eigen::MatrixXcd a = to_eigen(kth_matrix(c, 2, 0.1)), b = to_eigen(kth_matrix(c, 2, 0.4));
  Eigen::MatrixXcd d = to_eigen(kth_matrix(c, 2, 0.6));
  CHECK((a - b).cwiseAbs().maxCoeff() < 1e-10 * a.cwiseAbs().maxCoeff());
  CHECK((b - d).cwiseAbs().maxCoeff() > 1e-6);
  for (int i = 0; i < 2; ++i) {
    CHECK(rel(a(i, i), d(i, i)) < 1e-10);
    CHECK(rel(a(i, i), kth_diagonal(c, box_table(enumerate_partitions(2)[i]))) < 1e-10);
  }
  CHECK(std::abs(a(0, 1)) < 1e-12);

  // integral shift
  Eigen::MatrixXcd a1 = to_eigen(kth_matrix(c, 2, 1.1));
  auto m = line_bundle(c, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(std::abs(a1(i, j) - a(i, j) * m[j] / m[i]) < 1e-8 * a1.cwiseAbs().maxCoeff());

  // observed: crossing the integral wall leaves the matrix unchanged
  Eigen::MatrixXcd below = to_eigen(kth_matrix(c, 2, -0.1));
  CHECK((below - a).cwiseAbs().maxCoeff() < 1e-12 * a.cwiseAbs().maxCoeff());
}

TEST_CASE("wall R-matrices") {
  GeneratorContext c = make_context(2, 37);
  Eigen::MatrixXcd same = wall_r_matrix(c, 2, 0.1, 0.4);
  CHECK((same - Eigen::MatrixXcd::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-8);
  Eigen::MatrixXcd cross = wall_r_matrix(c, 2, 0.3, 0.7);
  CHECK((cross - Eigen::MatrixXcd::Identity(2, 2)).cwiseAbs().maxCoeff() > 1e-6);
  CHECK(std::abs(cross(0, 1)) < 1e-10);
}

TEST_CASE("K-theory is real on the positive axis") {
  ContextOptions o;
  o.q = cd(0.11, 0.0);
  o.a = cd(0.83, 0.0);
  o.hbar_half = cd(1.17, 0.0);
  o.z = cd(1.37, 0.0);
  GeneratorContext c = make_context(3, 1, o);
  Eigen::MatrixXcd t = to_eigen(kth_matrix(c, 3, 0.41));
  CHECK(t.imag().cwiseAbs().maxCoeff() < 1e-10 * t.cwiseAbs().maxCoeff());
}

TEST_CASE("cohomology") {
  CohContext h = make_coh_context(1, 3);
  CHECK(rel(coh_matrix(h, 1).entries[0][0], h.t2) < 1e-12);
  CHECK(rel(stab_coh_offshell(h, Partition({1})), h.t2) < 1e-12);

  for (int trial = 0; trial < 10; ++trial) {
    CohContext c = make_coh_context(5, 50 + trial);
    for (const auto& l : {Partition({2, 2}), Partition({3, 2}), Partition({4, 1}), Partition({2, 2, 1})}) {
      CHECK(std::abs(s_gamma_sum(c, l) - 1.0) < 1e-9);
      CHECK(rel(tree_sum_coh(c, l), tree_sum_closed(c, l)) < 1e-9);
    }
  }
  CohContext c = make_coh_context(4, 71);
  for (const auto& l : enumerate_partitions(4)) CHECK(rel(stab_coh_offshell(c, l), shenfeld_sym(c, l)) < 1e-8);

  RestrictionMatrix m = coh_matrix(make_coh_context(2, 5), 2);
  CHECK(std::abs(m.entries[0][1]) < 1e-12);
  CHECK(std::abs(m.entries[1][0]) > 1e-6);
}

TEST_CASE("q to zero") {
  GeneratorContext c1 = make_context(1, 3);
  QLimitReport r1 = verify_q_limit(c1, 1, 0.23, {1e-2, 1e-3});
  CHECK(r1.decreasing);
  // for one box the distance is |prod_i (1 - t2 q^i)(1 - q^i / t2) - 1|
  for (std::size_t k = 0; k < r1.q_values.size(); ++k) {
    const cd q = std::polar(r1.q_values[k], std::arg(c1.q()));
    const cd t2 = c1.value(Monomial::t2());
    cd p = 1.0, qi = 1.0;
    for (int i = 1; i < 60; ++i) {
      qi *= q;
      p *= (1.0 - t2 * qi) * (1.0 - qi / t2);
    }
    CHECK(std::abs(r1.distances[k] - std::abs(p - 1.0)) < 1e-10);
  }
  CHECK(r1.distances.back() < 1e-2);
  GeneratorContext c2 = make_context(2, 3);
  QLimitReport r2 = verify_q_limit(c2, 2, 0.23, {1e-2, 1e-3, 1e-4});
  CHECK(r2.decreasing);
  CHECK_THROWS_AS(verify_q_limit(c2, 2, 0.5, {1e-2}), NonGeneric);
}
