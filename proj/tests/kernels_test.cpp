#include <doctest.h>

#include <cstring>

#include "hilbstab/envelope.hpp"
#include "hilbstab/errors.hpp"
#include "hilbstab/limits.hpp"

using namespace hilbstab;

namespace {

bool bitwise_equal(const RestrictionMatrix& a, const RestrictionMatrix& b) {
  if (a.entries.size() != b.entries.size()) return false;
  for (std::size_t i = 0; i < a.entries.size(); ++i)
    if (std::memcmp(a.entries[i].data(), b.entries[i].data(), a.entries[i].size() * sizeof(cd)) != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("serial and OpenMP kernels agree bit for bit") {
  for (int n = 2; n <= 4; ++n) {
    GeneratorContext c = make_context(n, 5);
    CHECK(bitwise_equal(restriction_matrix(c, n, Backend::Serial), restriction_matrix(c, n, Backend::OpenMP)));
    CHECK(bitwise_equal(kth_matrix(c, n, 0.23, Backend::Serial), kth_matrix(c, n, 0.23, Backend::OpenMP)));
    CohContext h = make_coh_context(n, 5);
    CHECK(bitwise_equal(coh_matrix(h, n, Backend::Serial), coh_matrix(h, n, Backend::OpenMP)));
  }
}

TEST_CASE("repeated evaluation is deterministic") {
  GeneratorContext c = make_context(3, 17);
  CHECK(bitwise_equal(restriction_matrix(c, 3), restriction_matrix(c, 3)));
}

TEST_CASE("regularisation direction does not change the value") {
  GeneratorContext c = make_context(3, 19);
  for (const auto& l : enumerate_partitions(3))
    for (const auto& m : enumerate_partitions(3)) {
      cd a = stab_restriction(c, l, m).value;
      cd b = stab_restriction(c, l, m, Backend::OpenMP, {3.0, -1.0, 7.0}).value;
      CHECK(std::abs(a - b) < 1e-9 * std::max(1.0, std::abs(a)));
    }
}

TEST_CASE("errors inside the parallel region reach the caller") {
  GeneratorContext c = make_context(2, 23);
  // put t2 on the q-lattice: theta(t2 ...) factors are no longer generic
  c.log_a = c.log_hbar_half - c.log_q;
  CHECK_THROWS_AS(restriction_matrix(c, 2, Backend::OpenMP), NonGeneric);
  CHECK_THROWS_AS(restriction_matrix(c, 2, Backend::Serial), NonGeneric);
}

TEST_CASE("orders below the pole order are rejected") {
  GeneratorContext c = make_context(2, 29);
  SymmetrizedValue sv;
  sv.max_pole_order = 3;
  CHECK_THROWS_AS(finish_entry(sv, 2, "T"), UsageError);
  sv.max_pole_order = 0;
  sv.max_cancel_residual = 1e-3;
  CHECK_THROWS_AS(finish_entry(sv, 2, "T"), ResidualPole);
  sv.max_cancel_residual = 1e-9;
  CHECK_NOTHROW(finish_entry(sv, 2, "T"));
}

TEST_CASE("permutations are lexicographic") {
  auto p = all_permutations(3);
  REQUIRE(p.size() == 6);
  CHECK(p.front() == std::vector<int>{0, 1, 2});
  CHECK(p[1] == std::vector<int>{0, 2, 1});
  CHECK(p.back() == std::vector<int>{2, 1, 0});
}
