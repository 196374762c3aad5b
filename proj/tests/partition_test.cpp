#include <doctest.h>

#include <cstdlib>
#include <set>

#include "hilbstab/errors.hpp"
#include "hilbstab/partition.hpp"

using namespace hilbstab;

TEST_CASE("parse_partition") {
  CHECK(parse_partition("4,2,1") == Partition({4, 2, 1}));
  CHECK(parse_partition("4,2,1").size() == 7);
  CHECK(parse_partition("1").size() == 1);
  CHECK(parse_partition(" (3, 1) ") == Partition({3, 1}));
  CHECK_THROWS_AS(parse_partition("2,3"), UsageError);
  CHECK_THROWS_AS(parse_partition(""), UsageError);
  CHECK_THROWS_AS(parse_partition("2,x"), UsageError);
  CHECK_THROWS_AS(parse_partition("2,,1"), UsageError);
  CHECK_THROWS_AS(parse_partition("2,0"), UsageError);
  try {
    parse_partition("2,3");
  } catch (const UsageError& e) {
    CHECK(std::string(e.what()).find("'3'") != std::string::npos);
  }
}

TEST_CASE("enumerate_partitions counts and order") {
  const int p[] = {1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 1; n <= 8; ++n) CHECK(enumerate_partitions(n).size() == std::size_t(p[n - 1]));
  auto four = enumerate_partitions(4);
  CHECK(four.front() == Partition({4}));
  CHECK(four[1] == Partition({3, 1}));
  CHECK(four.back() == Partition({1, 1, 1, 1}));
  std::set<Partition> uniq(four.begin(), four.end());
  CHECK(uniq.size() == four.size());
  CHECK_THROWS_AS(enumerate_partitions(9), UsageError);
  CHECK_THROWS_AS(enumerate_partitions(0), UsageError);
}

TEST_CASE("cap override through the environment") {
  setenv("HILBSTAB_MAX_N", "9", 1);
  CHECK(enumerate_partitions(9).size() == 30);
  unsetenv("HILBSTAB_MAX_N");
  CHECK_THROWS(enumerate_partitions(9));
}

TEST_CASE("canonical box order") {
  BoxTable t = box_table(Partition({4, 2, 1}));
  std::vector<Box> want = {{1, 4}, {1, 3}, {1, 2}, {2, 2}, {1, 1}, {2, 1}, {3, 1}};
  CHECK(t.boxes == want);

  BoxTable s = box_table(Partition({2, 2}));
  CHECK(s.boxes == std::vector<Box>{{1, 2}, {2, 2}, {1, 1}, {2, 1}});
  CHECK(s.root + 1 == 3);
  CHECK(s.content == std::vector<int>{-1, 0, 0, 1});
  CHECK(s.height == std::vector<int>{1, 2, 0, 1});
}

TEST_CASE("beta table of (4,4,4,3,3,2)") {
  BoxTable t = box_table(Partition({4, 4, 4, 3, 3, 2}));
  const int by_content[] = {1, 1, 0, 1, 1, 0, 1, 0, 0};  // k = -3..5
  REQUIRE(t.n() == 20);
  for (int i = 0; i < t.n(); ++i) {
    int k = t.content[i];
    REQUIRE(k >= -3);
    REQUIRE(k <= 5);
    CHECK(t.beta[i] == by_content[k + 3]);
  }
}

TEST_CASE("beta depends on content only and follows the diagonal rule") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& l : enumerate_partitions(n)) {
      BoxTable t = box_table(l);
      int total = 0;
      for (auto [k, d] : t.diag_counts) total += d;
      CHECK(total == n);
      for (int i = 0; i < t.n(); ++i) {
        int c = t.content[i];
        bool rule = c >= 0 ? t.d(c + 1) == t.d(c) : t.d(c + 1) == t.d(c) + 1;
        CHECK(rule == (t.beta[i] == 1));
        CHECK((c + t.height[i]) % 2 == 0);
      }
    }
}

TEST_CASE("rho comparison never ties across adjacent contents") {
  for (const auto& l : enumerate_partitions(6)) {
    BoxTable t = box_table(l);
    for (int i = 0; i < t.n(); ++i)
      for (int j = 0; j < t.n(); ++j)
        if (t.content[j] - t.content[i] == 1) CHECK(t.height[i] != t.height[j]);
  }
}

TEST_CASE("arm and leg") {
  BoxTable t = box_table(Partition({2}));
  // (1,2) then (1,1)
  CHECK(t.boxes[1] == Box{1, 1});
  CHECK(t.leg[1] == 1);
  CHECK(t.arm[1] == 0);
  CHECK(t.leg[0] == 0);
  CHECK(t.arm[0] == 0);
  BoxTable u = box_table(Partition({1, 1}));
  CHECK(u.boxes[0] == Box{1, 1});
  CHECK(u.arm[0] == 1);
  CHECK(u.leg[0] == 0);
}

TEST_CASE("dominance") {
  CHECK(dominance_compare(Partition({3}), Partition({2, 1})) == Dominance::Greater);
  CHECK(dominance_compare(Partition({2, 1}), Partition({3})) == Dominance::Less);
  CHECK(dominance_compare(Partition({2, 2}), Partition({2, 2})) == Dominance::Equal);
  CHECK(dominance_compare(Partition({3, 1, 1, 1}), Partition({2, 2, 2})) == Dominance::Incomparable);
  CHECK_THROWS_AS(dominance_compare(Partition({3}), Partition({2})), UsageError);

  auto ps = enumerate_partitions(6);
  auto ge = [](const Partition& a, const Partition& b) {
    auto d = dominance_compare(a, b);
    return d == Dominance::Greater || d == Dominance::Equal;
  };
  for (const auto& a : ps)
    for (const auto& b : ps) {
      if (ge(a, b) && ge(b, a)) CHECK(a == b);
      for (const auto& c : ps)
        if (ge(a, b) && ge(b, c)) CHECK(ge(a, c));
    }
}

TEST_CASE("box characters") {
  BoxTable t = box_table(Partition({2, 2}));
  const Monomial t1 = Monomial::t1(), t2 = Monomial::t2();
  std::vector<Monomial> want = {t1.inverse(), (t1 * t2).inverse(), Monomial{}, t2.inverse()};
  for (int i = 0; i < 4; ++i) CHECK(box_character(t.boxes[i]) == want[i]);
  CHECK(box_character(Box{1, 1}).is_one());
  LinearForm f = box_character_additive(Box{2, 2});
  CHECK(f.t1 == -1);
  CHECK(f.t2 == -1);
  CHECK(f.x.empty());

  for (const auto& l : enumerate_partitions(7)) {
    BoxTable b = box_table(l);
    std::set<std::string> seen;
    for (const Box& x : b.boxes) seen.insert(box_character(x).to_string());
    CHECK(seen.size() == std::size_t(b.n()));
  }
}
