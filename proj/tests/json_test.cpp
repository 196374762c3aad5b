#include <doctest.h>

#include "hilbstab/errors.hpp"
#include "hilbstab/json_io.hpp"
#include "hilbstab/verify.hpp"

using namespace hilbstab;

TEST_CASE("box table document") {
  json j = to_json(box_table(Partition({2, 2})));
  CHECK(j["boxes"] == json::parse("[[1,2],[2,2],[1,1],[2,1]]"));
  CHECK(j["content"] == json::parse("[-1,0,0,1]"));
  CHECK(j["root_index"] == 3);
  CHECK(j["diag_counts"] == json::parse(R"({"-1":1,"0":2,"1":1})"));
  for (const char* key : {"height", "beta", "arm", "leg"}) CHECK(j.contains(key));
}

TEST_CASE("tree document") {
  BoxTable t = box_table(Partition({2, 2}));
  json j = to_json(t, upsilon_trees(t)[1]);
  CHECK(j["edges"] == json::parse("[[[1,1],[1,2]],[[1,2],[2,2]],[[2,2],[2,1]]]"));
  CHECK(j["w"] == json::parse("[3,2,1]"));
  CHECK(j["kappa"] == 1);
}

TEST_CASE("run config round trip") {
  RunConfig c;
  c.seed = 99;
  c.tol = 1e-7;
  c.jet_order = 12;
  c.q = cd(0.1, -0.2);
  c.z = cd(1.5, 0.0);
  RunConfig d = run_config_from_json(to_json(c));
  CHECK(d.seed == 99);
  CHECK(d.tol == 1e-7);
  CHECK(d.jet_order == 12);
  CHECK(d.q == c.q);
  CHECK(!d.a);
  CHECK(d.z == c.z);
  CHECK(to_json(d).dump() == to_json(c).dump());
}

TEST_CASE("matrix document round trip") {
  GeneratorContext ctx = make_context(2, 4);
  RestrictionMatrix m = restriction_matrix(ctx, 2);
  json j = to_json(m, 4);
  CHECK(j["kind"] == "ell");
  CHECK(j["partitions"] == json::parse("[[2],[1,1]]"));
  CHECK(j["diagnostics"].contains("max_pole_order"));
  RestrictionMatrix back = restriction_matrix_from_json(json::parse(j.dump()));
  CHECK(back.order == m.order);
  for (std::size_t i = 0; i < m.order.size(); ++i)
    for (std::size_t k = 0; k < m.order.size(); ++k) CHECK(back.entries[i][k] == m.entries[i][k]);
  json bad = j;
  bad["kind"] = "nope";
  CHECK_THROWS_AS(restriction_matrix_from_json(bad), UsageError);
  bad = j;
  bad["entries"][0].erase(0);
  CHECK_THROWS_AS(restriction_matrix_from_json(bad), UsageError);
}

TEST_CASE("walls document") {
  json j = walls_json(2, 0, 1);
  CHECK(j["walls"] == json::parse(R"(["0","1/2"])"));
  CHECK(j["window"] == json::parse("[0.0,1.0]"));
}

TEST_CASE("complex parsing") {
  CHECK(parse_complex("0.1,0.2") == cd(0.1, 0.2));
  CHECK(parse_complex("1.5") == cd(1.5, 0.0));
  CHECK(parse_complex("-1e-1, 3") == cd(-0.1, 3.0));
  CHECK_THROWS_AS(parse_complex("x"), UsageError);
  CHECK_THROWS_AS(parse_complex("1,2,3"), UsageError);
}
