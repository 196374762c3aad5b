#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hilbstab/context.hpp"
#include "hilbstab/envelope.hpp"
#include "hilbstab/limits.hpp"
#include "hilbstab/partition.hpp"
#include "hilbstab/tree.hpp"

namespace hilbstab {

using json = nlohmann::ordered_json;

// Everything a run depends on. Embedded verbatim in every output document.
struct RunConfig {
  std::uint64_t seed = 1;
  double tol = 1e-8;
  double theta_tol = 1e-14;
  std::optional<int> jet_order;
  std::optional<cd> q, a, hbar_half, z;
  std::string output = "-";

  ContextOptions context_options() const;
};

json to_json(cd v);
cd complex_from_json(const json& j);
json to_json(const Partition& p);
Partition partition_from_json(const json& j);

json to_json(const RunConfig& c);
RunConfig run_config_from_json(const json& j);

json to_json(const BoxTable& t);
json box_json(Box b);
json edge_json(const BoxTable& t, int parent, int child);
json to_json(const BoxTable& t, const Tree& tree);
json to_json(const GeneratorContext& c);
json to_json(const CohContext& c);
json to_json(const RestrictionMatrix& m, std::uint64_t seed);
RestrictionMatrix restriction_matrix_from_json(const json& j);

// {n, window, walls}
json walls_json(int n, double lo, double hi);

// "re,im" or "re"
cd parse_complex(const std::string& text);

}  // namespace hilbstab
