#include "hilbstab/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hilbstab/errors.hpp"

namespace hilbstab {

ContextOptions RunConfig::context_options() const {
  ContextOptions o;
  o.q = q;
  o.a = a;
  o.hbar_half = hbar_half;
  o.z = z;
  o.theta_tol = theta_tol;
  o.jet_order = jet_order.value_or(-1);
  return o;
}

json to_json(cd v) { return json::array({v.real(), v.imag()}); }

cd complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw UsageError("complex value must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

json to_json(const Partition& p) { return json(p.parts()); }

Partition partition_from_json(const json& j) {
  if (j.is_string()) return parse_partition(j.get<std::string>());
  return Partition(j.get<std::vector<int>>());
}

namespace {

json optional_complex(const std::optional<cd>& v) { return v ? to_json(*v) : json(nullptr); }

std::optional<cd> read_optional_complex(const json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  return complex_from_json(j[key]);
}

}  // namespace

json to_json(const RunConfig& c) {
  json j;
  j["seed"] = c.seed;
  j["tol"] = c.tol;
  j["theta_tol"] = c.theta_tol;
  j["jet_order"] = c.jet_order ? json(*c.jet_order) : json(nullptr);
  j["overrides"] = {{"q", optional_complex(c.q)},
                    {"a", optional_complex(c.a)},
                    {"hbar_half", optional_complex(c.hbar_half)},
                    {"z", optional_complex(c.z)}};
  j["output"] = c.output;
  return j;
}

RunConfig run_config_from_json(const json& j) {
  RunConfig c;
  c.seed = j.value("seed", c.seed);
  c.tol = j.value("tol", c.tol);
  c.theta_tol = j.value("theta_tol", c.theta_tol);
  if (j.contains("jet_order") && !j["jet_order"].is_null()) c.jet_order = j["jet_order"].get<int>();
  if (j.contains("overrides")) {
    const json& o = j["overrides"];
    c.q = read_optional_complex(o, "q");
    c.a = read_optional_complex(o, "a");
    c.hbar_half = read_optional_complex(o, "hbar_half");
    c.z = read_optional_complex(o, "z");
  }
  c.output = j.value("output", c.output);
  return c;
}

json box_json(Box b) { return json::array({b.row, b.col}); }

json to_json(const BoxTable& t) {
  json j;
  j["partition"] = to_json(t.lambda);
  json boxes = json::array();
  for (const Box& b : t.boxes) boxes.push_back(box_json(b));
  j["boxes"] = boxes;
  j["content"] = t.content;
  j["height"] = t.height;
  j["beta"] = t.beta;
  j["arm"] = t.arm;
  j["leg"] = t.leg;
  json d = json::object();
  for (auto [k, v] : t.diag_counts) d[std::to_string(k)] = v;
  j["diag_counts"] = d;
  j["root_index"] = t.root + 1;
  return j;
}

json edge_json(const BoxTable& t, int parent, int child) {
  return json::array({box_json(t.boxes[parent]), box_json(t.boxes[child])});
}

json to_json(const BoxTable& t, const Tree& tree) {
  const TreeWeights tw = tree_weights(t, tree);
  json edges = json::array();
  for (auto [p, c] : tree.edges) edges.push_back(edge_json(t, p, c));
  json j;
  j["edges"] = edges;
  j["w"] = tw.w;
  j["v"] = tw.v;
  j["v_root"] = tw.v_root;
  j["kappa"] = tw.kappa;
  return j;
}

json to_json(const GeneratorContext& c) {
  json j;
  j["n"] = c.n;
  j["seed"] = c.seed;
  j["theta_tol"] = c.theta_tol;
  j["jet_order"] = c.jet_order;
  auto many = [](const std::vector<cd>& logs, bool exp) {
    json a = json::array();
    for (cd l : logs) a.push_back(to_json(exp ? std::exp(l) : l));
    return a;
  };
  for (bool as_value : {true, false}) {
    auto f = [&](cd l) { return to_json(as_value ? std::exp(l) : l); };
    json v;
    v["q"] = f(c.log_q);
    v["a"] = f(c.log_a);
    v["hbar_half"] = f(c.log_hbar_half);
    v["z"] = f(c.log_z);
    v["x"] = many(c.log_x, as_value);
    v["z_i"] = many(c.log_zi, as_value);
    j[as_value ? "values" : "logs"] = v;
  }
  return j;
}

json to_json(const CohContext& c) {
  json x = json::array();
  for (cd v : c.x) x.push_back(to_json(v));
  return {{"n", c.n}, {"seed", c.seed}, {"values", {{"t1", to_json(c.t1)}, {"t2", to_json(c.t2)}, {"x", x}}}};
}

json to_json(const RestrictionMatrix& m, std::uint64_t seed) {
  json j;
  j["n"] = m.n;
  j["kind"] = m.kind;
  if (m.kind == "kth") j["slope"] = m.slope;
  j["seed"] = seed;
  json parts = json::array();
  for (const auto& p : m.order) parts.push_back(to_json(p));
  j["partitions"] = parts;
  json rows = json::array();
  int pole = 0;
  double resid = 0.0;
  for (std::size_t i = 0; i < m.entries.size(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.entries[i].size(); ++k) {
      row.push_back(to_json(m.entries[i][k]));
      pole = std::max(pole, m.diag[i][k].max_pole_order);
      resid = std::max(resid, m.diag[i][k].max_cancel_residual);
    }
    rows.push_back(row);
  }
  j["entries"] = rows;
  j["diagnostics"] = {{"max_pole_order", pole}, {"max_cancel_residual", resid}};
  return j;
}

RestrictionMatrix restriction_matrix_from_json(const json& j) {
  RestrictionMatrix m;
  try {
    m.kind = j.at("kind").get<std::string>();
    m.n = j.at("n").get<int>();
    m.slope = j.value("slope", 0.0);
    for (const auto& p : j.at("partitions")) m.order.push_back(partition_from_json(p));
    for (const auto& row : j.at("entries")) {
      std::vector<cd> r;
      for (const auto& v : row) r.push_back(complex_from_json(v));
      if (r.size() != m.order.size()) throw UsageError("matrix row length does not match the partitions");
      m.entries.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed matrix document: ") + e.what());
  }
  if (m.entries.size() != m.order.size()) throw UsageError("matrix is not square");
  if (m.kind != "ell" && m.kind != "kth" && m.kind != "coh") throw UsageError("unknown matrix kind '" + m.kind + "'");
  m.diag.assign(m.order.size(), std::vector<RestrictionEntry>(m.order.size()));
  return m;
}

json walls_json(int n, double lo, double hi) {
  json ws = json::array();
  for (const auto& w : walls(n, lo, hi)) ws.push_back(w.to_string());
  return {{"n", n}, {"window", json::array({lo, hi})}, {"walls", ws}};
}

cd parse_complex(const std::string& text) {
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  double re = 0.0, im = 0.0;
  if (!(in >> re)) throw UsageError("cannot parse complex value '" + text + "'");
  if (!(in >> im)) im = 0.0;
  std::string rest;
  if (in >> rest) throw UsageError("cannot parse complex value '" + text + "'");
  if (!std::isfinite(re) || !std::isfinite(im)) throw UsageError("complex value must be finite");
  return {re, im};
}

}  // namespace hilbstab
