#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "hilbstab/errors.hpp"
#include "hilbstab/json_io.hpp"
#include "hilbstab/verify.hpp"

using namespace hilbstab;

namespace {

struct Args {
  RunConfig cfg;
  bool pretty = false;
  std::string q, a, hbar_half, z;
  int jet_order = -1;

  std::string partition;
  std::string kind;
  int n = 0;
  std::optional<double> slope;
  std::string suite;
  std::string from_file;
  double lo = 0.0, hi = 0.0;
};

void finalize_config(Args& args) {
  if (!args.q.empty()) args.cfg.q = parse_complex(args.q);
  if (!args.a.empty()) args.cfg.a = parse_complex(args.a);
  if (!args.hbar_half.empty()) args.cfg.hbar_half = parse_complex(args.hbar_half);
  if (!args.z.empty()) args.cfg.z = parse_complex(args.z);
  if (args.jet_order >= 0) args.cfg.jet_order = args.jet_order;
  if (!(args.cfg.tol > 0.0) || !(args.cfg.theta_tol > 0.0)) throw UsageError("tolerances must be positive");
}

void emit(const Args& args, json doc) {
  doc["config"] = to_json(args.cfg);
  const std::string text = doc.dump(args.pretty ? 2 : -1) + "\n";
  if (args.cfg.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(args.cfg.output, std::ios::binary);
  if (!f) throw UsageError("cannot open output file '" + args.cfg.output + "'");
  f << text;
}

json edge_pair(const BoxTable& t, Edge e) {
  return json::array({box_json(t.boxes[e.lo]), box_json(t.boxes[e.hi])});
}

int cmd_trees(const Args& args) {
  const BoxTable t = box_table(parse_partition(args.partition));
  json doc;
  doc["command"] = "trees";
  doc["box_table"] = to_json(t);
  json sk = json::array();
  for (auto e : skeleton(t)) sk.push_back(edge_pair(t, e));
  doc["skeleton"] = sk;
  json ls = json::array();
  for (const auto& s : l_shapes(t))
    ls.push_back({{"corner", box_json(s.corner)}, {"delta1", edge_pair(t, s.delta1)}, {"delta2", edge_pair(t, s.delta2)}});
  doc["l_shapes"] = ls;
  json trees = json::array();
  for (const auto& tree : upsilon_trees(t)) {
    json j = to_json(t, tree);
    if (args.pretty) j["w_ell"] = w_ell_spec(t, tree).to_string(true);
    trees.push_back(j);
  }
  doc["trees"] = trees;
  if (args.pretty) doc["s_ell"] = s_ell_spec(t).to_string(true);
  emit(args, doc);
  return 0;
}

std::string diagonal_text(const BoxTable& t, const std::string& kind) {
  if (kind == "coh") {
    std::string s;
    for (int i = 0; i < t.n(); ++i) {
      LinearForm f = LinearForm::of_t(-t.leg[i], t.arm[i] + 1);
      s += (i ? "*(" : "(") + f.to_string() + ")";
    }
    return s;
  }
  FactorList f;
  for (int i = 0; i < t.n(); ++i) f.numerator.push_back(Monomial::t1().pow(-t.leg[i]) * Monomial::t2().pow(t.arm[i] + 1));
  return f.to_string(kind == "ell");
}

int cmd_matrix(const Args& args) {
  RestrictionMatrix m;
  json ctx_json;
  if (args.kind == "ell" || args.kind == "kth") {
    if (args.kind == "kth") {
      if (!args.slope) throw UsageError("kth matrices need --slope");
      require_admissible(args.n, *args.slope);
    } else if (args.slope) {
      throw UsageError("--slope applies to kth matrices only");
    }
    const GeneratorContext ctx = make_context(args.n, args.cfg.seed, args.cfg.context_options());
    m = args.kind == "ell" ? restriction_matrix(ctx, args.n) : kth_matrix(ctx, args.n, *args.slope);
    ctx_json = to_json(ctx);
  } else {
    if (args.slope) throw UsageError("--slope applies to kth matrices only");
    const CohContext ctx = make_coh_context(args.n, args.cfg.seed);
    m = coh_matrix(ctx, args.n);
    ctx_json = to_json(ctx);
  }
  json doc;
  doc["command"] = "matrix";
  json body = to_json(m, args.cfg.seed);
  for (auto it = body.begin(); it != body.end(); ++it) doc[it.key()] = it.value();
  doc["context"] = ctx_json;
  if (args.pretty) {
    json d = json::array();
    for (const auto& p : m.order) d.push_back(diagonal_text(box_table(p), m.kind));
    doc["diagonal_formula"] = d;
  }
  emit(args, doc);
  return 0;
}

int cmd_verify(Args args) {
  VerifyOptions opt;
  json doc;
  doc["command"] = "verify";
  std::vector<Check> checks;
  if (!args.from_file.empty()) {
    std::ifstream f(args.from_file);
    if (!f) throw UsageError("cannot read '" + args.from_file + "'");
    json in;
    try {
      in = json::parse(f);
    } catch (const json::exception& e) {
      throw UsageError(std::string("invalid JSON in input file: ") + e.what());
    }
    // the document's own configuration reproduces its context
    if (in.contains("config")) {
      std::string out = args.cfg.output;
      args.cfg = run_config_from_json(in["config"]);
      args.cfg.output = out;
    }
    if (in.contains("seed")) args.cfg.seed = in["seed"].get<std::uint64_t>();
    opt.config = args.cfg;
    const RestrictionMatrix m = restriction_matrix_from_json(in);
    if (m.n > env_cap(kVerifyCap)) throw CapExceeded("matrix n exceeds the verification cap");
    checks = matrix_suite(m, opt);
    doc["suite"] = "from-file";
    doc["n"] = m.n;
    doc["kind"] = m.kind;
  } else {
    if (args.suite.empty() || args.n == 0) throw UsageError("verify needs a suite and n, or --from-file");
    opt.config = args.cfg;
    if (args.suite == "elliptic" || args.suite == "all") {
      auto c = elliptic_suite(args.n, opt);
      checks.insert(checks.end(), c.begin(), c.end());
    }
    if (args.suite == "limits" || args.suite == "all") {
      auto c = limits_suite(args.n, opt);
      checks.insert(checks.end(), c.begin(), c.end());
    }
    doc["suite"] = args.suite;
    doc["n"] = args.n;
  }
  json arr = json::array();
  for (const auto& c : checks) arr.push_back(to_json(c));
  doc["checks"] = arr;
  const bool ok = all_pass(checks);
  doc["pass"] = ok;
  emit(args, doc);
  return ok ? 0 : 1;
}

int cmd_walls(const Args& args) {
  if (args.n < 1) throw UsageError("n must be positive");
  json doc;
  doc["command"] = "walls";
  json body = walls_json(args.n, args.lo, args.hi);
  for (auto it = body.begin(); it != body.end(); ++it) doc[it.key()] = it.value();
  emit(args, doc);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stable envelopes of the Hilbert scheme of points: matrices, trees, walls and verification suites"};
  app.require_subcommand(1);
  app.fallthrough();
  Args args;

  app.add_option("--seed", args.cfg.seed, "RNG seed for the generic parameter point");
  app.add_option("--tol", args.cfg.tol, "tolerance for matrix-level checks");
  app.add_option("--theta-tol", args.cfg.theta_tol, "truncation tolerance of theta products");
  app.add_option("--jet-order", args.jet_order, "jet truncation order (default n^2+4)");
  app.add_option("--q", args.q, "elliptic modulus, \"re,im\"");
  app.add_option("--a", args.a, "equivariant parameter a, \"re,im\"");
  app.add_option("--hbar-half", args.hbar_half, "square root of hbar, \"re,im\"");
  app.add_option("--z", args.z, "Kaehler parameter, \"re,im\"");
  app.add_option("--out", args.cfg.output, "output path ('-' for stdout)");
  app.add_flag("--pretty", args.pretty, "indent output and render factor products");

  auto* trees = app.add_subcommand("trees", "box table, skeleton, L-shapes and distinguished trees");
  trees->add_option("partition", args.partition, "e.g. 4,2,1")->required();

  auto* matrix = app.add_subcommand("matrix", "restriction matrix at the generic point");
  matrix->add_option("kind", args.kind, "ell | kth | coh")->required()->check(CLI::IsMember({"ell", "kth", "coh"}));
  matrix->add_option("n", args.n, "number of boxes")->required()->check(CLI::PositiveNumber);
  matrix->add_option("--slope", args.slope, "slope for kth");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", args.suite, "elliptic | limits | all")->check(CLI::IsMember({"elliptic", "limits", "all"}));
  verify->add_option("n", args.n, "number of boxes")->check(CLI::PositiveNumber);
  verify->add_option("--from-file", args.from_file, "re-validate a matrix document instead");

  auto* wl = app.add_subcommand("walls", "walls of the K-theoretic slope in [lo, hi)");
  wl->add_option("n", args.n, "number of boxes")->required();
  wl->add_option("lo", args.lo)->required();
  wl->add_option("hi", args.hi)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "hilbstab: " << e.what() << "\n";
    return 2;
  }

  try {
    finalize_config(args);
    if (*trees) return cmd_trees(args);
    if (*matrix) return cmd_matrix(args);
    if (*verify) return cmd_verify(args);
    if (*wl) return cmd_walls(args);
  } catch (const std::exception& e) {
    std::cerr << "hilbstab: " << e.what() << "\n";
    return exit_code(e);
  }
  return 2;
}
