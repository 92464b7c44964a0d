// Command-line front end: validation, poset/shard/intersection queries, the
// verification suite, and fan generators. Exit codes: 0 all checks pass,
// 1 input error, 2 nonempty theorem-violation report.

#include "shardfan/builders.hpp"
#include "shardfan/dot.hpp"
#include "shardfan/fan_io.hpp"
#include "shardfan/verify.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

using namespace shardfan;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitViolation = 2;

struct Pipeline {
  FanGeometry geom;
  ChamberPoset poset;
};

Pipeline build_pipeline(const std::string& path, int threads) {
  Fan fan = load_fan(path);
  ValidationOptions opts;
  opts.threads = threads;
  FanGeometry geom = FanGeometry::build(std::move(fan), opts);
  ChamberPoset poset = orient_hasse(geom);
  return {std::move(geom), std::move(poset)};
}

int cmd_validate(const std::string& path, int threads) {
  Fan fan = load_fan(path);
  ValidationOptions opts;
  opts.threads = threads;
  ValidationReport report = validate_fan(fan, opts);
  if (report.ok()) {
    std::cout << "valid: " << fan.chambers.size() << " chambers, " << fan.rays.size()
              << " rays, dim " << fan.dim << "\n";
    return kExitOk;
  }
  std::cout << "invalid: " << report.summary() << "\n";
  return kExitInputError;
}

int cmd_poset(const std::string& path, int threads, bool as_dot, bool as_json) {
  Pipeline p = build_pipeline(path, threads);
  if (as_dot) {
    std::cout << poset_dot(p.geom, p.poset);
    return kExitOk;
  }
  if (as_json) {
    std::ostringstream out;
    out << "{\n  \"chambers\": [";
    for (int c = 0; c < p.poset.size(); ++c)
      out << (c ? ", " : "") << "\"" << chamber_label(p.geom, c) << "\"";
    out << "],\n  \"arrows\": [";
    auto arrows = p.poset.arrows();
    std::sort(arrows.begin(), arrows.end(), [](const CoverArrow& a, const CoverArrow& b) {
      return std::tie(a.upper, a.lower) < std::tie(b.upper, b.lower);
    });
    for (size_t i = 0; i < arrows.size(); ++i)
      out << (i ? ", " : "") << "[" << arrows[i].upper << ", " << arrows[i].lower << ", "
          << arrows[i].wall << "]";
    out << "]\n}\n";
    std::cout << out.str();
    return kExitOk;
  }
  std::cout << p.poset.size() << " chambers, " << p.poset.arrows().size() << " cover arrows\n";
  std::cout << "maximum: " << chamber_label(p.geom, p.poset.top())
            << "  minimum: " << chamber_label(p.geom, p.poset.bottom()) << "\n";
  for (const auto& a : p.poset.arrows())
    std::cout << "  " << chamber_label(p.geom, a.upper) << " -> "
              << chamber_label(p.geom, a.lower) << "\n";
  return kExitOk;
}

int cmd_shards(const std::string& path, int threads, bool as_json) {
  Pipeline p = build_pipeline(path, threads);
  ShardDecomposition dec = compute_shards(p.geom, p.poset);
  if (as_json) {
    std::ostringstream out;
    out << "{\n  \"plates\": " << dec.plates.size() << ",\n  \"shards\": [\n";
    for (const auto& s : dec.shards) {
      out << "    {\"id\": " << s.id << ", \"normal\": \""
          << vec_to_string(s.hyperplane.normal) << "\", \"walls\": [";
      for (size_t i = 0; i < s.walls.size(); ++i) out << (i ? ", " : "") << s.walls[i];
      out << "], \"upper\": [";
      for (size_t i = 0; i < dec.upper[s.id].size(); ++i)
        out << (i ? ", " : "") << dec.upper[s.id][i];
      out << "], \"lower\": [";
      for (size_t i = 0; i < dec.lower[s.id].size(); ++i)
        out << (i ? ", " : "") << dec.lower[s.id][i];
      out << "], \"j\": " << dec.j_of_shard[s.id] << "}"
          << (s.id + 1 < static_cast<int>(dec.shards.size()) ? ",\n" : "\n");
    }
    out << "  ]\n}\n";
    std::cout << out.str();
  } else {
    std::cout << dec.plates.size() << " plates, " << dec.shards.size() << " shards\n";
    for (const auto& s : dec.shards) {
      std::cout << "  shard " << s.id << ": hyperplane normal "
                << vec_to_string(s.hyperplane.normal) << ", walls {";
      for (size_t i = 0; i < s.walls.size(); ++i) std::cout << (i ? "," : "") << s.walls[i];
      std::cout << "}, J = " << chamber_label(p.geom, dec.j_of_shard[s.id]) << "\n";
    }
  }
  return dec.issues.ok ? kExitOk : kExitViolation;
}

int cmd_cjr(const std::string& path, int threads, int chamber) {
  Pipeline p = build_pipeline(path, threads);
  ShardDecomposition dec = compute_shards(p.geom, p.poset);
  std::vector<int> targets;
  if (chamber >= 0) {
    if (chamber >= p.poset.size()) throw ParseError("chamber id out of range");
    targets.push_back(chamber);
  } else {
    for (int c = 0; c < p.poset.size(); ++c) targets.push_back(c);
  }
  bool mismatch = false;
  for (int c : targets) {
    auto via_shards = canonical_join_via_shards(dec, c);
    auto oracle = p.poset.canonical_join_rep(c);
    std::cout << "chamber " << chamber_label(p.geom, c) << ": cjr = {";
    for (size_t i = 0; i < via_shards.size(); ++i)
      std::cout << (i ? ", " : "") << chamber_label(p.geom, via_shards[i]);
    std::cout << "}";
    if (!oracle.found || oracle.elements != via_shards) {
      std::cout << "  [oracle mismatch]";
      mismatch = true;
    }
    std::cout << "\n";
  }
  return mismatch ? kExitViolation : kExitOk;
}

int cmd_shardint(const std::string& path, int threads, const std::string& order, bool as_dot) {
  Pipeline p = build_pipeline(path, threads);
  ShardDecomposition dec = compute_shards(p.geom, p.poset);
  if (order == "clo") {
    if (as_dot) {
      std::cout << core_label_order_dot(p.geom, p.poset, dec);
    } else {
      for (int c = 0; c < p.poset.size(); ++c) {
        auto labels = core_label_set(p.poset, dec, c);
        std::cout << "chamber " << chamber_label(p.geom, c) << ": core labels {";
        for (size_t i = 0; i < labels.size(); ++i)
          std::cout << (i ? ", " : "") << chamber_label(p.geom, labels[i]);
        std::cout << "}\n";
      }
    }
    return kExitOk;
  }
  CheckResult issues;
  ShardIntersectionLattice lattice = enumerate_shard_intersections(p.geom, p.poset, dec, &issues);
  if (as_dot) {
    std::cout << shard_intersection_dot(lattice);
  } else {
    std::cout << lattice.elements.size() << " shard intersections\n";
    for (size_t e = 0; e < lattice.elements.size(); ++e)
      std::cout << "  " << intersection_label(lattice, static_cast<int>(e)) << ": dim "
                << lattice.element_dims[e] << ", chamber "
                << chamber_label(p.geom, lattice.elements[e].rep_chamber) << "\n";
  }
  return issues.ok ? kExitOk : kExitViolation;
}

int cmd_verify(const std::string& path, int threads, const std::string& suite, bool as_json,
               bool timing) {
  Fan fan = load_fan(path);
  VerifyOptions opts;
  opts.suite = suite_from_string(suite);
  opts.threads = threads;
  VerifyReport report = run_verify_suite(fan, opts);
  std::cout << (as_json ? report_to_json(report, timing) : report_to_text(report));
  if (!report.input_ok) return kExitInputError;
  return report.all_passed() ? kExitOk : kExitViolation;
}

int cmd_gen(const std::vector<std::string>& spec, const std::string& out_path) {
  if (spec.empty()) throw ParseError("gen: missing generator name");
  Fan fan;
  const std::string& kind = spec[0];
  auto arg = [&](size_t i) {
    if (i >= spec.size()) throw ParseError("gen " + kind + ": missing argument");
    return std::stoi(spec[i]);
  };
  if (kind == "orthant") {
    fan = gen_orthant(arg(1));
  } else if (kind == "crown") {
    fan = gen_crown(arg(1), arg(2));
  } else if (kind == "coxeterA") {
    fan = gen_coxeter_a(arg(1));
  } else if (kind == "papera2") {
    fan = gen_papera2();
  } else {
    throw ParseError("gen: unknown generator \"" + kind + "\"");
  }
  if (out_path.empty())
    std::cout << fan_to_json(fan);
  else
    save_fan(fan, out_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"shards, chamber lattices, and shard intersections of complete nonsingular fans"};
  app.require_subcommand(1);
  app.fallthrough();
  int threads = 1;
  app.add_option("--threads", threads, "worker threads for parallel checks")
      ->capture_default_str();

  std::string path, suite = "all", order = "si", out_path;
  bool as_dot = false, as_json = false, timing = false;
  int chamber = -1;
  std::vector<std::string> gen_spec;

  auto* validate = app.add_subcommand("validate", "validate a fan document");
  validate->add_option("fan", path, "fan document path")->required();

  auto* poset = app.add_subcommand("poset", "chamber poset of a fan");
  poset->add_option("fan", path)->required();
  auto* poset_dot_flag = poset->add_flag("--dot", as_dot, "DOT output");
  poset->add_flag("--json", as_json, "JSON output")->excludes(poset_dot_flag);

  auto* shards = app.add_subcommand("shards", "shards of a fan");
  shards->add_option("fan", path)->required();
  shards->add_flag("--json", as_json, "JSON output");

  auto* cjr = app.add_subcommand("cjr", "canonical join representations");
  cjr->add_option("fan", path)->required();
  cjr->add_option("--chamber", chamber, "restrict to one chamber id");

  auto* shardint = app.add_subcommand("shardint", "shard intersection lattice");
  shardint->add_option("fan", path)->required();
  shardint->add_option("--order", order, "si (containment) or clo (core label order)")
      ->check(CLI::IsMember({"si", "clo"}))
      ->capture_default_str();
  shardint->add_flag("--dot", as_dot, "DOT output");

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("fan", path)->required();
  verify->add_option("--suite", suite, "all | lattice | shards | intersections")
      ->check(CLI::IsMember({"all", "lattice", "shards", "intersections"}))
      ->capture_default_str();
  verify->add_flag("--json", as_json, "JSON report");
  verify->add_flag("--timing", timing, "include timing in the JSON report");

  auto* gen = app.add_subcommand("gen", "generate a bundled fan");
  gen->add_option("spec", gen_spec, "orthant N | crown P Q | coxeterA N | papera2")
      ->required()
      ->expected(-1);
  gen->add_option("-o,--output", out_path, "output path (stdout by default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (validate->parsed()) return cmd_validate(path, threads);
    if (poset->parsed()) return cmd_poset(path, threads, as_dot, as_json);
    if (shards->parsed()) return cmd_shards(path, threads, as_json);
    if (cjr->parsed()) return cmd_cjr(path, threads, chamber);
    if (shardint->parsed()) return cmd_shardint(path, threads, order, as_dot);
    if (verify->parsed()) return cmd_verify(path, threads, suite, as_json, timing);
    if (gen->parsed()) return cmd_gen(gen_spec, out_path);
  } catch (const InvalidFanError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
