#include "shardfan/verify.hpp"

#include "parallel.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <sstream>

namespace shardfan {

Suite suite_from_string(const std::string& name) {
  if (name == "all") return Suite::All;
  if (name == "lattice") return Suite::Lattice;
  if (name == "shards") return Suite::Shards;
  if (name == "intersections") return Suite::Intersections;
  throw std::invalid_argument("unknown suite: " + name);
}

const char* suite_name(Suite suite) {
  switch (suite) {
    case Suite::All: return "all";
    case Suite::Lattice: return "lattice";
    case Suite::Shards: return "shards";
    case Suite::Intersections: return "intersections";
  }
  return "?";
}

bool VerifyReport::all_passed() const {
  if (!input_ok) return false;
  for (const auto& c : checks)
    if (c.status == "fail") return false;
  return true;
}

namespace {

std::string first_violations(const CheckResult& res, size_t limit = 3) {
  std::ostringstream out;
  for (size_t i = 0; i < res.violations.size() && i < limit; ++i) {
    if (i) out << "; ";
    out << res.violations[i];
  }
  if (res.violations.size() > limit)
    out << "; +" << res.violations.size() - limit << " more";
  return out.str();
}

}  // namespace

VerifyReport run_verify_suite(const Fan& fan, const VerifyOptions& opts) {
  VerifyReport report;
  report.fan_name = fan.name;
  report.dim = fan.dim;
  report.suite = opts.suite;
  const auto started = std::chrono::steady_clock::now();
  auto finish = [&]() -> VerifyReport& {
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
            .count();
    return report;
  };
  auto add = [&](const std::string& name, bool ok, const std::string& detail = "") {
    report.checks.push_back({name, ok ? "pass" : "fail", detail});
  };
  auto add_check = [&](const std::string& name, const CheckResult& res) {
    add(name, res.ok, first_violations(res));
  };
  auto skip = [&](const std::string& name, const std::string& why) {
    report.checks.push_back({name, "skip", why});
  };

  ValidationOptions vopts;
  vopts.threads = opts.threads;
  vopts.engine = opts.engine;
  report.validation = validate_fan(fan, vopts);
  report.input_ok = report.validation.ok();
  add("fan_validation", report.input_ok, report.validation.summary());
  if (!report.input_ok) return finish();

  FanGeometry geom = FanGeometry::build_validated(fan);
  report.counts.chambers = geom.num_chambers();
  report.counts.faces = static_cast<int>(geom.faces().size());
  report.counts.walls = static_cast<int>(geom.walls().size());

  ChamberPoset poset;
  try {
    poset = orient_hasse(geom);
  } catch (const std::exception& e) {
    add("poset_orientation", false, e.what());
    return finish();
  }
  add("poset_orientation", true);

  {
    auto issues = poset.structural_issues(&geom);
    CheckResult res;
    for (auto& msg : issues) res.fail(std::move(msg));
    add_check("poset_structure", res);
  }

  auto lattice_check = poset.check_lattice();
  add("lattice", lattice_check.ok,
      lattice_check.ok ? ""
                       : "no " + std::string(lattice_check.join_side ? "join" : "meet") +
                             " for (" + std::to_string(lattice_check.a) + "," +
                             std::to_string(lattice_check.b) + ")");

  if (lattice_check.ok) {
    auto sd = poset.check_semidistributive();
    add("semidistributive", sd.ok,
        sd.ok ? ""
              : sd.detail + " at (" + std::to_string(sd.witness[0]) + "," +
                    std::to_string(sd.witness[1]) + "," + std::to_string(sd.witness[2]) + ")");
  } else {
    skip("semidistributive", "not a lattice");
  }

  {
    CheckResult res;
    for (const auto& face : geom.faces()) {
      StarInterval st = star_interval(geom, poset, face.id);
      if (!st.unique_extremes)
        res.fail("star of face " + std::to_string(face.id) + " lacks unique extremes");
      else if (!st.is_full_interval)
        res.fail("star of face " + std::to_string(face.id) + " is not the interval [min,max]");
    }
    add_check("star_intervals", res);
  }

  if (geom.dim() >= 2) {
    CheckResult res;
    for (const auto& face : geom.faces()) {
      if (face.dim() != geom.dim() - 2) continue;
      StarInterval st = star_interval(geom, poset, face.id);
      CrownResult crown = crown_check(poset, st);
      if (!crown.ok)
        res.fail("face " + std::to_string(face.id) + ": " + crown.detail);
    }
    add_check("crown_codim2", res);
  } else {
    skip("crown_codim2", "no codimension-2 faces");
  }

  report.counts.join_irreducibles = static_cast<int>(poset.join_irreducibles().size());
  if (opts.suite == Suite::Lattice) return finish();

  ShardDecomposition dec;
  try {
    dec = compute_shards(geom, poset);
  } catch (const std::exception& e) {
    add("shard_construction", false, e.what());
    return finish();
  }
  report.counts.plates = static_cast<int>(dec.plates.size());
  report.counts.shards = static_cast<int>(dec.shards.size());
  add_check("shard_construction", dec.issues);

  {
    CheckResult res;
    std::vector<int> count(geom.walls().size(), 0);
    for (const auto& s : dec.shards)
      for (int w : s.walls) ++count[w];
    for (size_t w = 0; w < count.size(); ++w)
      if (count[w] != 1)
        res.fail("wall " + std::to_string(w) + " lies in " + std::to_string(count[w]) +
                 " shards");
    add_check("shards_partition_walls", res);
  }

  {
    CheckResult res;
    for (const auto& s : dec.shards) {
      if (dec.upper[s.id].empty() || dec.lower[s.id].empty() ||
          dec.upper[s.id].size() != s.walls.size() || dec.lower[s.id].size() != s.walls.size())
        res.fail("shard " + std::to_string(s.id) + " upper/lower sizes differ from wall count");
    }
    add_check("upper_lower_counts", res);
  }

  add_check("jirr_shard_bijection", verify_jirr_shard_bijection(geom, poset, dec));
  add_check("wall_connectivity", shard_wall_connectivity_check(geom, poset, dec));

  if (lattice_check.ok) {
    const int nc = geom.num_chambers();
    std::vector<std::string> errors(nc);
    detail::parallel_for(nc, opts.threads, [&](int c) {
      auto via_shards = canonical_join_via_shards(dec, c);
      int joined = -1;
      bool join_ok = true;
      for (int j : via_shards) {
        if (joined < 0) {
          joined = j;
          continue;
        }
        auto jv = poset.join(joined, j);
        if (!jv) {
          join_ok = false;
          break;
        }
        joined = *jv;
      }
      if (joined < 0) joined = poset.bottom();
      if (!join_ok || joined != c) {
        errors[c] = "lower shards of chamber " + std::to_string(c) + " do not join to it";
        return;
      }
      auto oracle = poset.canonical_join_rep(c);
      if (!oracle.found) {
        errors[c] = "no canonical join representation for chamber " + std::to_string(c);
        return;
      }
      if (oracle.elements != via_shards)
        errors[c] = "canonical join of chamber " + std::to_string(c) +
                    " differs between shards and oracle";
    });
    CheckResult res;
    for (const auto& e : errors)
      if (!e.empty()) res.fail(e);
    add_check("cjr_via_shards", res);
  } else {
    skip("cjr_via_shards", "not a lattice");
  }

  {
    ArrangementShards oracle = arrangement_shards_oracle(geom, poset);
    if (!oracle.is_arrangement) {
      skip("arrangement_oracle", "not an arrangement: " + oracle.reason);
    } else {
      auto key = [](const std::vector<Shard>& shards) {
        std::vector<FaceSet> sets;
        for (const auto& s : shards) sets.push_back(s.faces);
        std::sort(sets.begin(), sets.end());
        return sets;
      };
      const bool same = key(oracle.shards) == key(dec.shards);
      add("arrangement_oracle", same,
          same ? "identical shard set"
               : "oracle produced a different shard set (" +
                     std::to_string(oracle.shards.size()) + " vs " +
                     std::to_string(dec.shards.size()) + ")");
    }
  }

  if (opts.suite == Suite::Shards) return finish();

  CheckResult closure;
  ShardIntersectionLattice lattice;
  try {
    lattice = enumerate_shard_intersections(geom, poset, dec, &closure);
  } catch (const std::exception& e) {
    add("intersection_closure", false, e.what());
    return finish();
  }
  report.counts.shard_intersections = static_cast<int>(lattice.elements.size());
  add_check("intersection_closure", closure);

  {
    CheckResult res;
    FaceSet whole(lattice.num_faces);
    whole.set();
    const int bottom = poset.bottom(), top = poset.top();
    if (bottom >= 0 && lattice.elements[lattice.element_of_chamber[bottom]].faces != whole)
      res.fail("S(minimum) is not the whole space");
    if (top >= 0) {
      FaceSet origin_only(lattice.num_faces);
      origin_only.set(geom.face_id({}));
      if (lattice.elements[lattice.element_of_chamber[top]].faces != origin_only)
        res.fail("S(maximum) is not the origin");
    }
    add_check("s_extremes", res);
  }

  if (lattice_check.ok) {
    add_check("anti_isomorphism",
              verify_anti_isomorphism(geom, poset, dec, lattice, opts.threads));
  } else {
    skip("anti_isomorphism", "not a lattice");
  }
  try {
    add_check("containing_shard", verify_containing_shard(geom, poset, dec, lattice));
  } catch (const std::exception& e) {
    add("containing_shard", false, e.what());
  }

  {
    GradednessReport grad = rank_and_gradedness(geom, poset, lattice);
    CheckResult res = grad.issues;
    add_check("gradedness", res);
  }

  return finish();
}

std::string report_to_json(const VerifyReport& report, bool include_timing) {
  nlohmann::ordered_json doc;
  doc["fan"] = report.fan_name;
  doc["dim"] = report.dim;
  doc["suite"] = suite_name(report.suite);
  doc["validation"] = nlohmann::ordered_json::object();
  doc["validation"]["ok"] = report.validation.ok();
  auto issues = nlohmann::ordered_json::array();
  for (const auto& issue : report.validation.issues) {
    nlohmann::ordered_json entry;
    entry["kind"] = issue_kind_name(issue.kind);
    entry["subjects"] = issue.subjects;
    entry["detail"] = issue.detail;
    issues.push_back(std::move(entry));
  }
  doc["validation"]["issues"] = std::move(issues);

  nlohmann::ordered_json counts;
  auto put_count = [&](const char* name, int value) {
    if (value >= 0) counts[name] = value;
  };
  put_count("chambers", report.counts.chambers);
  put_count("faces", report.counts.faces);
  put_count("walls", report.counts.walls);
  put_count("plates", report.counts.plates);
  put_count("shards", report.counts.shards);
  put_count("join_irreducibles", report.counts.join_irreducibles);
  put_count("shard_intersections", report.counts.shard_intersections);
  doc["counts"] = std::move(counts);

  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json entry;
    entry["name"] = c.name;
    entry["status"] = c.status;
    entry["detail"] = c.detail;
    checks.push_back(std::move(entry));
  }
  doc["checks"] = std::move(checks);
  doc["all_passed"] = report.all_passed();
  if (include_timing) doc["timing_ms"] = report.elapsed_ms;
  return doc.dump(2) + "\n";
}

std::string report_to_text(const VerifyReport& report) {
  std::ostringstream out;
  out << "fan: " << (report.fan_name.empty() ? "(unnamed)" : report.fan_name)
      << "  dim: " << report.dim << "  suite: " << suite_name(report.suite) << "\n";
  for (const auto& c : report.checks) {
    out << "  [" << (c.status == "pass" ? "PASS" : c.status == "fail" ? "FAIL" : "SKIP") << "] "
        << c.name;
    if (!c.detail.empty()) out << " - " << c.detail;
    out << "\n";
  }
  auto count = [&](const char* name, int value) {
    if (value >= 0) out << "  " << name << ": " << value << "\n";
  };
  out << "counts:\n";
  count("chambers", report.counts.chambers);
  count("faces", report.counts.faces);
  count("walls", report.counts.walls);
  count("plates", report.counts.plates);
  count("shards", report.counts.shards);
  count("join_irreducibles", report.counts.join_irreducibles);
  count("shard_intersections", report.counts.shard_intersections);
  out << "elapsed: " << report.elapsed_ms << " ms\n";
  out << (report.all_passed() ? "ALL CHECKS PASSED" : "CHECKS FAILED") << "\n";
  return out.str();
}

}  // namespace shardfan
