#include "shardfan/shard_intersections.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace shardfan {

FaceSet intersect_shards(const ShardDecomposition& dec, const std::vector<int>& shard_ids,
                         int num_faces) {
  FaceSet acc(num_faces);
  acc.set();  // the empty intersection is the whole space
  for (int s : shard_ids) acc &= dec.shards.at(s).faces;
  return acc;
}

FaceSet s_of_chamber(const ChamberPoset& poset, const ShardDecomposition& dec, int chamber,
                     int num_faces) {
  std::vector<int> shards;
  for (int ai : poset.arrows_out(chamber))
    shards.push_back(shard_of_cover(dec, poset.arrows()[ai]));
  return intersect_shards(dec, shards, num_faces);
}

int ShardIntersectionLattice::index_of(const FaceSet& faces) const {
  for (size_t i = 0; i < elements.size(); ++i)
    if (elements[i].faces == faces) return static_cast<int>(i);
  return -1;
}

std::vector<std::pair<int, int>> ShardIntersectionLattice::hasse_covers() const {
  const int m = static_cast<int>(elements.size());
  std::vector<std::pair<int, int>> covers;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (a == b || !leq(a, b) || leq(b, a)) continue;
      bool cover = true;
      for (int c = 0; c < m && cover; ++c) {
        if (c == a || c == b) continue;
        if (leq(a, c) && !leq(c, a) && leq(c, b) && !leq(b, c)) cover = false;
      }
      if (cover) covers.emplace_back(a, b);
    }
  return covers;
}

ShardIntersectionLattice enumerate_shard_intersections(const FanGeometry& geom,
                                                       const ChamberPoset& poset,
                                                       const ShardDecomposition& dec,
                                                       CheckResult* issues) {
  CheckResult local;
  CheckResult& check = issues ? *issues : local;

  ShardIntersectionLattice lat;
  lat.num_faces = static_cast<int>(geom.faces().size());
  lat.dim = geom.dim();
  const int nc = poset.size();

  std::vector<FaceSet> per_chamber(nc);
  for (int c = 0; c < nc; ++c) per_chamber[c] = s_of_chamber(poset, dec, c, lat.num_faces);

  std::map<FaceSet, int> index;
  for (int c = 0; c < nc; ++c) {
    auto it = index.find(per_chamber[c]);
    if (it != index.end()) {
      check.fail("S is not injective: chambers " + std::to_string(it->second) + " and " +
                 std::to_string(c) + " share a shard intersection");
    } else {
      index.emplace(per_chamber[c], c);
    }
  }

  std::vector<FaceSet> ordered;
  for (const auto& [faces, rep] : index) ordered.push_back(faces);
  std::sort(ordered.begin(), ordered.end(), [](const FaceSet& a, const FaceSet& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a < b;
  });

  std::map<FaceSet, int> element_id;
  for (const auto& faces : ordered) {
    ShardIntersection e;
    e.faces = faces;
    e.rep_chamber = index.at(faces);
    for (const auto& s : dec.shards)
      if (faces.is_subset_of(s.faces)) e.generators.push_back(s.id);
    element_id.emplace(faces, static_cast<int>(lat.elements.size()));
    lat.elements.push_back(std::move(e));
  }
  lat.element_of_chamber.assign(nc, -1);
  for (int c = 0; c < nc; ++c) lat.element_of_chamber[c] = element_id.at(per_chamber[c]);

  lat.element_dims.assign(lat.elements.size(), -1);
  for (size_t e = 0; e < lat.elements.size(); ++e) {
    int d = 0;
    const auto& bits = lat.elements[e].faces;
    for (auto f = bits.find_first(); f != boost::dynamic_bitset<>::npos; f = bits.find_next(f))
      d = std::max(d, geom.face(static_cast<int>(f)).dim());
    lat.element_dims[e] = d;
  }

  // Certify the enumeration is the full intersection closure.
  FaceSet whole(lat.num_faces);
  whole.set();
  if (!element_id.count(whole)) check.fail("the whole space V is missing");
  for (const auto& s : dec.shards)
    if (!element_id.count(s.faces))
      check.fail("single shard " + std::to_string(s.id) + " is not a shard intersection");
  for (size_t a = 0; a < lat.elements.size(); ++a)
    for (size_t b = a + 1; b < lat.elements.size(); ++b) {
      FaceSet meet = lat.elements[a].faces & lat.elements[b].faces;
      if (!element_id.count(meet))
        check.fail("closure gap: intersection of elements " + std::to_string(a) + " and " +
                   std::to_string(b) + " is missing");
    }
  return lat;
}

bool si_leq(const ShardIntersectionLattice& lattice, int a, int b) { return lattice.leq(a, b); }

std::vector<int> core_label_set(const ChamberPoset& poset, const ShardDecomposition& dec,
                                int chamber) {
  (void)dec;
  const auto& out = poset.arrows_out(chamber);
  if (out.empty()) return {};
  int down = -1;
  for (int ai : out) {
    const int lo = poset.arrows()[ai].lower;
    if (down < 0) {
      down = lo;
      continue;
    }
    auto m = poset.meet(down, lo);
    if (!m) return {};
    down = *m;
  }
  std::vector<int> labels;
  for (const auto& a : poset.arrows()) {
    if (!poset.leq(down, a.lower) || !poset.leq(a.upper, chamber)) continue;
    auto g = poset.gamma(a.upper, a.lower);
    if (g.found) labels.push_back(g.value);
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels;
}

CheckResult verify_anti_isomorphism(const FanGeometry& geom, const ChamberPoset& poset,
                                    const ShardDecomposition& dec,
                                    const ShardIntersectionLattice& lattice, int threads) {
  (void)geom;
  CheckResult res;
  const int nc = poset.size();

  // Gamma labels once per arrow, then label sets per chamber.
  std::vector<int> gamma_of_arrow(poset.arrows().size(), -1);
  for (size_t ai = 0; ai < poset.arrows().size(); ++ai) {
    const auto& a = poset.arrows()[ai];
    auto g = poset.gamma(a.upper, a.lower);
    if (g.found) gamma_of_arrow[ai] = g.value;
  }
  std::vector<std::vector<int>> labels(nc);
  std::vector<std::string> label_errors(nc);
  detail::parallel_for(nc, threads, [&](int c) {
    const auto& out = poset.arrows_out(c);
    if (out.empty()) return;
    int down = -1;
    for (int ai : out) {
      const int lo = poset.arrows()[ai].lower;
      if (down < 0) {
        down = lo;
        continue;
      }
      auto m = poset.meet(down, lo);
      if (!m) {
        label_errors[c] = "meet of covers of " + std::to_string(c) + " undefined";
        return;
      }
      down = *m;
    }
    std::vector<int> ls;
    for (size_t ai = 0; ai < poset.arrows().size(); ++ai) {
      const auto& a = poset.arrows()[ai];
      if (!poset.leq(down, a.lower) || !poset.leq(a.upper, c)) continue;
      if (gamma_of_arrow[ai] < 0) {
        label_errors[c] = "gamma undefined inside interval of " + std::to_string(c);
        return;
      }
      ls.push_back(gamma_of_arrow[ai]);
    }
    std::sort(ls.begin(), ls.end());
    ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
    labels[c] = std::move(ls);
  });
  for (int c = 0; c < nc; ++c)
    if (!label_errors[c].empty()) res.fail(label_errors[c]);
  if (!res.ok) return res;

  // Key identity: the core label set of R is { J(s) : S(R) inside s }.
  for (int c = 0; c < nc; ++c) {
    const FaceSet& sc = lattice.elements[lattice.element_of_chamber[c]].faces;
    std::vector<int> from_shards;
    for (const auto& s : dec.shards)
      if (sc.is_subset_of(s.faces)) from_shards.push_back(dec.j_of_shard[s.id]);
    std::sort(from_shards.begin(), from_shards.end());
    if (from_shards != labels[c])
      res.fail("core labels of chamber " + std::to_string(c) +
               " differ from J of containing shards");
  }

  std::vector<std::string> pair_errors(nc);
  detail::parallel_for(nc, threads, [&](int r) {
    for (int t = 0; t < nc; ++t) {
      const bool si = lattice.leq(lattice.element_of_chamber[r], lattice.element_of_chamber[t]);
      const bool clo = std::includes(labels[r].begin(), labels[r].end(), labels[t].begin(),
                                     labels[t].end());
      if (si != clo) {
        pair_errors[r] = "SI/CLO mismatch on pair (" + std::to_string(r) + "," +
                         std::to_string(t) + ")";
        return;
      }
    }
  });
  for (int r = 0; r < nc; ++r)
    if (!pair_errors[r].empty()) res.fail(pair_errors[r]);
  return res;
}

GammaFace gamma_of_face(const FanGeometry& geom, const ChamberPoset& poset,
                        const ShardDecomposition& dec, int face_id) {
  GammaFace out;
  out.faces.resize(geom.faces().size());
  out.faces.set();
  StarInterval star = star_interval(geom, poset, face_id);
  if (!star.unique_extremes) throw GeomError("gamma_of_face: star has no unique extremes");
  if (star.chambers.size() == 1) {
    out.degenerate_chamber_case = true;  // empty intersection convention: V
    return out;
  }
  for (int ai : poset.arrows_out(star.max)) {
    const auto& a = poset.arrows()[ai];
    if (!poset.leq(star.min, a.lower)) continue;
    out.faces &= dec.shards[shard_of_cover(dec, a)].faces;
  }
  return out;
}

CheckResult verify_containing_shard(const FanGeometry& geom, const ChamberPoset& poset,
                                    const ShardDecomposition& dec,
                                    const ShardIntersectionLattice& lattice) {
  CheckResult res;
  const int num_faces = static_cast<int>(geom.faces().size());
  for (const auto& face : geom.faces()) {
    GammaFace g = gamma_of_face(geom, poset, dec, face.id);
    if (!g.degenerate_chamber_case) {
      // Gamma(U) must be the intersection of all shards containing U.
      std::vector<int> containing;
      for (const auto& s : dec.shards)
        if (s.faces.test(face.id)) containing.push_back(s.id);
      if (intersect_shards(dec, containing, num_faces) != g.faces)
        res.fail("Gamma(face " + std::to_string(face.id) +
                 ") differs from the intersection of containing shards");
    }
    for (size_t e = 0; e < lattice.elements.size(); ++e) {
      if (lattice.element_dims[e] != face.dim()) continue;
      if (!lattice.elements[e].faces.test(face.id)) continue;
      if (lattice.elements[e].faces != g.faces)
        res.fail("intersection " + std::to_string(e) + " contains face " +
                 std::to_string(face.id) + " of equal dimension but differs from Gamma");
    }
  }
  return res;
}

GradednessReport rank_and_gradedness(const FanGeometry& geom, const ChamberPoset& poset,
                                     const ShardIntersectionLattice& lattice) {
  GradednessReport rep;
  const int n = geom.dim();
  rep.rank.assign(lattice.elements.size(), -1);
  for (size_t e = 0; e < lattice.elements.size(); ++e) {
    rep.rank[e] = poset.out_degree(lattice.elements[e].rep_chamber);
    if (lattice.element_dims[e] != n - rep.rank[e]) {
      rep.dim_rank_ok = false;
      rep.issues.fail("element " + std::to_string(e) + ": dim " +
                      std::to_string(lattice.element_dims[e]) + " != " + std::to_string(n) +
                      " - rank " + std::to_string(rep.rank[e]));
    }
  }
  for (auto [small, large] : lattice.hasse_covers()) {
    if (rep.rank[small] != rep.rank[large] + 1) {
      rep.graded = false;
      rep.issues.fail("cover " + std::to_string(small) + " < " + std::to_string(large) +
                      " changes rank from " + std::to_string(rep.rank[large]) + " to " +
                      std::to_string(rep.rank[small]));
    }
  }
  return rep;
}

}  // namespace shardfan
