#include "shardfan/shards.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace shardfan {

namespace {

std::vector<int> shared_rays(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<std::vector<int>> components(const std::vector<int>& nodes,
                                         const std::map<int, std::vector<int>>& adj) {
  std::vector<std::vector<int>> comps;
  std::set<int> seen;
  for (int start : nodes) {
    if (seen.count(start)) continue;
    std::vector<int> comp, stack{start};
    seen.insert(start);
    while (!stack.empty()) {
      int w = stack.back();
      stack.pop_back();
      comp.push_back(w);
      auto it = adj.find(w);
      if (it == adj.end()) continue;
      for (int nb : it->second)
        if (seen.insert(nb).second) stack.push_back(nb);
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  std::sort(comps.begin(), comps.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return comps;
}

}  // namespace

std::vector<Plate> compute_plates(const FanGeometry& geom) {
  const int n = geom.dim();
  std::map<IntVec, std::vector<int>> groups;
  for (const auto& w : geom.walls()) groups[w.hyperplane.normal].push_back(w.id);

  std::vector<Plate> plates;
  for (const auto& [normal, wall_ids] : groups) {
    std::map<int, std::vector<int>> adj;
    for (size_t i = 0; i < wall_ids.size(); ++i)
      for (size_t j = i + 1; j < wall_ids.size(); ++j) {
        const auto& fi = geom.face(geom.wall(wall_ids[i]).face).rays;
        const auto& fj = geom.face(geom.wall(wall_ids[j]).face).rays;
        if (static_cast<int>(shared_rays(fi, fj).size()) == n - 2) {
          adj[wall_ids[i]].push_back(wall_ids[j]);
          adj[wall_ids[j]].push_back(wall_ids[i]);
        }
      }
    for (auto& comp : components(wall_ids, adj)) {
      Plate p;
      p.id = static_cast<int>(plates.size());
      p.hyperplane = geom.wall(comp.front()).hyperplane;
      p.walls = std::move(comp);
      plates.push_back(std::move(p));
    }
  }
  return plates;
}

bool is_cut(const FanGeometry& geom, const ChamberPoset& poset, const Plate& plate,
            int codim2_face) {
  const Face& locus = geom.face(codim2_face);
  if (locus.dim() != geom.dim() - 2)
    throw FaceNotCodim2("face " + std::to_string(codim2_face) + " has dimension " +
                        std::to_string(locus.dim()));
  StarInterval star = star_interval(geom, poset, codim2_face);
  if (!star.unique_extremes)
    throw GeomError("star of face " + std::to_string(codim2_face) + " has no unique extremes");

  // Basic walls at the locus: walls through it bounding the local maximum
  // or minimum chamber.
  bool plate_has_basic = false, any_basic = false;
  for (const auto& w : geom.walls()) {
    const auto& wrays = geom.face(w.face).rays;
    if (!std::includes(wrays.begin(), wrays.end(), locus.rays.begin(), locus.rays.end()))
      continue;
    const auto& maxr = geom.chamber_rays(star.max);
    const auto& minr = geom.chamber_rays(star.min);
    const bool basic = std::includes(maxr.begin(), maxr.end(), wrays.begin(), wrays.end()) ||
                       std::includes(minr.begin(), minr.end(), wrays.begin(), wrays.end());
    if (!basic) continue;
    any_basic = true;
    if (std::binary_search(plate.walls.begin(), plate.walls.end(), w.id)) plate_has_basic = true;
  }
  return !plate_has_basic && any_basic;
}

ShardDecomposition compute_shards(const FanGeometry& geom, const ChamberPoset& poset) {
  ShardDecomposition dec;
  dec.plates = compute_plates(geom);
  const int n = geom.dim();
  const int num_faces = static_cast<int>(geom.faces().size());

  std::map<int, std::pair<int, int>> wall_arrow;  // wall id -> (upper, lower)
  for (const auto& a : poset.arrows()) wall_arrow[a.wall] = {a.upper, a.lower};

  dec.shard_of_wall.assign(geom.walls().size(), -1);
  for (const auto& plate : dec.plates) {
    // Uncut adjacency inside the plate.
    std::map<int, std::vector<int>> adj;
    std::map<int, bool> cut_cache;
    for (size_t i = 0; i < plate.walls.size(); ++i)
      for (size_t j = i + 1; j < plate.walls.size(); ++j) {
        const auto& fi = geom.face(geom.wall(plate.walls[i]).face).rays;
        const auto& fj = geom.face(geom.wall(plate.walls[j]).face).rays;
        auto common = shared_rays(fi, fj);
        if (static_cast<int>(common.size()) != n - 2) continue;
        const int locus = geom.face_id(common);
        auto it = cut_cache.find(locus);
        if (it == cut_cache.end())
          it = cut_cache.emplace(locus, is_cut(geom, poset, plate, locus)).first;
        if (it->second) continue;
        adj[plate.walls[i]].push_back(plate.walls[j]);
        adj[plate.walls[j]].push_back(plate.walls[i]);
      }
    for (auto& comp : components(plate.walls, adj)) {
      Shard s;
      s.plate = plate.id;
      s.hyperplane = plate.hyperplane;
      s.walls = std::move(comp);
      s.faces.resize(num_faces);
      for (int w : s.walls)
        for (int f : geom.subfaces(geom.wall(w).face)) s.faces.set(f);
      dec.shards.push_back(std::move(s));
    }
  }

  // Shard ids: (hyperplane normal lexicographic, smallest wall id).
  std::sort(dec.shards.begin(), dec.shards.end(), [](const Shard& a, const Shard& b) {
    return std::tie(a.hyperplane.normal, a.walls.front()) <
           std::tie(b.hyperplane.normal, b.walls.front());
  });
  for (size_t i = 0; i < dec.shards.size(); ++i) {
    dec.shards[i].id = static_cast<int>(i);
    for (int w : dec.shards[i].walls) dec.shard_of_wall[w] = static_cast<int>(i);
  }

  dec.upper.resize(dec.shards.size());
  dec.lower.resize(dec.shards.size());
  dec.j_of_shard.assign(dec.shards.size(), -1);
  for (const auto& s : dec.shards) {
    for (int w : s.walls) {
      auto [up, lo] = wall_arrow.at(w);
      dec.upper[s.id].push_back(up);
      dec.lower[s.id].push_back(lo);
    }
    std::sort(dec.upper[s.id].begin(), dec.upper[s.id].end());
    std::sort(dec.lower[s.id].begin(), dec.lower[s.id].end());

    std::vector<int> minimal;
    for (int u : dec.upper[s.id]) {
      bool is_minimal = true;
      for (int v : dec.upper[s.id])
        if (v != u && poset.leq(v, u)) is_minimal = false;
      if (is_minimal) minimal.push_back(u);
    }
    if (minimal.size() != 1) {
      dec.issues.fail("shard " + std::to_string(s.id) + " has " +
                      std::to_string(minimal.size()) + " minimal upper chambers");
      continue;
    }
    dec.j_of_shard[s.id] = minimal[0];
    if (poset.out_degree(minimal[0]) != 1)
      dec.issues.fail("J of shard " + std::to_string(s.id) + " is not join-irreducible");
  }
  return dec;
}

int shard_of_cover(const ShardDecomposition& dec, const CoverArrow& arrow) {
  if (arrow.wall < 0 || arrow.wall >= static_cast<int>(dec.shard_of_wall.size()))
    throw GeomError("shard_of_cover: arrow has no wall");
  return dec.shard_of_wall[arrow.wall];
}

std::vector<int> lower_shards(const ShardDecomposition& dec, int chamber) {
  std::vector<int> out;
  for (const auto& s : dec.shards)
    if (std::binary_search(dec.upper[s.id].begin(), dec.upper[s.id].end(), chamber))
      out.push_back(s.id);
  return out;
}

std::vector<int> canonical_join_via_shards(const ShardDecomposition& dec, int chamber) {
  std::vector<int> out;
  for (int s : lower_shards(dec, chamber)) out.push_back(dec.j_of_shard[s]);
  std::sort(out.begin(), out.end());
  return out;
}

CheckResult verify_jirr_shard_bijection(const FanGeometry& geom, const ChamberPoset& poset,
                                        const ShardDecomposition& dec) {
  (void)geom;
  CheckResult res;
  auto jirr = poset.join_irreducibles();
  if (jirr.size() != dec.shards.size())
    res.fail("counts differ: " + std::to_string(jirr.size()) + " join-irreducibles vs " +
             std::to_string(dec.shards.size()) + " shards");
  for (int j : jirr) {
    const auto& arrow = poset.arrows()[poset.arrows_out(j)[0]];
    const int s = shard_of_cover(dec, arrow);
    if (dec.j_of_shard[s] != j)
      res.fail("J(Sigma(" + std::to_string(j) + ")) = " + std::to_string(dec.j_of_shard[s]));
  }
  for (const auto& s : dec.shards) {
    const int j = dec.j_of_shard[s.id];
    if (j < 0 || poset.out_degree(j) != 1) {
      res.fail("shard " + std::to_string(s.id) + " has no join-irreducible J");
      continue;
    }
    const auto& arrow = poset.arrows()[poset.arrows_out(j)[0]];
    if (shard_of_cover(dec, arrow) != s.id)
      res.fail("Sigma(J(shard " + std::to_string(s.id) + ")) differs");
  }
  for (const auto& arrow : poset.arrows()) {
    auto g = poset.gamma(arrow.upper, arrow.lower);
    if (!g.found || !g.join_irreducible) {
      res.fail("gamma undefined or reducible on arrow " + std::to_string(arrow.upper) + "->" +
               std::to_string(arrow.lower));
      continue;
    }
    if (g.value != dec.j_of_shard[shard_of_cover(dec, arrow)])
      res.fail("gamma != J(Sigma) on arrow " + std::to_string(arrow.upper) + "->" +
               std::to_string(arrow.lower));
  }
  return res;
}

CheckResult shard_wall_connectivity_check(const FanGeometry& geom, const ChamberPoset& poset,
                                          const ShardDecomposition& dec) {
  CheckResult res;
  const int n = geom.dim();
  std::map<int, std::pair<int, int>> wall_arrow;
  for (const auto& a : poset.arrows()) wall_arrow[a.wall] = {a.upper, a.lower};

  for (const auto& s : dec.shards) {
    const Plate& plate = dec.plates[s.plate];
    std::map<int, std::vector<int>> adj;
    std::vector<std::pair<int, int>> pairs;
    for (size_t i = 0; i < s.walls.size(); ++i)
      for (size_t j = i + 1; j < s.walls.size(); ++j) {
        const auto& fi = geom.face(geom.wall(s.walls[i]).face).rays;
        const auto& fj = geom.face(geom.wall(s.walls[j]).face).rays;
        auto common = shared_rays(fi, fj);
        if (static_cast<int>(common.size()) != n - 2) continue;
        if (is_cut(geom, poset, plate, geom.face_id(common))) continue;
        adj[s.walls[i]].push_back(s.walls[j]);
        adj[s.walls[j]].push_back(s.walls[i]);
        pairs.emplace_back(s.walls[i], s.walls[j]);
      }
    if (components(s.walls, adj).size() != 1)
      res.fail("shard " + std::to_string(s.id) + " wall graph is disconnected");
    for (auto [w1, w2] : pairs) {
      auto [u1, l1] = wall_arrow.at(w1);
      auto [u2, l2] = wall_arrow.at(w2);
      const bool down = poset.leq(u2, u1) && poset.leq(l2, l1);
      const bool up = poset.leq(u1, u2) && poset.leq(l1, l2);
      if (!down && !up)
        res.fail("shard " + std::to_string(s.id) + ": adjacent walls " + std::to_string(w1) +
                 "," + std::to_string(w2) + " have incomparable chambers");
    }
  }
  return res;
}

ArrangementShards arrangement_shards_oracle(const FanGeometry& geom, const ChamberPoset& poset) {
  (void)poset;
  ArrangementShards out;
  const int n = geom.dim();
  const int num_faces = static_cast<int>(geom.faces().size());

  std::map<IntVec, std::vector<int>> groups;
  for (const auto& w : geom.walls()) groups[w.hyperplane.normal].push_back(w.id);

  // Applicability: every wall hyperplane is fully tiled by its walls, i.e.
  // inside each hyperplane every codimension-2 face bounds exactly two
  // walls and the wall graph is connected.
  for (const auto& [normal, wall_ids] : groups) {
    std::map<std::vector<int>, std::vector<int>> locus_walls;
    for (int w : wall_ids) {
      const auto& rays = geom.face(geom.wall(w).face).rays;
      const int k = static_cast<int>(rays.size());
      if (k != n - 1) continue;
      for (int drop = 0; drop < k; ++drop) {
        std::vector<int> locus;
        for (int i = 0; i < k; ++i)
          if (i != drop) locus.push_back(rays[i]);
        locus_walls[locus].push_back(w);
      }
    }
    for (const auto& [locus, ws] : locus_walls) {
      if (ws.size() != 2) {
        std::ostringstream why;
        why << "hyperplane " << vec_to_string(normal) << " is not fully covered: locus {";
        for (size_t i = 0; i < locus.size(); ++i) why << (i ? "," : "") << locus[i];
        why << "} bounds " << ws.size() << " wall(s)";
        out.reason = why.str();
        return out;
      }
    }
    std::map<int, std::vector<int>> adj;
    for (const auto& [locus, ws] : locus_walls) {
      adj[ws[0]].push_back(ws[1]);
      adj[ws[1]].push_back(ws[0]);
    }
    if (components(wall_ids, adj).size() != 1) {
      out.reason = "hyperplane " + vec_to_string(normal) + " wall graph is disconnected";
      return out;
    }
  }
  out.is_arrangement = true;

  std::vector<IntVec> all_normals;
  for (const auto& [normal, wall_ids] : groups) all_normals.push_back(normal);

  const FeasibilityEngine engine = engine_for_dim(n);
  // Basic hyperplanes of the rank-2 subarrangement at a locus: the ones
  // bounding the sector that contains the identity chamber. All canonical
  // normals are positive on the all-ones vector, which is interior to it.
  std::map<std::vector<int>, std::set<IntVec>> basic_cache;
  auto basic_at = [&](const std::vector<int>& locus_rays) -> const std::set<IntVec>& {
    auto it = basic_cache.find(locus_rays);
    if (it != basic_cache.end()) return it->second;
    std::vector<IntVec> through;
    for (const auto& normal : all_normals) {
      bool contains = true;
      for (int r : locus_rays)
        if (dot(normal, geom.fan().rays[r]) != 0) contains = false;
      if (contains) through.push_back(normal);
    }
    std::set<IntVec> basics;
    for (size_t i = 0; i < through.size(); ++i) {
      LinearSystem sys;
      sys.num_vars = n;
      sys.add(to_rat(through[i]), Rel::Eq, Rat(0));
      for (size_t j = 0; j < through.size(); ++j) {
        if (j == i) continue;
        sys.add(to_rat(through[j]), Rel::Ge, Rat(1));
      }
      if (is_feasible(sys, engine)) basics.insert(through[i]);
    }
    return basic_cache.emplace(locus_rays, std::move(basics)).first->second;
  };

  for (const auto& [normal, wall_ids] : groups) {
    std::map<int, std::vector<int>> adj;
    for (size_t i = 0; i < wall_ids.size(); ++i)
      for (size_t j = i + 1; j < wall_ids.size(); ++j) {
        const auto& fi = geom.face(geom.wall(wall_ids[i]).face).rays;
        const auto& fj = geom.face(geom.wall(wall_ids[j]).face).rays;
        auto common = shared_rays(fi, fj);
        if (static_cast<int>(common.size()) != n - 2) continue;
        // The hyperplane is cut at this locus iff it does not bound the
        // identity sector of the subarrangement there.
        if (!basic_at(common).count(normal)) continue;
        adj[wall_ids[i]].push_back(wall_ids[j]);
        adj[wall_ids[j]].push_back(wall_ids[i]);
      }
    for (auto& comp : components(wall_ids, adj)) {
      Shard s;
      s.id = static_cast<int>(out.shards.size());
      s.plate = -1;
      s.hyperplane = geom.wall(comp.front()).hyperplane;
      s.walls = std::move(comp);
      s.faces.resize(num_faces);
      for (int w : s.walls)
        for (int f : geom.subfaces(geom.wall(w).face)) s.faces.set(f);
      out.shards.push_back(std::move(s));
    }
  }
  return out;
}

}  // namespace shardfan
