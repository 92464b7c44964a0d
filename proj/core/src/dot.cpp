#include "shardfan/dot.hpp"

#include <algorithm>
#include <sstream>

namespace shardfan {

namespace {

std::string tuple_label(const std::vector<int>& ids) {
  std::ostringstream out;
  out << "{";
  for (size_t i = 0; i < ids.size(); ++i) out << (i ? "," : "") << ids[i];
  out << "}";
  return out.str();
}

}  // namespace

std::string chamber_label(const FanGeometry& geom, int chamber) {
  return tuple_label(geom.chamber_rays(chamber));
}

std::string intersection_label(const ShardIntersectionLattice& lattice, int element) {
  return tuple_label(lattice.elements.at(element).generators);
}

std::string poset_dot(const FanGeometry& geom, const ChamberPoset& poset) {
  std::ostringstream out;
  out << "digraph chamber_poset {\n";
  for (int c = 0; c < poset.size(); ++c) out << "  \"" << chamber_label(geom, c) << "\";\n";
  std::vector<std::pair<int, int>> edges;
  for (const auto& a : poset.arrows()) edges.emplace_back(a.upper, a.lower);
  std::sort(edges.begin(), edges.end());
  for (auto [u, l] : edges)
    out << "  \"" << chamber_label(geom, u) << "\" -> \"" << chamber_label(geom, l) << "\";\n";
  out << "}\n";
  return out.str();
}

std::string shard_intersection_dot(const ShardIntersectionLattice& lattice) {
  std::ostringstream out;
  out << "digraph shard_intersections {\n";
  for (size_t e = 0; e < lattice.elements.size(); ++e)
    out << "  \"" << intersection_label(lattice, static_cast<int>(e)) << "\";\n";
  auto covers = lattice.hasse_covers();  // (smaller, larger)
  std::vector<std::pair<int, int>> edges;
  for (auto [small, large] : covers) edges.emplace_back(large, small);
  std::sort(edges.begin(), edges.end());
  for (auto [large, small] : edges)
    out << "  \"" << intersection_label(lattice, large) << "\" -> \""
        << intersection_label(lattice, small) << "\";\n";
  out << "}\n";
  return out.str();
}

std::string core_label_order_dot(const FanGeometry& geom, const ChamberPoset& poset,
                                 const ShardDecomposition& dec) {
  const int nc = poset.size();
  std::vector<std::vector<int>> labels(nc);
  for (int c = 0; c < nc; ++c) labels[c] = core_label_set(poset, dec, c);
  auto leq = [&](int a, int b) {
    return std::includes(labels[b].begin(), labels[b].end(), labels[a].begin(), labels[a].end());
  };
  std::ostringstream out;
  out << "digraph core_label_order {\n";
  for (int c = 0; c < nc; ++c) out << "  \"" << chamber_label(geom, c) << "\";\n";
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < nc; ++a)
    for (int b = 0; b < nc; ++b) {
      if (a == b || !leq(a, b) || leq(b, a)) continue;
      bool cover = true;
      for (int c = 0; c < nc && cover; ++c) {
        if (c == a || c == b) continue;
        if (leq(a, c) && !leq(c, a) && leq(c, b) && !leq(b, c)) cover = false;
      }
      if (cover) edges.emplace_back(b, a);  // from greater to smaller
    }
  std::sort(edges.begin(), edges.end());
  for (auto [u, l] : edges)
    out << "  \"" << chamber_label(geom, u) << "\" -> \"" << chamber_label(geom, l) << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace shardfan
