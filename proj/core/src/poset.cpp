#include "shardfan/poset.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>

namespace shardfan {

ChamberPoset ChamberPoset::from_arrows(int num_elements, std::vector<CoverArrow> arrows) {
  ChamberPoset p;
  p.size_ = num_elements;
  p.arrows_ = std::move(arrows);
  p.arrows_out_.assign(num_elements, {});
  p.arrows_in_.assign(num_elements, {});
  for (size_t i = 0; i < p.arrows_.size(); ++i) {
    const auto& a = p.arrows_[i];
    if (a.upper < 0 || a.upper >= num_elements || a.lower < 0 || a.lower >= num_elements ||
        a.upper == a.lower)
      throw GeomError("from_arrows: bad arrow endpoints");
    p.arrows_out_[a.upper].push_back(static_cast<int>(i));
    p.arrows_in_[a.lower].push_back(static_cast<int>(i));
  }

  // Kahn topological order, uppers first.
  std::vector<int> indegree(num_elements, 0);
  for (const auto& a : p.arrows_) ++indegree[a.lower];
  std::queue<int> ready;
  for (int x = 0; x < num_elements; ++x)
    if (indegree[x] == 0) ready.push(x);
  std::vector<int> topo;
  while (!ready.empty()) {
    int x = ready.front();
    ready.pop();
    topo.push_back(x);
    for (int ai : p.arrows_out_[x])
      if (--indegree[p.arrows_[ai].lower] == 0) ready.push(p.arrows_[ai].lower);
  }
  if (static_cast<int>(topo.size()) != num_elements)
    throw PosetCycleError("cover arrows contain a directed cycle");

  p.up_.assign(num_elements, boost::dynamic_bitset<>(num_elements));
  p.down_.assign(num_elements, boost::dynamic_bitset<>(num_elements));
  for (int x : topo) {
    p.up_[x].set(x);
    for (int ai : p.arrows_in_[x]) p.up_[x] |= p.up_[p.arrows_[ai].upper];
  }
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    int x = *it;
    p.down_[x].set(x);
    for (int ai : p.arrows_out_[x]) p.down_[x] |= p.down_[p.arrows_[ai].lower];
  }
  return p;
}

std::vector<int> ChamberPoset::sources() const {
  std::vector<int> out;
  for (int x = 0; x < size_; ++x)
    if (arrows_in_[x].empty()) out.push_back(x);
  return out;
}

std::vector<int> ChamberPoset::sinks() const {
  std::vector<int> out;
  for (int x = 0; x < size_; ++x)
    if (arrows_out_[x].empty()) out.push_back(x);
  return out;
}

int ChamberPoset::top() const {
  auto s = sources();
  return s.size() == 1 ? s[0] : -1;
}

int ChamberPoset::bottom() const {
  auto s = sinks();
  return s.size() == 1 ? s[0] : -1;
}

std::optional<int> ChamberPoset::meet(int a, int b) const {
  boost::dynamic_bitset<> lb = down_[a] & down_[b];
  // The maximum of the lower-bound set, when it exists, is the unique
  // element whose down-set contains the whole set.
  for (auto x = lb.find_first(); x != boost::dynamic_bitset<>::npos; x = lb.find_next(x))
    if (lb.is_subset_of(down_[x])) return static_cast<int>(x);
  return std::nullopt;
}

std::optional<int> ChamberPoset::join(int a, int b) const {
  boost::dynamic_bitset<> ub = up_[a] & up_[b];
  for (auto x = ub.find_first(); x != boost::dynamic_bitset<>::npos; x = ub.find_next(x))
    if (ub.is_subset_of(up_[x])) return static_cast<int>(x);
  return std::nullopt;
}

ChamberPoset::LatticeCheck ChamberPoset::check_lattice() const {
  for (int a = 0; a < size_; ++a)
    for (int b = a + 1; b < size_; ++b) {
      if (!join(a, b)) return {false, a, b, true};
      if (!meet(a, b)) return {false, a, b, false};
    }
  return {};
}

ChamberPoset::SemidistributivityResult ChamberPoset::check_semidistributive() const {
  SemidistributivityResult res;
  std::vector<std::vector<int>> J(size_, std::vector<int>(size_, -1));
  std::vector<std::vector<int>> M(size_, std::vector<int>(size_, -1));
  for (int a = 0; a < size_; ++a)
    for (int b = a; b < size_; ++b) {
      auto j = join(a, b);
      auto m = meet(a, b);
      if (!j || !m) {
        res.ok = false;
        res.witness = {a, b, -1};
        res.detail = "not a lattice";
        return res;
      }
      J[a][b] = J[b][a] = *j;
      M[a][b] = M[b][a] = *m;
    }
  for (int a = 0; a < size_; ++a)
    for (int b = 0; b < size_; ++b)
      for (int c = 0; c < size_; ++c) {
        if (M[a][b] == M[a][c] && M[a][J[b][c]] != M[a][b]) {
          res.ok = false;
          res.witness = {a, b, c};
          res.meet_side = true;
          res.detail = "a^b = a^c but a^(bvc) differs";
          return res;
        }
        if (J[a][b] == J[a][c] && J[a][M[b][c]] != J[a][b]) {
          res.ok = false;
          res.witness = {a, b, c};
          res.meet_side = false;
          res.detail = "avb = avc but av(b^c) differs";
          return res;
        }
      }
  return res;
}

std::vector<int> ChamberPoset::join_irreducibles() const {
  std::vector<int> out;
  for (int x = 0; x < size_; ++x)
    if (out_degree(x) == 1) out.push_back(x);
  return out;
}

ChamberPoset::GammaResult ChamberPoset::gamma(int upper, int lower) const {
  bool is_arrow = false;
  for (int ai : arrows_out_[upper])
    if (arrows_[ai].lower == lower) is_arrow = true;
  if (!is_arrow) throw GeomError("gamma: not a Hasse arrow");

  boost::dynamic_bitset<> sols(size_);
  for (int x = 0; x < size_; ++x) {
    auto j = join(lower, x);
    if (j && *j == upper) sols.set(x);
  }
  GammaResult res;
  for (auto x = sols.find_first(); x != boost::dynamic_bitset<>::npos; x = sols.find_next(x)) {
    if (sols.is_subset_of(up_[x])) {
      res.found = true;
      res.value = static_cast<int>(x);
      res.join_irreducible = out_degree(res.value) == 1;
      break;
    }
  }
  return res;
}

ChamberPoset::CjrResult ChamberPoset::canonical_join_rep(int x) const {
  CjrResult res;
  const int bot = bottom();
  if (x == bot) {
    res.found = true;
    return res;
  }
  std::vector<int> jis;
  for (int j : join_irreducibles())
    if (leq(j, x)) jis.push_back(j);

  std::vector<std::vector<int>> candidates;
  std::vector<int> chain;
  bool join_failure = false;

  auto join_of = [&](const std::vector<int>& elems, size_t skip) -> std::optional<int> {
    int acc = -1;
    for (size_t i = 0; i < elems.size(); ++i) {
      if (i == skip) continue;
      if (acc < 0) {
        acc = elems[i];
        continue;
      }
      auto j = join(acc, elems[i]);
      if (!j) return std::nullopt;
      acc = *j;
    }
    if (acc < 0) acc = bot;
    return acc;
  };

  // Irredundant antichains of join-irreducibles below x whose join is x.
  // An antichain whose join reaches x is never extended: any extension
  // would be redundant.
  std::function<void(size_t, int)> dfs = [&](size_t start, int joinval) {
    if (joinval == x) {
      for (size_t d = 0; d < chain.size(); ++d) {
        auto sub = join_of(chain, d);
        if (!sub) {
          join_failure = true;
          return;
        }
        if (*sub == x) return;  // redundant
      }
      candidates.push_back(chain);
      return;
    }
    for (size_t i = start; i < jis.size(); ++i) {
      const int j = jis[i];
      bool comparable = false;
      for (int m : chain)
        if (leq(j, m) || leq(m, j)) {
          comparable = true;
          break;
        }
      if (comparable) continue;
      if (joinval >= 0 && leq(j, joinval)) continue;  // would be redundant
      int next;
      if (joinval < 0) {
        next = j;
      } else {
        auto jv = join(joinval, j);
        if (!jv) {
          join_failure = true;
          continue;
        }
        next = *jv;
      }
      chain.push_back(j);
      dfs(i + 1, next);
      chain.pop_back();
    }
  };
  dfs(0, -1);
  if (join_failure || candidates.empty()) return res;

  auto refined_by = [&](const std::vector<int>& c, const std::vector<int>& u) {
    for (int ce : c) {
      bool covered = false;
      for (int ue : u)
        if (leq(ce, ue)) {
          covered = true;
          break;
        }
      if (!covered) return false;
    }
    return true;
  };
  size_t cur = 0;
  for (size_t i = 1; i < candidates.size(); ++i)
    if (!refined_by(candidates[cur], candidates[i])) cur = i;
  for (const auto& cand : candidates)
    if (!refined_by(candidates[cur], cand)) return res;  // no canonical representation
  res.found = true;
  res.elements = candidates[cur];
  std::sort(res.elements.begin(), res.elements.end());
  return res;
}

std::vector<std::string> ChamberPoset::structural_issues(const FanGeometry* geom) const {
  std::vector<std::string> issues;
  auto src = sources();
  auto snk = sinks();
  if (src.size() != 1)
    issues.push_back("expected a unique maximum, found " + std::to_string(src.size()));
  if (snk.size() != 1)
    issues.push_back("expected a unique minimum, found " + std::to_string(snk.size()));
  if (geom) {
    if (src.size() == 1 && src[0] != geom->identity_chamber())
      issues.push_back("maximum is not the identity chamber");
    if (snk.size() == 1 && snk[0] != geom->negated_chamber())
      issues.push_back("minimum is not the negated chamber");
  }
  for (const auto& a : arrows_) {
    for (int c = 0; c < size_; ++c) {
      if (c == a.upper || c == a.lower) continue;
      if (leq(a.lower, c) && leq(c, a.upper)) {
        issues.push_back("transitive arrow " + std::to_string(a.upper) + "->" +
                         std::to_string(a.lower) + " through " + std::to_string(c));
        break;
      }
    }
  }
  return issues;
}

ChamberPoset orient_hasse(const FanGeometry& geom) {
  std::vector<CoverArrow> arrows;
  for (const auto& w : geom.walls()) {
    const Int s0 = dot(w.hyperplane.normal, geom.chamber_barycenter(w.chambers[0]));
    const Int s1 = dot(w.hyperplane.normal, geom.chamber_barycenter(w.chambers[1]));
    if (s0 == 0 || s1 == 0) throw AmbiguousOrientation(w.id);
    if ((s0 > 0) == (s1 > 0))
      throw GeomError("both chambers of wall " + std::to_string(w.id) +
                      " on the same side of its hyperplane");
    CoverArrow a;
    a.upper = s0 > 0 ? w.chambers[0] : w.chambers[1];
    a.lower = s0 > 0 ? w.chambers[1] : w.chambers[0];
    a.wall = w.id;
    arrows.push_back(a);
  }
  return ChamberPoset::from_arrows(geom.num_chambers(), std::move(arrows));
}

StarInterval star_interval(const FanGeometry& geom, const ChamberPoset& poset, int face_id) {
  StarInterval st;
  st.face = face_id;
  st.chambers = geom.star_chambers(face_id);
  st.member.resize(poset.size());
  for (int c : st.chambers) st.member.set(c);

  std::vector<int> mins, maxs;
  for (int c : st.chambers) {
    bool is_min = true, is_max = true;
    for (int d : st.chambers) {
      if (d == c) continue;
      if (poset.leq(d, c)) is_min = false;
      if (poset.leq(c, d)) is_max = false;
    }
    if (is_min) mins.push_back(c);
    if (is_max) maxs.push_back(c);
  }
  st.unique_extremes = mins.size() == 1 && maxs.size() == 1;
  if (st.unique_extremes) {
    st.min = mins[0];
    st.max = maxs[0];
    boost::dynamic_bitset<> interval = poset.up_set(st.min) & poset.down_set(st.max);
    st.is_full_interval = interval == st.member;
  }
  return st;
}

CrownResult crown_check(const ChamberPoset& poset, const StarInterval& star) {
  CrownResult res;
  const auto& S = star.chambers;
  if (!star.unique_extremes) {
    res.detail = "star has no unique extremes";
    return res;
  }
  if (S.size() < 4) {
    res.detail = "star has fewer than four chambers";
    return res;
  }
  // Induced Hasse arrows of the star's own order.
  std::map<int, std::vector<int>> out, in;
  for (int u : S)
    for (int v : S) {
      if (u == v || !poset.leq(v, u)) continue;
      bool covered = true;
      for (int w : S) {
        if (w == u || w == v) continue;
        if (poset.leq(v, w) && poset.leq(w, u)) {
          covered = false;
          break;
        }
      }
      if (covered) {
        out[u].push_back(v);
        in[v].push_back(u);
      }
    }
  for (int c : S) {
    const size_t od = out[c].size(), id = in[c].size();
    if (c == star.max ? (od != 2 || id != 0)
                      : c == star.min ? (od != 0 || id != 2) : (od != 1 || id != 1)) {
      res.detail = "chamber " + std::to_string(c) + " has crown-incompatible degrees";
      return res;
    }
  }
  std::vector<int> lengths;
  for (int start : out[star.max]) {
    int len = 0, cur = start;
    while (cur != star.min) {
      ++len;
      cur = out[cur][0];
      if (len > static_cast<int>(S.size())) {
        res.detail = "chain does not reach the minimum";
        return res;
      }
    }
    lengths.push_back(len);
  }
  if (lengths.size() != 2 || lengths[0] + lengths[1] != static_cast<int>(S.size()) - 2) {
    res.detail = "chains do not partition the interior";
    return res;
  }
  res.ok = true;
  res.chain_a = std::min(lengths[0], lengths[1]);
  res.chain_b = std::max(lengths[0], lengths[1]);
  return res;
}

}  // namespace shardfan
