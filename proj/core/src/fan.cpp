#include "shardfan/fan.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace shardfan {

const char* issue_kind_name(IssueKind kind) {
  switch (kind) {
    case IssueKind::BadInput: return "BadInput";
    case IssueKind::RayNotPrimitive: return "RayNotPrimitive";
    case IssueKind::DuplicateRay: return "DuplicateRay";
    case IssueKind::BadChamber: return "BadChamber";
    case IssueKind::NotUnimodular: return "NotUnimodular";
    case IssueKind::MissingIdentityChamber: return "MissingIdentityChamber";
    case IssueKind::MissingNegatedChamber: return "MissingNegatedChamber";
    case IssueKind::WallNotTwoChambers: return "WallNotTwoChambers";
    case IssueKind::NotFaceToFace: return "NotFaceToFace";
    case IssueKind::DisconnectedChamberGraph: return "DisconnectedChamberGraph";
    case IssueKind::InternalInconsistency: return "InternalInconsistency";
  }
  return "?";
}

bool ValidationReport::has(IssueKind kind) const {
  for (const auto& issue : issues)
    if (issue.kind == kind) return true;
  return false;
}

std::string ValidationReport::summary() const {
  if (issues.empty()) return "ok";
  std::ostringstream out;
  for (size_t i = 0; i < issues.size(); ++i) {
    if (i) out << "; ";
    out << issue_kind_name(issues[i].kind);
    if (!issues[i].detail.empty()) out << " (" << issues[i].detail << ")";
  }
  return out.str();
}

namespace {

std::vector<std::vector<int>> normalized_chambers(const Fan& fan) {
  auto chambers = fan.chambers;
  for (auto& c : chambers) std::sort(c.begin(), c.end());
  return chambers;
}

std::vector<IntVec> signed_basis(int dim, int sign) {
  std::vector<IntVec> basis;
  for (int i = 0; i < dim; ++i) {
    IntVec e(dim, 0);
    e[i] = sign;
    basis.push_back(std::move(e));
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

}  // namespace

ValidationReport validate_fan(const Fan& fan, const ValidationOptions& opts) {
  ValidationReport report;
  auto issue = [&](IssueKind kind, std::vector<int> subjects, std::string detail) {
    report.issues.push_back({kind, std::move(subjects), std::move(detail)});
  };

  const int n = fan.dim;
  if (n < 1) {
    issue(IssueKind::BadInput, {}, "dim must be positive");
    return report;
  }
  for (size_t i = 0; i < fan.rays.size(); ++i)
    if (static_cast<int>(fan.rays[i].size()) != n)
      issue(IssueKind::BadInput, {static_cast<int>(i)}, "ray arity != dim");
  if (!report.ok()) return report;

  for (size_t i = 0; i < fan.rays.size(); ++i) {
    if (is_zero_vec(fan.rays[i]) || !is_primitive(fan.rays[i]))
      issue(IssueKind::RayNotPrimitive, {static_cast<int>(i)},
            "ray " + vec_to_string(fan.rays[i]));
  }
  // Primitive rays are positively proportional iff equal; antipodal rays are
  // legitimate distinct rays.
  for (size_t i = 0; i < fan.rays.size(); ++i)
    for (size_t j = i + 1; j < fan.rays.size(); ++j)
      if (fan.rays[i] == fan.rays[j])
        issue(IssueKind::DuplicateRay, {static_cast<int>(i), static_cast<int>(j)},
              "rays " + std::to_string(i) + " and " + std::to_string(j));

  auto chambers = normalized_chambers(fan);
  std::set<std::vector<int>> chamber_sets;
  for (size_t c = 0; c < chambers.size(); ++c) {
    const auto& ch = chambers[c];
    bool bad = false;
    if (static_cast<int>(ch.size()) != n) {
      issue(IssueKind::BadChamber, {static_cast<int>(c)}, "chamber size != dim");
      bad = true;
    }
    for (int idx : ch)
      if (idx < 0 || idx >= static_cast<int>(fan.rays.size())) {
        issue(IssueKind::BadChamber, {static_cast<int>(c)}, "ray index out of range");
        bad = true;
      }
    if (!bad && std::adjacent_find(ch.begin(), ch.end()) != ch.end()) {
      issue(IssueKind::BadChamber, {static_cast<int>(c)}, "repeated ray index");
      bad = true;
    }
    if (!bad && !chamber_sets.insert(ch).second)
      issue(IssueKind::BadChamber, {static_cast<int>(c)}, "duplicate chamber");
  }
  if (chambers.empty()) issue(IssueKind::BadInput, {}, "no chambers");
  if (!report.ok()) return report;

  std::vector<bool> nonsingular(chambers.size(), false);
  for (size_t c = 0; c < chambers.size(); ++c) {
    std::vector<IntVec> cols;
    for (int idx : chambers[c]) cols.push_back(fan.rays[idx]);
    DetResult d = det_sign(cols);
    nonsingular[c] = d.sign != 0 && d.abs_value == 1;
    if (!nonsingular[c]) {
      std::ostringstream msg;
      msg << "chamber " << c << " has |det| = " << d.abs_value;
      issue(IssueKind::NotUnimodular, {static_cast<int>(c)}, msg.str());
    }
  }

  auto chamber_ray_vectors = [&](size_t c) {
    std::vector<IntVec> v;
    for (int idx : chambers[c]) v.push_back(fan.rays[idx]);
    std::sort(v.begin(), v.end());
    return v;
  };
  const auto identity = signed_basis(n, 1);
  const auto negated = signed_basis(n, -1);
  bool has_identity = false, has_negated = false;
  for (size_t c = 0; c < chambers.size(); ++c) {
    auto v = chamber_ray_vectors(c);
    if (v == identity) has_identity = true;
    if (v == negated) has_negated = true;
  }
  if (!has_identity) issue(IssueKind::MissingIdentityChamber, {}, "");
  if (!has_negated) issue(IssueKind::MissingNegatedChamber, {}, "");

  // Every wall in exactly two chambers.
  std::map<std::vector<int>, std::vector<int>> wall_chambers;
  for (size_t c = 0; c < chambers.size(); ++c) {
    for (int drop = 0; drop < n; ++drop) {
      std::vector<int> w;
      for (int k = 0; k < n; ++k)
        if (k != drop) w.push_back(chambers[c][k]);
      wall_chambers[w].push_back(static_cast<int>(c));
    }
  }
  for (const auto& [w, cs] : wall_chambers) {
    if (cs.size() != 2) {
      std::ostringstream msg;
      msg << "wall {";
      for (size_t i = 0; i < w.size(); ++i) msg << (i ? "," : "") << w[i];
      msg << "} lies in " << cs.size() << " chamber(s)";
      report.issues.push_back({IssueKind::WallNotTwoChambers, w, msg.str()});
    }
  }

  // Pairwise face-to-face, by exact feasibility.
  const FeasibilityEngine engine = opts.engine.value_or(engine_for_dim(n));
  const int nc = static_cast<int>(chambers.size());
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < nc; ++a)
    for (int b = a + 1; b < nc; ++b) pairs.emplace_back(a, b);
  std::vector<char> beyond(pairs.size(), 0);
  detail::parallel_for(static_cast<int>(pairs.size()), opts.threads, [&](int p) {
    auto [a, b] = pairs[p];
    std::vector<IntVec> ra, rb, common;
    for (int idx : chambers[a]) ra.push_back(fan.rays[idx]);
    for (int idx : chambers[b]) rb.push_back(fan.rays[idx]);
    std::vector<int> shared;
    std::set_intersection(chambers[a].begin(), chambers[a].end(), chambers[b].begin(),
                          chambers[b].end(), std::back_inserter(shared));
    for (int idx : shared) common.push_back(fan.rays[idx]);
    beyond[p] = cones_meet_beyond_common_face(ra, rb, common, engine) ? 1 : 0;
  });
  for (size_t p = 0; p < pairs.size(); ++p)
    if (beyond[p])
      issue(IssueKind::NotFaceToFace, {pairs[p].first, pairs[p].second},
            "chambers " + std::to_string(pairs[p].first) + " and " +
                std::to_string(pairs[p].second) + " meet beyond their common face");

  // Connected dual graph.
  {
    std::vector<std::vector<int>> adj(nc);
    for (const auto& [w, cs] : wall_chambers)
      if (cs.size() == 2) {
        adj[cs[0]].push_back(cs[1]);
        adj[cs[1]].push_back(cs[0]);
      }
    std::vector<bool> seen(nc, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
      int c = stack.back();
      stack.pop_back();
      for (int d : adj[c])
        if (!seen[d]) {
          seen[d] = true;
          ++reached;
          stack.push_back(d);
        }
    }
    if (reached != nc)
      issue(IssueKind::DisconnectedChamberGraph, {},
            std::to_string(reached) + " of " + std::to_string(nc) + " chambers reachable");
  }

  // Monte-Carlo coverage diagnostic: fixed seed, each sampled point must lie
  // in at least one chamber.
  {
    std::mt19937 rng(0);
    std::uniform_int_distribution<int> coord(-10, 10);
    for (int s = 0; s < opts.sample_points; ++s) {
      IntVec point(n);
      bool zero = true;
      for (int i = 0; i < n; ++i) {
        point[i] = coord(rng);
        if (point[i] != 0) zero = false;
      }
      if (zero) continue;
      RatVec p = to_rat(point);
      bool covered = false;
      for (int c = 0; c < nc && !covered; ++c) {
        if (!nonsingular[c]) continue;
        std::vector<IntVec> cr;
        for (int idx : chambers[c]) cr.push_back(fan.rays[idx]);
        covered = cone_membership(cr, p).inside;
      }
      if (!covered) {
        issue(IssueKind::InternalInconsistency, {},
              "sampled point " + vec_to_string(point) + " lies in no chamber");
        break;
      }
    }
  }

  return report;
}

FanGeometry FanGeometry::build(Fan fan, const ValidationOptions& opts) {
  ValidationReport report = validate_fan(fan, opts);
  if (!report.ok()) throw InvalidFanError(std::move(report));
  return build_validated(std::move(fan));
}

FanGeometry FanGeometry::build_validated(Fan fan) {
  FanGeometry g;
  g.fan_ = std::move(fan);
  for (auto& c : g.fan_.chambers) std::sort(c.begin(), c.end());
  g.derive();
  return g;
}

void FanGeometry::derive() {
  const int n = fan_.dim;
  const int nc = static_cast<int>(fan_.chambers.size());

  // Faces: all subsets of chamber ray sets, deduplicated, ordered by
  // (dimension, ray tuple).
  std::set<std::vector<int>> face_sets;
  for (const auto& ch : fan_.chambers) {
    const int k = static_cast<int>(ch.size());
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      std::vector<int> f;
      for (int i = 0; i < k; ++i)
        if (mask & (1u << i)) f.push_back(ch[i]);
      face_sets.insert(std::move(f));
    }
  }
  std::vector<std::vector<int>> ordered(face_sets.begin(), face_sets.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  for (size_t i = 0; i < ordered.size(); ++i) {
    Face f;
    f.id = static_cast<int>(i);
    f.rays = ordered[i];
    face_index_[f.rays] = f.id;
    faces_.push_back(std::move(f));
  }

  star_.assign(faces_.size(), boost::dynamic_bitset<>(nc));
  for (int c = 0; c < nc; ++c) {
    const auto& ch = fan_.chambers[c];
    const int k = static_cast<int>(ch.size());
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      std::vector<int> f;
      for (int i = 0; i < k; ++i)
        if (mask & (1u << i)) f.push_back(ch[i]);
      star_[face_index_.at(f)].set(c);
    }
  }

  face_to_wall_.assign(faces_.size(), -1);
  for (const auto& f : faces_) {
    if (f.dim() != n - 1) continue;
    Wall w;
    w.id = static_cast<int>(walls_.size());
    w.face = f.id;
    int slot = 0;
    for (auto c = star_[f.id].find_first(); c != boost::dynamic_bitset<>::npos;
         c = star_[f.id].find_next(c)) {
      if (slot < 2) w.chambers[slot] = static_cast<int>(c);
      ++slot;
    }
    if (slot != 2) throw GeomError("wall not in exactly two chambers after validation");
    std::vector<IntVec> span;
    for (int idx : f.rays) span.push_back(fan_.rays[idx]);
    w.hyperplane = span_hyperplane(span, n);
    face_to_wall_[f.id] = w.id;
    walls_.push_back(std::move(w));
  }

  const auto identity = signed_basis(n, 1);
  const auto negated = signed_basis(n, -1);
  for (int c = 0; c < nc; ++c) {
    std::vector<IntVec> v;
    for (int idx : fan_.chambers[c]) v.push_back(fan_.rays[idx]);
    std::sort(v.begin(), v.end());
    if (v == identity) identity_chamber_ = c;
    if (v == negated) negated_chamber_ = c;
  }
}

int FanGeometry::face_id(std::vector<int> sorted_rays) const {
  auto it = face_index_.find(sorted_rays);
  if (it == face_index_.end()) {
    std::ostringstream msg;
    msg << "face {";
    for (size_t i = 0; i < sorted_rays.size(); ++i) msg << (i ? "," : "") << sorted_rays[i];
    msg << "} not in fan";
    throw FaceNotInFan(msg.str());
  }
  return it->second;
}

std::optional<int> FanGeometry::try_face_id(std::vector<int> sorted_rays) const {
  auto it = face_index_.find(sorted_rays);
  if (it == face_index_.end()) return std::nullopt;
  return it->second;
}

int FanGeometry::wall_of_face(int face_id) const { return face_to_wall_.at(face_id); }

bool FanGeometry::chamber_has_face(int chamber, int face_id) const {
  return star_.at(face_id).test(chamber);
}

std::vector<int> FanGeometry::star_chambers(int face_id) const {
  if (face_id < 0 || face_id >= static_cast<int>(faces_.size()))
    throw FaceNotInFan("face id " + std::to_string(face_id) + " out of range");
  std::vector<int> out;
  const auto& bits = star_[face_id];
  for (auto c = bits.find_first(); c != boost::dynamic_bitset<>::npos; c = bits.find_next(c))
    out.push_back(static_cast<int>(c));
  return out;
}

IntVec FanGeometry::chamber_barycenter(int chamber) const {
  IntVec sum(fan_.dim, 0);
  for (int idx : fan_.chambers.at(chamber)) sum = vec_add(sum, fan_.rays[idx]);
  return sum;
}

std::vector<int> FanGeometry::subfaces(int face_id) const {
  const auto& rays = faces_.at(face_id).rays;
  const int k = static_cast<int>(rays.size());
  std::vector<int> out;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    std::vector<int> f;
    for (int i = 0; i < k; ++i)
      if (mask & (1u << i)) f.push_back(rays[i]);
    out.push_back(face_index_.at(f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace shardfan
