#pragma once

#include "shardfan/exact.hpp"
#include "shardfan/feasibility.hpp"

#include <boost/dynamic_bitset.hpp>

#include <array>
#include <map>
#include <optional>

namespace shardfan {

// A fan document: ambient dimension, primitive integer rays, and chambers as
// dim-element ray-index sets. This is both the on-disk schema and the input
// to validation.
struct Fan {
  int dim = 0;
  std::vector<IntVec> rays;
  std::vector<std::vector<int>> chambers;
  std::string name;
};

enum class IssueKind {
  BadInput,
  RayNotPrimitive,
  DuplicateRay,
  BadChamber,
  NotUnimodular,
  MissingIdentityChamber,
  MissingNegatedChamber,
  WallNotTwoChambers,
  NotFaceToFace,
  DisconnectedChamberGraph,
  InternalInconsistency,
};
const char* issue_kind_name(IssueKind kind);

struct ValidationIssue {
  IssueKind kind;
  std::vector<int> subjects;  // ray/chamber indices, kind dependent
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  bool has(IssueKind kind) const;
  std::string summary() const;
};

struct ValidationOptions {
  int threads = 1;
  int sample_points = 100;  // coverage diagnostic, fixed seed 0
  std::optional<FeasibilityEngine> engine;  // default: engine_for_dim
};

// Checks the fan axioms: primitive pairwise-distinct rays, unimodular
// chambers, identity and negated chambers present, every wall shared by
// exactly two chambers, pairwise face-to-face, connected dual graph, and a
// Monte-Carlo point-coverage diagnostic.
ValidationReport validate_fan(const Fan& fan, const ValidationOptions& opts = {});

struct Face {
  int id = 0;
  std::vector<int> rays;  // sorted ray indices; empty = origin
  int dim() const { return static_cast<int>(rays.size()); }
};

struct Wall {
  int id = 0;
  int face = -1;  // face of dimension dim-1
  std::array<int, 2> chambers{-1, -1};
  Hyperplane hyperplane;
};

struct InvalidFanError : std::runtime_error {
  ValidationReport report;
  explicit InvalidFanError(ValidationReport r)
      : std::runtime_error("invalid fan: " + r.summary()), report(std::move(r)) {}
};

struct FaceNotInFan : std::runtime_error {
  explicit FaceNotInFan(const std::string& what) : std::runtime_error(what) {}
};

// Validated fan plus its derived face and wall tables. Immutable after
// construction; all queries are pure.
class FanGeometry {
 public:
  /// Validates and builds; throws InvalidFanError when validation fails.
  static FanGeometry build(Fan fan, const ValidationOptions& opts = {});
  /// Builds without re-validating; the caller has already run validate_fan.
  static FanGeometry build_validated(Fan fan);

  const Fan& fan() const { return fan_; }
  int dim() const { return fan_.dim; }
  int num_chambers() const { return static_cast<int>(fan_.chambers.size()); }
  const std::vector<Face>& faces() const { return faces_; }
  const std::vector<Wall>& walls() const { return walls_; }

  const Face& face(int id) const { return faces_.at(id); }
  const Wall& wall(int id) const { return walls_.at(id); }
  int face_id(std::vector<int> sorted_rays) const;  // throws FaceNotInFan
  std::optional<int> try_face_id(std::vector<int> sorted_rays) const;
  int wall_of_face(int face_id) const;  // -1 when the face is not a wall

  const std::vector<int>& chamber_rays(int chamber) const { return fan_.chambers.at(chamber); }
  bool chamber_has_face(int chamber, int face_id) const;
  std::vector<int> star_chambers(int face_id) const;
  IntVec chamber_barycenter(int chamber) const;

  int identity_chamber() const { return identity_chamber_; }
  int negated_chamber() const { return negated_chamber_; }

  /// Face ids of every subset of the given face's ray set.
  std::vector<int> subfaces(int face_id) const;

 private:
  FanGeometry() = default;
  void derive();

  Fan fan_;
  std::vector<Face> faces_;
  std::vector<Wall> walls_;
  std::map<std::vector<int>, int> face_index_;
  std::vector<int> face_to_wall_;
  std::vector<boost::dynamic_bitset<>> star_;  // face id -> chamber bitset
  int identity_chamber_ = -1;
  int negated_chamber_ = -1;
};

}  // namespace shardfan
