#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace shardfan {

// All arithmetic in this library is exact. Face incidences and half-space
// signs are decided on arbitrary-precision integers and rationals; no
// floating point appears anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

struct GeomError : std::runtime_error {
  explicit GeomError(const std::string& what) : std::runtime_error(what) {}
};

/// Input to primitive normal computation spans less than a hyperplane.
struct DependentInput : GeomError {
  explicit DependentInput(const std::string& what) : GeomError(what) {}
};

Int vec_gcd(const IntVec& v);
bool is_zero_vec(const IntVec& v);
bool is_primitive(const IntVec& v);
IntVec make_primitive(IntVec v);  // divides by the gcd; throws GeomError on zero vector
Int dot(const IntVec& a, const IntVec& b);
Rat dot_rat(const IntVec& a, const RatVec& b);
IntVec vec_add(const IntVec& a, const IntVec& b);
IntVec vec_negate(IntVec v);
RatVec to_rat(const IntVec& v);
IntVec unit_vector(int dim, int index);
std::string vec_to_string(const IntVec& v);

/// Exact determinant sign and absolute value of a square integer matrix,
/// given by columns (Bareiss, fraction-free).
struct DetResult {
  int sign = 0;  // -1, 0, +1
  Int abs_value = 0;
};
DetResult det_sign(const std::vector<IntVec>& columns);

// Oriented hyperplane through the origin. The canonical normal points into
// the half-space of the all-ones vector; `ambiguous` is set when the
// all-ones vector lies on the hyperplane and the first-nonzero-positive tie
// rule was applied instead.
struct Hyperplane {
  IntVec normal;
  bool ambiguous = false;

  bool operator==(const Hyperplane& o) const { return normal == o.normal; }
  bool operator<(const Hyperplane& o) const { return normal < o.normal; }
};

Hyperplane canonical_hyperplane(IntVec normal);

/// Primitive canonical normal of the hyperplane spanned by dim-1 linearly
/// independent integer vectors. Throws DependentInput on rank deficiency.
Hyperplane span_hyperplane(const std::vector<IntVec>& vectors, int dim);

/// Exact membership of a rational point in the cone over linearly
/// independent rays. Coefficients are returned when the point is inside.
struct ConeMembership {
  bool inside = false;
  RatVec coefficients;
};
ConeMembership cone_membership(const std::vector<IntVec>& rays, const RatVec& point);

}  // namespace shardfan
