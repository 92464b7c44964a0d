#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shardfan/builders.hpp"
#include "shardfan/feasibility.hpp"
#include "test_util.hpp"

#include <random>

using namespace shardfan;
using shardfan::testing::iv;

namespace {

// Naive cofactor expansion, the independent oracle for the Bareiss path.
Int cofactor_det(const std::vector<IntVec>& cols) {
  const int n = static_cast<int>(cols.size());
  if (n == 0) return 1;
  if (n == 1) return cols[0][0];
  Int acc = 0;
  for (int j = 0; j < n; ++j) {
    std::vector<IntVec> minor;
    for (int c = 0; c < n; ++c) {
      if (c == j) continue;
      IntVec col;
      for (int r = 1; r < n; ++r) col.push_back(cols[c][r]);
      minor.push_back(std::move(col));
    }
    Int term = cols[j][0] * cofactor_det(minor);
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

std::vector<IntVec> random_matrix(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> entry(-3, 3);
  std::vector<IntVec> cols(n, IntVec(n));
  for (auto& col : cols)
    for (auto& x : col) x = entry(rng);
  return cols;
}

}  // namespace

TEST_CASE("det_sign on pinned matrices") {
  CHECK(det_sign({iv({1, 0}), iv({0, 1})}).sign == 1);
  CHECK(det_sign({iv({1, 0}), iv({0, 1})}).abs_value == 1);
  CHECK(det_sign({iv({0, 1}), iv({1, 0})}).sign == -1);
  CHECK(det_sign({iv({0, 1}), iv({1, 0})}).abs_value == 1);
  CHECK(det_sign({iv({1, 0}), iv({1, -1})}).sign == -1);
  CHECK(det_sign({iv({1, 0}), iv({1, -1})}).abs_value == 1);
  CHECK(det_sign({iv({2, 0}), iv({0, 3})}).abs_value == 6);
  CHECK(det_sign({iv({1, 2}), iv({2, 4})}).sign == 0);
}

TEST_CASE("det_sign agrees with cofactor expansion and is multiplicative") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 4;
    auto a = random_matrix(rng, n);
    DetResult da = det_sign(a);
    Int oracle = cofactor_det(a);
    CHECK(da.abs_value == boost::multiprecision::abs(oracle));
    CHECK(Int(da.sign) * da.abs_value == oracle);

    auto b = random_matrix(rng, n);
    std::vector<IntVec> ab(n, IntVec(n, 0));
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) ab[j][i] += a[k][i] * b[j][k];
    DetResult db = det_sign(b);
    DetResult dab = det_sign(ab);
    CHECK(dab.abs_value == da.abs_value * db.abs_value);
    CHECK(dab.sign == da.sign * db.sign);
  }
}

TEST_CASE("primitive normal of spanning vectors") {
  CHECK(span_hyperplane({iv({1, -1})}, 2).normal == iv({1, 1}));
  CHECK(span_hyperplane({iv({1, 0, 0}), iv({0, 1, 0})}, 3).normal == iv({0, 0, 1}));
  CHECK(span_hyperplane({iv({1, 0})}, 2).normal == iv({0, 1}));
  // dim 1: the hyperplane spanned by no vectors is the origin
  CHECK(span_hyperplane({}, 1).normal == iv({1}));
  CHECK_THROWS_AS(span_hyperplane({iv({1, 1, 0}), iv({2, 2, 0})}, 3), DependentInput);
}

TEST_CASE("primitive normal is orthogonal, primitive, and canonically signed") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> entry(-4, 4);
  int produced = 0;
  while (produced < 100) {
    const int n = 2 + static_cast<int>(rng() % 3);
    std::vector<IntVec> vs(n - 1, IntVec(n));
    for (auto& v : vs)
      for (auto& x : v) x = entry(rng);
    try {
      Hyperplane h = span_hyperplane(vs, n);
      ++produced;
      CHECK(vec_gcd(h.normal) == 1);
      for (const auto& v : vs) CHECK(dot(h.normal, v) == 0);
      Int s = 0;
      for (const auto& x : h.normal) s += x;
      if (h.ambiguous) {
        CHECK(s == 0);
      } else {
        CHECK(s > 0);
      }
    } catch (const DependentInput&) {
    }
  }
}

TEST_CASE("hyperplane canonicalization") {
  Hyperplane h = canonical_hyperplane(iv({0, -2}));
  CHECK(h.normal == iv({0, 1}));
  CHECK_FALSE(h.ambiguous);
  Hyperplane g = canonical_hyperplane(iv({-1, 1}));
  CHECK(g.normal == iv({1, -1}));  // sum is zero: first nonzero made positive
  CHECK(g.ambiguous);
}

TEST_CASE("cone membership on pinned examples") {
  auto e1 = iv({1, 0}), e2 = iv({0, 1});
  auto inside = cone_membership({e1, e2}, to_rat(iv({3, 5})));
  REQUIRE(inside.inside);
  CHECK(inside.coefficients == RatVec{Rat(3), Rat(5)});
  CHECK_FALSE(cone_membership({e1, e2}, to_rat(iv({1, -1}))).inside);
  auto oblique = cone_membership({iv({1, 0}), iv({1, -1})}, to_rat(iv({2, -1})));
  REQUIRE(oblique.inside);
  CHECK(oblique.coefficients == RatVec{Rat(1), Rat(1)});
  // outside the span in dim 3
  CHECK_FALSE(cone_membership({iv({1, 0, 0}), iv({0, 1, 0})}, to_rat(iv({0, 0, 1}))).inside);
}

TEST_CASE("cone membership round-trips random nonnegative combinations") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> num(0, 6), den(1, 4);
  Fan fan = gen_coxeter_a(3);
  FanGeometry geom = FanGeometry::build(fan);
  for (int c = 0; c < geom.num_chambers(); ++c) {
    std::vector<IntVec> rays;
    for (int idx : geom.chamber_rays(c)) rays.push_back(fan.rays[idx]);
    RatVec coeffs;
    for (size_t i = 0; i < rays.size(); ++i) coeffs.push_back(Rat(num(rng), den(rng)));
    RatVec point(fan.dim, Rat(0));
    for (size_t i = 0; i < rays.size(); ++i)
      for (int d = 0; d < fan.dim; ++d) point[d] += coeffs[i] * Rat(rays[i][d]);
    auto result = cone_membership(rays, point);
    REQUIRE(result.inside);
    CHECK(result.coefficients == coeffs);
  }
}

TEST_CASE("cones meeting beyond their common face") {
  auto e1 = iv({1, 0}), e2 = iv({0, 1});
  for (auto engine : {FeasibilityEngine::FourierMotzkin, FeasibilityEngine::Simplex}) {
    CAPTURE(static_cast<int>(engine));
    CHECK_FALSE(cones_meet_beyond_common_face({e1, e2}, {iv({-1, 0}), e2}, {e2}, engine));
    CHECK_FALSE(cones_meet_beyond_common_face({e1, e2}, {e1, iv({1, -1})}, {e1}, engine));
    CHECK(cones_meet_beyond_common_face({e1, e2}, {iv({1, 1}), iv({-1, 1})}, {}, engine));
    // identical cones listed with no common rays still meet beyond the origin
    CHECK(cones_meet_beyond_common_face({e1, e2}, {e1, e2}, {}, engine));
  }
}

TEST_CASE("Fourier-Motzkin and simplex agree") {
  SUBCASE("random systems") {
    std::mt19937 rng(1234);
    std::uniform_int_distribution<int> entry(-3, 3), nv(1, 4), nr(0, 6), kind(0, 2);
    for (int trial = 0; trial < 300; ++trial) {
      LinearSystem sys;
      sys.num_vars = nv(rng);
      const int rows = nr(rng);
      for (int r = 0; r < rows; ++r) {
        RatVec coeffs(sys.num_vars);
        for (auto& x : coeffs) x = Rat(entry(rng));
        sys.add(std::move(coeffs), kind(rng) == 0 ? Rel::Eq : Rel::Ge, Rat(entry(rng)));
      }
      CAPTURE(trial);
      CHECK(is_feasible(sys, FeasibilityEngine::FourierMotzkin) ==
            is_feasible(sys, FeasibilityEngine::Simplex));
    }
  }
  SUBCASE("chamber pair systems from bundled fans") {
    for (Fan fan : {gen_papera2(), gen_orthant(3), gen_crown(2, 1), gen_coxeter_a(3)}) {
      FanGeometry geom = FanGeometry::build(fan);
      const int nc = geom.num_chambers();
      for (int a = 0; a < nc; ++a)
        for (int b = a + 1; b < nc; ++b) {
          std::vector<IntVec> ra, rb, common;
          for (int idx : geom.chamber_rays(a)) ra.push_back(fan.rays[idx]);
          for (int idx : geom.chamber_rays(b)) rb.push_back(fan.rays[idx]);
          for (int idx : geom.chamber_rays(a))
            for (int jdx : geom.chamber_rays(b))
              if (idx == jdx) common.push_back(fan.rays[idx]);
          const bool fm = cones_meet_beyond_common_face(ra, rb, common,
                                                        FeasibilityEngine::FourierMotzkin);
          const bool sx =
              cones_meet_beyond_common_face(ra, rb, common, FeasibilityEngine::Simplex);
          CHECK(fm == sx);
          CHECK_FALSE(fm);  // bundled fans are face-to-face
        }
    }
  }
}

TEST_CASE("engine dispatch by ambient dimension") {
  CHECK(engine_for_dim(1) == FeasibilityEngine::FourierMotzkin);
  CHECK(engine_for_dim(4) == FeasibilityEngine::FourierMotzkin);
  CHECK(engine_for_dim(5) == FeasibilityEngine::Simplex);
}

TEST_CASE("vector helpers") {
  CHECK(make_primitive(iv({2, 4, -6})) == iv({1, 2, -3}));
  CHECK_THROWS_AS(make_primitive(iv({0, 0})), GeomError);
  CHECK(is_primitive(iv({3, 5})));
  CHECK_FALSE(is_primitive(iv({2, 4})));
  CHECK(vec_to_string(iv({1, -2})) == "(1,-2)");
}
