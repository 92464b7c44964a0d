#include "shardfan/exact.hpp"

#include <sstream>

namespace shardfan {

namespace mp = boost::multiprecision;

Int vec_gcd(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) g = mp::gcd(g, mp::abs(x));
  return g;
}

bool is_zero_vec(const IntVec& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

bool is_primitive(const IntVec& v) { return vec_gcd(v) == 1; }

IntVec make_primitive(IntVec v) {
  Int g = vec_gcd(v);
  if (g == 0) throw GeomError("make_primitive: zero vector");
  if (g != 1)
    for (Int& x : v) x /= g;
  return v;
}

Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot_rat(const IntVec& a, const RatVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

IntVec vec_add(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVec vec_negate(IntVec v) {
  for (Int& x : v) x = -x;
  return v;
}

RatVec to_rat(const IntVec& v) {
  RatVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

IntVec unit_vector(int dim, int index) {
  IntVec e(dim, 0);
  e[index] = 1;
  return e;
}

std::string vec_to_string(const IntVec& v) {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out << ",";
    out << v[i];
  }
  out << ")";
  return out.str();
}

namespace {

// Fraction-free Bareiss elimination; exact signed determinant.
Int det_exact(std::vector<IntVec> rows) {
  const int n = static_cast<int>(rows.size());
  if (n == 0) return 1;
  int sign = 1;
  Int prev = 1;
  for (int k = 0; k < n; ++k) {
    int pivot = -1;
    for (int i = k; i < n; ++i)
      if (rows[i][k] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != k) {
      std::swap(rows[pivot], rows[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        rows[i][j] = (rows[k][k] * rows[i][j] - rows[i][k] * rows[k][j]) / prev;
      }
      rows[i][k] = 0;
    }
    prev = rows[k][k];
  }
  return sign * rows[n - 1][n - 1];
}

}  // namespace

DetResult det_sign(const std::vector<IntVec>& columns) {
  const int n = static_cast<int>(columns.size());
  for (const auto& c : columns)
    if (static_cast<int>(c.size()) != n) throw GeomError("det_sign: matrix not square");
  std::vector<IntVec> rows(n, IntVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = columns[j][i];
  Int d = det_exact(std::move(rows));
  DetResult res;
  res.sign = d == 0 ? 0 : (d > 0 ? 1 : -1);
  res.abs_value = mp::abs(d);
  return res;
}

Hyperplane canonical_hyperplane(IntVec normal) {
  normal = make_primitive(std::move(normal));
  Int s = 0;
  for (const Int& x : normal) s += x;
  Hyperplane h;
  if (s != 0) {
    if (s < 0) normal = vec_negate(std::move(normal));
  } else {
    h.ambiguous = true;
    for (const Int& x : normal) {
      if (x == 0) continue;
      if (x < 0) normal = vec_negate(std::move(normal));
      break;
    }
  }
  h.normal = std::move(normal);
  return h;
}

Hyperplane span_hyperplane(const std::vector<IntVec>& vectors, int dim) {
  if (static_cast<int>(vectors.size()) != dim - 1)
    throw GeomError("span_hyperplane: expected dim-1 vectors");
  // Generalized cross product: the i-th coordinate is the signed minor with
  // column i removed.
  IntVec normal(dim);
  for (int i = 0; i < dim; ++i) {
    std::vector<IntVec> minor(dim - 1, IntVec(dim - 1));
    for (int r = 0; r < dim - 1; ++r) {
      int cc = 0;
      for (int c = 0; c < dim; ++c) {
        if (c == i) continue;
        minor[r][cc++] = vectors[r][c];
      }
    }
    Int d = det_exact(std::move(minor));
    normal[i] = (i % 2 == 0) ? d : -d;
  }
  if (is_zero_vec(normal)) throw DependentInput("span_hyperplane: input has rank < dim-1");
  return canonical_hyperplane(std::move(normal));
}

ConeMembership cone_membership(const std::vector<IntVec>& rays, const RatVec& point) {
  const int k = static_cast<int>(rays.size());
  const int n = static_cast<int>(point.size());
  // Solve rays * c = point by rational elimination on the augmented matrix.
  std::vector<RatVec> m(n, RatVec(k + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < k; ++j) m[i][j] = Rat(rays[j][i]);
    m[i][k] = point[i];
  }
  std::vector<int> pivot_row_of_col(k, -1);
  int row = 0;
  for (int col = 0; col < k && row < n; ++col) {
    int pr = -1;
    for (int i = row; i < n; ++i)
      if (m[i][col] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[pr], m[row]);
    Rat p = m[row][col];
    for (int j = col; j <= k; ++j) m[row][j] /= p;
    for (int i = 0; i < n; ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rat f = m[i][col];
      for (int j = col; j <= k; ++j) m[i][j] -= f * m[row][j];
    }
    pivot_row_of_col[col] = row;
    ++row;
  }
  for (int col = 0; col < k; ++col)
    if (pivot_row_of_col[col] < 0) throw GeomError("cone_membership: rays not independent");
  // Inconsistent rows mean the point is outside the span.
  for (int i = row; i < n; ++i)
    if (m[i][k] != 0) return {};
  ConeMembership res;
  res.coefficients.resize(k);
  for (int col = 0; col < k; ++col) {
    Rat c = m[pivot_row_of_col[col]][k];
    if (c < 0) return {};
    res.coefficients[col] = c;
  }
  res.inside = true;
  return res;
}

}  // namespace shardfan
