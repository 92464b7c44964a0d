#include "shardfan/feasibility.hpp"

#include <algorithm>
#include <set>

namespace shardfan {

namespace mp = boost::multiprecision;

void LinearSystem::add(RatVec coeffs, Rel rel, Rat rhs) {
  if (static_cast<int>(coeffs.size()) != num_vars)
    throw GeomError("LinearSystem::add: wrong arity");
  rows.push_back({std::move(coeffs), rel, std::move(rhs)});
}

FeasibilityEngine engine_for_dim(int ambient_dim) {
  return ambient_dim <= 4 ? FeasibilityEngine::FourierMotzkin : FeasibilityEngine::Simplex;
}

namespace {

struct GeRow {
  // coeffs . x >= rhs
  RatVec coeffs;
  Rat rhs;
};

// Integer row in the same halfspace sense, gcd-normalized; last entry is
// the rhs. Used as the dedup key during elimination.
using IntRow = std::vector<Int>;

IntRow integerize(const GeRow& row) {
  Int lcm = 1;
  for (const Rat& c : row.coeffs) lcm = mp::lcm(lcm, mp::denominator(c));
  lcm = mp::lcm(lcm, mp::denominator(row.rhs));
  IntRow out(row.coeffs.size() + 1);
  for (size_t i = 0; i < row.coeffs.size(); ++i)
    out[i] = mp::numerator(row.coeffs[i]) * (lcm / mp::denominator(row.coeffs[i]));
  out.back() = mp::numerator(row.rhs) * (lcm / mp::denominator(row.rhs));
  Int g = 0;
  for (const Int& x : out) g = mp::gcd(g, mp::abs(x));
  if (g > 1)
    for (Int& x : out) x /= g;
  return out;
}

bool all_coeffs_zero(const IntRow& row) {
  for (size_t i = 0; i + 1 < row.size(); ++i)
    if (row[i] != 0) return false;
  return true;
}

// Fourier-Motzkin after Gaussian elimination of the equalities. Exact; the
// inputs here are tiny (combination blow-up is bounded by dedup and the
// desk-scale dimensions).
bool fm_feasible(const LinearSystem& sys) {
  std::vector<GeRow> eqs, ges;
  for (const auto& c : sys.rows) {
    GeRow row{c.coeffs, c.rhs};
    if (c.rel == Rel::Eq)
      eqs.push_back(std::move(row));
    else
      ges.push_back(std::move(row));
  }

  // Substitute equalities away.
  while (!eqs.empty()) {
    GeRow eq = std::move(eqs.back());
    eqs.pop_back();
    int pivot = -1;
    for (size_t j = 0; j < eq.coeffs.size(); ++j)
      if (eq.coeffs[j] != 0) {
        pivot = static_cast<int>(j);
        break;
      }
    if (pivot < 0) {
      if (eq.rhs != 0) return false;
      continue;
    }
    Rat p = eq.coeffs[pivot];
    auto substitute = [&](GeRow& row) {
      if (row.coeffs[pivot] == 0) return;
      Rat f = row.coeffs[pivot] / p;
      for (size_t j = 0; j < row.coeffs.size(); ++j) row.coeffs[j] -= f * eq.coeffs[j];
      row.coeffs[pivot] = 0;
      row.rhs -= f * eq.rhs;
    };
    for (auto& row : eqs) substitute(row);
    for (auto& row : ges) substitute(row);
  }

  std::set<IntRow> rows;
  for (const auto& g : ges) {
    IntRow row = integerize(g);
    if (all_coeffs_zero(row)) {
      if (row.back() > 0) return false;
      continue;
    }
    rows.insert(std::move(row));
  }

  const int nv = sys.num_vars;
  while (true) {
    // Pick the variable minimizing the product of positive and negative
    // occurrence counts.
    int best = -1;
    long best_score = 0;
    for (int v = 0; v < nv; ++v) {
      long pos = 0, neg = 0;
      for (const auto& row : rows) {
        if (row[v] > 0) ++pos;
        if (row[v] < 0) ++neg;
      }
      if (pos + neg == 0) continue;
      long score = pos * neg;
      if (best < 0 || score < best_score) {
        best = v;
        best_score = score;
      }
    }
    if (best < 0) break;

    std::vector<IntRow> pos, neg;
    std::set<IntRow> next;
    for (const auto& row : rows) {
      if (row[best] > 0)
        pos.push_back(row);
      else if (row[best] < 0)
        neg.push_back(row);
      else
        next.insert(row);
    }
    for (const auto& p : pos) {
      for (const auto& q : neg) {
        IntRow row(p.size());
        // (-q_v) * p + p_v * q cancels the pivot; both multipliers positive.
        Int a = -q[best], b = p[best];
        for (size_t j = 0; j < row.size(); ++j) row[j] = a * p[j] + b * q[j];
        Int g = 0;
        for (const Int& x : row) g = mp::gcd(g, mp::abs(x));
        if (g > 1)
          for (Int& x : row) x /= g;
        if (all_coeffs_zero(row)) {
          if (row.back() > 0) return false;
          continue;
        }
        next.insert(std::move(row));
      }
    }
    rows = std::move(next);
    if (rows.size() > 200000) throw GeomError("fm_feasible: row blow-up");
  }

  for (const auto& row : rows)
    if (all_coeffs_zero(row) && row.back() > 0) return false;
  return true;
}

// Phase-one exact simplex with Bland's rule. Free variables are split into
// differences of nonnegative ones, inequalities get slacks, every row an
// artificial; feasible iff the artificial objective reaches zero.
bool simplex_feasible(const LinearSystem& sys) {
  const int nv = sys.num_vars;
  const int nrows = static_cast<int>(sys.rows.size());
  if (nrows == 0) return true;
  int slacks = 0;
  for (const auto& r : sys.rows)
    if (r.rel == Rel::Ge) ++slacks;

  const int cols = 2 * nv + slacks + nrows;  // split vars, slacks, artificials
  std::vector<RatVec> tab(nrows, RatVec(cols + 1, Rat(0)));
  int slack_at = 2 * nv;
  for (int i = 0; i < nrows; ++i) {
    const auto& r = sys.rows[i];
    for (int v = 0; v < nv; ++v) {
      tab[i][2 * v] = r.coeffs[v];
      tab[i][2 * v + 1] = -r.coeffs[v];
    }
    if (r.rel == Rel::Ge) tab[i][slack_at++] = Rat(-1);
    tab[i][cols] = r.rhs;
    if (tab[i][cols] < 0)
      for (auto& x : tab[i]) x = -x;
  }
  std::vector<int> basis(nrows);
  for (int i = 0; i < nrows; ++i) {
    tab[i][2 * nv + slacks + i] = Rat(1);
    basis[i] = 2 * nv + slacks + i;
  }

  // Reduced-cost row for minimizing the artificial sum.
  RatVec obj(cols + 1, Rat(0));
  for (int i = 0; i < nrows; ++i)
    for (int j = 0; j <= cols; ++j) obj[j] -= tab[i][j];
  for (int i = 0; i < nrows; ++i) obj[basis[i]] = Rat(0);

  while (true) {
    int enter = -1;
    for (int j = 0; j < cols; ++j)
      if (obj[j] < 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    Rat best_ratio;
    for (int i = 0; i < nrows; ++i) {
      if (tab[i][enter] <= 0) continue;
      Rat ratio = tab[i][cols] / tab[i][enter];
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave < 0) throw GeomError("simplex_feasible: unbounded phase-one");
    Rat p = tab[leave][enter];
    for (int j = 0; j <= cols; ++j) tab[leave][j] /= p;
    for (int i = 0; i < nrows; ++i) {
      if (i == leave || tab[i][enter] == 0) continue;
      Rat f = tab[i][enter];
      for (int j = 0; j <= cols; ++j) tab[i][j] -= f * tab[leave][j];
    }
    if (obj[enter] != 0) {
      Rat f = obj[enter];
      for (int j = 0; j <= cols; ++j) obj[j] -= f * tab[leave][j];
    }
    basis[leave] = enter;
  }

  Rat artificial_sum = 0;
  for (int i = 0; i < nrows; ++i)
    if (basis[i] >= 2 * nv + slacks) artificial_sum += tab[i][cols];
  return artificial_sum == 0;
}

}  // namespace

bool is_feasible(const LinearSystem& sys, FeasibilityEngine engine) {
  return engine == FeasibilityEngine::FourierMotzkin ? fm_feasible(sys) : simplex_feasible(sys);
}

bool cones_meet_beyond_common_face(const std::vector<IntVec>& rays_a,
                                   const std::vector<IntVec>& rays_b,
                                   const std::vector<IntVec>& common,
                                   FeasibilityEngine engine) {
  const int ka = static_cast<int>(rays_a.size());
  const int kb = static_cast<int>(rays_b.size());
  if (ka == 0 && kb == 0) return false;
  const int n = static_cast<int>(ka ? rays_a[0].size() : rays_b[0].size());
  auto is_common = [&](const IntVec& ray) {
    return std::find(common.begin(), common.end(), ray) != common.end();
  };

  // x = sum a_i A_i = sum b_j B_j with a, b >= 0. A point of the
  // intersection lies outside cone(common) iff its (unique) A-coordinates
  // put positive mass on a non-common ray; normalize that mass to 1.
  LinearSystem sys;
  sys.num_vars = ka + kb;
  for (int d = 0; d < n; ++d) {
    RatVec row(sys.num_vars, Rat(0));
    for (int i = 0; i < ka; ++i) row[i] = Rat(rays_a[i][d]);
    for (int j = 0; j < kb; ++j) row[ka + j] = Rat(-rays_b[j][d]);
    sys.add(std::move(row), Rel::Eq, Rat(0));
  }
  {
    RatVec row(sys.num_vars, Rat(0));
    for (int i = 0; i < ka; ++i)
      if (!is_common(rays_a[i])) row[i] = Rat(1);
    sys.add(std::move(row), Rel::Eq, Rat(1));
  }
  for (int v = 0; v < sys.num_vars; ++v) {
    RatVec row(sys.num_vars, Rat(0));
    row[v] = Rat(1);
    sys.add(std::move(row), Rel::Ge, Rat(0));
  }
  return is_feasible(sys, engine);
}

}  // namespace shardfan
