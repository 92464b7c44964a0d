#include "shardfan/builders.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace shardfan {

Fan gen_orthant(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("gen_orthant: n must be in 1..6");
  Fan fan;
  fan.dim = n;
  fan.name = "orthant" + std::to_string(n);
  for (int i = 0; i < n; ++i) fan.rays.push_back(unit_vector(n, i));
  for (int i = 0; i < n; ++i) fan.rays.push_back(vec_negate(unit_vector(n, i)));
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> chamber;
    for (int i = 0; i < n; ++i) chamber.push_back((mask >> i) & 1u ? n + i : i);
    std::sort(chamber.begin(), chamber.end());
    fan.chambers.push_back(std::move(chamber));
  }
  return fan;
}

Fan gen_crown(int p, int q) {
  if (p < 0 || q < 0) throw std::invalid_argument("gen_crown: p, q must be nonnegative");
  Fan fan;
  fan.dim = 2;
  fan.name = "crown_" + std::to_string(p) + "_" + std::to_string(q);
  auto ray = [](long long x, long long y) { return IntVec{Int(x), Int(y)}; };
  // Counterclockwise circular order.
  fan.rays.push_back(ray(1, 0));
  fan.rays.push_back(ray(0, 1));
  for (int k = 1; k <= p; ++k) fan.rays.push_back(ray(-k, 1));
  fan.rays.push_back(ray(-1, 0));
  fan.rays.push_back(ray(0, -1));
  for (int k = q; k >= 1; --k) fan.rays.push_back(ray(1, -k));
  const int r = static_cast<int>(fan.rays.size());
  for (int i = 0; i < r; ++i) {
    std::vector<int> chamber{i, (i + 1) % r};
    std::sort(chamber.begin(), chamber.end());
    fan.chambers.push_back(std::move(chamber));
  }
  return fan;
}

Fan gen_coxeter_a(int n) {
  if (n < 2 || n > 4) throw std::invalid_argument("gen_coxeter_a: n must be in 2..4");
  using Matrix = std::vector<IntVec>;  // rows

  // Simple reflections in fundamental-weight coordinates: s_i = I - alpha_i
  // e_i^T with alpha_i the i-th column of the type-A Cartan matrix.
  std::vector<Matrix> gens;
  for (int i = 0; i < n; ++i) {
    Matrix s(n, IntVec(n, 0));
    for (int r = 0; r < n; ++r) s[r][r] = 1;
    for (int r = 0; r < n; ++r) {
      Int cartan = r == i ? 2 : (std::abs(r - i) == 1 ? -1 : 0);
      s[r][i] -= cartan;
    }
    gens.push_back(std::move(s));
  }
  auto mul = [n](const Matrix& a, const Matrix& b) {
    Matrix c(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
  };

  Matrix id(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) id[i][i] = 1;
  std::set<Matrix> seen{id};
  std::deque<Matrix> queue{id};
  std::vector<Matrix> group;
  while (!queue.empty()) {
    Matrix w = std::move(queue.front());
    queue.pop_front();
    group.push_back(w);
    for (const auto& s : gens) {
      Matrix next = mul(s, w);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }

  Fan fan;
  fan.dim = n;
  fan.name = "coxeterA" + std::to_string(n);
  std::map<IntVec, int> ray_index;
  for (const auto& w : group) {
    std::vector<int> chamber;
    for (int j = 0; j < n; ++j) {
      IntVec ray(n);
      for (int i = 0; i < n; ++i) ray[i] = w[i][j];
      auto it = ray_index.find(ray);
      if (it == ray_index.end()) {
        it = ray_index.emplace(ray, static_cast<int>(fan.rays.size())).first;
        fan.rays.push_back(ray);
      }
      chamber.push_back(it->second);
    }
    std::sort(chamber.begin(), chamber.end());
    fan.chambers.push_back(std::move(chamber));
  }
  return fan;
}

Fan gen_papera2() {
  Fan fan;
  fan.dim = 2;
  fan.name = "papera2";
  auto ray = [](long long x, long long y) { return IntVec{Int(x), Int(y)}; };
  fan.rays = {ray(0, 1), ray(1, 0), ray(1, -1), ray(0, -1), ray(-1, 0)};
  fan.chambers = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}};
  return fan;
}

}  // namespace shardfan
