#ifndef SEMINF_TESTS_ORACLES_HPP
#define SEMINF_TESTS_ORACLES_HPP

// Independent reference implementations used only to cross-check the
// library. They deliberately use different data structures and algorithms
// than the code under test: plain 0/1 matrices, map-based partial
// injections with fixpoint closure, and filter-everything addition search.

#include <map>
#include <set>
#include <vector>

#include "seminf/algebra.hpp"

namespace seminf::testing {

using Matrix = std::vector<std::vector<int>>;

inline Matrix matmul01(const Matrix& a, const Matrix& b) {
  const int m = static_cast<int>(a.size());
  Matrix out(m, std::vector<int>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int acc = 0;
      for (int k = 0; k < m; ++k) acc += a[i][k] * b[k][j];
      out[i][j] = acc;  // stays 0/1 for rook matrices
    }
  return out;
}

inline Matrix mattrans(const Matrix& a) {
  const int m = static_cast<int>(a.size());
  Matrix out(m, std::vector<int>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) out[j][i] = a[i][j];
  return out;
}

/// Partial injection as an ordered map column -> row (0-based).
using MapInj = std::map<int, int>;

inline MapInj map_compose(const MapInj& p, const MapInj& q) {
  MapInj out;
  for (const auto& [j, mid] : q) {
    auto it = p.find(mid);
    if (it != p.end()) out[j] = it->second;
  }
  return out;
}

inline MapInj map_transpose(const MapInj& p) {
  MapInj out;
  for (const auto& [j, i] : p) out[i] = j;
  return out;
}

/// c_k of dimension 2n+1 as a map (0-based).
inline MapInj map_ck(int n, int k) {
  return MapInj{{k - 1, k}, {n + k, n + k - 1}};
}

/// Fixpoint closure under composition and transposition.
inline std::set<MapInj> naive_closure(const std::vector<MapInj>& gens) {
  std::set<MapInj> s(gens.begin(), gens.end());
  while (true) {
    std::set<MapInj> fresh;
    for (const auto& p : s) {
      MapInj t = map_transpose(p);
      if (!s.count(t)) fresh.insert(t);
      for (const auto& q : s) {
        MapInj r = map_compose(p, q);
        if (!s.count(r)) fresh.insert(r);
        r = map_compose(q, p);
        if (!s.count(r)) fresh.insert(r);
      }
    }
    if (fresh.empty()) return s;
    s.insert(fresh.begin(), fresh.end());
  }
}

/// Every ai-semiring addition on s, found by filtering all symmetric tables.
/// Exponential; callers keep |S| <= 4.
inline std::vector<std::vector<int>> naive_all_additions(
    const FiniteAlgebra& s) {
  const int n = s.size();
  std::vector<std::pair<int, int>> cells;  // upper triangle incl. diagonal
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) cells.emplace_back(i, j);

  std::vector<std::vector<int>> found;
  std::vector<int> choice(cells.size(), 0);
  while (true) {
    std::vector<int> add(n * n, 0);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const auto [i, j] = cells[c];
      add[i * n + j] = add[j * n + i] = choice[c];
    }
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = add[a * n + a] == a;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        for (int c = 0; c < n && ok; ++c) {
          if (add[add[a * n + b] * n + c] != add[a * n + add[b * n + c]])
            ok = false;
          else if (s.product(a, add[b * n + c]) !=
                   add[s.product(a, b) * n + s.product(a, c)])
            ok = false;
          else if (s.product(add[b * n + c], a) !=
                   add[s.product(b, a) * n + s.product(c, a)])
            ok = false;
        }
    if (ok) found.push_back(std::move(add));

    std::size_t pos = 0;
    while (pos < choice.size() && ++choice[pos] == n) choice[pos++] = 0;
    if (pos == choice.size()) break;
  }
  std::sort(found.begin(), found.end());
  return found;
}

// Small table-built algebras for edge cases.

inline FiniteAlgebra trivial_algebra() {
  return validate_table("trivial", {"e"}, {0});
}

inline FiniteAlgebra chain_semilattice(int n) {
  std::vector<std::string> names;
  std::vector<int> mul(n * n);
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, 'a' + i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mul[i * n + j] = std::min(i, j);
  return validate_table("chain" + std::to_string(n), std::move(names),
                        std::move(mul));
}

inline FiniteAlgebra left_zero(int n) {
  std::vector<std::string> names;
  std::vector<int> mul(n * n);
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, 'a' + i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mul[i * n + j] = i;
  return validate_table("leftzero" + std::to_string(n), std::move(names),
                        std::move(mul));
}

inline FiniteAlgebra cyclic_group(int n) {
  std::vector<std::string> names;
  std::vector<int> mul(n * n);
  for (int i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mul[i * n + j] = (i + j) % n;
  return validate_table("z" + std::to_string(n), std::move(names),
                        std::move(mul));
}

/// xy = 0 for all x, y; element 0 is the zero.
inline FiniteAlgebra null_semigroup(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, 'a' + i));
  return validate_table("null" + std::to_string(n), std::move(names),
                        std::vector<int>(n * n, 0));
}

}  // namespace seminf::testing

#endif  // SEMINF_TESTS_ORACLES_HPP
