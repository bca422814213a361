#pragma once

// Independent brute-force routes for expected values. These deliberately
// avoid the library's enumeration code paths: matchings come from
// filtering raw edge subsets, determinants from cofactor expansion, and
// pfaffians from a local pairing recursion.

#include "gcond/algebra.hpp"
#include "gcond/graph.hpp"
#include "gcond/matching.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

namespace gcond::oracle {

inline std::vector<Matching> subset_matchings(const PlaneGraph& g) {
  const auto& edges = g.edges();
  if (edges.size() > 22) throw std::runtime_error("subset oracle: too many edges");
  std::vector<Matching> out;
  for (size_t mask = 0; mask < (size_t{1} << edges.size()); ++mask) {
    std::map<VertexId, int> deg;
    for (const auto& v : g.vertices()) deg[v] = 0;
    Matching m;
    for (size_t i = 0; i < edges.size(); ++i) {
      if (!((mask >> i) & 1)) continue;
      m.edges.push_back(edges[i].key);
      m.weight *= edges[i].weight;
      ++deg[edges[i].key.u];
      ++deg[edges[i].key.v];
    }
    bool perfect = true;
    for (const auto& [v, d] : deg)
      if (d != 1) perfect = false;
    if (!perfect) continue;
    std::sort(m.edges.begin(), m.edges.end());
    out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Rational subset_count(const PlaneGraph& g) {
  Rational total(0);
  for (const auto& m : subset_matchings(g)) total += m.weight;
  return total;
}

// Signed pairing sum computed with a pairing recursion local to the tests,
// counting chord crossings directly on each complete pairing.
inline Rational pfaffian_by_pairings(const TriangularArray& t) {
  Rational total(0);
  std::vector<std::pair<int, int>> pairs;
  std::vector<char> used(t.dim(), 0);
  std::function<void()> walk = [&]() {
    int a = 0;
    while (a < t.dim() && used[a]) ++a;
    if (a == t.dim()) {
      int chi = 0;
      for (size_t x = 0; x < pairs.size(); ++x)
        for (size_t y = 0; y < pairs.size(); ++y)
          if (pairs[x].first < pairs[y].first && pairs[y].first < pairs[x].second &&
              pairs[x].second < pairs[y].second)
            ++chi;
      Rational term = chi % 2 == 0 ? Rational(1) : Rational(-1);
      for (auto [i, j] : pairs) term *= t.at(i, j);
      total += term;
      return;
    }
    used[a] = 1;
    for (int b = a + 1; b < t.dim(); ++b) {
      if (used[b]) continue;
      used[b] = 1;
      pairs.emplace_back(a, b);
      walk();
      pairs.pop_back();
      used[b] = 0;
    }
    used[a] = 0;
  };
  walk();
  return total;
}

inline Rational determinant_by_cofactors(const SquareMatrix& m) {
  std::function<Rational(std::vector<int>, std::vector<int>)> rec =
      [&](std::vector<int> rows, std::vector<int> cols) -> Rational {
    if (rows.empty()) return Rational(1);
    Rational sum(0);
    int sign = 1;
    for (size_t c = 0; c < cols.size(); ++c) {
      const Rational& entry = m.at(rows[0], cols[c]);
      if (entry != 0) {
        std::vector<int> sub_rows(rows.begin() + 1, rows.end());
        std::vector<int> sub_cols;
        for (size_t c2 = 0; c2 < cols.size(); ++c2)
          if (c2 != c) sub_cols.push_back(cols[c2]);
        sum += sign * entry * rec(sub_rows, sub_cols);
      }
      sign = -sign;
    }
    return sum;
  };
  std::vector<int> idx;
  for (int i = 0; i < m.dim(); ++i) idx.push_back(i);
  return rec(idx, idx);
}

}  // namespace gcond::oracle
