#include "gcond/matching.hpp"

#include "gcond/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace gcond {

VertexSet Matching::covered() const {
  VertexSet s;
  for (const auto& e : edges) {
    s.insert(e.u);
    s.insert(e.v);
  }
  return s;
}

bool Matching::covers(const VertexId& v) const {
  for (const auto& e : edges)
    if (e.u == v || e.v == v) return true;
  return false;
}

namespace {

struct IndexedGraph {
  std::vector<VertexId> ids;                    // index -> id, sorted
  std::vector<std::vector<size_t>> adj;         // ascending neighbor indices
  std::vector<std::vector<Rational>> weights;   // parallel to adj

  explicit IndexedGraph(const PlaneGraph& g) : ids(g.vertices()) {
    adj.resize(ids.size());
    weights.resize(ids.size());
    auto index_of = [&](const VertexId& v) {
      return static_cast<size_t>(
          std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
    };
    for (const auto& e : g.edges()) {
      size_t a = index_of(e.key.u), b = index_of(e.key.v);
      adj[a].push_back(b);
      weights[a].push_back(e.weight);
      adj[b].push_back(a);
      weights[b].push_back(e.weight);
    }
    for (size_t v = 0; v < ids.size(); ++v) {
      std::vector<size_t> order(adj[v].size());
      for (size_t i = 0; i < order.size(); ++i) order[i] = i;
      std::sort(order.begin(), order.end(),
                [&](size_t i, size_t j) { return adj[v][i] < adj[v][j]; });
      std::vector<size_t> a;
      std::vector<Rational> w;
      for (size_t i : order) {
        a.push_back(adj[v][i]);
        w.push_back(weights[v][i]);
      }
      adj[v] = std::move(a);
      weights[v] = std::move(w);
    }
  }
};

void check_cap(const PlaneGraph& g, const EnumerationLimits& limits) {
  if (g.vertex_count() > limits.vertex_cap)
    throw ResourceLimitError("enumeration refused: " +
                             std::to_string(g.vertex_count()) + " vertices exceeds cap " +
                             std::to_string(limits.vertex_cap));
}

// Branches on the lowest uncovered vertex; visit() returning false stops
// the search early.
void for_each_matching(const IndexedGraph& ig,
                       const std::function<bool(const std::vector<std::pair<size_t, size_t>>&,
                                                const Rational&)>& visit) {
  const size_t n = ig.ids.size();
  std::vector<char> used(n, 0);
  std::vector<std::pair<size_t, size_t>> picked;
  Rational weight(1);
  bool stop = false;

  std::function<void(size_t)> rec = [&](size_t from) {
    if (stop) return;
    size_t u = from;
    while (u < n && used[u]) ++u;
    if (u == n) {
      if (!visit(picked, weight)) stop = true;
      return;
    }
    used[u] = 1;
    for (size_t i = 0; i < ig.adj[u].size() && !stop; ++i) {
      size_t v = ig.adj[u][i];
      if (used[v]) continue;
      used[v] = 1;
      picked.emplace_back(u, v);
      Rational saved = weight;
      weight *= ig.weights[u][i];
      rec(u + 1);
      weight = saved;
      picked.pop_back();
      used[v] = 0;
    }
    used[u] = 0;
  };
  rec(0);
}

}  // namespace

std::vector<Matching> enumerate_matchings(const PlaneGraph& g,
                                          const EnumerationLimits& limits) {
  check_cap(g, limits);
  if (g.vertex_count() % 2 != 0) return {};
  IndexedGraph ig(g);
  std::vector<Matching> out;
  for_each_matching(ig, [&](const auto& picked, const Rational& w) {
    Matching m;
    m.weight = w;
    for (auto [a, b] : picked) m.edges.emplace_back(ig.ids[a], ig.ids[b]);
    std::sort(m.edges.begin(), m.edges.end());
    out.push_back(std::move(m));
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

Rational count_matchings(const PlaneGraph& g, const EnumerationLimits& limits) {
  check_cap(g, limits);
  if (g.vertex_count() % 2 != 0) return 0;
  IndexedGraph ig(g);
  Rational total(0);
  for_each_matching(ig, [&](const auto&, const Rational& w) {
    total += w;
    return true;
  });
  return total;
}

bool has_unique_matching(const PlaneGraph& g, const EnumerationLimits& limits) {
  check_cap(g, limits);
  if (g.vertex_count() % 2 != 0) return false;
  IndexedGraph ig(g);
  size_t found = 0;
  for_each_matching(ig, [&](const auto&, const Rational&) {
    return ++found < 2;
  });
  return found == 1;
}

bool is_perfect_matching(const PlaneGraph& g, const Matching& m) {
  std::map<VertexId, int> deg;
  for (const auto& v : g.vertices()) deg[v] = 0;
  Rational w(1);
  for (const auto& e : m.edges) {
    auto ew = g.edge_weight(e.u, e.v);
    if (!ew) return false;
    w *= *ew;
    auto iu = deg.find(e.u), iv = deg.find(e.v);
    if (iu == deg.end() || iv == deg.end()) return false;
    ++iu->second;
    ++iv->second;
  }
  for (const auto& [v, d] : deg)
    if (d != 1) return false;
  return w == m.weight;
}

}  // namespace gcond
