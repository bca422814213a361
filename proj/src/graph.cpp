#include "gcond/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace gcond {

EdgeKey::EdgeKey(VertexId a, VertexId b) : u(std::move(a)), v(std::move(b)) {
  if (u > v) std::swap(u, v);
}

PlaneGraph::PlaneGraph(std::vector<VertexId> vertices,
                       std::vector<WeightedEdge> edges,
                       std::vector<VertexId> face_boundary)
    : vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      face_(std::move(face_boundary)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw std::invalid_argument("duplicate vertex id");

  std::sort(edges_.begin(), edges_.end(),
            [](const WeightedEdge& a, const WeightedEdge& b) { return a.key < b.key; });
  for (size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (e.key.u == e.key.v)
      throw std::invalid_argument("loop edge at vertex " + e.key.u);
    if (!has_vertex(e.key.u) || !has_vertex(e.key.v))
      throw std::invalid_argument("edge endpoint not a vertex: " + e.key.u + "-" + e.key.v);
    if (e.weight == 0)
      throw std::invalid_argument("zero edge weight on " + e.key.u + "-" + e.key.v);
    if (i > 0 && edges_[i - 1].key == e.key)
      throw std::invalid_argument("parallel edge " + e.key.u + "-" + e.key.v);
  }
  for (const auto& v : face_)
    if (!has_vertex(v))
      throw std::invalid_argument("face vertex not in graph: " + v);
}

bool PlaneGraph::has_vertex(const VertexId& v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool PlaneGraph::has_edge(const VertexId& a, const VertexId& b) const {
  return edge_weight(a, b).has_value();
}

std::optional<Rational> PlaneGraph::edge_weight(const VertexId& a,
                                                const VertexId& b) const {
  EdgeKey k(a, b);
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), k,
      [](const WeightedEdge& e, const EdgeKey& key) { return e.key < key; });
  if (it == edges_.end() || it->key != k) return std::nullopt;
  return it->weight;
}

std::vector<VertexId> PlaneGraph::neighbors(const VertexId& v) const {
  std::vector<VertexId> out;
  for (const auto& e : edges_) {
    if (e.key.u == v) out.push_back(e.key.v);
    if (e.key.v == v) out.push_back(e.key.u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

PlaneGraph delete_vertices(const PlaneGraph& g, const VertexSet& gone) {
  for (const auto& v : gone)
    if (!g.has_vertex(v))
      throw std::invalid_argument("delete_vertices: unknown vertex " + v);

  std::vector<VertexId> vs;
  for (const auto& v : g.vertices())
    if (!gone.count(v)) vs.push_back(v);

  std::vector<WeightedEdge> es;
  for (const auto& e : g.edges())
    if (!gone.count(e.key.u) && !gone.count(e.key.v)) es.push_back(e);

  std::vector<VertexId> face;
  for (const auto& v : g.face_boundary())
    if (!gone.count(v)) face.push_back(v);

  return PlaneGraph(std::move(vs), std::move(es), std::move(face));
}

namespace {

// seq matched as a subsequence of the face walk: anchor seq[0] at each of
// its occurrences, then greedily match the rest within one full turn.
bool cyclic_subsequence(const std::vector<VertexId>& face,
                        const std::vector<VertexId>& seq) {
  if (seq.empty()) return true;
  const size_t f = face.size();
  if (seq.size() > f) return false;
  for (size_t p = 0; p < f; ++p) {
    if (face[p] != seq[0]) continue;
    size_t next = 1;
    for (size_t step = 1; step < f && next < seq.size(); ++step) {
      if (face[(p + step) % f] == seq[next]) ++next;
    }
    if (next == seq.size()) return true;
  }
  return false;
}

}  // namespace

CyclicOrderCheck check_cyclic_order(const PlaneGraph& g,
                                    const std::vector<VertexId>& seq) {
  CyclicOrderCheck res;
  VertexSet seen;
  for (const auto& v : seq) {
    if (!seen.insert(v).second) {
      res.offending = v;
      res.message = "repeated marked vertex " + v;
      return res;
    }
  }
  const auto& face = g.face_boundary();
  for (const auto& v : seq) {
    if (std::find(face.begin(), face.end(), v) == face.end()) {
      res.offending = v;
      res.message = "vertex " + v + " is not on the designated face";
      return res;
    }
  }
  std::vector<VertexId> rev(seq.rbegin(), seq.rend());
  if (cyclic_subsequence(face, seq) || cyclic_subsequence(face, rev)) {
    res.ok = true;
    return res;
  }
  res.message = "vertices are not in cyclic order on the designated face";
  return res;
}

bool validate_cyclic_order(const PlaneGraph& g, const std::vector<VertexId>& seq) {
  return check_cyclic_order(g, seq).ok;
}

}  // namespace gcond
