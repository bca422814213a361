#pragma once

#include "gcond/rational.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace gcond {

// Vertex names are opaque and stable: deleting vertices never renames the
// survivors, so subgraph results can be compared across derivations.
using VertexId = std::string;

using VertexSet = std::set<VertexId>;

// Unordered vertex pair, stored with ends.first < ends.second.
struct EdgeKey {
  VertexId u, v;

  EdgeKey(VertexId a, VertexId b);

  auto operator<=>(const EdgeKey&) const = default;
};

struct WeightedEdge {
  EdgeKey key;
  Rational weight;

  bool operator==(const WeightedEdge&) const = default;
  bool operator<(const WeightedEdge& o) const {
    if (key != o.key) return key < o.key;
    return weight < o.weight;
  }
};

// A simple weighted graph plus one designated face, given as its boundary
// walk. The walk is a cyclic sequence and may repeat a vertex (boundary of
// a non-2-connected embedding, e.g. a path graph); planarity itself is
// trusted, not verified.
class PlaneGraph {
 public:
  PlaneGraph() = default;
  PlaneGraph(std::vector<VertexId> vertices, std::vector<WeightedEdge> edges,
             std::vector<VertexId> face_boundary);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<WeightedEdge>& edges() const { return edges_; }
  const std::vector<VertexId>& face_boundary() const { return face_; }

  size_t vertex_count() const { return vertices_.size(); }
  bool has_vertex(const VertexId& v) const;
  bool has_edge(const VertexId& a, const VertexId& b) const;
  std::optional<Rational> edge_weight(const VertexId& a, const VertexId& b) const;

  // Sorted neighbor list of v.
  std::vector<VertexId> neighbors(const VertexId& v) const;

  bool operator==(const PlaneGraph&) const = default;

 private:
  std::vector<VertexId> vertices_;      // sorted, unique
  std::vector<WeightedEdge> edges_;     // sorted by key, unique
  std::vector<VertexId> face_;
};

// Marked vertices for the condensation identities. A and B are ordered as
// a_1..a_k / b_1..b_k; the splits are optional and only the one a given
// verifier needs has to be filled in.
struct MarkedSelection {
  std::vector<VertexId> a;
  std::vector<VertexId> b;
  VertexSet a1, a2;    // partition of A for the even/odd theorems
  VertexSet ak, ah;    // partition of A for the Pfaffian setting
};

// Induced subgraph on vertices() \ gone; survivors keep their IDs and the
// face boundary is the old walk with deleted vertices dropped.
PlaneGraph delete_vertices(const PlaneGraph& g, const VertexSet& gone);

struct CyclicOrderCheck {
  bool ok = false;
  std::optional<VertexId> offending;   // set when some vertex is off the face
  std::string message;
};

// True iff seq occurs as a cyclic subsequence of the face boundary, in
// either orientation. Orientation of the plane is a free choice, so
// reflections are accepted.
CyclicOrderCheck check_cyclic_order(const PlaneGraph& g,
                                    const std::vector<VertexId>& seq);
bool validate_cyclic_order(const PlaneGraph& g, const std::vector<VertexId>& seq);

}  // namespace gcond
