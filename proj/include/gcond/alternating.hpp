#pragma once

#include "gcond/algebra.hpp"
#include "gcond/matching.hpp"

#include <map>
#include <utility>
#include <vector>

namespace gcond {

// A path in the host graph alternating between edges of the reference
// matching and non-matching edges. An endpoint covered by the matching
// must be left through its matching edge; an uncovered endpoint starts
// with a non-matching edge.
struct AlternatingPath {
  VertexId from, to;
  std::vector<EdgeKey> edges;      // ordered from 'from' to 'to'
  std::vector<char> in_matching;   // parallel to edges, strictly alternating

  std::vector<VertexId> vertex_sequence() const;
  bool shares_vertex_with(const AlternatingPath& other) const;
  AlternatingPath reversed() const;

  auto operator<=>(const AlternatingPath&) const = default;
};

bool is_alternating_path(const PlaneGraph& g, const Matching& mh,
                         const AlternatingPath& p);

// All alternating paths from a to b relative to mh, which must be the
// unique perfect matching of the subgraph induced by its covered vertices
// (uniqueness is re-verified here; HypothesisError otherwise).
std::vector<AlternatingPath> enumerate_alternating_paths(
    const PlaneGraph& g, const Matching& mh, const VertexId& a, const VertexId& b,
    const EnumerationLimits& limits = {});

// A full collection of alternating paths whose endpoints cover the marked
// vertices exactly; pairing records which marked indices each path joins.
struct PathNest {
  OneFactor pairing;                    // over positions in the marked order
  std::vector<AlternatingPath> paths;   // paths[t] joins pairing.pairs[t]

  bool intersecting() const;
  int sign() const;                     // (-1)^chi of the pairing

  auto operator<=>(const PathNest&) const = default;
};

struct NestCensus {
  std::vector<PathNest> non_intersecting;
  std::vector<PathNest> intersecting;
};

// Enumerates every nest over the marked vertices (|marked| even), split by
// whether any two member paths share a vertex. The signed enumeration
// never prunes; the non-intersecting side is what counts matchings.
NestCensus enumerate_nests(const PlaneGraph& g, const Matching& mh,
                           const std::vector<VertexId>& marked,
                           const EnumerationLimits& limits = {});

// The union-and-repartition surgery on two intersecting paths: edges of
// both inputs are colored red (first only), blue (second only), purple
// (shared), the red-blue path avoiding the lowest marked endpoint has its
// colors swapped, and the two single-color-plus-purple traces become the
// output pair.
struct CrossingResolution {
  std::pair<AlternatingPath, AlternatingPath> inputs;
  std::map<EdgeKey, int> union_multiset;            // Q, purple edges twice
  std::map<EdgeKey, char> coloring;                 // 'r', 'b' or 'p'
  std::pair<AlternatingPath, AlternatingPath> outputs;  // lowest endpoint first
};

// marked_order fixes the index of each endpoint (position in a_1..a_n).
CrossingResolution resolve_crossing(const AlternatingPath& p1,
                                    const AlternatingPath& p2, const Matching& mh,
                                    const PlaneGraph& g,
                                    const std::vector<VertexId>& marked_order);

// Pairs up intersecting nests with opposite signs via resolve_crossing,
// using the selection rule: lowest marked index on an intersecting path,
// first shared vertex along it, then the partner endpoint with the lowest
// index reachable by a red-blue path. The result maps each intersecting
// nest (by position in `intersecting`) to its cancellation partner and is
// a fixed-point-free involution.
std::vector<size_t> cancelling_involution(const std::vector<PathNest>& intersecting,
                                          const Matching& mh, const PlaneGraph& g,
                                          const std::vector<VertexId>& marked_order);

}  // namespace gcond
