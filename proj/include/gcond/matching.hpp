#pragma once

#include "gcond/graph.hpp"

#include <vector>

namespace gcond {

// A perfect matching of some (sub)graph: every vertex of its host is
// covered exactly once; the weight is the product of member edge weights.
struct Matching {
  std::vector<EdgeKey> edges;   // sorted
  Rational weight{1};

  VertexSet covered() const;
  bool covers(const VertexId& v) const;

  bool operator==(const Matching&) const = default;
  bool operator<(const Matching& o) const {
    if (edges != o.edges) return edges < o.edges;
    return weight < o.weight;
  }
};

struct EnumerationLimits {
  size_t vertex_cap = 24;
};

// All perfect matchings, duplicate-free, sorted by edge list. The empty
// graph has exactly one (empty) matching; odd vertex count yields none.
std::vector<Matching> enumerate_matchings(const PlaneGraph& g,
                                          const EnumerationLimits& limits = {});

// Total weight of perfect matchings, M(G). Equals the sum over
// enumerate_matchings but never materializes the list.
Rational count_matchings(const PlaneGraph& g, const EnumerationLimits& limits = {});

bool has_unique_matching(const PlaneGraph& g, const EnumerationLimits& limits = {});

// Checks m against g: edges exist with matching weights, every vertex of g
// covered exactly once.
bool is_perfect_matching(const PlaneGraph& g, const Matching& m);

}  // namespace gcond
