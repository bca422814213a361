#pragma once

#include "gcond/matching.hpp"

#include <string>
#include <utility>
#include <vector>

namespace gcond {

// One component path of a superposition multigraph, traced from its marked
// A-side endpoint to its B-side endpoint.
struct DecompPath {
  VertexId a_end;
  VertexId b_end;
  std::vector<EdgeKey> edges;

  bool even_length() const { return edges.size() % 2 == 0; }

  auto operator<=>(const DecompPath&) const = default;
};

// The multigraph obtained by laying one matching over another: doubled
// edges, even cycles, and paths running between the two marked sets.
// k(H) = cycle_count (doubled edges are not cycles and contribute no
// factor of two); w(H) = weight, with doubled-edge weights squared.
struct SuperpositionDecomposition {
  std::vector<EdgeKey> doubled_edges;          // sorted
  std::vector<std::vector<EdgeKey>> cycles;    // each in traversal order
  std::vector<DecompPath> paths;               // sorted by a_end
  size_t cycle_count = 0;
  Rational weight{1};

  size_t even_path_count() const;

  // Two superpositions are the same multigraph iff they have the same edge
  // multiset; the key encodes exactly that.
  std::string canonical_key() const;
};

// Superimposes two matchings taken from complementary vertex deletions of
// host (either side of the partition identities). marked_a / marked_b are
// the A and B sets; every degree-one vertex of the union must land in one
// of them, with each path joining the two sides.
SuperpositionDecomposition superpose(const Matching& m1, const Matching& m2,
                                     const PlaneGraph& host,
                                     const VertexSet& marked_a,
                                     const VertexSet& marked_b);

// Which side of the identity to reconstruct. The W-side of the theorems is
// the special case A1 = {} and A2 = A.
struct PartitionScheme {
  VertexSet a1, a2;

  static PartitionScheme w_side(const VertexSet& a) { return {{}, a}; }
  static PartitionScheme y_side(VertexSet a1, VertexSet a2) {
    return {std::move(a1), std::move(a2)};
  }
};

struct PartitionResult {
  // Each pair is (matching of G-A1-Y, matching of G-A2-Ybar); exactly
  // 2^k(H) of them, one per assignment of the cycles.
  std::vector<std::pair<Matching, Matching>> pairs;
  VertexSet forced_subset;   // the unique W (resp. Y) this H belongs to
};

PartitionResult partition_superposition(const SuperpositionDecomposition& h,
                                        const PartitionScheme& scheme,
                                        const PlaneGraph& host);

}  // namespace gcond
