#pragma once

#include "gcond/graph.hpp"
#include "gcond/matching.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace gcond {

// Seeded deterministic randomness. mt19937_64 output is pinned by the
// standard, and the bounded draw avoids distribution objects whose
// behavior is implementation-defined.
class RandomSource {
 public:
  explicit RandomSource(uint64_t seed) : engine_(seed) {}

  uint64_t next() { return engine_(); }
  uint64_t below(uint64_t bound) { return bound ? next() % bound : 0; }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (size_t i = items.size(); i > 1; --i)
      std::swap(items[i - 1], items[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

enum class Family { grid, cycle, path, ladder, aztec_diamond, fan, random_outerplanar };
enum class WeightMode { unit, random_rational };
enum class MarkingMode {
  none,
  even_partition,
  odd_partition,
  bipartite_balanced,
  bipartite_offset,
  pfaffian,
  determinant,
};

struct InstanceSpec {
  Family family = Family::grid;
  int rows = 2, cols = 2;   // grid
  int n = 4;                // cycle / path / ladder / fan / outerplanar size
  int order = 1;            // aztec diamond
  WeightMode weight_mode = WeightMode::unit;
  uint64_t seed = 1;
  int weight_range = 5;     // numerators and denominators drawn from 1..range
  MarkingMode marking_mode = MarkingMode::none;
  int marking_k = 2;          // k for the partition identities
  int marking_size = 4;       // |A| for pfaffian, 2n for determinant
  size_t marking_cap = 64;
};

// Unweighted family constructors; every stated face boundary is the walk
// of a real face of the natural embedding.
PlaneGraph make_grid(int rows, int cols);
PlaneGraph make_cycle(int n);
PlaneGraph make_path(int n);
PlaneGraph make_aztec_diamond(int order);
PlaneGraph make_fan(int n);
PlaneGraph make_random_outerplanar(int n, RandomSource& rng);

// A path v0..v(n-1) with pendant leaves hanging off the listed interior
// positions; grows one bipartition class, which the offset corollary needs.
PlaneGraph make_pendant_path(int n, const std::vector<int>& pendant_at);

// Reassigns edge weights: unit, or random integers drawn from 1..range.
// Fractional "p/q" weights are fully supported by the graph format and the
// verifiers; the generator default stays with small integers.
PlaneGraph apply_weights(const PlaneGraph& g, WeightMode mode, int range,
                         RandomSource& rng);

// Builds the graph and marked selections satisfying the requested
// identity's hypotheses; an empty marking list means none exist.
std::pair<PlaneGraph, std::vector<MarkedSelection>> generate(const InstanceSpec& spec);

// Random marked selections for the partition identities on an existing
// graph: interleaved a/b face selections with every A1/A2 split, filtered
// by the bipartite side constraints when the mode needs them.
std::vector<MarkedSelection> sample_partition_markings(const PlaneGraph& g,
                                                       MarkingMode mode, int k,
                                                       RandomSource& rng,
                                                       size_t cap = 64);

// Systematic search over face subsets of the given even size and all
// AK/AH splits (resp. A/B determinant roles) whose H (resp. L) has exactly
// one perfect matching.
enum class UniqueSearchMode { pfaffian, determinant };
std::vector<MarkedSelection> search_unique_matching_markings(
    const PlaneGraph& g, int even_size, UniqueSearchMode mode, size_t cap = 64,
    const EnumerationLimits& limits = {});

// M(aztec_diamond(order)) computed without enumerating the diamond itself:
// the four-vertex identity is solved for M(G), with every factor on the
// other side enumerated on a strictly smaller vertex-deleted subgraph.
Rational aztec_count_by_condensation(int order, const EnumerationLimits& limits = {});

// Face vertices in walk order without repeats (first occurrence wins).
std::vector<VertexId> face_vertices(const PlaneGraph& g);

}  // namespace gcond
