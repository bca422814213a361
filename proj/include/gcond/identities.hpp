#pragma once

#include "gcond/graph.hpp"
#include "gcond/matching.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gcond {

struct IdentityTerm {
  std::string label;      // which subset the term comes from
  Rational factor1;
  Rational factor2;
  Rational product;       // factor1 * factor2
};

// Both sides of one identity, evaluated exactly. pass iff lhs == rhs, and
// each side equals the sum of its term products.
struct IdentityReport {
  std::string identity_name;
  Rational lhs, rhs;
  std::vector<IdentityTerm> lhs_terms, rhs_terms;
  std::vector<std::string> notes;   // entry values and similar extras
  bool pass = false;
};

// Four marked face vertices in cyclic order:
//   M(G)M(G-{a,b,c,d}) + M(G-{a,c})M(G-{b,d})
//     = M(G-{a,b})M(G-{c,d}) + M(G-{a,d})M(G-{b,c}).
IdentityReport verify_prop_four_vertices(const PlaneGraph& g, const VertexId& a,
                                         const VertexId& b, const VertexId& c,
                                         const VertexId& d,
                                         const EnumerationLimits& limits = {});

// Even-vertex partition identity over a marked interleaving a1,b1,...,ak,bk:
// the even-W sum equals the A1/A2 split sum over Y of matching parity.
IdentityReport verify_even_partition(const PlaneGraph& g, const MarkedSelection& marked,
                                     const EnumerationLimits& limits = {},
                                     bool allow_degenerate_k = false);

// Odd-vertex analogue: odd W, and Y of parity opposite to |A1|.
IdentityReport verify_odd_partition(const PlaneGraph& g, const MarkedSelection& marked,
                                    const EnumerationLimits& limits = {},
                                    bool allow_degenerate_k = false);

// Balanced bipartite corollary: M(G)M(G-A-B) equals the |Y| = |A1| sum,
// with A inside one part and B inside the other.
IdentityReport verify_bipartite_balanced(const PlaneGraph& g,
                                         const MarkedSelection& marked,
                                         const EnumerationLimits& limits = {});

// Bipartite corollary with |U| = |V| + k and both A, B inside U:
// M(G-A)M(G-B) equals the |Y| = k - |A1| sum.
IdentityReport verify_bipartite_offset(const PlaneGraph& g,
                                       const MarkedSelection& marked,
                                       const EnumerationLimits& limits = {});

// Pfaffian identity: with H = G - AK uniquely matchable, M(G - AH) equals
// the Pfaffian of the M(H_ij) array.
IdentityReport verify_pfaffian_identity(const PlaneGraph& g,
                                        const MarkedSelection& marked,
                                        const EnumerationLimits& limits = {});

// Bipartite determinant identity over the order a1..an,bn..b1: with
// L = G-(A cap U)-(B cap V) uniquely matchable, M(K) = det[M(L_ij)].
IdentityReport verify_determinant_identity(const PlaneGraph& g,
                                           const MarkedSelection& marked,
                                           const EnumerationLimits& limits = {});

std::string render_table(const IdentityReport& report);
std::string render_structured(const IdentityReport& report);

// Two-coloring helper shared by the bipartite verifiers and generators.
struct Bipartition {
  VertexSet u, v;
};

// Finds a bipartition with must_u inside U, must_v inside V and, when
// given, |U| - |V| == imbalance. Disconnected graphs are handled by
// choosing each component's orientation. nullopt when impossible.
std::optional<Bipartition> find_bipartition(const PlaneGraph& g,
                                            const VertexSet& must_u = {},
                                            const VertexSet& must_v = {},
                                            std::optional<long> imbalance = std::nullopt);

}  // namespace gcond
