#include "gcond/superposition.hpp"

#include "gcond/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace gcond {

size_t SuperpositionDecomposition::even_path_count() const {
  size_t n = 0;
  for (const auto& p : paths)
    if (p.even_length()) ++n;
  return n;
}

std::string SuperpositionDecomposition::canonical_key() const {
  std::map<EdgeKey, int> mult;
  for (const auto& e : doubled_edges) mult[e] += 2;
  for (const auto& c : cycles)
    for (const auto& e : c) mult[e] += 1;
  for (const auto& p : paths)
    for (const auto& e : p.edges) mult[e] += 1;
  std::ostringstream out;
  for (const auto& [e, m] : mult) out << e.u << "," << e.v << "," << m << ";";
  return out.str();
}

SuperpositionDecomposition superpose(const Matching& m1, const Matching& m2,
                                     const PlaneGraph& host,
                                     const VertexSet& marked_a,
                                     const VertexSet& marked_b) {
  std::map<EdgeKey, int> mult;
  for (const auto& e : m1.edges) mult[e] += 1;
  for (const auto& e : m2.edges) mult[e] += 1;

  std::map<VertexId, std::vector<EdgeKey>> incident;   // one entry per multiplicity
  for (const auto& [e, m] : mult) {
    if (!host.has_edge(e.u, e.v))
      throw std::invalid_argument("superpose: edge " + e.u + "-" + e.v +
                                  " is not in the host graph");
    for (int i = 0; i < m; ++i) {
      incident[e.u].push_back(e);
      incident[e.v].push_back(e);
    }
  }

  for (const auto& [v, inc] : incident)
    if (inc.size() > 2)
      throw std::invalid_argument("superpose: vertex " + v +
                                  " has degree > 2; matchings are not from "
                                  "complementary deletions");

  // Degree-one vertices must be exactly the marked ones.
  VertexSet degree_one;
  for (const auto& [v, inc] : incident)
    if (inc.size() == 1) degree_one.insert(v);
  VertexSet marked_all = marked_a;
  marked_all.insert(marked_b.begin(), marked_b.end());
  if (degree_one != marked_all)
    throw std::invalid_argument(
        "superpose: degree-one vertices do not match the marked sets");
  for (const auto& v : host.vertices())
    if (!incident.count(v))
      throw std::invalid_argument("superpose: vertex " + v +
                                  " is covered by neither matching");

  SuperpositionDecomposition h;
  h.weight = m1.weight * m2.weight;

  std::map<EdgeKey, int> remaining = mult;
  auto take = [&](const EdgeKey& e) { remaining[e] -= 1; };

  // Doubled edges first: both endpoints are saturated by the pair.
  for (const auto& [e, m] : mult)
    if (m == 2) {
      h.doubled_edges.push_back(e);
      remaining[e] = 0;
    }

  // Walk the leftover simple edges: paths start at marked vertices, the
  // rest closes into cycles.
  auto walk_from = [&](const VertexId& start) {
    std::vector<EdgeKey> edges;
    VertexId cur = start;
    for (;;) {
      const EdgeKey* step = nullptr;
      for (const auto& e : incident.at(cur)) {
        if (remaining[e] <= 0) continue;
        step = &e;
        break;
      }
      if (!step) break;
      take(*step);
      edges.push_back(*step);
      cur = (step->u == cur) ? step->v : step->u;
    }
    return std::make_pair(edges, cur);
  };

  for (const auto& a : marked_a) {
    if (!degree_one.count(a)) continue;
    auto [edges, end] = walk_from(a);
    if (edges.empty())
      throw std::invalid_argument("superpose: marked vertex " + a + " is isolated");
    if (marked_a.count(end))
      throw std::invalid_argument(
          "superpose: path with both endpoints in A (" + a + ", " + end + ")");
    h.paths.push_back({a, end, std::move(edges)});
  }
  // Any degree-one vertex left unwalked would be a B-to-B path.
  for (const auto& b : marked_b) {
    bool touched = false;
    for (const auto& e : incident.at(b))
      if (remaining[e] <= 0) touched = true;
    if (!touched)
      throw std::invalid_argument("superpose: path with both endpoints in B at " + b);
  }

  for (const auto& [e0, m0] : mult) {
    if (remaining[e0] <= 0) continue;
    // Trace the cycle starting with its smallest edge.
    std::vector<EdgeKey> cyc;
    take(e0);
    cyc.push_back(e0);
    VertexId cur = e0.v;
    while (cur != e0.u) {
      const EdgeKey* step = nullptr;
      for (const auto& e : incident.at(cur)) {
        if (remaining[e] <= 0) continue;
        step = &e;
        break;
      }
      if (!step) throw IntegrityError("superpose: open walk inside a cycle region");
      take(*step);
      cyc.push_back(*step);
      cur = (step->u == cur) ? step->v : step->u;
    }
    if (cyc.size() % 2 != 0)
      throw IntegrityError("superpose: odd cycle in a union of two matchings");
    h.cycles.push_back(std::move(cyc));
  }

  h.cycle_count = h.cycles.size();
  std::sort(h.paths.begin(), h.paths.end());

  // Parity of the even-length path count follows the host's vertex parity.
  if (h.even_path_count() % 2 != host.vertex_count() % 2)
    throw IntegrityError("superpose: even-path parity disagrees with host parity");

  return h;
}

PartitionResult partition_superposition(const SuperpositionDecomposition& h,
                                        const PartitionScheme& scheme,
                                        const PlaneGraph& host) {
  for (const auto& v : scheme.a1)
    if (scheme.a2.count(v))
      throw std::invalid_argument("partition scheme: A1 and A2 overlap at " + v);

  auto weight_of = [&](const EdgeKey& e) {
    auto w = host.edge_weight(e.u, e.v);
    if (!w) throw std::invalid_argument("partition: edge not in host");
    return *w;
  };

  // Forced content of both sides: doubled edges belong to both matchings,
  // path edges alternate starting from the A endpoint, whose side is fixed
  // by its membership in A1 or A2.
  Matching base1, base2;
  PartitionResult result;
  for (const auto& e : h.doubled_edges) {
    base1.edges.push_back(e);
    base1.weight *= weight_of(e);
    base2.edges.push_back(e);
    base2.weight *= weight_of(e);
  }
  for (const auto& p : h.paths) {
    bool in_a2 = scheme.a2.count(p.a_end) > 0;
    if (!in_a2 && !scheme.a1.count(p.a_end))
      throw std::invalid_argument("partition scheme does not cover endpoint " +
                                  p.a_end);
    // Side 1 is the matching of G-A1-Y: it covers a_end iff a_end is in A2.
    bool to_side1 = in_a2;
    for (const auto& e : p.edges) {
      Matching& m = to_side1 ? base1 : base2;
      m.edges.push_back(e);
      m.weight *= weight_of(e);
      to_side1 = !to_side1;
    }
    // After the loop to_side1 describes the edge after the last one; the
    // last edge went to side1 iff !to_side1. b_end joins Y when side 1
    // does not cover it.
    bool last_in_side1 = !to_side1;
    if (!last_in_side1) result.forced_subset.insert(p.b_end);
  }

  const size_t k = h.cycle_count;
  for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
    Matching m1 = base1, m2 = base2;
    for (size_t c = 0; c < k; ++c) {
      bool to_side1 = (mask >> c) & 1;
      for (const auto& e : h.cycles[c]) {
        Matching& m = to_side1 ? m1 : m2;
        m.edges.push_back(e);
        m.weight *= weight_of(e);
        to_side1 = !to_side1;
      }
    }
    std::sort(m1.edges.begin(), m1.edges.end());
    std::sort(m2.edges.begin(), m2.edges.end());
    result.pairs.emplace_back(std::move(m1), std::move(m2));
  }
  return result;
}

}  // namespace gcond
