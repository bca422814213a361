#include "gcond/generators.hpp"

#include "gcond/errors.hpp"
#include "gcond/identities.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace gcond {

namespace {

std::string cell_id(int r, int c) {
  return "r" + std::to_string(r) + "c" + std::to_string(c);
}

std::string v_id(int i) { return "v" + std::to_string(i); }

PlaneGraph from_parts(std::vector<VertexId> vs,
                      std::vector<std::pair<VertexId, VertexId>> es,
                      std::vector<VertexId> face) {
  std::vector<WeightedEdge> edges;
  for (auto& [a, b] : es) edges.push_back({EdgeKey(a, b), Rational(1)});
  return PlaneGraph(std::move(vs), std::move(edges), std::move(face));
}

using Cell = std::pair<int, int>;

// Clockwise outer-face walk of a set of orthogonally adjacent cells:
// leave each vertex through the first existing direction clockwise after
// the reversed arrival direction.
std::vector<Cell> outer_face_walk(const std::set<Cell>& cells) {
  if (cells.size() == 1) return {*cells.begin()};
  static constexpr int kDr[] = {0, 1, 0, -1};   // E, S, W, N (clockwise)
  static constexpr int kDc[] = {1, 0, -1, 0};
  auto exists = [&](const Cell& p, int dir) {
    return cells.count({p.first + kDr[dir], p.second + kDc[dir]}) > 0;
  };
  Cell start = *cells.begin();   // topmost, then leftmost
  int dir0 = exists(start, 0) ? 0 : 1;

  std::vector<Cell> walk;
  Cell cur = start;
  int dir = dir0;
  do {
    walk.push_back(cur);
    cur = {cur.first + kDr[dir], cur.second + kDc[dir]};
    int rev = (dir + 2) % 4;
    dir = (rev + 1) % 4;
    while (!exists(cur, dir)) dir = (dir + 1) % 4;
  } while (!(cur == start && dir == dir0));
  return walk;
}

PlaneGraph from_cells(const std::set<Cell>& cells) {
  std::vector<VertexId> vs;
  std::vector<std::pair<VertexId, VertexId>> es;
  for (const auto& [r, c] : cells) {
    vs.push_back(cell_id(r, c));
    if (cells.count({r, c + 1})) es.push_back({cell_id(r, c), cell_id(r, c + 1)});
    if (cells.count({r + 1, c})) es.push_back({cell_id(r, c), cell_id(r + 1, c)});
  }
  std::vector<VertexId> face;
  for (const auto& [r, c] : outer_face_walk(cells)) face.push_back(cell_id(r, c));
  return from_parts(std::move(vs), std::move(es), std::move(face));
}

}  // namespace

PlaneGraph make_grid(int rows, int cols) {
  if (rows < 2 || cols < 2)
    throw std::invalid_argument("grid needs rows, cols >= 2 (use path for 1xn)");
  std::set<Cell> cells;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) cells.insert({r, c});
  return from_cells(cells);
}

PlaneGraph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<VertexId> vs;
  std::vector<std::pair<VertexId, VertexId>> es;
  std::vector<VertexId> face;
  for (int i = 0; i < n; ++i) {
    vs.push_back(v_id(i));
    face.push_back(v_id(i));
    es.push_back({v_id(i), v_id((i + 1) % n)});
  }
  return from_parts(std::move(vs), std::move(es), std::move(face));
}

PlaneGraph make_path(int n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  std::vector<VertexId> vs;
  std::vector<std::pair<VertexId, VertexId>> es;
  for (int i = 0; i < n; ++i) {
    vs.push_back(v_id(i));
    if (i + 1 < n) es.push_back({v_id(i), v_id(i + 1)});
  }
  // Outer walk goes down the path and back through the interior vertices.
  std::vector<VertexId> face;
  for (int i = 0; i < n; ++i) face.push_back(v_id(i));
  for (int i = n - 2; i >= 1; --i) face.push_back(v_id(i));
  return from_parts(std::move(vs), std::move(es), std::move(face));
}

PlaneGraph make_aztec_diamond(int order) {
  if (order < 1) throw std::invalid_argument("aztec diamond needs order >= 1");
  std::set<Cell> cells;
  for (int r = 1; r <= 2 * order; ++r) {
    int m = std::min(r, 2 * order + 1 - r);
    for (int c = order - m + 1; c <= order + m; ++c) cells.insert({r, c});
  }
  return from_cells(cells);
}

PlaneGraph make_fan(int n) {
  if (n < 4) throw std::invalid_argument("fan needs n >= 4 vertices");
  std::vector<VertexId> vs{"h"};
  std::vector<std::pair<VertexId, VertexId>> es;
  std::vector<VertexId> face{"h"};
  for (int i = 1; i < n; ++i) {
    vs.push_back(v_id(i));
    face.push_back(v_id(i));
    es.push_back({"h", v_id(i)});
    if (i > 1) es.push_back({v_id(i - 1), v_id(i)});
  }
  return from_parts(std::move(vs), std::move(es), std::move(face));
}

PlaneGraph make_pendant_path(int n, const std::vector<int>& pendant_at) {
  if (n < 3) throw std::invalid_argument("pendant path needs n >= 3");
  std::vector<VertexId> vs;
  std::vector<std::pair<VertexId, VertexId>> es;
  for (int i = 0; i < n; ++i) {
    vs.push_back(v_id(i));
    if (i + 1 < n) es.push_back({v_id(i), v_id(i + 1)});
  }
  std::set<int> pendants;
  for (int p : pendant_at) {
    if (p < 1 || p > n - 2)
      throw std::invalid_argument("pendants attach to interior positions only");
    if (!pendants.insert(p).second)
      throw std::invalid_argument("duplicate pendant position");
    vs.push_back("p" + std::to_string(p));
    es.push_back({v_id(p), "p" + std::to_string(p)});
  }
  // Boundary walk: along the path, then back with a detour around each
  // pendant (the attachment vertex repeats).
  std::vector<VertexId> face;
  for (int i = 0; i < n; ++i) face.push_back(v_id(i));
  for (int i = n - 2; i >= 1; --i) {
    face.push_back(v_id(i));
    if (pendants.count(i)) {
      face.push_back("p" + std::to_string(i));
      face.push_back(v_id(i));
    }
  }
  return from_parts(std::move(vs), std::move(es), std::move(face));
}

PlaneGraph make_random_outerplanar(int n, RandomSource& rng) {
  if (n < 3) throw std::invalid_argument("outerplanar family needs n >= 3");
  std::vector<VertexId> vs;
  std::vector<std::pair<VertexId, VertexId>> es;
  std::vector<VertexId> face;
  for (int i = 0; i < n; ++i) {
    vs.push_back(v_id(i));
    face.push_back(v_id(i));
    es.push_back({v_id(i), v_id((i + 1) % n)});
  }
  // Chords of a random fan-style triangulation, each kept half the time.
  std::function<void(int, int)> triangulate = [&](int lo, int hi) {
    if (hi - lo < 2) return;
    int apex = lo + 1 + static_cast<int>(rng.below(hi - lo - 1));
    if (apex - lo > 1 && rng.below(2) == 0) es.push_back({v_id(lo), v_id(apex)});
    if (hi - apex > 1 && rng.below(2) == 0) es.push_back({v_id(apex), v_id(hi)});
    triangulate(lo, apex);
    triangulate(apex, hi);
  };
  triangulate(0, n - 1);
  return from_parts(std::move(vs), std::move(es), std::move(face));
}

PlaneGraph apply_weights(const PlaneGraph& g, WeightMode mode, int range,
                         RandomSource& rng) {
  if (mode == WeightMode::unit) return g;
  if (range < 1) throw std::invalid_argument("weight range must be >= 1");
  std::vector<WeightedEdge> edges;
  for (const auto& e : g.edges())
    edges.push_back({e.key, Rational(BigInt(1 + rng.below(range)))});
  return PlaneGraph(g.vertices(), std::move(edges), g.face_boundary());
}

std::vector<VertexId> face_vertices(const PlaneGraph& g) {
  std::vector<VertexId> out;
  VertexSet seen;
  for (const auto& v : g.face_boundary())
    if (seen.insert(v).second) out.push_back(v);
  return out;
}

namespace {

// Distinct face vertices sampled at random, returned in face order with a
// random rotation applied.
std::vector<VertexId> sample_face_selection(const std::vector<VertexId>& face,
                                            size_t count, RandomSource& rng) {
  std::vector<size_t> positions(face.size());
  for (size_t i = 0; i < positions.size(); ++i) positions[i] = i;
  rng.shuffle(positions);
  positions.resize(count);
  std::sort(positions.begin(), positions.end());
  size_t rot = rng.below(count);
  std::vector<VertexId> out;
  for (size_t i = 0; i < count; ++i)
    out.push_back(face[positions[(i + rot) % count]]);
  return out;
}

// All subsets of the face-vertex list of the given size, in face order.
void for_each_face_subset(const std::vector<VertexId>& face, size_t size,
                          const std::function<bool(const std::vector<VertexId>&)>& fn) {
  std::vector<size_t> pick;
  std::function<bool(size_t)> rec = [&](size_t from) {
    if (pick.size() == size) {
      std::vector<VertexId> subset;
      for (size_t p : pick) subset.push_back(face[p]);
      return fn(subset);
    }
    for (size_t p = from; p + (size - pick.size()) <= face.size(); ++p) {
      pick.push_back(p);
      bool go_on = rec(p + 1);
      pick.pop_back();
      if (!go_on) return false;
    }
    return true;
  };
  rec(0);
}

}  // namespace

std::vector<MarkedSelection> sample_partition_markings(const PlaneGraph& g,
                                                       MarkingMode mode, int k_in,
                                                       RandomSource& rng,
                                                       size_t cap) {
  std::vector<MarkedSelection> out;
  if (k_in < 1) throw std::invalid_argument("k must be positive");
  const size_t k = static_cast<size_t>(k_in);
  auto face = face_vertices(g);
  if (face.size() < 2 * k) return out;

  const size_t want_bases = std::max<size_t>(1, cap >> k);
  for (size_t attempt = 0; attempt < 8 * want_bases && out.size() < cap; ++attempt) {
    auto sel = sample_face_selection(face, 2 * k, rng);
    MarkedSelection base;
    for (size_t i = 0; i < k; ++i) {
      base.a.push_back(sel[2 * i]);
      base.b.push_back(sel[2 * i + 1]);
    }
    if (mode == MarkingMode::bipartite_balanced) {
      VertexSet a_set(base.a.begin(), base.a.end());
      VertexSet b_set(base.b.begin(), base.b.end());
      if (!find_bipartition(g, a_set, b_set, 0)) continue;
    }
    if (mode == MarkingMode::bipartite_offset) {
      VertexSet ab(base.a.begin(), base.a.end());
      ab.insert(base.b.begin(), base.b.end());
      if (!find_bipartition(g, ab, {}, static_cast<long>(k))) continue;
    }
    for (size_t mask = 0; mask < (size_t{1} << k) && out.size() < cap; ++mask) {
      MarkedSelection m = base;
      for (size_t i = 0; i < k; ++i)
        ((mask >> i) & 1 ? m.a1 : m.a2).insert(base.a[i]);
      out.push_back(std::move(m));
    }
  }
  return out;
}

std::vector<MarkedSelection> search_unique_matching_markings(
    const PlaneGraph& g, int even_size, UniqueSearchMode mode, size_t cap,
    const EnumerationLimits& limits) {
  if (even_size < 2 || even_size % 2 != 0)
    throw std::invalid_argument("marking size must be even and positive");
  std::vector<MarkedSelection> out;
  auto face = face_vertices(g);
  if (face.size() < static_cast<size_t>(even_size)) return out;

  if (mode == UniqueSearchMode::pfaffian) {
    for_each_face_subset(face, even_size, [&](const std::vector<VertexId>& a) {
      for (size_t mask = 0; mask < (size_t{1} << even_size); ++mask) {
        MarkedSelection m;
        m.a = a;
        VertexSet ak, ah;
        for (int i = 0; i < even_size; ++i)
          ((mask >> i) & 1 ? ah : ak).insert(a[i]);
        PlaneGraph h = delete_vertices(g, ak);
        if (!has_unique_matching(h, limits)) continue;
        m.ak = std::move(ak);
        m.ah = std::move(ah);
        out.push_back(std::move(m));
        if (out.size() >= cap) return false;
      }
      return true;
    });
    return out;
  }

  // Determinant roles: first half of the face selection is a_1..a_n, the
  // rest is b_n..b_1; L follows from the canonical bipartition.
  auto bip = find_bipartition(g);
  if (!bip) return out;
  const int half = even_size / 2;
  for_each_face_subset(face, even_size, [&](const std::vector<VertexId>& sel) {
    MarkedSelection m;
    for (int i = 0; i < half; ++i) m.a.push_back(sel[i]);
    for (int j = even_size - 1; j >= half; --j) m.b.push_back(sel[j]);
    VertexSet l_gone;
    for (const auto& v : m.a)
      if (bip->u.count(v)) l_gone.insert(v);
    for (const auto& v : m.b)
      if (bip->v.count(v)) l_gone.insert(v);
    PlaneGraph l = delete_vertices(g, l_gone);
    if (!has_unique_matching(l, limits)) return true;
    out.push_back(std::move(m));
    return out.size() < cap;
  });
  return out;
}

std::pair<PlaneGraph, std::vector<MarkedSelection>> generate(const InstanceSpec& spec) {
  RandomSource rng(spec.seed);
  PlaneGraph g;
  switch (spec.family) {
    case Family::grid: g = make_grid(spec.rows, spec.cols); break;
    case Family::cycle: g = make_cycle(spec.n); break;
    case Family::path: g = make_path(spec.n); break;
    case Family::ladder: g = make_grid(2, spec.n); break;
    case Family::aztec_diamond: g = make_aztec_diamond(spec.order); break;
    case Family::fan: g = make_fan(spec.n); break;
    case Family::random_outerplanar: g = make_random_outerplanar(spec.n, rng); break;
  }
  g = apply_weights(g, spec.weight_mode, spec.weight_range, rng);

  std::vector<MarkedSelection> markings;
  switch (spec.marking_mode) {
    case MarkingMode::none:
      break;
    case MarkingMode::even_partition:
    case MarkingMode::odd_partition:
    case MarkingMode::bipartite_balanced:
    case MarkingMode::bipartite_offset:
      markings = sample_partition_markings(g, spec.marking_mode, spec.marking_k,
                                           rng, spec.marking_cap);
      break;
    case MarkingMode::pfaffian:
      markings = search_unique_matching_markings(g, spec.marking_size,
                                                 UniqueSearchMode::pfaffian,
                                                 spec.marking_cap);
      break;
    case MarkingMode::determinant:
      markings = search_unique_matching_markings(g, spec.marking_size,
                                                 UniqueSearchMode::determinant,
                                                 spec.marking_cap);
      break;
  }
  for (const auto& m : markings) {
    std::vector<VertexId> seq;
    if (spec.marking_mode == MarkingMode::pfaffian) {
      seq = m.a;
    } else if (spec.marking_mode == MarkingMode::determinant) {
      seq = m.a;
      for (size_t j = m.b.size(); j-- > 0;) seq.push_back(m.b[j]);
    } else {
      for (size_t i = 0; i < m.a.size(); ++i) {
        seq.push_back(m.a[i]);
        seq.push_back(m.b[i]);
      }
    }
    if (!validate_cyclic_order(g, seq))
      throw IntegrityError("generated marking is not in cyclic face order");
  }
  return {std::move(g), std::move(markings)};
}

Rational aztec_count_by_condensation(int order, const EnumerationLimits& limits) {
  if (order < 0) throw std::invalid_argument("order must be >= 0");
  if (order == 0) return Rational(1);
  PlaneGraph g = make_aztec_diamond(order);
  auto face = face_vertices(g);

  // Slide a window of four cyclically consecutive face vertices until the
  // all-four deletion has matchings, then solve the four-vertex identity
  // for M(G). Every factor is enumerated on a smaller graph.
  for (size_t start = 0; start < face.size(); ++start) {
    const VertexId& a = face[start];
    const VertexId& b = face[(start + 1) % face.size()];
    const VertexId& c = face[(start + 2) % face.size()];
    const VertexId& d = face[(start + 3) % face.size()];
    Rational all4 = count_matchings(delete_vertices(g, {a, b, c, d}), limits);
    if (all4 == 0) continue;
    auto m2 = [&](const VertexId& x, const VertexId& y) {
      return count_matchings(delete_vertices(g, {x, y}), limits);
    };
    Rational numerator = m2(a, b) * m2(c, d) + m2(a, d) * m2(b, c) - m2(a, c) * m2(b, d);
    return numerator / all4;
  }
  throw IntegrityError("no usable four-vertex window on the aztec diamond face");
}

}  // namespace gcond
