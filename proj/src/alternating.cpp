#include "gcond/alternating.hpp"

#include "gcond/errors.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <stdexcept>

namespace gcond {

std::vector<VertexId> AlternatingPath::vertex_sequence() const {
  std::vector<VertexId> seq{from};
  VertexId cur = from;
  for (const auto& e : edges) {
    cur = (e.u == cur) ? e.v : e.u;
    seq.push_back(cur);
  }
  return seq;
}

bool AlternatingPath::shares_vertex_with(const AlternatingPath& other) const {
  auto mine = vertex_sequence();
  auto theirs = other.vertex_sequence();
  std::set<VertexId> seen(mine.begin(), mine.end());
  for (const auto& v : theirs)
    if (seen.count(v)) return true;
  return false;
}

AlternatingPath AlternatingPath::reversed() const {
  AlternatingPath r;
  r.from = to;
  r.to = from;
  r.edges.assign(edges.rbegin(), edges.rend());
  r.in_matching.assign(in_matching.rbegin(), in_matching.rend());
  return r;
}

namespace {

struct MatchingView {
  std::map<VertexId, VertexId> partner;
  std::set<EdgeKey> edges;

  explicit MatchingView(const Matching& m) {
    for (const auto& e : m.edges) {
      edges.insert(e);
      if (partner.count(e.u) || partner.count(e.v))
        throw std::invalid_argument("reference matching covers a vertex twice");
      partner[e.u] = e.v;
      partner[e.v] = e.u;
    }
  }

  bool covers(const VertexId& v) const { return partner.count(v) > 0; }
  bool contains(const EdgeKey& e) const { return edges.count(e) > 0; }
};

void check_matching_in_graph(const PlaneGraph& g, const Matching& mh) {
  for (const auto& e : mh.edges)
    if (!g.has_edge(e.u, e.v))
      throw std::invalid_argument("reference matching edge " + e.u + "-" + e.v +
                                  " is not in the graph");
}

// The matching must be the unique perfect matching of the subgraph induced
// by its covered vertices.
void check_unique_reference(const PlaneGraph& g, const Matching& mh,
                            const EnumerationLimits& limits) {
  VertexSet covered = mh.covered();
  VertexSet gone;
  for (const auto& v : g.vertices())
    if (!covered.count(v)) gone.insert(v);
  PlaneGraph host = delete_vertices(g, gone);
  if (!is_perfect_matching(host, mh))
    throw std::invalid_argument("reference matching is not a perfect matching "
                                "of its induced host");
  if (!has_unique_matching(host, limits))
    throw HypothesisError("reference matching is not unique in its host");
}

std::vector<AlternatingPath> enumerate_paths_core(const PlaneGraph& g,
                                                  const MatchingView& mh,
                                                  const VertexId& a,
                                                  const VertexId& b) {
  if (a == b) throw std::invalid_argument("path endpoints must differ");
  if (!g.has_vertex(a) || !g.has_vertex(b))
    throw std::invalid_argument("path endpoint is not a vertex of the graph");

  std::vector<AlternatingPath> out;
  std::set<VertexId> visited{a};
  std::vector<EdgeKey> edges;
  std::vector<char> flags;

  std::function<void(const VertexId&, bool)> extend = [&](const VertexId& cur,
                                                          bool need_matching) {
    if (need_matching) {
      auto it = mh.partner.find(cur);
      if (it == mh.partner.end()) return;
      const VertexId& w = it->second;
      EdgeKey e(cur, w);
      if (w == b) {
        if (mh.covers(b)) {   // arriving on the matching edge is the rule here
          edges.push_back(e);
          flags.push_back(1);
          out.push_back({a, b, edges, flags});
          edges.pop_back();
          flags.pop_back();
        }
        return;
      }
      if (visited.count(w)) return;
      visited.insert(w);
      edges.push_back(e);
      flags.push_back(1);
      extend(w, false);
      edges.pop_back();
      flags.pop_back();
      visited.erase(w);
      return;
    }
    for (const auto& w : g.neighbors(cur)) {
      EdgeKey e(cur, w);
      if (mh.contains(e)) continue;
      if (w == b) {
        if (!mh.covers(b)) {
          edges.push_back(e);
          flags.push_back(0);
          out.push_back({a, b, edges, flags});
          edges.pop_back();
          flags.pop_back();
        }
        continue;
      }
      if (visited.count(w)) continue;
      visited.insert(w);
      edges.push_back(e);
      flags.push_back(0);
      extend(w, true);
      edges.pop_back();
      flags.pop_back();
      visited.erase(w);
    }
  };

  extend(a, mh.covers(a));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool is_alternating_path(const PlaneGraph& g, const Matching& mh,
                         const AlternatingPath& p) {
  if (p.from == p.to || p.edges.empty()) return false;
  if (p.edges.size() != p.in_matching.size()) return false;
  MatchingView view(mh);
  VertexId cur = p.from;
  std::set<VertexId> seen{cur};
  for (size_t t = 0; t < p.edges.size(); ++t) {
    const EdgeKey& e = p.edges[t];
    if (!g.has_edge(e.u, e.v)) return false;
    if (e.u != cur && e.v != cur) return false;
    bool flag = p.in_matching[t] != 0;
    if (flag != view.contains(e)) return false;
    if (t > 0 && (p.in_matching[t - 1] != 0) == flag) return false;
    cur = (e.u == cur) ? e.v : e.u;
    if (!seen.insert(cur).second) return false;
  }
  if (cur != p.to) return false;
  if ((p.in_matching.front() != 0) != view.covers(p.from)) return false;
  if ((p.in_matching.back() != 0) != view.covers(p.to)) return false;
  return true;
}

std::vector<AlternatingPath> enumerate_alternating_paths(
    const PlaneGraph& g, const Matching& mh, const VertexId& a, const VertexId& b,
    const EnumerationLimits& limits) {
  check_matching_in_graph(g, mh);
  MatchingView view(mh);
  check_unique_reference(g, mh, limits);
  return enumerate_paths_core(g, view, a, b);
}

bool PathNest::intersecting() const {
  for (size_t x = 0; x < paths.size(); ++x)
    for (size_t y = x + 1; y < paths.size(); ++y)
      if (paths[x].shares_vertex_with(paths[y])) return true;
  return false;
}

int PathNest::sign() const { return crossing_number(pairing) % 2 == 0 ? 1 : -1; }

NestCensus enumerate_nests(const PlaneGraph& g, const Matching& mh,
                           const std::vector<VertexId>& marked,
                           const EnumerationLimits& limits) {
  const size_t n = marked.size();
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("nest enumeration needs an even number of "
                                "marked vertices");
  {
    VertexSet distinct(marked.begin(), marked.end());
    if (distinct.size() != n)
      throw std::invalid_argument("marked vertices must be distinct");
    for (const auto& v : marked)
      if (!g.has_vertex(v))
        throw std::invalid_argument("marked vertex " + v + " is not in the graph");
    VertexSet covered = mh.covered();
    for (const auto& v : g.vertices())
      if (!covered.count(v) && !distinct.count(v))
        throw std::invalid_argument("vertex " + v +
                                    " is neither matched nor marked");
  }
  check_matching_in_graph(g, mh);
  MatchingView view(mh);
  check_unique_reference(g, mh, limits);

  // Path lists per marked index pair.
  std::map<std::pair<int, int>, std::vector<AlternatingPath>> pool;
  for (int i = 0; i < static_cast<int>(n); ++i)
    for (int j = i + 1; j < static_cast<int>(n); ++j)
      pool[{i, j}] = enumerate_paths_core(g, view, marked[i], marked[j]);

  NestCensus census;
  for (const auto& f : enumerate_one_factors(static_cast<int>(n))) {
    std::vector<const std::vector<AlternatingPath>*> lists;
    bool empty = false;
    for (auto pr : f.pairs) {
      lists.push_back(&pool.at(pr));
      if (lists.back()->empty()) empty = true;
    }
    if (empty) continue;
    std::vector<size_t> choice(lists.size(), 0);
    for (;;) {
      PathNest nest;
      nest.pairing = f;
      for (size_t t = 0; t < lists.size(); ++t)
        nest.paths.push_back((*lists[t])[choice[t]]);
      if (nest.intersecting())
        census.intersecting.push_back(std::move(nest));
      else
        census.non_intersecting.push_back(std::move(nest));
      size_t t = 0;
      while (t < choice.size() && ++choice[t] == lists[t]->size()) {
        choice[t] = 0;
        ++t;
      }
      if (t == choice.size()) break;
    }
  }
  return census;
}

namespace {

int index_of(const std::vector<VertexId>& order, const VertexId& v) {
  auto it = std::find(order.begin(), order.end(), v);
  if (it == order.end())
    throw std::invalid_argument("endpoint " + v + " is not a marked vertex");
  return static_cast<int>(it - order.begin());
}

struct ColoredUnion {
  std::map<EdgeKey, int> q;          // multiplicities, purple = 2
  std::map<EdgeKey, char> color;     // 'r', 'b', 'p'
  std::map<VertexId, std::vector<EdgeKey>> adj;
  std::array<VertexId, 4> ends;      // p1.from, p1.to, p2.from, p2.to
};

ColoredUnion build_union(const AlternatingPath& p1, const AlternatingPath& p2,
                         const MatchingView& mh) {
  ColoredUnion u;
  u.ends = {p1.from, p1.to, p2.from, p2.to};
  for (const auto& e : p1.edges) {
    u.q[e] += 1;
    u.color[e] = 'r';
  }
  for (const auto& e : p2.edges) {
    u.q[e] += 1;
    auto it = u.color.find(e);
    u.color[e] = (it == u.color.end()) ? 'b' : 'p';
  }
  for (const auto& [e, c] : u.color) {
    u.adj[e.u].push_back(e);
    u.adj[e.v].push_back(e);
  }

  // Structural checks from the union lemma, extended to paths running
  // through another path's endpoint: a marked endpoint has degree one, or
  // degree two when the other path passes through it on the shared
  // matching edge. Every other vertex has two same-colored edges or is a
  // three-way junction whose shared edge is the matching edge.
  std::set<VertexId> endpoints(u.ends.begin(), u.ends.end());
  if (endpoints.size() != 4)
    throw std::invalid_argument("crossing resolution needs four distinct endpoints");
  for (const auto& [v, inc] : u.adj) {
    if (endpoints.count(v)) {
      if (inc.size() == 1) continue;
      if (inc.size() == 2) {
        int purples = 0;
        const EdgeKey* purple = nullptr;
        for (const auto& e : inc)
          if (u.color.at(e) == 'p') {
            ++purples;
            purple = &e;
          }
        if (purples == 1 && mh.contains(*purple) && mh.covers(v)) continue;
      }
      throw IntegrityError("marked endpoint " + v +
                           " has an unresolvable union structure");
    }
    if (inc.size() == 2) {
      if (u.color.at(inc[0]) != u.color.at(inc[1]))
        throw IntegrityError("degree-two vertex " + v + " mixes section colors");
    } else if (inc.size() == 3) {
      int reds = 0, blues = 0, purples = 0;
      const EdgeKey* purple = nullptr;
      for (const auto& e : inc) {
        char c = u.color.at(e);
        if (c == 'r') ++reds;
        if (c == 'b') ++blues;
        if (c == 'p') {
          ++purples;
          purple = &e;
        }
      }
      if (reds != 1 || blues != 1 || purples != 1 || !mh.contains(*purple))
        throw IntegrityError("junction at " + v + " is not red-blue-purple with "
                             "the matching edge shared");
    } else {
      throw IntegrityError("vertex " + v + " has degree " +
                           std::to_string(inc.size()) + " in the path union");
    }
  }
  return u;
}

// Connected components of the union minus purple edges, as vertex -> comp.
std::map<VertexId, int> red_blue_components(const ColoredUnion& u) {
  std::map<VertexId, int> comp;
  int next = 0;
  for (const auto& [v0, _] : u.adj) {
    if (comp.count(v0)) continue;
    bool has_colored = false;
    for (const auto& e : u.adj.at(v0))
      if (u.color.at(e) != 'p') has_colored = true;
    if (!has_colored) continue;   // vertex only on purple sections
    std::vector<VertexId> stack{v0};
    comp[v0] = next;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (const auto& e : u.adj.at(v)) {
        if (u.color.at(e) == 'p') continue;
        VertexId w = (e.u == v) ? e.v : e.u;
        if (!comp.count(w)) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

// Follows edges whose (possibly swapped) color is `primary` or purple,
// beginning with the given first edge; returns the edge sequence.
std::vector<EdgeKey> trace(const ColoredUnion& u,
                           const std::map<EdgeKey, char>& colors,
                           const VertexId& start, const EdgeKey& first,
                           char primary) {
  std::vector<EdgeKey> walk{first};
  std::set<EdgeKey> used{first};
  VertexId cur = (first.u == start) ? first.v : first.u;
  for (;;) {
    const EdgeKey* next = nullptr;
    int options = 0;
    for (const auto& e : u.adj.at(cur)) {
      char c = colors.at(e);
      if (c != primary && c != 'p') continue;
      if (used.count(e)) continue;
      ++options;
      next = &e;
    }
    if (options == 0) break;
    if (options > 1)
      throw IntegrityError("ambiguous continuation at " + cur +
                           " while re-partitioning the union");
    used.insert(*next);
    walk.push_back(*next);
    cur = (next->u == cur) ? next->v : next->u;
  }
  return walk;
}

// The output path leaving a marked endpoint starts with the matching edge
// when the matching covers it, and with its only union edge otherwise.
EdgeKey start_edge_at(const ColoredUnion& u, const MatchingView& mh,
                      const VertexId& v) {
  const auto& inc = u.adj.at(v);
  if (mh.covers(v)) {
    for (const auto& e : inc)
      if (mh.contains(e)) return e;
    throw IntegrityError("covered endpoint " + v + " lost its matching edge");
  }
  if (inc.size() != 1)
    throw IntegrityError("uncovered endpoint " + v + " is not a union leaf");
  return inc[0];
}

AlternatingPath path_from_edges(const VertexId& from,
                                const std::vector<EdgeKey>& edges,
                                const MatchingView& mh) {
  AlternatingPath p;
  p.from = from;
  VertexId cur = from;
  for (const auto& e : edges) {
    p.edges.push_back(e);
    p.in_matching.push_back(mh.contains(e) ? 1 : 0);
    cur = (e.u == cur) ? e.v : e.u;
  }
  p.to = cur;
  return p;
}

}  // namespace

CrossingResolution resolve_crossing(const AlternatingPath& p1,
                                    const AlternatingPath& p2, const Matching& mh,
                                    const PlaneGraph& g,
                                    const std::vector<VertexId>& marked_order) {
  if (!p1.shares_vertex_with(p2))
    throw std::invalid_argument("paths do not intersect");
  MatchingView view(mh);
  if (!is_alternating_path(g, mh, p1) || !is_alternating_path(g, mh, p2))
    throw std::invalid_argument("inputs are not alternating paths");

  ColoredUnion u = build_union(p1, p2, view);
  auto comp = red_blue_components(u);

  // Group the four endpoints by their red-blue component.
  std::map<int, std::vector<VertexId>> groups;
  for (const auto& v : u.ends) {
    auto it = comp.find(v);
    if (it == comp.end())
      throw IntegrityError("no red-blue path reaches endpoint " + v);
    groups[it->second].push_back(v);
  }
  if (groups.size() != 2)
    throw IntegrityError("red-blue paths do not pair the four endpoints");
  for (const auto& [c, vs] : groups) {
    if (vs.size() != 2)
      throw IntegrityError("red-blue component holds " + std::to_string(vs.size()) +
                           " endpoints");
    bool both_p1 = (vs[0] == p1.from || vs[0] == p1.to) &&
                   (vs[1] == p1.from || vs[1] == p1.to);
    bool both_p2 = (vs[0] == p2.from || vs[0] == p2.to) &&
                   (vs[1] == p2.from || vs[1] == p2.to);
    if (both_p1 || both_p2)
      throw IntegrityError("red-blue path joins endpoints of a single input "
                           "path; the reference matching cannot be unique");
  }

  VertexId lowest = u.ends[0];
  for (const auto& v : u.ends)
    if (index_of(marked_order, v) < index_of(marked_order, lowest)) lowest = v;

  int keep_comp = comp.at(lowest);
  int swap_comp = -1;
  for (const auto& [c, vs] : groups)
    if (c != keep_comp) swap_comp = c;
  if (swap_comp < 0)
    throw IntegrityError("both red-blue paths share a component");

  // Swap red and blue along the other red-blue path only; any further
  // components keep their colors.
  std::map<EdgeKey, char> swapped = u.color;
  for (auto& [e, c] : swapped) {
    if (c == 'p') continue;
    if (comp.at(e.u) == swap_comp) c = (c == 'r') ? 'b' : 'r';
  }

  // First output: from the lowest endpoint, along its own color class plus
  // purple. When the start edge itself is purple (the partner path runs
  // through this endpoint), the class is the opposite of the other
  // incident edge's color, which belongs to the partner's output.
  EdgeKey first1 = start_edge_at(u, view, lowest);
  char primary = swapped.at(first1);
  if (primary == 'p') {
    char other_color = 0;
    for (const auto& e : u.adj.at(lowest))
      if (!(e == first1)) other_color = swapped.at(e);
    if (other_color != 'r' && other_color != 'b')
      throw IntegrityError("cannot infer the color class at " + lowest);
    primary = (other_color == 'r') ? 'b' : 'r';
  }

  std::vector<EdgeKey> walk1 = trace(u, swapped, lowest, first1, primary);
  AlternatingPath out1 = path_from_edges(lowest, walk1, view);
  if (out1.to == out1.from)
    throw IntegrityError("re-partitioned walk closed on its start");

  // The second output joins the two endpoints the first one missed.
  std::vector<VertexId> rest;
  for (const auto& v : u.ends)
    if (v != out1.from && v != out1.to) rest.push_back(v);
  if (rest.size() != 2)
    throw IntegrityError("first re-partitioned path does not end at a marked "
                         "endpoint");
  if (index_of(marked_order, rest[1]) < index_of(marked_order, rest[0]))
    std::swap(rest[0], rest[1]);
  char other = (primary == 'r') ? 'b' : 'r';
  EdgeKey first2 = start_edge_at(u, view, rest[0]);
  if (swapped.at(first2) != 'p' && swapped.at(first2) != other)
    throw IntegrityError("second re-partitioned path starts in the wrong "
                         "color class");
  std::vector<EdgeKey> walk2 = trace(u, swapped, rest[0], first2, other);
  AlternatingPath out2 = path_from_edges(rest[0], walk2, view);
  if (out2.to != rest[1])
    throw IntegrityError("second re-partitioned path ends at " + out2.to +
                         " instead of " + rest[1]);

  // The two walks must cover Q exactly (purple twice), or an alternating
  // cycle was left behind, contradicting uniqueness of the matching.
  std::map<EdgeKey, int> used;
  for (const auto& e : walk1) used[e] += 1;
  for (const auto& e : walk2) used[e] += 1;
  if (used != u.q)
    throw IntegrityError("re-partition left an alternating cycle in the union");

  if (!is_alternating_path(g, mh, out1) || !is_alternating_path(g, mh, out2))
    throw IntegrityError("re-partitioned walks are not alternating paths");

  // Output pairing must differ from both the input pairing and the
  // red-blue pairing.
  auto pair_key = [&](const VertexId& x, const VertexId& y) {
    int a = index_of(marked_order, x), b = index_of(marked_order, y);
    return std::make_pair(std::min(a, b), std::max(a, b));
  };
  auto out_pair = pair_key(out1.from, out1.to);
  if (out_pair == pair_key(p1.from, p1.to) || out_pair == pair_key(p2.from, p2.to))
    throw IntegrityError("re-partition reproduced the input pairing");
  for (const auto& [c, vs] : groups)
    if (out_pair == pair_key(vs[0], vs[1]))
      throw IntegrityError("re-partition produced the forbidden red-blue pairing");

  CrossingResolution res;
  res.inputs = {p1, p2};
  res.union_multiset = u.q;
  res.coloring = u.color;
  res.outputs = {std::move(out1), std::move(out2)};
  return res;
}

std::vector<size_t> cancelling_involution(const std::vector<PathNest>& intersecting,
                                          const Matching& mh, const PlaneGraph& g,
                                          const std::vector<VertexId>& marked_order) {
  std::map<PathNest, size_t> position;
  for (size_t t = 0; t < intersecting.size(); ++t)
    position.emplace(intersecting[t], t);
  if (position.size() != intersecting.size())
    throw std::invalid_argument("duplicate nests in the intersecting census");

  MatchingView view(mh);

  std::vector<size_t> partner(intersecting.size());
  for (size_t t = 0; t < intersecting.size(); ++t) {
    const PathNest& nest = intersecting[t];
    const size_t n_paths = nest.paths.size();

    // Lowest marked index whose path meets another path.
    int chosen_slot = -1;
    for (size_t slot = 0; slot < n_paths && chosen_slot < 0; ++slot) {
      // pairing is sorted by first element, so slots ascend in lowest index.
      for (size_t s2 = 0; s2 < n_paths; ++s2) {
        if (s2 == slot) continue;
        if (nest.paths[slot].shares_vertex_with(nest.paths[s2])) {
          chosen_slot = static_cast<int>(slot);
          break;
        }
      }
    }
    if (chosen_slot < 0)
      throw std::invalid_argument("nest marked intersecting has no crossing pair");

    const AlternatingPath& traced = nest.paths[chosen_slot];

    // First vertex along the traced path shared with another path.
    std::vector<size_t> through;
    VertexId v;
    bool found = false;
    for (const auto& vertex : traced.vertex_sequence()) {
      for (size_t s2 = 0; s2 < n_paths && !found; ++s2) {
        if (s2 == static_cast<size_t>(chosen_slot)) continue;
        auto seq = nest.paths[s2].vertex_sequence();
        if (std::find(seq.begin(), seq.end(), vertex) != seq.end()) {
          v = vertex;
          found = true;
        }
      }
      if (found) break;
    }
    if (!found) throw IntegrityError("intersecting nest without a shared vertex");

    for (size_t s2 = 0; s2 < n_paths; ++s2) {
      if (s2 == static_cast<size_t>(chosen_slot)) continue;
      auto seq = nest.paths[s2].vertex_sequence();
      if (std::find(seq.begin(), seq.end(), v) != seq.end()) through.push_back(s2);
    }
    if (through.empty()) throw IntegrityError("no partner path through the shared vertex");

    // Among partner paths through v, pick the one whose endpoint reachable
    // from the traced start by a red-blue path has the smallest index.
    int best_ell = -1;
    size_t best_slot = 0;
    for (size_t s2 : through) {
      ColoredUnion u = build_union(traced, nest.paths[s2], view);
      auto comp = red_blue_components(u);
      auto it = comp.find(traced.from);
      if (it == comp.end()) continue;   // no red-blue path from the start
      int c = it->second;
      for (const VertexId& cand : {nest.paths[s2].from, nest.paths[s2].to}) {
        auto ic = comp.find(cand);
        if (ic == comp.end() || ic->second != c) continue;
        int ell = index_of(marked_order, cand);
        if (best_ell < 0 || ell < best_ell) {
          best_ell = ell;
          best_slot = s2;
        }
      }
    }
    if (best_ell < 0)
      throw IntegrityError("no partner endpoint is red-blue reachable; the "
                           "selection rule has no candidate");

    CrossingResolution res = resolve_crossing(traced, nest.paths[best_slot], mh,
                                              g, marked_order);

    // Rebuild the nest with the re-partitioned pair, in canonical order.
    std::vector<AlternatingPath> paths;
    for (size_t s2 = 0; s2 < n_paths; ++s2)
      if (s2 != static_cast<size_t>(chosen_slot) && s2 != best_slot)
        paths.push_back(nest.paths[s2]);
    paths.push_back(res.outputs.first);
    paths.push_back(res.outputs.second);

    PathNest image;
    std::vector<std::pair<std::pair<int, int>, AlternatingPath>> keyed;
    for (auto& p : paths) {
      int i0 = index_of(marked_order, p.from);
      int i1 = index_of(marked_order, p.to);
      if (i0 > i1) {
        p = p.reversed();
        std::swap(i0, i1);
      }
      keyed.push_back({{i0, i1}, std::move(p)});
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [key, p] : keyed) {
      image.pairing.pairs.push_back(key);
      image.paths.push_back(std::move(p));
    }

    auto pos = position.find(image);
    if (pos == position.end())
      throw IntegrityError("re-partitioned nest is missing from the census");
    partner[t] = pos->second;

    if (image.sign() != -nest.sign())
      throw IntegrityError("cancellation partner does not flip the sign");
  }

  for (size_t t = 0; t < partner.size(); ++t) {
    if (partner[t] == t)
      throw IntegrityError("cancelling involution has a fixed point");
    if (partner[partner[t]] != t)
      throw IntegrityError("cancelling map is not an involution");
  }
  return partner;
}

}  // namespace gcond
