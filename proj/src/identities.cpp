#include "gcond/identities.hpp"

#include "gcond/algebra.hpp"
#include "gcond/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace gcond {

namespace {

Rational m_of(const PlaneGraph& g, const VertexSet& gone,
              const EnumerationLimits& limits) {
  return count_matchings(delete_vertices(g, gone), limits);
}

std::string set_label(const std::string& name, const std::vector<VertexId>& order,
                      const VertexSet& subset) {
  std::string s = name + "={";
  bool first = true;
  for (const auto& v : order) {
    if (!subset.count(v)) continue;
    if (!first) s += ",";
    s += v;
    first = false;
  }
  return s + "}";
}

VertexSet unite(const VertexSet& a, const VertexSet& b) {
  VertexSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

void require_cyclic(const PlaneGraph& g, const std::vector<VertexId>& seq) {
  auto check = check_cyclic_order(g, seq);
  if (!check.ok) throw HypothesisError(check.message);
}

std::vector<VertexId> interleaved(const MarkedSelection& m) {
  std::vector<VertexId> seq;
  for (size_t i = 0; i < m.a.size(); ++i) {
    seq.push_back(m.a[i]);
    seq.push_back(m.b[i]);
  }
  return seq;
}

void require_partition_of_a(const MarkedSelection& m) {
  VertexSet a_set(m.a.begin(), m.a.end());
  if (a_set.size() != m.a.size())
    throw std::invalid_argument("marked A vertices must be distinct");
  for (const auto& v : m.a1)
    if (m.a2.count(v))
      throw std::invalid_argument("A1 and A2 overlap at " + v);
  if (unite(m.a1, m.a2) != a_set)
    throw std::invalid_argument("A1 and A2 must partition A");
}

void require_marked_shape(const MarkedSelection& m) {
  if (m.a.empty() || m.a.size() != m.b.size())
    throw std::invalid_argument("marked selection needs equally many a's and b's");
  VertexSet all(m.a.begin(), m.a.end());
  all.insert(m.b.begin(), m.b.end());
  if (all.size() != m.a.size() + m.b.size())
    throw std::invalid_argument("marked vertices must be distinct");
}

// The pfaffian and determinant identities are stated for unweighted
// counts; weighted hosts break the nest bijection's bookkeeping.
void require_unit_weights(const PlaneGraph& g, const std::string& which) {
  for (const auto& e : g.edges())
    if (e.weight != 1)
      throw HypothesisError(which + " identity needs unit edge weights; " +
                            e.key.u + "-" + e.key.v + " has weight " +
                            to_string(e.weight));
}

void require_k_range(size_t k, size_t vertex_count, bool odd_host,
                     bool allow_degenerate) {
  if (allow_degenerate) return;
  size_t n = odd_host ? (vertex_count - 1) / 2 : vertex_count / 2;
  if (k < 2 || k > n)
    throw HypothesisError("k=" + std::to_string(k) + " outside 2..n (n=" +
                          std::to_string(n) + "); pass the degenerate-k "
                          "override to run anyway");
}

// Shared engine for the even/odd partition identities. W ranges over
// subsets of B with |W| congruent to w_parity, Y over subsets with
// |Y| - |A1| congruent to the identity's requirement.
IdentityReport partition_identity(const PlaneGraph& g, const MarkedSelection& m,
                                  const EnumerationLimits& limits, int w_parity,
                                  const std::string& name) {
  IdentityReport rep;
  rep.identity_name = name;
  const size_t k = m.b.size();
  const VertexSet a_all(m.a.begin(), m.a.end());

  for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
    VertexSet w;
    for (size_t i = 0; i < k; ++i)
      if ((mask >> i) & 1) w.insert(m.b[i]);
    VertexSet w_bar;
    for (const auto& b : m.b)
      if (!w.count(b)) w_bar.insert(b);

    if (w.size() % 2 == static_cast<size_t>(w_parity)) {
      IdentityTerm t;
      t.label = set_label("W", m.b, w);
      t.factor1 = m_of(g, w, limits);
      t.factor2 = m_of(g, unite(a_all, w_bar), limits);
      t.product = t.factor1 * t.factor2;
      rep.lhs += t.product;
      rep.lhs_terms.push_back(std::move(t));
    }
    // Same mask drives the Y sum: |Y| - |A1| must have parity w_parity.
    if ((w.size() + m.a1.size()) % 2 == static_cast<size_t>(w_parity)) {
      IdentityTerm t;
      t.label = set_label("Y", m.b, w);
      t.factor1 = m_of(g, unite(m.a1, w), limits);
      t.factor2 = m_of(g, unite(m.a2, w_bar), limits);
      t.product = t.factor1 * t.factor2;
      rep.rhs += t.product;
      rep.rhs_terms.push_back(std::move(t));
    }
  }
  rep.pass = rep.lhs == rep.rhs;
  return rep;
}

}  // namespace

IdentityReport verify_prop_four_vertices(const PlaneGraph& g, const VertexId& a,
                                         const VertexId& b, const VertexId& c,
                                         const VertexId& d,
                                         const EnumerationLimits& limits) {
  require_cyclic(g, {a, b, c, d});

  IdentityReport rep;
  rep.identity_name = "prop4";
  auto push = [&](std::vector<IdentityTerm>& side, Rational& total,
                  const std::string& label, const VertexSet& s1, const VertexSet& s2) {
    IdentityTerm t;
    t.label = label;
    t.factor1 = m_of(g, s1, limits);
    t.factor2 = m_of(g, s2, limits);
    t.product = t.factor1 * t.factor2;
    total += t.product;
    side.push_back(std::move(t));
  };
  push(rep.lhs_terms, rep.lhs, "M(G)*M(G-{a,b,c,d})", {}, {a, b, c, d});
  push(rep.lhs_terms, rep.lhs, "M(G-{a,c})*M(G-{b,d})", {a, c}, {b, d});
  push(rep.rhs_terms, rep.rhs, "M(G-{a,b})*M(G-{c,d})", {a, b}, {c, d});
  push(rep.rhs_terms, rep.rhs, "M(G-{a,d})*M(G-{b,c})", {a, d}, {b, c});
  rep.pass = rep.lhs == rep.rhs;
  return rep;
}

IdentityReport verify_even_partition(const PlaneGraph& g, const MarkedSelection& m,
                                     const EnumerationLimits& limits,
                                     bool allow_degenerate_k) {
  require_marked_shape(m);
  require_partition_of_a(m);
  if (g.vertex_count() % 2 != 0)
    throw HypothesisError("even-partition identity needs an even vertex count");
  require_k_range(m.a.size(), g.vertex_count(), false, allow_degenerate_k);
  require_cyclic(g, interleaved(m));
  return partition_identity(g, m, limits, 0, "even-partition");
}

IdentityReport verify_odd_partition(const PlaneGraph& g, const MarkedSelection& m,
                                    const EnumerationLimits& limits,
                                    bool allow_degenerate_k) {
  require_marked_shape(m);
  require_partition_of_a(m);
  if (g.vertex_count() % 2 != 1)
    throw HypothesisError("odd-partition identity needs an odd vertex count");
  require_k_range(m.a.size(), g.vertex_count(), true, allow_degenerate_k);
  require_cyclic(g, interleaved(m));
  return partition_identity(g, m, limits, 1, "odd-partition");
}

IdentityReport verify_bipartite_balanced(const PlaneGraph& g,
                                         const MarkedSelection& m,
                                         const EnumerationLimits& limits) {
  require_marked_shape(m);
  require_partition_of_a(m);
  VertexSet a_all(m.a.begin(), m.a.end()), b_all(m.b.begin(), m.b.end());
  if (!find_bipartition(g, a_all, b_all, 0))
    throw HypothesisError("graph is not bipartite with A and B in opposite "
                          "equal-sized parts");
  require_cyclic(g, interleaved(m));

  IdentityReport rep;
  rep.identity_name = "bipartite-balanced";
  const size_t k = m.b.size();

  IdentityTerm lhs;
  lhs.label = "M(G)*M(G-A-B)";
  lhs.factor1 = m_of(g, {}, limits);
  lhs.factor2 = m_of(g, unite(a_all, b_all), limits);
  lhs.product = lhs.factor1 * lhs.factor2;
  rep.lhs = lhs.product;
  rep.lhs_terms.push_back(std::move(lhs));

  // Proof mechanism: all other even-W terms die because G-W is unbalanced.
  for (size_t mask = 1; mask < (size_t{1} << k); ++mask) {
    VertexSet w;
    for (size_t i = 0; i < k; ++i)
      if ((mask >> i) & 1) w.insert(m.b[i]);
    if (w.size() % 2 != 0) continue;
    if (m_of(g, w, limits) != 0)
      throw IntegrityError("nonzero M(G-W) for nonempty W in a bipartite host");
  }

  for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
    VertexSet y;
    for (size_t i = 0; i < k; ++i)
      if ((mask >> i) & 1) y.insert(m.b[i]);
    if (y.size() != m.a1.size()) continue;
    VertexSet y_bar;
    for (const auto& b : m.b)
      if (!y.count(b)) y_bar.insert(b);
    IdentityTerm t;
    t.label = set_label("Y", m.b, y);
    t.factor1 = m_of(g, unite(m.a1, y), limits);
    t.factor2 = m_of(g, unite(m.a2, y_bar), limits);
    t.product = t.factor1 * t.factor2;
    rep.rhs += t.product;
    rep.rhs_terms.push_back(std::move(t));
  }
  rep.pass = rep.lhs == rep.rhs;
  return rep;
}

IdentityReport verify_bipartite_offset(const PlaneGraph& g,
                                       const MarkedSelection& m,
                                       const EnumerationLimits& limits) {
  require_marked_shape(m);
  require_partition_of_a(m);
  const size_t k = m.b.size();
  VertexSet a_all(m.a.begin(), m.a.end()), b_all(m.b.begin(), m.b.end());
  if (!find_bipartition(g, unite(a_all, b_all), {}, static_cast<long>(k)))
    throw HypothesisError("graph is not bipartite with A and B inside a part "
                          "that is k vertices larger");
  require_cyclic(g, interleaved(m));

  IdentityReport rep;
  rep.identity_name = "bipartite-offset";

  IdentityTerm lhs;
  lhs.label = "M(G-A)*M(G-B)";
  lhs.factor1 = m_of(g, a_all, limits);
  lhs.factor2 = m_of(g, b_all, limits);
  lhs.product = lhs.factor1 * lhs.factor2;
  rep.lhs = lhs.product;
  rep.lhs_terms.push_back(std::move(lhs));

  for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
    VertexSet y;
    for (size_t i = 0; i < k; ++i)
      if ((mask >> i) & 1) y.insert(m.b[i]);
    if (y.size() + m.a1.size() != k) continue;
    VertexSet y_bar;
    for (const auto& b : m.b)
      if (!y.count(b)) y_bar.insert(b);
    IdentityTerm t;
    t.label = set_label("Y", m.b, y);
    t.factor1 = m_of(g, unite(m.a1, y), limits);
    t.factor2 = m_of(g, unite(m.a2, y_bar), limits);
    t.product = t.factor1 * t.factor2;
    rep.rhs += t.product;
    rep.rhs_terms.push_back(std::move(t));
  }
  rep.pass = rep.lhs == rep.rhs;
  return rep;
}

namespace {

std::string factor_label(const OneFactor& f) {
  std::string s = "F={";
  for (size_t t = 0; t < f.pairs.size(); ++t) {
    if (t) s += ",";
    s += "(" + std::to_string(f.pairs[t].first + 1) + "," +
         std::to_string(f.pairs[t].second + 1) + ")";
  }
  return s + "}";
}

}  // namespace

IdentityReport verify_pfaffian_identity(const PlaneGraph& g,
                                        const MarkedSelection& m,
                                        const EnumerationLimits& limits) {
  const size_t n = m.a.size();
  if (n == 0 || n % 2 != 0)
    throw HypothesisError("pfaffian identity needs an even number of marked "
                          "vertices");
  {
    VertexSet a_set(m.a.begin(), m.a.end());
    if (a_set.size() != n) throw std::invalid_argument("marked vertices repeat");
    for (const auto& v : m.ak)
      if (m.ah.count(v)) throw std::invalid_argument("AK and AH overlap at " + v);
    if (unite(m.ak, m.ah) != a_set)
      throw std::invalid_argument("AK and AH must partition A");
  }
  require_unit_weights(g, "pfaffian");
  require_cyclic(g, m.a);

  PlaneGraph h = delete_vertices(g, m.ak);
  if (!has_unique_matching(h, limits))
    throw HypothesisError("H = G-AK does not have exactly one perfect matching");

  IdentityReport rep;
  rep.identity_name = "pfaffian";

  IdentityTerm lhs;
  lhs.label = "M(K)=M(G-AH)";
  lhs.factor1 = m_of(g, m.ah, limits);
  lhs.factor2 = 1;
  lhs.product = lhs.factor1;
  rep.lhs = lhs.product;
  rep.lhs_terms.push_back(std::move(lhs));

  TriangularArray t(static_cast<int>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      // H_ij keeps a marked vertex exactly when H lacks it.
      VertexSet gone;
      for (const auto& v : m.ak)
        if (v != m.a[i] && v != m.a[j]) gone.insert(v);
      if (m.ah.count(m.a[i])) gone.insert(m.a[i]);
      if (m.ah.count(m.a[j])) gone.insert(m.a[j]);
      Rational value = m_of(g, gone, limits);
      rep.notes.push_back("M(H_" + std::to_string(i + 1) + std::to_string(j + 1) +
                          ") = " + to_string(value));
      t.set(static_cast<int>(i), static_cast<int>(j), std::move(value));
    }

  rep.rhs = pfaffian(t);
  if (n <= 8) {
    for (const auto& f : enumerate_one_factors(static_cast<int>(n))) {
      IdentityTerm term;
      term.label = factor_label(f);
      term.factor1 = (crossing_number(f) % 2 == 0) ? 1 : -1;
      term.factor2 = 1;
      for (auto [i, j] : f.pairs) term.factor2 *= t.at(i, j);
      term.product = term.factor1 * term.factor2;
      rep.rhs_terms.push_back(std::move(term));
    }
  } else {
    rep.rhs_terms.push_back({"Pf(M(H_ij))", rep.rhs, 1, rep.rhs});
  }
  rep.pass = rep.lhs == rep.rhs;
  return rep;
}

IdentityReport verify_determinant_identity(const PlaneGraph& g,
                                           const MarkedSelection& m,
                                           const EnumerationLimits& limits) {
  const size_t n = m.a.size();
  if (n == 0 || m.b.size() != n)
    throw std::invalid_argument("determinant identity needs equal-sized A and B");
  require_marked_shape(m);

  require_unit_weights(g, "determinant");

  // The face order is a_1..a_n followed by b_n..b_1.
  std::vector<VertexId> seq = m.a;
  for (size_t j = n; j-- > 0;) seq.push_back(m.b[j]);
  require_cyclic(g, seq);

  auto bip = find_bipartition(g);
  if (!bip) throw HypothesisError("graph is not bipartite");

  VertexSet in_k_deletion, in_l_deletion;   // AH and AK of the reduction
  for (const auto& v : m.a)
    (bip->u.count(v) ? in_l_deletion : in_k_deletion).insert(v);
  for (const auto& v : m.b)
    (bip->v.count(v) ? in_l_deletion : in_k_deletion).insert(v);

  PlaneGraph l = delete_vertices(g, in_l_deletion);
  if (!has_unique_matching(l, limits))
    throw HypothesisError("L does not have exactly one perfect matching");

  IdentityReport rep;
  rep.identity_name = "determinant";

  IdentityTerm lhs;
  lhs.label = "M(K)";
  lhs.factor1 = m_of(g, in_k_deletion, limits);
  lhs.factor2 = 1;
  lhs.product = lhs.factor1;
  rep.lhs = lhs.product;
  rep.lhs_terms.push_back(std::move(lhs));

  SquareMatrix mat(static_cast<int>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      VertexSet gone;
      for (const auto& v : in_l_deletion)
        if (v != m.a[i] && v != m.b[j]) gone.insert(v);
      if (in_k_deletion.count(m.a[i])) gone.insert(m.a[i]);
      if (in_k_deletion.count(m.b[j])) gone.insert(m.b[j]);
      Rational value = m_of(g, gone, limits);
      rep.notes.push_back("M(L_" + std::to_string(i + 1) + std::to_string(j + 1) +
                          ") = " + to_string(value));
      mat.set(static_cast<int>(i), static_cast<int>(j), std::move(value));
    }

  rep.rhs = determinant(mat);
  if (n <= 4) {
    std::vector<int> perm(n);
    for (size_t i = 0; i < n; ++i) perm[i] = static_cast<int>(i);
    do {
      int inversions = 0;
      for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
          if (perm[i] > perm[j]) ++inversions;
      IdentityTerm term;
      term.label = "sigma=(";
      for (size_t i = 0; i < n; ++i)
        term.label += (i ? "," : "") + std::to_string(perm[i] + 1);
      term.label += ")";
      term.factor1 = (inversions % 2 == 0) ? 1 : -1;
      term.factor2 = 1;
      for (size_t i = 0; i < n; ++i)
        term.factor2 *= mat.at(static_cast<int>(i), perm[i]);
      term.product = term.factor1 * term.factor2;
      rep.rhs_terms.push_back(std::move(term));
    } while (std::next_permutation(perm.begin(), perm.end()));
  } else {
    rep.rhs_terms.push_back({"det[M(L_ij)]", rep.rhs, 1, rep.rhs});
  }
  rep.pass = rep.lhs == rep.rhs;
  return rep;
}

std::string render_table(const IdentityReport& rep) {
  std::ostringstream out;
  out << "identity: " << rep.identity_name << "\n";
  out << "status:   " << (rep.pass ? "PASS" : "FAIL") << "\n";
  auto side = [&](const char* name, const Rational& total,
                  const std::vector<IdentityTerm>& terms) {
    out << name << " = " << to_string(total) << "\n";
    for (const auto& t : terms)
      out << "  " << t.label << ": " << to_string(t.factor1) << " * "
          << to_string(t.factor2) << " = " << to_string(t.product) << "\n";
  };
  side("lhs", rep.lhs, rep.lhs_terms);
  side("rhs", rep.rhs, rep.rhs_terms);
  for (const auto& n : rep.notes) out << "note: " << n << "\n";
  return out.str();
}

std::string render_structured(const IdentityReport& rep) {
  nlohmann::ordered_json j;
  j["identity"] = rep.identity_name;
  j["pass"] = rep.pass;
  j["lhs"] = to_string(rep.lhs);
  j["rhs"] = to_string(rep.rhs);
  auto terms = [](const std::vector<IdentityTerm>& ts) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& t : ts)
      arr.push_back({{"label", t.label},
                     {"m1", to_string(t.factor1)},
                     {"m2", to_string(t.factor2)},
                     {"product", to_string(t.product)}});
    return arr;
  };
  j["lhs_terms"] = terms(rep.lhs_terms);
  j["rhs_terms"] = terms(rep.rhs_terms);
  j["notes"] = rep.notes;
  return j.dump(2) + "\n";
}

std::optional<Bipartition> find_bipartition(const PlaneGraph& g,
                                            const VertexSet& must_u,
                                            const VertexSet& must_v,
                                            std::optional<long> imbalance) {
  // Two-color each component, then pick orientations meeting the
  // constraints.
  std::map<VertexId, int> color;   // 0/1 within its component
  std::vector<std::pair<std::vector<VertexId>, std::vector<VertexId>>> comps;
  for (const auto& start : g.vertices()) {
    if (color.count(start)) continue;
    std::vector<VertexId> side0{start}, side1;
    color[start] = 0;
    std::vector<VertexId> queue{start};
    while (!queue.empty()) {
      VertexId v = queue.back();
      queue.pop_back();
      for (const auto& w : g.neighbors(v)) {
        auto it = color.find(w);
        if (it == color.end()) {
          color[w] = 1 - color[v];
          (color[w] == 0 ? side0 : side1).push_back(w);
          queue.push_back(w);
        } else if (it->second == color[v]) {
          return std::nullopt;   // odd cycle
        }
      }
    }
    comps.emplace_back(std::move(side0), std::move(side1));
  }

  // orientation o = 0 puts side0 into U. -1 = free.
  std::vector<int> forced(comps.size(), -1);
  for (size_t c = 0; c < comps.size(); ++c) {
    for (int side = 0; side < 2; ++side) {
      const auto& vs = side == 0 ? comps[c].first : comps[c].second;
      for (const auto& v : vs) {
        int want = -1;
        if (must_u.count(v)) want = side;        // side lands in U
        if (must_v.count(v)) want = 1 - side;
        if (want < 0) continue;
        if (forced[c] >= 0 && forced[c] != want) return std::nullopt;
        forced[c] = want;
      }
    }
  }

  auto build = [&](const std::vector<int>& orient) {
    Bipartition bip;
    for (size_t c = 0; c < comps.size(); ++c) {
      const auto& [s0, s1] = comps[c];
      auto& u_side = orient[c] == 0 ? bip.u : bip.v;
      auto& v_side = orient[c] == 0 ? bip.v : bip.u;
      u_side.insert(s0.begin(), s0.end());
      v_side.insert(s1.begin(), s1.end());
    }
    return bip;
  };

  std::vector<size_t> free;
  for (size_t c = 0; c < comps.size(); ++c)
    if (forced[c] < 0) free.push_back(c);

  std::vector<int> orient(comps.size(), 0);
  for (size_t c = 0; c < comps.size(); ++c)
    if (forced[c] >= 0) orient[c] = forced[c];

  if (!imbalance) return build(orient);

  for (size_t mask = 0; mask < (size_t{1} << free.size()); ++mask) {
    for (size_t t = 0; t < free.size(); ++t) orient[free[t]] = (mask >> t) & 1;
    long diff = 0;
    for (size_t c = 0; c < comps.size(); ++c) {
      long d = static_cast<long>(comps[c].first.size()) -
               static_cast<long>(comps[c].second.size());
      diff += orient[c] == 0 ? d : -d;
    }
    if (diff == *imbalance) return build(orient);
  }
  return std::nullopt;
}

}  // namespace gcond
