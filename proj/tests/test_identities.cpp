#include "gcond/identities.hpp"

#include "gcond/errors.hpp"
#include "gcond/generators.hpp"

#include <doctest.h>

#include <json.hpp>

using namespace gcond;

namespace {

MarkedSelection interleave_marking(const std::vector<VertexId>& a,
                                   const std::vector<VertexId>& b,
                                   const VertexSet& a1) {
  MarkedSelection m;
  m.a = a;
  m.b = b;
  m.a1 = a1;
  for (const auto& v : a)
    if (!a1.count(v)) m.a2.insert(v);
  return m;
}

}  // namespace

TEST_CASE("four-vertex identity on C4") {
  PlaneGraph g = make_cycle(4);
  auto rep = verify_prop_four_vertices(g, "v0", "v1", "v2", "v3");
  CHECK(rep.pass);
  CHECK(rep.lhs == 2);
  REQUIRE(rep.lhs_terms.size() == 2);
  CHECK(rep.lhs_terms[0].product == 2);   // M(G) * M(G - all four)
  CHECK(rep.lhs_terms[1].product == 0);   // diagonals disconnect
  CHECK(rep.rhs_terms[0].product == 1);
  CHECK(rep.rhs_terms[1].product == 1);
}

TEST_CASE("four-vertex identity is vacuous on odd hosts") {
  PlaneGraph g = make_fan(5);
  auto face = face_vertices(g);
  auto rep = verify_prop_four_vertices(g, face[0], face[1], face[2], face[3]);
  CHECK(rep.pass);
  CHECK(rep.lhs == 0);
  CHECK(rep.rhs == 0);
}

TEST_CASE("four-vertex identity on grid corners") {
  PlaneGraph g = make_grid(2, 4);
  auto rep = verify_prop_four_vertices(g, "r0c0", "r0c3", "r1c3", "r1c0");
  CHECK(rep.pass);
  auto rep34 = verify_prop_four_vertices(make_grid(3, 4), "r0c0", "r0c3", "r2c3",
                                         "r2c0");
  CHECK(rep34.pass);
}

TEST_CASE("four-vertex identity demands cyclic order") {
  PlaneGraph g = make_cycle(6);
  CHECK_THROWS_AS(verify_prop_four_vertices(g, "v0", "v2", "v1", "v4"),
                  HypothesisError);
  CHECK_THROWS_AS(verify_prop_four_vertices(g, "v0", "v1", "v2", "nope"),
                  HypothesisError);
}

TEST_CASE("even partition identity") {
  RandomSource rng(3);
  PlaneGraph g = apply_weights(make_grid(2, 4), WeightMode::random_rational, 5, rng);
  std::vector<VertexId> a{"r0c0", "r0c2"}, b{"r0c1", "r0c3"};

  SUBCASE("empty A1 is reflexive") {
    auto rep = verify_even_partition(g, interleave_marking(a, b, {}));
    CHECK(rep.pass);
    REQUIRE(rep.lhs_terms.size() == rep.rhs_terms.size());
    for (size_t t = 0; t < rep.lhs_terms.size(); ++t)
      CHECK(rep.lhs_terms[t].product == rep.rhs_terms[t].product);
  }
  SUBCASE("singleton A1 and full A1 pass exactly") {
    CHECK(verify_even_partition(g, interleave_marking(a, b, {"r0c0"})).pass);
    CHECK(verify_even_partition(g, interleave_marking(a, b, {"r0c0", "r0c2"})).pass);
  }
  SUBCASE("k = 3 on a cycle") {
    PlaneGraph c = apply_weights(make_cycle(8), WeightMode::random_rational, 5, rng);
    auto rep = verify_even_partition(
        c, interleave_marking({"v0", "v2", "v4"}, {"v1", "v3", "v5"}, {"v2"}));
    CHECK(rep.pass);
  }
  SUBCASE("hypothesis violations are typed") {
    CHECK_THROWS_AS(verify_even_partition(make_fan(5),
                                          interleave_marking({"v1", "v3"},
                                                             {"v2", "v4"}, {})),
                    HypothesisError);   // odd host
    CHECK_THROWS_AS(verify_even_partition(g, interleave_marking({"r0c0", "r0c1"},
                                                                {"r0c2", "r0c3"}, {})),
                    HypothesisError);   // not interleaved on the face
    MarkedSelection bad = interleave_marking(a, b, {});
    bad.a1 = {"zzz"};
    CHECK_THROWS_AS(verify_even_partition(g, bad), std::invalid_argument);
  }
}

TEST_CASE("partition identities hold with fractional weights") {
  PlaneGraph g({"v0", "v1", "v2", "v3"},
               {{EdgeKey("v0", "v1"), Rational(1, 2)},
                {EdgeKey("v1", "v2"), Rational(3)},
                {EdgeKey("v2", "v3"), Rational(5, 3)},
                {EdgeKey("v0", "v3"), Rational(7, 4)}},
               {"v0", "v1", "v2", "v3"});
  for (VertexSet a1 : std::vector<VertexSet>{{}, {"v0"}, {"v0", "v2"}}) {
    auto rep = verify_even_partition(g, interleave_marking({"v0", "v2"},
                                                           {"v1", "v3"}, a1));
    CHECK(rep.pass);
    CHECK(rep.lhs == Rational(1, 2) * Rational(5, 3) + Rational(3) * Rational(7, 4));
  }
}

TEST_CASE("k range is enforced with an override") {
  PlaneGraph g = make_grid(2, 2);
  // k = 2 needs n >= 2, fine; k = 1 is degenerate
  MarkedSelection m = interleave_marking({"r0c0"}, {"r0c1"}, {});
  CHECK_THROWS_AS(verify_even_partition(g, m), HypothesisError);
  CHECK(verify_even_partition(g, m, {}, true).pass);
}

TEST_CASE("four-vertex identity matches even partition at k = 2") {
  RandomSource rng(17);
  PlaneGraph g = apply_weights(make_grid(2, 3), WeightMode::random_rational, 4, rng);
  // cyclic face order r0c0, r0c1, r0c2, r1c2, r1c1, r1c0
  auto prop = verify_prop_four_vertices(g, "r0c0", "r0c1", "r0c2", "r1c1");
  auto part = verify_even_partition(
      g, interleave_marking({"r0c0", "r0c2"}, {"r0c1", "r1c1"}, {"r0c0"}));
  CHECK(prop.pass);
  CHECK(part.pass);
  CHECK(prop.lhs == part.lhs);
  CHECK(prop.rhs == part.rhs);
}

TEST_CASE("odd partition identity and its four-term corollary") {
  RandomSource rng(29);
  PlaneGraph g = apply_weights(make_fan(7), WeightMode::random_rational, 5, rng);
  auto face = face_vertices(g);
  REQUIRE(face.size() == 7);
  std::vector<VertexId> a{face[1], face[3]}, b{face[2], face[4]};

  for (VertexSet a1 : std::vector<VertexSet>{{}, {a[0]}, {a[0], a[1]}}) {
    auto rep = verify_odd_partition(g, interleave_marking(a, b, a1));
    CHECK(rep.pass);
  }

  SUBCASE("the singleton split is the four-product corollary") {
    auto rep = verify_odd_partition(g, interleave_marking(a, b, {a[0]}));
    auto m = [&](const VertexSet& s) {
      return count_matchings(delete_vertices(g, s));
    };
    // W odd: M(G-b1)M(G-A-b2) + M(G-b2)M(G-A-b1)
    CHECK(rep.lhs == m({b[0]}) * m({a[0], a[1], b[1]}) +
                         m({b[1]}) * m({a[0], a[1], b[0]}));
    // Y even parity opposite |A1|=1 -> |Y| in {0, 2}
    CHECK(rep.rhs == m({a[0]}) * m({a[1], b[0], b[1]}) +
                         m({a[0], b[0], b[1]}) * m({a[1]}));
  }

  CHECK_THROWS_AS(verify_odd_partition(make_grid(2, 3),
                                       interleave_marking({"r0c0", "r0c2"},
                                                          {"r0c1", "r1c2"}, {})),
                  HypothesisError);   // even host
}

TEST_CASE("balanced bipartite corollary") {
  RandomSource rng(31);
  PlaneGraph g = apply_weights(make_grid(2, 4), WeightMode::random_rational, 5, rng);
  // face order: r0c0 r0c1 r0c2 r0c3 r1c3 r1c2 r1c1 r1c0; parts alternate
  std::vector<VertexId> a{"r0c0", "r0c2"}, b{"r0c1", "r0c3"};

  auto rep = verify_bipartite_balanced(g, interleave_marking(a, b, {"r0c0"}));
  CHECK(rep.pass);
  REQUIRE(rep.lhs_terms.size() == 1);

  SUBCASE("empty A1 reduces to the reflexive single term") {
    auto rep0 = verify_bipartite_balanced(g, interleave_marking(a, b, {}));
    CHECK(rep0.pass);
    REQUIRE(rep0.rhs_terms.size() == 1);
    CHECK(rep0.rhs_terms[0].product == rep0.lhs_terms[0].product);
  }
  SUBCASE("terms of the wrong cardinality vanish") {
    // |Y| != |A1| implies M(G-A1-Y) = 0 on balanced bipartite hosts
    auto m = [&](const VertexSet& s) { return count_matchings(delete_vertices(g, s)); };
    CHECK(m({"r0c0", "r0c1", "r0c3"}) == 0);
    CHECK(m({"r0c0"}) == 0);
  }
  SUBCASE("non-bipartite hosts are rejected") {
    CHECK_THROWS_AS(verify_bipartite_balanced(make_fan(6),
                                              interleave_marking({"v1", "v3"},
                                                                 {"v2", "v4"}, {})),
                    HypothesisError);
  }
  SUBCASE("A and B in the same part are rejected") {
    CHECK_THROWS_AS(verify_bipartite_balanced(
                        g, interleave_marking({"r0c0", "r0c2"}, {"r1c1", "r1c3"}, {})),
                    HypothesisError);
  }
}

TEST_CASE("offset bipartite corollary") {
  PlaneGraph g = make_pendant_path(6, {1, 3});   // |U| = |V| + 2
  // larger part: v0 v2 v4 p1 p3; cyclic order around the tree is
  // v0 .. v5, p3, p1
  std::vector<VertexId> a{"v0", "p3"}, b{"v2", "p1"};

  for (VertexSet a1 : std::vector<VertexSet>{{}, {"v0"}, {"v0", "p3"}}) {
    auto rep = verify_bipartite_offset(g, interleave_marking(a, b, a1));
    CHECK(rep.pass);
    CHECK(rep.lhs == 1);   // M(G-A) = M(G-B) = 1 here
    if (a1.size() == 2) {
      // |A1| = k forces Y empty: a single reflexive term survives
      REQUIRE(rep.rhs_terms.size() == 1);
      CHECK(rep.rhs_terms[0].label == "Y={}");
    }
  }

  CHECK_THROWS_AS(verify_bipartite_offset(make_grid(2, 4),
                                          interleave_marking({"r0c0", "r0c2"},
                                                             {"r0c1", "r0c3"}, {})),
                  HypothesisError);   // imbalance is 0, not k
}

TEST_CASE("offset corollary on a weighted grid subgraph") {
  // removing two odd-class vertices from the 3x4 grid leaves |U| = |V| + 2
  RandomSource rng(12);
  PlaneGraph g = delete_vertices(make_grid(3, 4), {"r1c2", "r2c1"});
  g = apply_weights(g, WeightMode::random_rational, 5, rng);
  std::vector<VertexId> a{"r0c0", "r2c2"}, b{"r0c2", "r2c0"};
  for (VertexSet a1 : std::vector<VertexSet>{{}, {"r0c0"}, {"r0c0", "r2c2"}}) {
    auto rep = verify_bipartite_offset(g, interleave_marking(a, b, a1));
    CHECK(rep.pass);
    CHECK(rep.lhs != 0);
  }
}

TEST_CASE("pfaffian identity on the fully marked C4") {
  PlaneGraph g = make_grid(2, 2);
  auto face = face_vertices(g);
  MarkedSelection m;
  m.a = face;
  m.ak = VertexSet(face.begin(), face.end());

  auto rep = verify_pfaffian_identity(g, m);
  CHECK(rep.pass);
  CHECK(rep.lhs == 2);
  CHECK(rep.rhs == 2);

  // entry pattern around the face: adjacent pairs 1, diagonals 0
  std::vector<std::string> expected{"M(H_12) = 1", "M(H_13) = 0", "M(H_14) = 1",
                                    "M(H_23) = 1", "M(H_24) = 0", "M(H_34) = 1"};
  CHECK(rep.notes == expected);

  SUBCASE("AH = A fails the uniqueness hypothesis here") {
    MarkedSelection bad;
    bad.a = face;
    bad.ah = VertexSet(face.begin(), face.end());
    CHECK_THROWS_AS(verify_pfaffian_identity(g, bad), HypothesisError);
  }
}

TEST_CASE("pfaffian and determinant identities reject weighted hosts") {
  RandomSource rng(41);
  PlaneGraph g = apply_weights(make_grid(2, 2), WeightMode::random_rational, 5, rng);
  MarkedSelection pf;
  pf.a = face_vertices(g);
  pf.ak = VertexSet(pf.a.begin(), pf.a.end());
  CHECK_THROWS_AS(verify_pfaffian_identity(g, pf), HypothesisError);

  MarkedSelection det;
  det.a = {"r0c0"};
  det.b = {"r0c1"};
  CHECK_THROWS_AS(verify_determinant_identity(g, det), HypothesisError);
}

TEST_CASE("pfaffian identity with AH = A on a uniquely matchable host") {
  PlaneGraph g = make_path(6);
  std::vector<VertexId> a{"v0", "v2", "v3", "v5"};
  MarkedSelection m;
  m.a = a;
  m.ah = VertexSet(a.begin(), a.end());
  auto rep = verify_pfaffian_identity(g, m);
  CHECK(rep.pass);

  // the three signed one-factor terms are the two-deletion products
  auto prod = [&](int i, int j, int k, int l) {
    return count_matchings(delete_vertices(g, {a[i], a[j]})) *
           count_matchings(delete_vertices(g, {a[k], a[l]}));
  };
  REQUIRE(rep.rhs_terms.size() == 3);
  CHECK(rep.rhs_terms[0].product == prod(0, 1, 2, 3));
  CHECK(rep.rhs_terms[1].product == -prod(0, 2, 1, 3));
  CHECK(rep.rhs_terms[2].product == prod(0, 3, 1, 2));
}

TEST_CASE("determinant identity") {
  SUBCASE("n = 1 is reflexive") {
    PlaneGraph g = make_grid(2, 2);
    MarkedSelection m;
    m.a = {"r0c0"};
    m.b = {"r0c1"};
    auto rep = verify_determinant_identity(g, m);
    CHECK(rep.pass);
    CHECK(rep.lhs == count_matchings(g));
  }
  SUBCASE("searched instances pass") {
    for (const auto& host : {make_grid(2, 3), make_grid(2, 4)}) {
      auto markings =
          search_unique_matching_markings(host, 4, UniqueSearchMode::determinant, 10);
      CHECK_FALSE(markings.empty());
      for (const auto& m : markings) CHECK(verify_determinant_identity(host, m).pass);
    }
  }
  SUBCASE("non-bipartite host is rejected") {
    PlaneGraph f = make_fan(6);
    MarkedSelection m;
    m.a = {"v1"};
    m.b = {"v2"};
    CHECK_THROWS_AS(verify_determinant_identity(f, m), HypothesisError);
  }
}

TEST_CASE("reports render in both formats") {
  PlaneGraph g = make_cycle(4);
  auto rep = verify_prop_four_vertices(g, "v0", "v1", "v2", "v3");

  auto table = render_table(rep);
  CHECK(table.find("PASS") != std::string::npos);
  CHECK(table.find("lhs = 2") != std::string::npos);

  auto structured = render_structured(rep);
  auto j = nlohmann::json::parse(structured);
  CHECK(j["identity"] == "prop4");
  CHECK(j["pass"] == true);
  CHECK(j["lhs"] == "2");
  CHECK(j["lhs_terms"].size() == 2);
}

TEST_CASE("bipartition finder handles constraints and imbalance") {
  PlaneGraph g = make_grid(2, 3);
  auto bip = find_bipartition(g);
  REQUIRE(bip);
  CHECK(bip->u.size() + bip->v.size() == 6);
  for (const auto& e : g.edges()) {
    bool split = (bip->u.count(e.key.u) && bip->v.count(e.key.v)) ||
                 (bip->v.count(e.key.u) && bip->u.count(e.key.v));
    CHECK(split);
  }

  CHECK(find_bipartition(g, {"r0c0"}, {"r0c1"}, 0));
  CHECK_FALSE(find_bipartition(g, {"r0c0", "r0c1"}, {}, 0));   // adjacent pair
  CHECK_FALSE(find_bipartition(make_fan(5)));                  // triangles

  PlaneGraph pendant = make_pendant_path(6, {1, 3});
  CHECK(find_bipartition(pendant, {}, {}, 2));
  CHECK_FALSE(find_bipartition(pendant, {}, {}, 1));
}
