#include "doctest.h"

#include "momentrr/coxeter.hpp"
#include "momentrr/errors.hpp"
#include "momentrr/moment_graph.hpp"

using namespace momentrr;

namespace {

MomentGraph chain3() {
  return MomentGraph(1, {"a", "b", "c"}, {{"a", "b"}, {"b", "c"}},
                     {{"a", "b", {1}}, {"b", "c", {1}}});
}

struct A2Setup {
  RootSystem rs = build_root_system(CartanMatrix::of_type("A", 2));
  GraphPtr g = bruhat_graph(rs);
  Parabolic p{rs, {0}};
  EquivalenceRelation cosets = coset_relation(rs, *g, p);
};

} // namespace

TEST_CASE("validate_graph") {
  const MomentGraph a1(1, {"e", "s"}, {{"e", "s"}}, {{"e", "s", {1}}});
  CHECK(validate_graph(a1).ok());

  const MomentGraph loop(1, {"v"}, {}, {{"v", "v", {1}}});
  CHECK(validate_graph(loop).has("MG3"));

  const MomentGraph zero(1, {"e", "s"}, {{"e", "s"}}, {{"e", "s", {0}}});
  CHECK(validate_graph(zero).has("MG2"));

  const MomentGraph cyclic(1, {"a", "b"}, {{"a", "b"}, {"b", "a"}}, {});
  CHECK(validate_graph(cyclic).has("MG1"));

  const MomentGraph backwards(1, {"e", "s"}, {{"e", "s"}}, {{"s", "e", {1}}});
  CHECK(validate_graph(backwards).has("MG3"));

  CHECK_THROWS_AS(MomentGraph(1, {"a", "a"}, {}, {}), SchemaError);
  CHECK_THROWS_AS(MomentGraph(1, {"a"}, {{"a", "b"}}, {}), SchemaError);
}

TEST_CASE("order closure, covers and linear extension") {
  const MomentGraph g = chain3();
  CHECK(g.leq(0, 2));
  CHECK_FALSE(g.leq(2, 0));
  CHECK(g.covered_by(0, 1));
  CHECK_FALSE(g.covered_by(0, 2));
  CHECK(g.linear_extension() == std::vector<VertexId>{0, 1, 2});
  CHECK(g.minimal() == std::vector<VertexId>{0});
  CHECK(g.maximal() == std::vector<VertexId>{2});
}

TEST_CASE("validate_morphism") {
  A2Setup s;
  const Quotient q = build_quotient(*s.g, s.cosets);
  CHECK(validate_morphism(q.projection, *s.g, *q.graph).ok());

  const MomentGraph g = chain3();
  GraphMorphism reverse{{2, 1, 0},
                        std::vector<LatticeAutomorphism>(3, LatticeAutomorphism::identity(1))};
  CHECK(validate_morphism(reverse, g, g).has("MR1"));

  GraphMorphism doubled{{0, 1, 2},
                        std::vector<LatticeAutomorphism>(3, LatticeAutomorphism::identity(1))};
  const MomentGraph g2(1, {"a", "b", "c"}, {{"a", "b"}, {"b", "c"}},
                       {{"a", "b", {2}}, {"b", "c", {1}}});
  CHECK(validate_morphism(doubled, g, g2).has("MR2a"));

  CHECK_THROWS_AS(LatticeAutomorphism::from_rows({{1, 1}, {1, 1}}), NotUnimodular);
}

TEST_CASE("check_monodromy") {
  A2Setup s;
  CHECK(check_monodromy(Monodromy::trivial(*s.g), *s.g).ok());
  CHECK(check_monodromy(weyl_monodromy(s.rs, *s.g), *s.g).ok());

  const MomentGraph a1(1, {"e", "s"}, {{"e", "s"}}, {{"e", "s", {1}}});
  Monodromy flip{{LatticeAutomorphism::identity(1), LatticeAutomorphism::negation(1)}};
  CHECK(check_monodromy(flip, a1).ok());

  // xi_{s1} = s2 differs from the identity by -alpha_2 on alpha_1, not a multiple of alpha_1.
  Monodromy bad = Monodromy::trivial(*s.g);
  bad.maps[s.g->index("s1")] = s.rs.simple_reflection(1);
  CHECK_FALSE(check_monodromy(bad, *s.g).ok());
}

TEST_CASE("check_relation") {
  A2Setup s;
  CHECK(check_relation(s.cosets, *s.g).ok());
  CHECK(check_relation(EquivalenceRelation::trivial(s.g->size()), *s.g).ok());
  CHECK(check_relation(EquivalenceRelation::discrete(s.g->size()), *s.g).ok());

  const MomentGraph g = chain3();
  const EquivalenceRelation nonconvex(3, {{0, 2}, {1}});
  CHECK(check_relation(nonconvex, g).has("EQV1"));

  CHECK_THROWS_AS(EquivalenceRelation(3, {{0, 1}, {1, 2}}), SchemaError);
  CHECK_THROWS_AS(EquivalenceRelation(3, {{0, 1}}), SchemaError);
}

TEST_CASE("build_quotient") {
  A2Setup s;
  const Quotient q = build_quotient(*s.g, s.cosets);
  const MomentGraph &h = *q.graph;
  CHECK(h.ids() == std::vector<std::string>{"e", "s1s2", "s2"});
  CHECK(h.edges().size() == 3);
  CHECK(h.edge(h.index("e"), h.index("s2"))->label == LatticeVector{0, 1});
  CHECK(h.edge(h.index("s2"), h.index("s1s2"))->label == LatticeVector{1, 0});
  CHECK(h.edge(h.index("e"), h.index("s1s2"))->label == LatticeVector{1, 1});
  CHECK(validate_graph(h).ok());

  const auto parabolic = parabolic_graph(s.rs, s.p);
  CHECK(check_isomorphism(GraphMorphism::by_ids(h, *parabolic), h, *parabolic));

  const Quotient point = build_quotient(*s.g, EquivalenceRelation::trivial(s.g->size()));
  CHECK(point.graph->size() == 1);
  CHECK(point.graph->edges().empty());

  const MomentGraph g = chain3();
  CHECK_THROWS_AS(build_quotient(g, EquivalenceRelation(3, {{0, 2}, {1}})),
                  IncompatibleRelation);
}

TEST_CASE("quotients by coset relations across the catalog") {
  const std::pair<const char *, std::size_t> types[] = {
      {"A", 2}, {"A", 3}, {"B", 2}, {"B", 3}, {"C", 3}, {"G", 2}};
  for (const auto &[type, rank] : types) {
    const auto rs = build_root_system(CartanMatrix::of_type(type, rank));
    const auto g = bruhat_graph(rs);
    for (std::size_t i = 0; i < rank; ++i) {
      const Parabolic p(rs, {i});
      const auto r = coset_relation(rs, *g, p);
      REQUIRE(check_relation(r, *g).ok());
      const Quotient q = build_quotient(*g, r);
      CHECK(validate_graph(*q.graph).ok());
      for (const auto &e : g->edges()) {
        const VertexId a = q.projection.vertex_map[e.tail];
        const VertexId b = q.projection.vertex_map[e.head];
        if (a == b) continue;
        const auto *image = q.graph->edge(a, b);
        REQUIRE(image);
        CHECK(image->label == e.label);
        CHECK(q.graph->edge(b, a) == nullptr);
      }
    }
  }
}

TEST_CASE("special matchings") {
  const MomentGraph a1(1, {"e", "s"}, {{"e", "s"}}, {{"e", "s", {1}}});
  const auto r1 = matching_relation(SpecialMatching{{1, 0}}, a1);
  CHECK(r1.classes() == std::vector<std::vector<VertexId>>{{0, 1}});

  A2Setup s;
  const auto m = right_multiplication(s.rs, *s.g, 1);
  const auto r = matching_relation(m, *s.g);
  CHECK(r.classes().size() == 3);
  CHECK(check_relation(r, *s.g).ok());

  // e <-> s1s2s1 is not a covering pair.
  SpecialMatching bad{m.pairing};
  const VertexId e = s.g->index("e"), w0 = s.g->index("s1s2s1");
  const VertexId me = m(e), mw0 = m(w0);
  bad.pairing[e] = w0;
  bad.pairing[w0] = e;
  bad.pairing[me] = mw0;
  bad.pairing[mw0] = me;
  CHECK(check_matching(bad, *s.g).has("covering"));
  CHECK_THROWS_AS(matching_relation(bad, *s.g), NotSpecialMatching);
}

TEST_CASE("check_isomorphism") {
  A2Setup s;
  CHECK(check_isomorphism(GraphMorphism::identity(*s.g), *s.g, *s.g));
  const Quotient q = build_quotient(*s.g, s.cosets);
  CHECK_FALSE(check_isomorphism(q.projection, *s.g, *q.graph));
}

TEST_CASE("full subgraphs") {
  A2Setup s;
  const std::vector<VertexId> fiber = s.cosets.classes()[0];
  const MomentGraph sub = s.g->full_subgraph(fiber);
  CHECK(sub.size() == 2);
  CHECK(sub.edges().size() == 1);
  CHECK(validate_graph(sub).ok());
}
