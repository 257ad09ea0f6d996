#include "doctest.h"

#include "momentrr/coxeter.hpp"
#include "momentrr/structure_algebra.hpp"
#include "momentrr/triangular.hpp"
#include "oracles.hpp"

using namespace momentrr;
using momentrr::testing::Generator;

namespace {

LaurentPolynomial e1(Coord k) { return LaurentPolynomial::monomial(LatticeVector{k}); }
LaurentPolynomial lconst(long c) { return LaurentPolynomial::constant(1, c); }

GraphPtr a1_graph() {
  return std::make_shared<const MomentGraph>(
      1, std::vector<std::string>{"e", "s"},
      std::vector<std::pair<std::string, std::string>>{{"e", "s"}},
      std::vector<MomentGraph::EdgeSpec>{{"e", "s", LatticeVector{1}}});
}

Monodromy a1_flip(const MomentGraph &g) {
  Monodromy xi = Monodromy::trivial(g);
  xi.maps[1] = LatticeAutomorphism::negation(1);
  return xi;
}

} // namespace

TEST_CASE("membership") {
  const GraphPtr g = a1_graph();
  CHECK(check_membership(MultElement(g, {lconst(1), lconst(1)})).ok());
  const auto bad = check_membership(MultElement(g, {lconst(1), lconst(0)}));
  CHECK(bad.has("membership"));
  CHECK(check_membership(MultElement(g, {e1(1), e1(-1)})).ok());
  CHECK(check_membership(MultElement(g, {e1(1), e1(-1)}), Exec::Serial).ok());

  const Polynomial alpha = Polynomial::linear(LatticeVector{1});
  CHECK(check_membership(AddElement(g, {alpha, -alpha})).ok());
  CHECK_FALSE(check_membership(AddElement(g, {Polynomial::one(1), Polynomial(1)})).ok());
  // Truncated: alpha^3 - 0 is divisible; 1 is not.
  CHECK(check_membership(TruncElement(g, {TruncatedSeries(alpha * alpha * alpha, 2),
                                           TruncatedSeries(Polynomial(1), 2)}))
            .ok());
  CHECK_THROWS_AS(MultElement(g, {lconst(1)}), SchemaError);
}

TEST_CASE("characteristic map") {
  const GraphPtr g = a1_graph();
  const auto constant = characteristic_map(e1(1), Monodromy::trivial(*g), g);
  CHECK(constant == MultElement::constant(g, e1(1)));
  CHECK(characteristic_map(e1(1), a1_flip(*g), g) == MultElement(g, {e1(1), e1(-1)}));

  const RootSystem rs = build_root_system(CartanMatrix::of_type("A", 2));
  const GraphPtr a2 = bruhat_graph(rs);
  const auto z = characteristic_map(LaurentPolynomial::monomial(LatticeVector{1, 0}),
                                    weyl_monodromy(rs, *a2), a2);
  CHECK(z.size() == 6);
  CHECK(check_membership(z).ok());
  CHECK(z.at("s1") == LaurentPolynomial::monomial(LatticeVector{-1, 0}));
  CHECK(z.at("s2") == LaurentPolynomial::monomial(LatticeVector{1, 1}));

  const auto edge = std::make_shared<const MomentGraph>(
      2, std::vector<std::string>{"a", "b"},
      std::vector<std::pair<std::string, std::string>>{{"a", "b"}},
      std::vector<MomentGraph::EdgeSpec>{{"a", "b", LatticeVector{1, 0}}});
  Monodromy broken = Monodromy::trivial(*edge);
  broken.maps[1] = LatticeAutomorphism::from_rows({{0, 1}, {1, 0}});
  CHECK_THROWS_AS(characteristic_map(LaurentPolynomial::one(2), broken, edge),
                  InvalidMonodromy);
}

TEST_CASE("twisted pull-back") {
  const RootSystem rs = build_root_system(CartanMatrix::of_type("A", 2));
  const GraphPtr g = bruhat_graph(rs);
  const Parabolic p(rs, {0});
  const Quotient q = build_quotient(*g, coset_relation(rs, *g, p));

  Generator gen(3);
  std::vector<LaurentPolynomial> values;
  for (VertexId v = 0; v < q.graph->size(); ++v) values.push_back(gen.laurent(2, 2, 2));
  // Constant tuples on the quotient are members.
  const MultElement zq = MultElement::constant(q.graph, values[0]);
  const MultElement pulled =
      twisted_pullback(zq, q.projection, Monodromy::trivial(*g), g);
  CHECK(pulled == MultElement::constant(g, values[0]));

  // Any quotient member pulls back to a coset-constant member.
  const MultElement qmember =
      characteristic_map(LaurentPolynomial::monomial(LatticeVector{0, 1}),
                         Monodromy::trivial(*q.graph), q.graph) *
      MultElement::constant(q.graph, values[1]);
  const MultElement back = twisted_pullback(qmember, q.projection, Monodromy::trivial(*g), g);
  for (VertexId v = 0; v < g->size(); ++v)
    CHECK(back[v] == qmember[q.projection.vertex_map[v]]);

  // From a point with xi_s = -id.
  const GraphPtr a1 = a1_graph();
  const auto point = std::make_shared<const MomentGraph>(
      1, std::vector<std::string>{"pt"}, std::vector<std::pair<std::string, std::string>>{},
      std::vector<MomentGraph::EdgeSpec>{});
  GraphMorphism to_point{{0, 0}, {LatticeAutomorphism::identity(1),
                                  LatticeAutomorphism::identity(1)}};
  const auto z = twisted_pullback(MultElement(point, {e1(2)}), to_point, a1_flip(*a1), a1);
  CHECK(z == MultElement(a1, {e1(2), e1(-2)}));
  CHECK(check_membership(z).ok());

  // Ring homomorphism.
  const MultElement a(point, {gen.laurent(1, 3, 2)}), b(point, {gen.laurent(1, 3, 2)});
  CHECK(twisted_pullback(a * b, to_point, a1_flip(*a1), a1) ==
        twisted_pullback(a, to_point, a1_flip(*a1), a1) *
            twisted_pullback(b, to_point, a1_flip(*a1), a1));
}

TEST_CASE("twisted pull-back hypothesis") {
  // Collapsing nothing: the identity map of a rank-2 edge, twisted by a
  // monodromy that moves the label off its line.
  const auto g = std::make_shared<const MomentGraph>(
      2, std::vector<std::string>{"a", "b"},
      std::vector<std::pair<std::string, std::string>>{{"a", "b"}},
      std::vector<MomentGraph::EdgeSpec>{{"a", "b", LatticeVector{1, 0}}});
  const GraphMorphism id = GraphMorphism::identity(*g);
  Monodromy xi;
  const auto shear = LatticeAutomorphism::from_rows({{1, 1}, {0, 1}});
  const auto swap = LatticeAutomorphism::from_rows({{0, 1}, {1, 0}});
  xi.maps = {swap, swap};
  const MultElement z = MultElement::constant(g, LaurentPolynomial::one(2));
  CHECK_THROWS_AS(twisted_pullback(z, id, xi, g), HypothesisViolated);
  xi.maps = {shear, shear};
  CHECK_NOTHROW(twisted_pullback(z, id, xi, g));
}

TEST_CASE("point classes") {
  const GraphPtr g = a1_graph();
  const auto xi = a1_flip(*g);
  const auto z = point_class<LaurentPolynomial>(g, xi, 1, {LatticeVector{1}});
  CHECK(z == MultElement(g, {lconst(0), lconst(1) - e1(1)}));

  const RootSystem rs = build_root_system(CartanMatrix::of_type("A", 2));
  const GraphPtr a2 = bruhat_graph(rs);
  const VertexId top = a2->maximal().front();
  const auto w0 = point_class<LaurentPolynomial>(a2, weyl_monodromy(rs, *a2), top,
                                                 incident_labels(*a2, top));
  for (VertexId v = 0; v < a2->size(); ++v) CHECK(w0[v].is_zero() == (v != top));

  CHECK_THROWS_AS(point_class<LaurentPolynomial>(g, xi, 1, {}), NotMember);
  CHECK(check_membership(MultElement::constant(g, lconst(0))).ok());
}

TEST_CASE("triangular family and forgetful map") {
  SUBCASE("A1") {
    const RootSystem rs = build_root_system(CartanMatrix::of_type("A", 1));
    const GraphPtr g = bruhat_graph(rs);
    const auto basis = triangular_family(g, weyl_monodromy(rs, *g),
                                         {right_multiplication(rs, *g, 0)});
    CHECK(basis.elements[g->index("s1")] == MultElement(g, {lconst(0), lconst(1) - e1(1)}));
    CHECK(basis.elements[g->index("e")] == MultElement::constant(g, lconst(1)));

    const auto f = forgetful_map(MultElement(g, {e1(1), e1(-1)}), basis);
    CHECK(f.coefficients[g->index("e")] == e1(1));
    CHECK(f.coefficients[g->index("s1")] == e1(-1) + lconst(1));
    CHECK(f.epsilon == std::vector<mpz_class>{1, 2});

    const auto ideal = forgetful_map(LaurentPolynomial::x(LatticeVector{1}) *
                                         basis.elements[g->index("e")],
                                     basis);
    CHECK(ideal.epsilon == std::vector<mpz_class>{0, 0});

    CHECK_THROWS_AS(forgetful_map(MultElement(g, {lconst(0), lconst(1)}), basis), NotInSpan);
  }

  SUBCASE("A2 and B2") {
    for (const char *type : {"A", "B"}) {
      const RootSystem rs = build_root_system(CartanMatrix::of_type(type, 2));
      const GraphPtr g = bruhat_graph(rs);
      const Monodromy xi = weyl_monodromy(rs, *g);
      const auto basis = triangular_family(
          g, xi, {right_multiplication(rs, *g, 0), right_multiplication(rs, *g, 1)});
      CHECK(basis.elements.size() == g->size());
      for (VertexId w = 0; w < g->size(); ++w) {
        const auto f = forgetful_map(basis.elements[w], basis);
        for (VertexId v = 0; v < g->size(); ++v) CHECK(f.epsilon[v] == (v == w ? 1 : 0));
      }
      Generator gen(5);
      for (const auto &z : momentrr::testing::random_members(g, xi, gen, 5)) {
        const auto f = forgetful_map(z, basis);
        MultElement sum = MultElement::constant(g, LaurentPolynomial(2));
        for (VertexId w = 0; w < g->size(); ++w) sum += f.coefficients[w] * basis.elements[w];
        CHECK(sum == z);
      }
    }
  }

  SUBCASE("one vertex") {
    const auto g = std::make_shared<const MomentGraph>(
        1, std::vector<std::string>{"pt"}, std::vector<std::pair<std::string, std::string>>{},
        std::vector<MomentGraph::EdgeSpec>{});
    const auto basis = triangular_family(g, Monodromy::trivial(*g), {});
    CHECK(basis.elements[0] == MultElement::constant(g, lconst(1)));
  }
}
