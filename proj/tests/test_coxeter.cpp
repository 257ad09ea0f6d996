#include "doctest.h"

#include <set>

#include "momentrr/coxeter.hpp"
#include "momentrr/errors.hpp"

using namespace momentrr;

namespace {

std::set<LatticeVector> root_set(const RootSystem &rs) {
  return {rs.positive_roots().begin(), rs.positive_roots().end()};
}

struct TypeCase {
  const char *type;
  std::size_t rank;
  std::size_t order;
  std::size_t positive_roots;
};

const TypeCase kCatalog[] = {{"A", 1, 2, 1},   {"A", 2, 6, 3},   {"A", 3, 24, 6},
                             {"A", 4, 120, 10}, {"B", 2, 8, 4},   {"B", 3, 48, 9},
                             {"C", 3, 48, 9},  {"D", 4, 192, 12}, {"G", 2, 12, 6}};

} // namespace

TEST_CASE("root systems of small types") {
  const auto a1 = build_root_system(CartanMatrix::of_type("A", 1));
  CHECK(root_set(a1) == std::set<LatticeVector>{{1}});

  const auto a2 = build_root_system(CartanMatrix::of_type("A", 2));
  CHECK(root_set(a2) == std::set<LatticeVector>{{1, 0}, {0, 1}, {1, 1}});
  CHECK(a2.order() == 6);

  // Bourbaki labelling: alpha_2 is the short root of B2.
  const auto b2 = build_root_system(CartanMatrix::of_type("B", 2));
  CHECK(root_set(b2) == std::set<LatticeVector>{{1, 0}, {0, 1}, {1, 1}, {1, 2}});
  CHECK(b2.order() == 8);
  const auto c2 = build_root_system(CartanMatrix::of_type("C", 2));
  CHECK(root_set(c2) == std::set<LatticeVector>{{1, 0}, {0, 1}, {1, 1}, {2, 1}});
}

TEST_CASE("catalog sizes, primitivity and lengths") {
  for (const auto &tc : kCatalog) {
    CAPTURE(tc.type);
    CAPTURE(tc.rank);
    const auto rs = build_root_system(CartanMatrix::of_type(tc.type, tc.rank));
    CHECK(rs.order() == tc.order);
    CHECK(rs.positive_roots().size() == tc.positive_roots);
    for (const auto &beta : rs.positive_roots()) CHECK(beta.is_primitive());
    std::size_t longest = 0;
    for (ElementId w = 0; w < rs.order(); ++w) {
      CHECK(rs.length(w) == rs.inversions(w));
      CHECK(rs.multiply(w, rs.inverse(w)) == 0);
      longest = std::max(longest, rs.length(w));
    }
    CHECK(longest == tc.positive_roots);
    // s_beta(beta) = -beta
    for (std::size_t k = 0; k < rs.positive_roots().size(); ++k)
      CHECK(rs.reflection(k)(rs.positive_roots()[k]) == -rs.positive_roots()[k]);
  }
}

TEST_CASE("element names are lexicographically smallest reduced words") {
  const auto a2 = build_root_system(CartanMatrix::of_type("A", 2));
  std::set<std::string> names;
  for (ElementId w = 0; w < a2.order(); ++w) names.insert(a2.name(w));
  CHECK(names == std::set<std::string>{"e", "s1", "s2", "s1s2", "s2s1", "s1s2s1"});
  CHECK(a2.name(0) == "e");
}

TEST_CASE("non-finite Cartan matrices are rejected") {
  CHECK_THROWS_AS(build_root_system(CartanMatrix({{2, -2}, {-2, 2}})), NotFiniteType);
  CHECK_THROWS_AS(build_root_system(CartanMatrix({{2, -3}, {-3, 2}})), NotFiniteType);
  CHECK_THROWS_AS(CartanMatrix({{2, 1}, {-1, 2}}), NotFiniteType);
  CHECK_THROWS_AS(CartanMatrix({{2, 0}, {-1, 2}}), NotFiniteType);
  CHECK_THROWS_AS(CartanMatrix::of_type("E", 6), SchemaError);
}

TEST_CASE("Bruhat graphs") {
  const auto a1 = bruhat_graph(build_root_system(CartanMatrix::of_type("A", 1)));
  CHECK(a1->size() == 2);
  REQUIRE(a1->edges().size() == 1);
  CHECK(a1->edges()[0].label == LatticeVector{1});
  CHECK(validate_graph(*a1).ok());

  const auto a2 = bruhat_graph(build_root_system(CartanMatrix::of_type("A", 2)));
  CHECK(a2->size() == 6);
  CHECK(a2->edges().size() == 9);
  const auto b2 = bruhat_graph(build_root_system(CartanMatrix::of_type("B", 2)));
  CHECK(b2->size() == 8);
  CHECK(b2->edges().size() == 16);

  for (const auto &tc : kCatalog) {
    const auto g = bruhat_graph(build_root_system(CartanMatrix::of_type(tc.type, tc.rank)));
    CHECK(validate_graph(*g).ok());
    CHECK(g->edges().size() == tc.order * tc.positive_roots / 2);
  }
}

TEST_CASE("parabolic Bruhat graphs") {
  const auto rs = build_root_system(CartanMatrix::of_type("A", 2));
  const auto g = parabolic_graph(rs, Parabolic(rs, {0}));
  CHECK(g->ids() == std::vector<std::string>{"e", "s1s2", "s2"});
  CHECK(g->edges().size() == 3);
  const auto *e1 = g->edge(g->index("e"), g->index("s2"));
  const auto *e2 = g->edge(g->index("s2"), g->index("s1s2"));
  const auto *e3 = g->edge(g->index("e"), g->index("s1s2"));
  REQUIRE(e1);
  REQUIRE(e2);
  REQUIRE(e3);
  CHECK(e1->label == LatticeVector{0, 1});
  CHECK(e2->label == LatticeVector{1, 0});
  CHECK(e3->label == LatticeVector{1, 1});
  CHECK(validate_graph(*g).ok());

  const auto full = parabolic_graph(rs, Parabolic(rs, {}));
  const auto bruhat = bruhat_graph(rs);
  CHECK(check_isomorphism(GraphMorphism::by_ids(*full, *bruhat), *full, *bruhat));

  const auto point = parabolic_graph(rs, Parabolic(rs, {0, 1}));
  CHECK(point->size() == 1);
  CHECK(point->edges().empty());
}

TEST_CASE("parabolic subgroup data") {
  const auto rs = build_root_system(CartanMatrix::of_type("A", 3));
  const Parabolic p(rs, {0, 1});
  CHECK(p.representatives().size() == 4);
  for (ElementId rep : p.representatives()) CHECK(p.coset(rep).size() == 6);
  CHECK(p.positive_roots(rs).size() == 3);
  for (ElementId w = 0; w < rs.order(); ++w) {
    const ElementId r = p.representative(w);
    CHECK(rs.length(r) <= rs.length(w));
    const ElementId u = rs.multiply(rs.inverse(r), w);
    // r^{-1} w lies in W_Theta.
    CHECK(p.representative(u) == 0);
  }
}

TEST_CASE("Weyl monodromy and right multiplication matching") {
  const auto rs = build_root_system(CartanMatrix::of_type("A", 2));
  const auto g = bruhat_graph(rs);
  CHECK(check_monodromy(weyl_monodromy(rs, *g), *g).ok());
  for (std::size_t i = 0; i < 2; ++i) {
    const auto m = right_multiplication(rs, *g, i);
    CHECK(check_matching(m, *g).ok());
    CHECK(matching_relation(m, *g).classes().size() == 3);
  }
}
