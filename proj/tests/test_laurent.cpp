#include "doctest.h"

#include "momentrr/errors.hpp"
#include "momentrr/laurent.hpp"
#include "test_support.hpp"

using namespace momentrr;

namespace {
using LP = LaurentPolynomial;
LP e(const LatticeVector &v) { return LP::monomial(v); }
} // namespace

TEST_CASE("x_alpha divided by x_alpha is 1") {
  const LatticeVector a{1};
  CHECK(exact_divide_laurent(LP::x(a), a) == LP::one(1));
}

TEST_CASE("1 - e^{-2a} divided by x_a is 1 + e^{-a}") {
  const LatticeVector a{1};
  const LP z = LP::x(LatticeVector{2});
  CHECK(exact_divide_laurent(z, a) == LP::one(1) + e({-1}));
}

TEST_CASE("a unit is not divisible by x_a") {
  const LatticeVector a{1};
  CHECK_THROWS_AS(exact_divide_laurent(e(a), a), NotDivisible);
  const auto d = divide_by_x(e(a), a);
  CHECK_FALSE(d.remainder.is_zero());
  CHECK(d.quotient * LP::x(a) + d.remainder == e(a));
}

TEST_CASE("imprimitive divisor: x_{2a} divides 1 - e^{-4a} but not 1 - e^{-a}") {
  const LatticeVector two_a{2, 0};
  const LP z = LP::x(LatticeVector{4, 0});
  CHECK(exact_divide_laurent(z, two_a) == LP::one(2) + e({-2, 0}));
  CHECK_THROWS_AS(exact_divide_laurent(LP::x(LatticeVector{1, 0}), two_a),
                  NotDivisible);
}

TEST_CASE("division with remainder reconstructs the input") {
  testing::Generator gen(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rank = 1 + trial % 3;
    const LP z = gen.laurent(rank, 6, 3);
    const LatticeVector g = gen.nonzero_vector(rank, 3);
    const auto d = divide_by_x(z, g);
    CHECK(d.quotient * LP::x(g) + d.remainder == z);
  }
}

TEST_CASE("round trip: (z * x_g) / x_g == z") {
  testing::Generator gen(12);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rank = 1 + trial % 3;
    const LP z = gen.laurent(rank, 5, 4);
    const LatticeVector g = gen.primitive_vector(rank, 4);
    CHECK(exact_divide_laurent(z * LP::x(g), g) == z);
  }
}

TEST_CASE("x_{-g} = x_g * (-e^{g})") {
  testing::Generator gen(13);
  for (int trial = 0; trial < 50; ++trial) {
    const LatticeVector g = gen.nonzero_vector(3, 5);
    CHECK(LP::x(-g) == LP::x(g) * LP::monomial(g, -1));
  }
}

TEST_CASE("automorphisms act as ring homomorphisms") {
  const auto neg = LatticeAutomorphism::negation(1);
  CHECK(LP::x(LatticeVector{1}).apply(neg) == LP::one(1) - e({1}));
  CHECK(LP::x(LatticeVector{3}).apply(LatticeAutomorphism::identity(1)) ==
        LP::x(LatticeVector{3}));

  const auto phi = LatticeAutomorphism::from_rows({{1, 1}, {0, 1}});
  const auto psi = LatticeAutomorphism::from_rows({{0, -1}, {1, 0}});
  testing::Generator gen(14);
  for (int trial = 0; trial < 40; ++trial) {
    const LP a = gen.laurent(2, 4, 3), b = gen.laurent(2, 4, 3);
    CHECK((a * b).apply(phi) == a.apply(phi) * b.apply(phi));
    CHECK(a.apply(phi * psi) == a.apply(psi).apply(phi));
  }
  CHECK_THROWS_AS(LP::one(2).apply(neg), RankMismatch);
}

TEST_CASE("general exact division") {
  testing::Generator gen(15);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rank = 1 + trial % 3;
    const LP a = gen.laurent(rank, 4, 3);
    LP d = gen.laurent(rank, 3, 2);
    if (d.is_zero()) continue;
    CHECK(divide_exact(a * d, d) == a);
  }
  const LatticeVector a{1, 0};
  CHECK_THROWS_AS(divide_exact(LP::one(2), LP::x(a)), NotDivisible);
  CHECK_THROWS_AS(divide_exact(LP::constant(2, 3), LP::constant(2, 2)),
                  NotDivisible);
}

TEST_CASE("augmentation and canonical printing") {
  const LP z = e({1, 0}) * mpz_class(3) - e({0, -1}) + LP::one(2);
  CHECK(z.augmentation() == 3);
  CHECK(z.str() == "-e^(0,-1) + 1 + 3*e^(1,0)");
}
