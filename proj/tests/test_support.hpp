#pragma once

// Random generators shared by the unit and acceptance suites.

#include <cstdint>
#include <random>

#include "momentrr/laurent.hpp"
#include "momentrr/polynomial.hpp"

namespace momentrr::testing {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

class Generator {
public:
  explicit Generator(std::uint64_t seed = kDefaultSeed) : rng_(seed) {}

  Coord integer(Coord lo, Coord hi) {
    return std::uniform_int_distribution<Coord>(lo, hi)(rng_);
  }

  LatticeVector vector(std::size_t rank, Coord range) {
    LatticeVector v(rank);
    for (std::size_t i = 0; i < rank; ++i) v[i] = integer(-range, range);
    return v;
  }

  LatticeVector nonzero_vector(std::size_t rank, Coord range) {
    for (;;) {
      LatticeVector v = vector(rank, range);
      if (!v.is_zero()) return v;
    }
  }

  LatticeVector primitive_vector(std::size_t rank, Coord range) {
    for (;;) {
      LatticeVector v = vector(rank, range);
      if (v.is_primitive()) return v;
    }
  }

  LaurentPolynomial laurent(std::size_t rank, int terms, Coord exp_range,
                            Coord coeff_range = 5) {
    LaurentPolynomial p(rank);
    for (int t = 0; t < terms; ++t) {
      Coord c = 0;
      while (c == 0) c = integer(-coeff_range, coeff_range);
      p.add_term(vector(rank, exp_range), c);
    }
    return p;
  }

  Polynomial polynomial(std::size_t rank, int terms, Coord max_degree,
                        Coord coeff_range = 5) {
    Polynomial p(rank);
    for (int t = 0; t < terms; ++t) {
      LatticeVector e(rank);
      Coord budget = integer(0, max_degree);
      for (std::size_t i = 0; i + 1 < rank && budget > 0; ++i) {
        e[i] = integer(0, budget);
        budget -= e[i];
      }
      if (rank > 0) e[rank - 1] += budget;
      Coord num = 0;
      while (num == 0) num = integer(-coeff_range, coeff_range);
      mpq_class c(mpz_class(static_cast<long>(num)),
                  mpz_class(static_cast<long>(integer(1, 3))));
      c.canonicalize();
      p.add_term(e, c);
    }
    return p;
  }

  std::mt19937_64 &engine() { return rng_; }

private:
  std::mt19937_64 rng_;
};

} // namespace momentrr::testing
