#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

#include "momentrr/lattice.hpp"

namespace momentrr {

/// An element of the group ring Z[Lambda]: a finite integer combination of
/// exponentials e^lambda. Zero coefficients are never stored.
class LaurentPolynomial {
public:
  using Terms = std::map<LatticeVector, mpz_class, GradedLex>;

  LaurentPolynomial() = default;
  explicit LaurentPolynomial(std::size_t rank) : rank_(rank) {}

  static LaurentPolynomial constant(std::size_t rank, const mpz_class &c);
  static LaurentPolynomial one(std::size_t rank) { return constant(rank, 1); }
  // c * e^lambda
  static LaurentPolynomial monomial(const LatticeVector &lambda,
                                    const mpz_class &c = 1);
  // x_lambda = 1 - e^{-lambda}
  static LaurentPolynomial x(const LatticeVector &lambda);

  std::size_t rank() const noexcept { return rank_; }
  const Terms &terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  mpz_class coeff(const LatticeVector &exponent) const;

  // Adds c * e^exponent in place.
  void add_term(const LatticeVector &exponent, const mpz_class &c);

  // Augmentation e^lambda -> 1, i.e. the sum of the coefficients.
  mpz_class augmentation() const;

  LaurentPolynomial &operator+=(const LaurentPolynomial &o);
  LaurentPolynomial &operator-=(const LaurentPolynomial &o);
  LaurentPolynomial &operator*=(const mpz_class &c);
  LaurentPolynomial operator-() const;
  friend LaurentPolynomial operator+(LaurentPolynomial a,
                                     const LaurentPolynomial &b) {
    return a += b;
  }
  friend LaurentPolynomial operator-(LaurentPolynomial a,
                                     const LaurentPolynomial &b) {
    return a -= b;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial &a,
                                     const LaurentPolynomial &b);
  friend LaurentPolynomial operator*(LaurentPolynomial a, const mpz_class &c) {
    return a *= c;
  }

  // Multiplication by the unit e^lambda.
  LaurentPolynomial shifted(const LatticeVector &lambda) const;
  // Ring automorphism induced by phi: e^lambda -> e^{phi(lambda)}.
  LaurentPolynomial apply(const LatticeAutomorphism &phi) const;

  friend bool operator==(const LaurentPolynomial &a,
                         const LaurentPolynomial &b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

  // Human-readable, canonical: "3*e^(1,0) - e^(0,-1)".
  std::string str() const;

private:
  std::size_t rank_ = 0;
  Terms terms_;
};

struct LaurentDivision {
  LaurentPolynomial quotient;
  LaurentPolynomial remainder; // zero iff the division is exact
};

/// z = quotient * x_gamma + remainder.
///
/// A unimodular change of basis sends gamma to m*e_1; the division by
/// 1 - t_1^{-m} is then univariate in t_1 with Laurent coefficients in the
/// remaining variables. The remainder vanishes iff x_gamma divides z.
LaurentDivision divide_by_x(const LaurentPolynomial &z,
                            const LatticeVector &gamma);

/// Exact quotient z / x_gamma; throws NotDivisible with the remainder.
LaurentPolynomial exact_divide_laurent(const LaurentPolynomial &z,
                                       const LatticeVector &gamma);

/// Exact quotient p / d for an arbitrary nonzero divisor d, by leading-term
/// reduction in the lexicographic group order on exponents.
/// Throws NotDivisible if d does not divide p in Z[Lambda].
LaurentPolynomial divide_exact(const LaurentPolynomial &p,
                               const LaurentPolynomial &d);

} // namespace momentrr
