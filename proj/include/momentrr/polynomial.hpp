#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "momentrr/lattice.hpp"

namespace momentrr {

/// An element of the symmetric algebra S*(Lambda) tensored with Q: a
/// polynomial in the coordinates of a fixed basis of Lambda. Exponents are
/// nonnegative multi-indices; zero coefficients are never stored.
class Polynomial {
public:
  using Terms = std::map<LatticeVector, mpq_class, GradedLex>;

  Polynomial() = default;
  explicit Polynomial(std::size_t rank) : rank_(rank) {}

  static Polynomial constant(std::size_t rank, const mpq_class &c);
  static Polynomial one(std::size_t rank) { return constant(rank, 1); }
  // The degree-1 form lambda = sum_i lambda_i x_i.
  static Polynomial linear(const LatticeVector &lambda);
  // Product of degree-1 forms.
  static Polynomial product_of_linear(std::size_t rank,
                                      const std::vector<LatticeVector> &forms);

  std::size_t rank() const noexcept { return rank_; }
  const Terms &terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  mpq_class coeff(const LatticeVector &exponent) const;
  mpq_class constant_term() const;
  // -1 for the zero polynomial.
  Coord degree() const;
  Coord min_degree() const;
  Polynomial homogeneous_part(Coord k) const;
  bool is_integral() const;

  void add_term(const LatticeVector &exponent, const mpq_class &c);

  // Drops every term of degree > bound.
  Polynomial truncated(Coord bound) const;

  Polynomial &operator+=(const Polynomial &o);
  Polynomial &operator-=(const Polynomial &o);
  Polynomial &operator*=(const mpq_class &c);
  Polynomial operator-() const;
  friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const mpq_class &c) { return a *= c; }
  friend Polynomial operator*(const Polynomial &a, const Polynomial &b) {
    return multiply(a, b, -1);
  }
  // Product keeping only degrees <= bound (bound < 0: no truncation).
  static Polynomial multiply(const Polynomial &a, const Polynomial &b,
                             Coord bound);

  // Ring automorphism induced by phi: the basis form x_i goes to phi(e_i).
  Polynomial apply(const LatticeAutomorphism &phi) const;

  friend bool operator==(const Polynomial &a, const Polynomial &b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

  // "x1^2 + 1/2*x1*x2"
  std::string str() const;

private:
  std::size_t rank_ = 0;
  Terms terms_;
};

/// An element of S^{<=D}_Q(Lambda) = S*(Lambda)/I^{D+1} (x) Q.
class TruncatedSeries {
public:
  TruncatedSeries() = default;
  TruncatedSeries(Polynomial poly, Coord bound);

  static TruncatedSeries one(std::size_t rank, Coord bound) {
    return {Polynomial::one(rank), bound};
  }

  const Polynomial &poly() const noexcept { return poly_; }
  Coord bound() const noexcept { return bound_; }
  std::size_t rank() const noexcept { return poly_.rank(); }
  bool is_zero() const noexcept { return poly_.is_zero(); }

  // Re-truncates to a smaller bound.
  TruncatedSeries truncated(Coord bound) const;

  TruncatedSeries &operator+=(const TruncatedSeries &o);
  TruncatedSeries &operator-=(const TruncatedSeries &o);
  TruncatedSeries operator-() const { return {-poly_, bound_}; }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries &b) {
    return a += b;
  }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries &b) {
    return a -= b;
  }
  friend TruncatedSeries operator*(const TruncatedSeries &a,
                                   const TruncatedSeries &b);
  friend TruncatedSeries operator*(const TruncatedSeries &a, const mpq_class &c) {
    return {a.poly_ * c, a.bound_};
  }

  TruncatedSeries apply(const LatticeAutomorphism &phi) const {
    return {poly_.apply(phi), bound_};
  }

  friend bool operator==(const TruncatedSeries &, const TruncatedSeries &) = default;

  std::string str() const;

private:
  Polynomial poly_;
  Coord bound_ = 0;
};

enum class CoeffDomain { Integer, Rational };

struct LinearDivision {
  Polynomial quotient;
  Polynomial remainder; // zero iff the division is exact
};

/// p = quotient * gamma + remainder, after the same unimodular basis change
/// used for Laurent division (gamma becomes m * x_1).
LinearDivision divide_by_linear(const Polynomial &p, const LatticeVector &gamma);

/// Exact quotient p / gamma. With CoeffDomain::Integer the quotient must
/// also have integer coefficients. Throws NotDivisible otherwise.
Polynomial exact_divide_linear(const Polynomial &p, const LatticeVector &gamma,
                               CoeffDomain domain = CoeffDomain::Rational);

/// Truncated division: q * gamma agrees with s through degree D, and q
/// carries the bound D - 1.
TruncatedSeries exact_divide_linear(const TruncatedSeries &s,
                                    const LatticeVector &gamma);

/// sum_{j<=D} c_j * lambda^j for a univariate coefficient list c.
TruncatedSeries evaluate_at_form(const std::vector<mpq_class> &coeffs,
                                 const LatticeVector &lambda, Coord bound);

/// exp(lambda) = sum_{0<=j<=D} lambda^j / j!
TruncatedSeries truncated_exp(const LatticeVector &lambda, Coord bound);

/// Coefficients of x / (1 - e^{-x}) through degree D, by inverting the
/// series (1 - e^{-x}) / x (constant term 1).
std::vector<mpq_class> todd_coefficients(Coord bound);

/// lambda / (1 - exp(-lambda)) truncated at D. Throws ZeroVector.
TruncatedSeries todd_series(const LatticeVector &lambda, Coord bound);

} // namespace momentrr
