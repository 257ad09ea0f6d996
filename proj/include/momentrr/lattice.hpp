#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace momentrr {

using Coord = std::int64_t;

/// An element of the lattice Z^n, written in a fixed basis.
///
/// Used both for lattice points (edge labels, roots, weights) and for the
/// exponents of Laurent monomials e^lambda.
class LatticeVector {
public:
  LatticeVector() = default;
  explicit LatticeVector(std::size_t rank) : coords_(rank, 0) {}
  explicit LatticeVector(std::vector<Coord> coords)
      : coords_(std::move(coords)) {}
  LatticeVector(std::initializer_list<Coord> coords) : coords_(coords) {}

  static LatticeVector unit(std::size_t rank, std::size_t i);

  std::size_t rank() const noexcept { return coords_.size(); }
  const std::vector<Coord> &coords() const noexcept { return coords_; }
  Coord operator[](std::size_t i) const { return coords_[i]; }
  Coord &operator[](std::size_t i) { return coords_[i]; }

  bool is_zero() const noexcept;
  // gcd of the coordinates (0 for the zero vector).
  Coord content() const noexcept;
  bool is_primitive() const noexcept { return content() == 1; }
  Coord degree() const noexcept; // coordinate sum

  LatticeVector &operator+=(const LatticeVector &o);
  LatticeVector &operator-=(const LatticeVector &o);
  LatticeVector operator-() const;
  friend LatticeVector operator+(LatticeVector a, const LatticeVector &b) {
    return a += b;
  }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector &b) {
    return a -= b;
  }
  friend LatticeVector operator*(Coord k, LatticeVector v);

  friend bool operator==(const LatticeVector &, const LatticeVector &) = default;
  // Lexicographic; a total order compatible with addition.
  friend std::strong_ordering operator<=>(const LatticeVector &a,
                                          const LatticeVector &b) {
    return a.coords_ <=> b.coords_;
  }

  std::string str() const;

private:
  std::vector<Coord> coords_;
};

// v == k * w for some integer k (w nonzero).
bool is_integer_multiple(const LatticeVector &v, const LatticeVector &w);
// v and w are linearly dependent (both nonzero).
bool proportional(const LatticeVector &v, const LatticeVector &w);

/// Graded-lexicographic comparison: total degree first, then lexicographic.
/// This is the canonical term order for every serialized polynomial.
struct GradedLex {
  bool operator()(const LatticeVector &a, const LatticeVector &b) const {
    const Coord da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.coords() < b.coords();
  }
};

/// A unimodular integer matrix acting on coordinate columns.
class LatticeAutomorphism {
public:
  // Builds from rows; throws NotUnimodular unless det = +-1.
  static LatticeAutomorphism from_rows(std::vector<std::vector<Coord>> rows);
  static LatticeAutomorphism identity(std::size_t rank);
  static LatticeAutomorphism negation(std::size_t rank);

  std::size_t rank() const noexcept { return rank_; }
  Coord at(std::size_t r, std::size_t c) const { return m_[r * rank_ + c]; }
  std::vector<std::vector<Coord>> rows() const;

  LatticeVector apply(const LatticeVector &v) const;
  LatticeVector operator()(const LatticeVector &v) const { return apply(v); }
  // Image of the i-th basis vector (the i-th column).
  LatticeVector column(std::size_t i) const;

  LatticeAutomorphism inverse() const;
  int determinant() const; // +1 or -1
  bool is_identity() const;

  // (a * b)(v) = a(b(v)).
  friend LatticeAutomorphism operator*(const LatticeAutomorphism &a,
                                       const LatticeAutomorphism &b);
  friend bool operator==(const LatticeAutomorphism &,
                         const LatticeAutomorphism &) = default;
  friend auto operator<=>(const LatticeAutomorphism &a,
                          const LatticeAutomorphism &b) {
    return a.m_ <=> b.m_;
  }

  std::string str() const;

private:
  LatticeAutomorphism(std::size_t rank, std::vector<Coord> m)
      : rank_(rank), m_(std::move(m)) {}

  std::size_t rank_ = 0;
  std::vector<Coord> m_; // row-major
};

struct UnimodularCompletion {
  LatticeAutomorphism transform; // transform(gamma) = multiplier * e_1
  LatticeAutomorphism inverse;
  Coord multiplier = 0; // content of gamma, positive
};

/// Row-reduces the column gamma to (m, 0, ..., 0) by unimodular row
/// operations (the Hermite normal form of a single column).
/// Throws ZeroVector for gamma = 0.
UnimodularCompletion complete_to_unimodular(const LatticeVector &gamma);

void require_rank(std::size_t expected, std::size_t got, const char *what);

} // namespace momentrr
