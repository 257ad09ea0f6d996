#pragma once

#include <string>
#include <vector>

#include "momentrr/errors.hpp"
#include "momentrr/laurent.hpp"
#include "momentrr/moment_graph.hpp"
#include "momentrr/parallel.hpp"
#include "momentrr/polynomial.hpp"

namespace momentrr {

// The three coefficient rings of a structure algebra. `bound` is only read
// for truncated series.
template <class Ring> struct RingTraits;

template <> struct RingTraits<LaurentPolynomial> {
  static constexpr const char *flavor = "mult";
  static LaurentPolynomial one(std::size_t rank, Coord) {
    return LaurentPolynomial::one(rank);
  }
  static LaurentPolynomial zero(std::size_t rank, Coord) {
    return LaurentPolynomial(rank);
  }
  static LaurentPolynomial x(const LatticeVector &l, Coord) {
    return LaurentPolynomial::x(l);
  }
  static Coord bound(const LaurentPolynomial &) { return 0; }
  static LaurentPolynomial divide_x(const LaurentPolynomial &z, const LatticeVector &l) {
    return exact_divide_laurent(z, l);
  }
};

template <> struct RingTraits<Polynomial> {
  static constexpr const char *flavor = "add";
  static Polynomial one(std::size_t rank, Coord) { return Polynomial::one(rank); }
  static Polynomial zero(std::size_t rank, Coord) { return Polynomial(rank); }
  static Polynomial x(const LatticeVector &l, Coord) { return Polynomial::linear(l); }
  static Coord bound(const Polynomial &) { return 0; }
  static Polynomial divide_x(const Polynomial &z, const LatticeVector &l) {
    return exact_divide_linear(z, l, CoeffDomain::Integer);
  }
};

template <> struct RingTraits<TruncatedSeries> {
  static constexpr const char *flavor = "trunc";
  static TruncatedSeries one(std::size_t rank, Coord bound) {
    return TruncatedSeries::one(rank, bound);
  }
  static TruncatedSeries zero(std::size_t rank, Coord bound) {
    return TruncatedSeries(Polynomial(rank), bound);
  }
  static TruncatedSeries x(const LatticeVector &l, Coord bound) {
    return TruncatedSeries(Polynomial::linear(l), bound);
  }
  static Coord bound(const TruncatedSeries &s) { return s.bound(); }
  static TruncatedSeries divide_x(const TruncatedSeries &z, const LatticeVector &l) {
    return exact_divide_linear(z, l);
  }
};

/// A tuple (z_v) of ring elements indexed by the vertices of a moment graph.
/// Membership in the structure algebra is not enforced on construction; see
/// check_membership.
template <class Ring> class StructureElement {
public:
  StructureElement() = default;
  // Throws SchemaError on a size or rank mismatch.
  StructureElement(GraphPtr graph, std::vector<Ring> values);

  static StructureElement constant(GraphPtr graph, const Ring &q) {
    const std::size_t n = graph->size();
    return StructureElement(std::move(graph), std::vector<Ring>(n, q));
  }

  const MomentGraph &graph() const { return *graph_; }
  const GraphPtr &graph_ptr() const noexcept { return graph_; }
  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<Ring> &values() const noexcept { return values_; }
  const Ring &operator[](VertexId v) const { return values_.at(v); }
  const Ring &at(const std::string &id) const { return values_.at(graph_->index(id)); }

  StructureElement &operator+=(const StructureElement &o);
  StructureElement &operator-=(const StructureElement &o);
  StructureElement &operator*=(const StructureElement &o);
  StructureElement &operator*=(const Ring &s); // module action of S

  friend StructureElement operator+(StructureElement a, const StructureElement &b) {
    return a += b;
  }
  friend StructureElement operator-(StructureElement a, const StructureElement &b) {
    return a -= b;
  }
  friend StructureElement operator*(StructureElement a, const StructureElement &b) {
    return a *= b;
  }
  friend StructureElement operator*(const Ring &s, StructureElement a) { return a *= s; }

  friend bool operator==(const StructureElement &a, const StructureElement &b) {
    return a.values_ == b.values_ && a.graph_->ids() == b.graph_->ids();
  }

  std::string str() const;

private:
  void require_same_graph(const StructureElement &o) const;

  GraphPtr graph_;
  std::vector<Ring> values_;
};

using MultElement = StructureElement<LaurentPolynomial>;
using AddElement = StructureElement<Polynomial>;
using TruncElement = StructureElement<TruncatedSeries>;

/// Divisibility of z_v - z_w by x_{l(v->w)} on every edge. Violations are
/// reported under rule "membership" in edge order.
template <class Ring>
ValidationReport check_membership(const StructureElement<Ring> &z,
                                  Exec exec = Exec::Parallel);

/// c^xi(q) = (xi_v(q))_v. Throws InvalidMonodromy.
template <class Ring>
StructureElement<Ring> characteristic_map(const Ring &q, const Monodromy &xi,
                                          GraphPtr graph);

/// (z'_{v'}) -> (xi_v(z'_{f(v)}))_v. Throws PreconditionFailed for an invalid
/// morphism, InvalidMonodromy, or HypothesisViolated naming the edge where
/// xi_v(l'(f_E(v-w))) is not in l(v-w)Z.
template <class Ring>
StructureElement<Ring> twisted_pullback(const StructureElement<Ring> &z,
                                        const GraphMorphism &f, const Monodromy &xi,
                                        GraphPtr source);

/// prod_{beta in L} xi_top(x_beta) at `top`, zero elsewhere. Throws NotMember
/// if the result is not in the structure algebra.
template <class Ring>
StructureElement<Ring> point_class(GraphPtr graph, const Monodromy &xi, VertexId top,
                                   const std::vector<LatticeVector> &labels,
                                   Coord bound = 0);

/// Labels of the edges incident to v.
std::vector<LatticeVector> incident_labels(const MomentGraph &g, VertexId v);

} // namespace momentrr
