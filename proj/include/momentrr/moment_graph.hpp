#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "momentrr/errors.hpp"
#include "momentrr/lattice.hpp"

namespace momentrr {

using VertexId = std::size_t;

/// A moment graph on a lattice of fixed rank: a finite poset of vertices
/// with directed edges labelled by lattice vectors.
///
/// Vertex ids are opaque strings; internally vertices are numbered in the
/// lexicographic order of their ids. The order is given by generating pairs
/// ("covers"); its reflexive-transitive closure and its Hasse diagram are
/// computed once at construction.
///
/// Construction only checks referential integrity (unknown or duplicate ids
/// raise SchemaError). The axioms are checked by validate_graph so that
/// invalid graphs can be loaded and reported on.
class MomentGraph {
public:
  struct Edge {
    VertexId tail;
    VertexId head;
    LatticeVector label;
  };

  struct EdgeSpec {
    std::string from;
    std::string to;
    LatticeVector label;
  };

  MomentGraph(std::size_t rank, std::vector<std::string> vertices,
              const std::vector<std::pair<std::string, std::string>> &covers,
              const std::vector<EdgeSpec> &edges);

  std::size_t rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return ids_.size(); }
  const std::string &id(VertexId v) const { return ids_.at(v); }
  const std::vector<std::string> &ids() const noexcept { return ids_; }
  VertexId index(const std::string &id) const; // throws SchemaError
  std::optional<VertexId> find(const std::string &id) const;

  bool leq(VertexId a, VertexId b) const { return leq_[a][b]; }
  bool less(VertexId a, VertexId b) const { return a != b && leq_[a][b]; }
  // a is covered by b in the closure of the order.
  bool covered_by(VertexId a, VertexId b) const { return hasse_[a][b]; }
  std::vector<std::pair<VertexId, VertexId>> hasse_pairs() const;
  const std::vector<std::pair<VertexId, VertexId>> &generators() const noexcept {
    return generators_;
  }

  const std::vector<Edge> &edges() const noexcept { return edges_; }
  // Indices into edges() of the edges incident to v (either direction).
  const std::vector<std::size_t> &incident(VertexId v) const {
    return incident_.at(v);
  }
  // The edge tail -> head, if present.
  const Edge *edge(VertexId tail, VertexId head) const;
  // The edge between a and b in either direction.
  const Edge *edge_between(VertexId a, VertexId b) const;
  VertexId other_end(const Edge &e, VertexId v) const {
    return e.tail == v ? e.head : e.tail;
  }

  // Vertices sorted so that u < v in the order implies u comes first.
  std::vector<VertexId> linear_extension() const;
  // Minimal / maximal elements.
  std::vector<VertexId> minimal() const;
  std::vector<VertexId> maximal() const;

  // Full subgraph on the given vertices (edges and order restricted).
  MomentGraph full_subgraph(const std::vector<VertexId> &vertices) const;

private:
  std::size_t rank_;
  std::vector<std::string> ids_;
  std::map<std::string, VertexId> index_;
  std::vector<std::pair<VertexId, VertexId>> generators_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incident_;
  std::map<std::pair<VertexId, VertexId>, std::size_t> edge_index_;
  std::vector<std::vector<bool>> leq_;
  std::vector<std::vector<bool>> hasse_;
};

using GraphPtr = std::shared_ptr<const MomentGraph>;

/// (f_V, {f_{l,v}}): a vertex map and one lattice automorphism per source
/// vertex. Indices refer to the source and target graphs supplied alongside.
struct GraphMorphism {
  std::vector<VertexId> vertex_map;
  std::vector<LatticeAutomorphism> lattice_maps;

  static GraphMorphism identity(const MomentGraph &g);
  // Vertices matched by id, identity lattice maps. Throws SchemaError if an
  // id of g is missing from target.
  static GraphMorphism by_ids(const MomentGraph &g, const MomentGraph &target);
};

/// A family {xi_v} of lattice automorphisms indexed by the vertices.
struct Monodromy {
  std::vector<LatticeAutomorphism> maps;

  static Monodromy trivial(const MomentGraph &g);
  const LatticeAutomorphism &operator[](VertexId v) const { return maps.at(v); }
};

/// A partition of the vertex set. Classes are kept sorted, and ordered by
/// their smallest vertex.
class EquivalenceRelation {
public:
  // Throws SchemaError unless `classes` partitions {0, ..., n-1}.
  EquivalenceRelation(std::size_t n, std::vector<std::vector<VertexId>> classes);

  static EquivalenceRelation trivial(std::size_t n); // one class
  static EquivalenceRelation discrete(std::size_t n);

  const std::vector<std::vector<VertexId>> &classes() const noexcept {
    return classes_;
  }
  std::size_t class_of(VertexId v) const { return class_of_.at(v); }
  bool equivalent(VertexId a, VertexId b) const {
    return class_of_.at(a) == class_of_.at(b);
  }

private:
  std::vector<std::vector<VertexId>> classes_;
  std::vector<std::size_t> class_of_;
};

/// An involution on the vertex set.
struct SpecialMatching {
  std::vector<VertexId> pairing;
  VertexId operator()(VertexId v) const { return pairing.at(v); }
};

// --- axiom checkers ---------------------------------------------------------

ValidationReport validate_graph(const MomentGraph &g);

ValidationReport validate_morphism(const GraphMorphism &f, const MomentGraph &g,
                                   const MomentGraph &target);

ValidationReport check_monodromy(const Monodromy &xi, const MomentGraph &g);

ValidationReport check_relation(const EquivalenceRelation &r,
                                const MomentGraph &g);

// Definition of a special matching plus the label conditions needed for its
// two-element classes to form a compatible relation.
ValidationReport check_matching(const SpecialMatching &m, const MomentGraph &g);

// --- constructions ----------------------------------------------------------

struct Quotient {
  GraphPtr graph;
  GraphMorphism projection; // identity lattice maps
  // Quotient vertex of each class of the relation.
  std::vector<VertexId> vertex_of_class;
};

/// Name of the quotient vertex for a class: its unique minimal element if
/// there is one, otherwise its lexicographically smallest member.
std::string class_name(const MomentGraph &g, const std::vector<VertexId> &cls);

/// Quotient graph by a compatible relation. Edges inside a class are
/// dropped; the order is the transitive closure of the quotient edges.
/// Throws IncompatibleRelation if check_relation fails.
Quotient build_quotient(const MomentGraph &g, const EquivalenceRelation &r);

/// The relation with classes {v, M(v)}. Throws NotSpecialMatching.
EquivalenceRelation matching_relation(const SpecialMatching &m,
                                      const MomentGraph &g);

/// f_V bijective and every target edge has exactly one source edge above it.
bool check_isomorphism(const GraphMorphism &f, const MomentGraph &g,
                       const MomentGraph &target);

} // namespace momentrr
