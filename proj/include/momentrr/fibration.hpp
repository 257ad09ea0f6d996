#pragma once

#include <map>
#include <utility>
#include <vector>

#include "momentrr/moment_graph.hpp"
#include "momentrr/parallel.hpp"
#include "momentrr/structure_algebra.hpp"

namespace momentrr {

/// Isomorphism between two fibres: a vertex bijection (total-graph indices)
/// and one lattice automorphism.
struct FiberIso {
  std::map<VertexId, VertexId> vertex_map;
  LatticeAutomorphism lattice_map;
};

/// Fibre data at a vertex y: the labels of fibre edges at y, the set N_y and
/// the sign (-1)^{#N_y}.
struct FiberData {
  std::vector<LatticeVector> fiber_labels;
  std::vector<LatticeVector> n_set;
  int sign = 1;
};

/// A quotient map G -> G/~ with fibre isomorphisms for every ordered pair of
/// classes, a distinguished class and a monodromy.
class FiberBundle {
public:
  using ClassPair = std::pair<std::size_t, std::size_t>;

  // Throws IncompatibleRelation if the relation is not compatible, and
  // SchemaError if the base class is out of range.
  FiberBundle(GraphPtr total, EquivalenceRelation relation, std::size_t base_class,
              std::map<ClassPair, FiberIso> isos, Monodromy xi);

  const MomentGraph &total() const { return *total_; }
  const GraphPtr &total_ptr() const noexcept { return total_; }
  const EquivalenceRelation &relation() const noexcept { return relation_; }
  const Quotient &quotient() const noexcept { return quotient_; }
  const MomentGraph &base() const { return *quotient_.graph; }
  std::size_t base_class() const noexcept { return base_class_; }
  std::size_t class_count() const noexcept { return relation_.classes().size(); }
  const std::vector<VertexId> &members(std::size_t cls) const {
    return relation_.classes().at(cls);
  }
  // Class whose quotient vertex is q.
  std::size_t class_at(VertexId q) const { return class_at_.at(q); }
  const std::map<ClassPair, FiberIso> &isos() const noexcept { return isos_; }
  const FiberIso *iso(std::size_t from, std::size_t to) const;
  const Monodromy &xi() const noexcept { return xi_; }
  const MomentGraph &fiber(std::size_t cls) const { return fibers_.at(cls); }

  // Labels of fibre edges at a vertex.
  std::vector<LatticeVector> fiber_labels(VertexId y) const;
  // L_[v], read off the first member of the class.
  std::vector<LatticeVector> class_labels(std::size_t cls) const;

private:
  GraphPtr total_;
  EquivalenceRelation relation_;
  Quotient quotient_;
  std::size_t base_class_;
  std::map<ClassPair, FiberIso> isos_;
  Monodromy xi_;
  std::vector<MomentGraph> fibers_;
  std::vector<std::size_t> class_at_;
};

/// Throws AmbiguousSign if some label and its negative both occur at y.
std::vector<FiberData> compute_fiber_data(const FiberBundle &b);

/// FB1 (identity and cocycle), FB2 and fibre isomorphy.
ValidationReport check_fibration(const FiberBundle &b);

/// Monodromy axiom, label transport f^{[v],[e]}(L_[v]) = L_[e], CF1, CF2a, CF2b.
ValidationReport check_compatibility(const FiberBundle &b);

/// REG1: constant fibre labels on classes; REG2: primitive labels;
/// REG3: pairwise non-proportional labels within a class.
ValidationReport check_regularity(const FiberBundle &b);

struct PushOptions {
  bool unsafe = false; // skip the precondition checks
  Exec exec = Exec::Parallel;
};

/// Multiplicative push-forward, computed as
///   (sum_y sgn(y) z_y e^{sum_{beta in N_y} xi_y(beta)}) / prod_{gamma in L_[v]} x_gamma.
/// Throws PreconditionFailed, NotMember or NotDivisible.
MultElement pushforward_mult(const FiberBundle &b, const MultElement &z,
                             const PushOptions &opt = {});

/// Additive push-forward (sum_y sgn(y) z_y) / prod_gamma gamma. For truncated
/// input of bound D the output bound is D - #L_[e].
AddElement pushforward_add(const FiberBundle &b, const AddElement &z,
                           const PushOptions &opt = {});
TruncElement pushforward_add(const FiberBundle &b, const TruncElement &z,
                             const PushOptions &opt = {});

/// Untwisted pull-back of an element of the quotient along the projection.
MultElement pullback(const FiberBundle &b, const MultElement &z);

/// pi_*((pi^id)^*(z') z) == z' pi_*(z).
bool projection_check(const FiberBundle &b, const MultElement &zq, const MultElement &z,
                      const PushOptions &opt = {});

/// (pi^id)^* o pi_*.
MultElement push_pull(const FiberBundle &b, const MultElement &z,
                      const PushOptions &opt = {});

/// The fibration of a special matching: classes {v, M(v)}, base class the
/// class of the minimal vertex, fibre maps lower -> lower and lattice maps
/// B_d B_c^{-1} where B_c sends the base label to the label of class c.
/// Throws NotSpecialMatching or PreconditionFailed when the fibre labels of
/// two classes have different content.
FiberBundle matching_bundle(GraphPtr g, const SpecialMatching &m, Monodromy xi);

} // namespace momentrr
