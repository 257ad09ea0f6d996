#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "momentrr/lattice.hpp"
#include "momentrr/fibration.hpp"
#include "momentrr/moment_graph.hpp"

namespace momentrr {

/// A generalized Cartan matrix with a_ij = alpha_j(h_i), so that the simple
/// reflection s_i acts on the root lattice by s_i(alpha_j) = alpha_j - a_ij alpha_i.
/// Labelling of the catalog types follows Bourbaki (B_n: alpha_n short,
/// C_n: alpha_n long, G_2: alpha_1 short).
class CartanMatrix {
public:
  // Throws NotFiniteType unless the matrix is a generalized Cartan matrix.
  explicit CartanMatrix(std::vector<std::vector<Coord>> a);

  // Types "A" (n>=1), "B" (n>=2), "C" (n>=2), "D" (n>=4), "G" (n=2).
  static CartanMatrix of_type(const std::string &type, std::size_t rank);

  std::size_t rank() const noexcept { return a_.size(); }
  Coord operator()(std::size_t i, std::size_t j) const { return a_[i][j]; }
  const std::vector<std::vector<Coord>> &rows() const noexcept { return a_; }

private:
  std::vector<std::vector<Coord>> a_;
};

using ElementId = std::size_t;

/// A finite root system in the simple-root basis together with its Weyl
/// group, enumerated breadth-first over right multiplication by simple
/// reflections. Element 0 is the identity and every element carries its
/// lexicographically smallest reduced word; its name is "e" or the word
/// spelled as "s1s2...".
class RootSystem {
public:
  std::size_t rank() const noexcept { return cartan_.rank(); }
  const CartanMatrix &cartan() const noexcept { return cartan_; }

  const std::vector<LatticeVector> &positive_roots() const noexcept { return roots_; }
  std::optional<std::size_t> root_index(const LatticeVector &beta) const;
  const LatticeVector &simple_root(std::size_t i) const { return roots_.at(simple_[i]); }
  const LatticeAutomorphism &simple_reflection(std::size_t i) const {
    return reflections_.at(simple_[i]);
  }
  const LatticeAutomorphism &reflection(std::size_t root) const {
    return reflections_.at(root);
  }

  std::size_t order() const noexcept { return elements_.size(); }
  const LatticeAutomorphism &matrix(ElementId w) const { return elements_.at(w); }
  const std::string &name(ElementId w) const { return names_.at(w); }
  const std::vector<std::size_t> &word(ElementId w) const { return words_.at(w); }
  std::size_t length(ElementId w) const { return words_.at(w).size(); }
  ElementId element(const std::string &name) const; // throws SchemaError
  ElementId element(const LatticeAutomorphism &m) const;

  ElementId multiply(ElementId a, ElementId b) const;
  ElementId inverse(ElementId w) const;
  ElementId simple(std::size_t i) const { return simple_elements_.at(i); }
  ElementId reflection_element(std::size_t root) const {
    return reflection_elements_.at(root);
  }

  // Number of positive roots sent to negative roots.
  std::size_t inversions(ElementId w) const;

  friend RootSystem build_root_system(const CartanMatrix &a);

private:
  explicit RootSystem(CartanMatrix a) : cartan_(std::move(a)) {}

  CartanMatrix cartan_;
  std::vector<LatticeVector> roots_;
  std::vector<std::size_t> simple_;
  std::vector<LatticeAutomorphism> reflections_;
  std::vector<ElementId> reflection_elements_;
  std::vector<ElementId> simple_elements_;
  std::vector<LatticeAutomorphism> elements_;
  std::vector<std::string> names_;
  std::vector<std::vector<std::size_t>> words_;
  std::map<LatticeAutomorphism, ElementId> by_matrix_;
  std::map<std::string, ElementId> by_name_;
};

/// Closure of the simple roots under the simple reflections, and W.
/// Throws NotFiniteType if the closure exceeds the size guard.
RootSystem build_root_system(const CartanMatrix &a);

/// Subset Theta of simple roots (0-based indices) and the minimal left coset
/// representatives of W / W_Theta.
class Parabolic {
public:
  Parabolic(const RootSystem &rs, std::vector<std::size_t> theta);

  const std::vector<std::size_t> &theta() const noexcept { return theta_; }
  ElementId representative(ElementId w) const { return rep_.at(w); }
  bool is_minimal(ElementId w) const { return rep_.at(w) == w; }
  const std::vector<ElementId> &representatives() const noexcept { return reps_; }
  // Elements of the coset of each representative, in element order.
  const std::vector<ElementId> &coset(ElementId rep) const { return cosets_.at(rep); }
  // Positive roots of the subsystem spanned by Theta.
  std::vector<LatticeVector> positive_roots(const RootSystem &rs) const;

private:
  std::vector<std::size_t> theta_;
  std::vector<ElementId> rep_;
  std::vector<ElementId> reps_;
  std::map<ElementId, std::vector<ElementId>> cosets_;
};

/// Bruhat moment graph: edges w -> s_beta w with l(s_beta w) > l(w).
GraphPtr bruhat_graph(const RootSystem &rs);

/// Parabolic Bruhat moment graph on W^Theta: edges w -> bar(s_beta w) when
/// w < bar(s_beta w) in the Bruhat order.
GraphPtr parabolic_graph(const RootSystem &rs, const Parabolic &p);

/// Left cosets w W_Theta as a relation on the vertices of bruhat_graph(rs).
EquivalenceRelation coset_relation(const RootSystem &rs, const MomentGraph &bruhat,
                                   const Parabolic &p);

/// xi_w = w acting on the root lattice, for the vertices of a graph whose
/// ids are element names.
Monodromy weyl_monodromy(const RootSystem &rs, const MomentGraph &g);

/// M(w) = w s_i on the vertices of bruhat_graph(rs).
SpecialMatching right_multiplication(const RootSystem &rs, const MomentGraph &bruhat,
                                     std::size_t i);

/// The fibration W -> W^Theta of the Bruhat graph by left cosets, with the
/// Weyl monodromy. Fibre maps between cosets are left multiplication by
/// u v^{-1} on minimal representatives.
FiberBundle weyl_fibration(const RootSystem &rs, const Parabolic &p);

} // namespace momentrr
