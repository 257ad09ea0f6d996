#pragma once

#include <string>

#include "json.hpp"

#include "momentrr/chern.hpp"
#include "momentrr/fibration.hpp"
#include "momentrr/moment_graph.hpp"
#include "momentrr/structure_algebra.hpp"

namespace momentrr::io {

using Json = nlohmann::json;

// Every from_json function throws SchemaError on malformed input.

Json to_json(const LatticeVector &v);
LatticeVector vector_from_json(const Json &j, std::size_t rank);

Json to_json(const LatticeAutomorphism &m);
LatticeAutomorphism automorphism_from_json(const Json &j, std::size_t rank);

Json to_json(const LaurentPolynomial &p);
LaurentPolynomial laurent_from_json(const Json &j, std::size_t rank);

Json to_json(const Polynomial &p);
Polynomial polynomial_from_json(const Json &j, std::size_t rank);

Json to_json(const MomentGraph &g);
GraphPtr graph_from_json(const Json &j);

Json to_json(const EquivalenceRelation &r, const MomentGraph &g);
EquivalenceRelation relation_from_json(const Json &j, const MomentGraph &g);

Json to_json(const GraphMorphism &f, const MomentGraph &source, const MomentGraph &target);
GraphMorphism morphism_from_json(const Json &j, const MomentGraph &source,
                                 const MomentGraph &target);

Json to_json(const Monodromy &xi, const MomentGraph &g);
Monodromy monodromy_from_json(const Json &j, const MomentGraph &g);

Json to_json(const SpecialMatching &m, const MomentGraph &g);
SpecialMatching matching_from_json(const Json &j, const MomentGraph &g);

Json to_json(const MultElement &z);
Json to_json(const AddElement &z);
Json to_json(const TruncElement &z);

// An element of any flavour read against a graph.
struct AnyElement {
  std::string flavor;
  MultElement mult;
  AddElement add;
  TruncElement trunc;
};
AnyElement element_from_json(const Json &j, GraphPtr g);
MultElement mult_from_json(const Json &j, GraphPtr g);

Json to_json(const FiberBundle &b);
FiberBundle bundle_from_json(const Json &j);

Json to_json(const ValidationReport &r);
Json to_json(const RRReport &r);

// Reads a whole file; throws SchemaError when it is missing or not JSON.
Json read_file(const std::string &path);

} // namespace momentrr::io
