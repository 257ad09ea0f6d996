#include "momentrr/structure_algebra.hpp"

#include <optional>
#include <sstream>

namespace momentrr {

template <class Ring>
StructureElement<Ring>::StructureElement(GraphPtr graph, std::vector<Ring> values)
    : graph_(std::move(graph)), values_(std::move(values)) {
  if (!graph_) throw SchemaError("structure element without a graph");
  if (values_.size() != graph_->size())
    throw SchemaError("structure element has " + std::to_string(values_.size()) +
                      " values for " + std::to_string(graph_->size()) + " vertices");
  for (const auto &z : values_)
    if (z.rank() != graph_->rank())
      throw SchemaError("structure element value has rank " + std::to_string(z.rank()) +
                        ", graph has rank " + std::to_string(graph_->rank()));
}

template <class Ring>
void StructureElement<Ring>::require_same_graph(const StructureElement &o) const {
  if (graph_ != o.graph_ && graph_->ids() != o.graph_->ids())
    throw SchemaError("structure elements live on different graphs");
}

template <class Ring>
StructureElement<Ring> &StructureElement<Ring>::operator+=(const StructureElement &o) {
  require_same_graph(o);
  for (std::size_t v = 0; v < values_.size(); ++v) values_[v] += o.values_[v];
  return *this;
}

template <class Ring>
StructureElement<Ring> &StructureElement<Ring>::operator-=(const StructureElement &o) {
  require_same_graph(o);
  for (std::size_t v = 0; v < values_.size(); ++v) values_[v] -= o.values_[v];
  return *this;
}

template <class Ring>
StructureElement<Ring> &StructureElement<Ring>::operator*=(const StructureElement &o) {
  require_same_graph(o);
  for (std::size_t v = 0; v < values_.size(); ++v)
    values_[v] = values_[v] * o.values_[v];
  return *this;
}

template <class Ring>
StructureElement<Ring> &StructureElement<Ring>::operator*=(const Ring &s) {
  for (auto &z : values_) z = z * s;
  return *this;
}

template <class Ring> std::string StructureElement<Ring>::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t v = 0; v < values_.size(); ++v)
    os << (v ? ", " : "") << graph_->id(v) << ": " << values_[v].str();
  os << ")";
  return os.str();
}

template <class Ring>
ValidationReport check_membership(const StructureElement<Ring> &z, Exec exec) {
  const MomentGraph &g = z.graph();
  std::vector<std::optional<std::string>> failures(g.edges().size());
  for_each_index(exec, g.edges().size(), [&](std::size_t k) {
    const auto &e = g.edges()[k];
    try {
      (void)RingTraits<Ring>::divide_x(z[e.tail] - z[e.head], e.label);
    } catch (const NotDivisible &err) {
      failures[k] = "x_" + e.label.str() + " does not divide z_" + g.id(e.tail) +
                    " - z_" + g.id(e.head) + " (remainder " + err.remainder() + ")";
    }
  });
  ValidationReport report;
  for (auto &f : failures)
    if (f) report.add("membership", std::move(*f));
  return report;
}

template <class Ring>
StructureElement<Ring> characteristic_map(const Ring &q, const Monodromy &xi,
                                          GraphPtr graph) {
  const ValidationReport report = check_monodromy(xi, *graph);
  if (!report.ok()) throw InvalidMonodromy(report.summary());
  std::vector<Ring> values;
  for (std::size_t v = 0; v < graph->size(); ++v) values.push_back(q.apply(xi[v]));
  return StructureElement<Ring>(std::move(graph), std::move(values));
}

template <class Ring>
StructureElement<Ring> twisted_pullback(const StructureElement<Ring> &z,
                                        const GraphMorphism &f, const Monodromy &xi,
                                        GraphPtr source) {
  const MomentGraph &g = *source;
  const MomentGraph &target = z.graph();
  const ValidationReport morphism = validate_morphism(f, g, target);
  if (!morphism.ok()) throw PreconditionFailed("invalid morphism:\n" + morphism.summary());
  const ValidationReport mono = check_monodromy(xi, g);
  if (!mono.ok()) throw InvalidMonodromy(mono.summary());

  for (const auto &e : g.edges()) {
    const VertexId a = f.vertex_map[e.tail], b = f.vertex_map[e.head];
    if (a == b) continue;
    const LatticeVector &image = target.edge_between(a, b)->label;
    for (VertexId end : {e.tail, e.head}) {
      const LatticeVector twisted = xi[end](image);
      if (!is_integer_multiple(twisted, e.label))
        throw HypothesisViolated("xi_" + g.id(end) + "(" + image.str() + ") = " +
                                 twisted.str() + " is not a multiple of the label of " +
                                 g.id(e.tail) + " -> " + g.id(e.head) + " [" +
                                 e.label.str() + "]");
    }
  }

  std::vector<Ring> values;
  for (std::size_t v = 0; v < g.size(); ++v)
    values.push_back(z[f.vertex_map[v]].apply(xi[v]));
  return StructureElement<Ring>(std::move(source), std::move(values));
}

template <class Ring>
StructureElement<Ring> point_class(GraphPtr graph, const Monodromy &xi, VertexId top,
                                   const std::vector<LatticeVector> &labels,
                                   Coord bound) {
  const std::size_t rank = graph->rank();
  Ring value = RingTraits<Ring>::one(rank, bound);
  for (const auto &beta : labels) value = value * RingTraits<Ring>::x(xi[top](beta), bound);
  std::vector<Ring> values(graph->size(), RingTraits<Ring>::zero(rank, bound));
  values.at(top) = value;
  StructureElement<Ring> z(std::move(graph), std::move(values));
  const ValidationReport report = check_membership(z);
  if (!report.ok()) throw NotMember("point class is not a member:\n" + report.summary());
  return z;
}

std::vector<LatticeVector> incident_labels(const MomentGraph &g, VertexId v) {
  std::vector<LatticeVector> out;
  for (std::size_t k : g.incident(v)) out.push_back(g.edges()[k].label);
  return out;
}

#define MOMENTRR_INSTANTIATE(Ring)                                              \
  template class StructureElement<Ring>;                                       \
  template ValidationReport check_membership(const StructureElement<Ring> &, Exec); \
  template StructureElement<Ring> characteristic_map(const Ring &, const Monodromy &, \
                                                     GraphPtr);                \
  template StructureElement<Ring> twisted_pullback(const StructureElement<Ring> &, \
                                                   const GraphMorphism &,      \
                                                   const Monodromy &, GraphPtr); \
  template StructureElement<Ring> point_class(GraphPtr, const Monodromy &, VertexId, \
                                              const std::vector<LatticeVector> &, \
                                              Coord);

MOMENTRR_INSTANTIATE(LaurentPolynomial)
MOMENTRR_INSTANTIATE(Polynomial)
MOMENTRR_INSTANTIATE(TruncatedSeries)

#undef MOMENTRR_INSTANTIATE

} // namespace momentrr
