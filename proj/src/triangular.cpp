#include "momentrr/triangular.hpp"

#include <deque>
#include <optional>

namespace momentrr {

TriangularBasis triangular_family(GraphPtr g, const Monodromy &xi,
                                  const std::vector<SpecialMatching> &matchings,
                                  Exec exec) {
  const MomentGraph &graph = *g;
  const auto tops = graph.maximal();
  if (tops.size() != 1)
    throw PreconditionFailed("triangular family needs a unique maximal vertex");
  const VertexId top = tops.front();

  std::vector<FiberBundle> bundles;
  for (const auto &m : matchings) {
    bundles.push_back(matching_bundle(g, m, xi));
    ValidationReport report = check_fibration(bundles.back());
    report.merge(check_compatibility(bundles.back()));
    report.merge(check_regularity(bundles.back()));
    if (!report.ok())
      throw PreconditionFailed("matching bundle is not a regular xi-fibration:\n" +
                               report.summary());
  }
  const PushOptions fast{true, exec};

  std::vector<std::optional<MultElement>> zeta(graph.size());
  zeta[top] = point_class<LaurentPolynomial>(g, xi, top, incident_labels(graph, top));
  std::deque<VertexId> queue{top};
  while (!queue.empty()) {
    const VertexId w = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < matchings.size(); ++i) {
      const VertexId m = matchings[i].pairing.at(w);
      if (!graph.less(m, w)) continue;
      MultElement next = push_pull(bundles[i], *zeta[w], fast);
      if (zeta[m]) {
        if (!(*zeta[m] == next))
          throw NotTriangular("two descents to " + graph.id(m) + " disagree");
        continue;
      }
      zeta[m] = std::move(next);
      queue.push_back(m);
    }
  }

  TriangularBasis basis{g, {}};
  for (VertexId w = 0; w < graph.size(); ++w) {
    if (!zeta[w]) throw NotTriangular("vertex " + graph.id(w) + " is never reached");
    if ((*zeta[w])[w].is_zero())
      throw NotTriangular("zeta_" + graph.id(w) + " vanishes at " + graph.id(w));
    for (VertexId v = 0; v < graph.size(); ++v)
      if (!graph.leq(w, v) && !(*zeta[w])[v].is_zero())
        throw NotTriangular("zeta_" + graph.id(w) + " is nonzero at " + graph.id(v));
    basis.elements.push_back(std::move(*zeta[w]));
  }
  return basis;
}

ForgetfulCoordinates forgetful_map(const MultElement &z, const TriangularBasis &basis) {
  const MomentGraph &g = *basis.graph;
  if (z.graph().ids() != g.ids())
    throw SchemaError("element and basis live on different graphs");
  ForgetfulCoordinates out;
  out.coefficients.assign(g.size(), LaurentPolynomial(g.rank()));
  for (VertexId v : g.linear_extension()) {
    LaurentPolynomial rest = z[v];
    for (VertexId w = 0; w < g.size(); ++w)
      if (g.less(w, v)) rest -= out.coefficients[w] * basis.elements[w][v];
    try {
      out.coefficients[v] = divide_exact(rest, basis.elements[v][v]);
    } catch (const NotDivisible &) {
      throw NotInSpan("coefficient of zeta_" + g.id(v) + " is not in the ground ring");
    }
  }
  for (const auto &c : out.coefficients) out.epsilon.push_back(c.augmentation());
  return out;
}

} // namespace momentrr
