#include "momentrr/fibration.hpp"

#include <algorithm>
#include <optional>

namespace momentrr {

namespace {

bool contains(const std::vector<LatticeVector> &labels, const LatticeVector &v) {
  return std::find(labels.begin(), labels.end(), v) != labels.end();
}

std::vector<LatticeVector> sorted(std::vector<LatticeVector> v) {
  std::sort(v.begin(), v.end());
  return v;
}

LatticeVector sum_of_images(const LatticeAutomorphism &xi,
                            const std::vector<LatticeVector> &betas, std::size_t rank) {
  LatticeVector s(rank);
  for (const auto &beta : betas) s += xi(beta);
  return s;
}

std::string class_text(const FiberBundle &b, std::size_t cls) {
  return "[" + b.base().id(b.quotient().vertex_of_class[cls]) + "]";
}

void require_preconditions(const FiberBundle &b) {
  ValidationReport report = check_fibration(b);
  report.merge(check_compatibility(b));
  report.merge(check_regularity(b));
  if (!report.ok())
    throw PreconditionFailed("bundle is not a regular xi-fibration:\n" + report.summary());
}

template <class Ring>
void require_member(const StructureElement<Ring> &z, const FiberBundle &b) {
  if (z.graph_ptr() != b.total_ptr() && z.graph().ids() != b.total().ids())
    throw SchemaError("element does not live on the total graph of the bundle");
  const ValidationReport report = check_membership(z);
  if (!report.ok()) throw NotMember("element is not in the structure algebra:\n" + report.summary());
}

template <class Ring>
StructureElement<Ring> pushforward_additive(const FiberBundle &b,
                                            const StructureElement<Ring> &z,
                                            const PushOptions &opt) {
  if (!opt.unsafe) {
    require_preconditions(b);
    require_member(z, b);
  }
  const auto data = compute_fiber_data(b);
  const Coord bound = z.size() ? RingTraits<Ring>::bound(z[0]) : 0;
  std::vector<Ring> out(b.class_count(), RingTraits<Ring>::zero(b.total().rank(), bound));
  for_each_index(opt.exec, b.class_count(), [&](std::size_t c) {
    Ring numerator = RingTraits<Ring>::zero(b.total().rank(), bound);
    for (VertexId y : b.members(c)) {
      if (data[y].sign > 0)
        numerator += z[y];
      else
        numerator -= z[y];
    }
    for (const auto &gamma : b.class_labels(c))
      numerator = RingTraits<Ring>::divide_x(numerator, gamma);
    out[c] = std::move(numerator);
  });
  std::vector<Ring> values(b.class_count());
  for (std::size_t c = 0; c < b.class_count(); ++c)
    values[b.quotient().vertex_of_class[c]] = std::move(out[c]);
  return StructureElement<Ring>(b.quotient().graph, std::move(values));
}

} // namespace

FiberBundle::FiberBundle(GraphPtr total, EquivalenceRelation relation,
                         std::size_t base_class, std::map<ClassPair, FiberIso> isos,
                         Monodromy xi)
    : total_(std::move(total)), relation_(std::move(relation)),
      quotient_(build_quotient(*total_, relation_)), base_class_(base_class),
      isos_(std::move(isos)), xi_(std::move(xi)) {
  if (base_class_ >= relation_.classes().size())
    throw SchemaError("base class index out of range");
  for (const auto &cls : relation_.classes()) fibers_.push_back(total_->full_subgraph(cls));
  class_at_.resize(relation_.classes().size());
  for (std::size_t c = 0; c < relation_.classes().size(); ++c)
    class_at_[quotient_.vertex_of_class[c]] = c;
}

const FiberIso *FiberBundle::iso(std::size_t from, std::size_t to) const {
  const auto it = isos_.find({from, to});
  return it == isos_.end() ? nullptr : &it->second;
}

std::vector<LatticeVector> FiberBundle::fiber_labels(VertexId y) const {
  std::vector<LatticeVector> out;
  for (std::size_t k : total_->incident(y)) {
    const auto &e = total_->edges()[k];
    if (relation_.equivalent(e.tail, e.head)) out.push_back(e.label);
  }
  return out;
}

std::vector<LatticeVector> FiberBundle::class_labels(std::size_t cls) const {
  return fiber_labels(members(cls).front());
}

std::vector<FiberData> compute_fiber_data(const FiberBundle &b) {
  const MomentGraph &g = b.total();
  std::vector<FiberData> out(g.size());
  for (std::size_t c = 0; c < b.class_count(); ++c) {
    const FiberIso *to_base = b.iso(c, b.base_class());
    if (!to_base)
      throw PreconditionFailed("missing fibre isomorphism from " + class_text(b, c) +
                               " to the base class");
    for (VertexId y : b.members(c)) {
      FiberData &d = out[y];
      d.fiber_labels = b.fiber_labels(y);
      for (const auto &gamma : d.fiber_labels)
        if (contains(d.fiber_labels, -gamma))
          throw AmbiguousSign("labels " + gamma.str() + " and its negative both occur at " +
                              g.id(y));
      for (const auto &gamma : d.fiber_labels) {
        const LatticeVector beta = to_base->lattice_map(gamma);
        if (contains(d.fiber_labels, -b.xi()[y](beta))) d.n_set.push_back(beta);
      }
      d.sign = d.n_set.size() % 2 == 0 ? 1 : -1;
    }
  }
  return out;
}

ValidationReport check_fibration(const FiberBundle &b) {
  ValidationReport report;
  const std::size_t k = b.class_count();
  const std::size_t e = b.base_class();
  const std::size_t rank = b.total().rank();

  for (std::size_t from = 0; from < k; ++from)
    for (std::size_t to = 0; to < k; ++to) {
      const FiberIso *f = b.iso(from, to);
      const std::string pair = class_text(b, from) + " -> " + class_text(b, to);
      if (!f) {
        report.add("FB1", "missing fibre isomorphism " + pair);
        continue;
      }
      if (f->lattice_map.rank() != rank) {
        report.add("FB2", "lattice map of " + pair + " has the wrong rank");
        continue;
      }
      std::vector<VertexId> domain, image;
      for (const auto &[y, u] : f->vertex_map) {
        domain.push_back(y);
        image.push_back(u);
      }
      std::sort(image.begin(), image.end());
      if (domain != b.members(from) || image != b.members(to) ||
          std::adjacent_find(image.begin(), image.end()) != image.end()) {
        report.add("ISO", "vertex map of " + pair + " is not a bijection between the fibres");
        continue;
      }
      bool labels_ok = true;
      for (VertexId y : b.members(from))
        for (std::size_t idx : b.total().incident(y)) {
          const auto &edge = b.total().edges()[idx];
          if (edge.tail != y || !b.relation().equivalent(edge.tail, edge.head)) continue;
          const auto *image_edge = b.total().edge_between(f->vertex_map.at(edge.tail),
                                                          f->vertex_map.at(edge.head));
          const LatticeVector img = f->lattice_map(edge.label);
          if (!image_edge || (img != image_edge->label && img != -image_edge->label)) {
            report.add("FB2", pair + " sends the label " + edge.label.str() + " of " +
                                  b.total().id(edge.tail) + " -> " +
                                  b.total().id(edge.head) + " to " + img.str() +
                                  ", not to +- the image edge label");
            labels_ok = false;
          }
        }
      if (!labels_ok) continue;
      // Fibre isomorphism in fibre-local indices.
      const MomentGraph &src = b.fiber(from), &dst = b.fiber(to);
      GraphMorphism local;
      for (VertexId v = 0; v < src.size(); ++v) {
        const VertexId y = b.total().index(src.id(v));
        local.vertex_map.push_back(dst.index(b.total().id(f->vertex_map.at(y))));
        local.lattice_maps.push_back(f->lattice_map);
      }
      if (!check_isomorphism(local, src, dst))
        report.add("ISO", pair + " is not a moment graph isomorphism of the fibres");
    }
  if (!report.ok()) return report;

  // With every f^{c,c} the identity, the cocycle condition for all triples is
  // equivalent to f^{a,c} = f^{e,c} o f^{a,e} for all a, c.
  for (std::size_t c = 0; c < k; ++c) {
    const FiberIso &f = *b.iso(c, c);
    bool identity = f.lattice_map.is_identity();
    for (const auto &[y, u] : f.vertex_map) identity = identity && y == u;
    if (!identity) report.add("FB1", "f^{c,c} is not the identity for c = " + class_text(b, c));
  }
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t c = 0; c < k; ++c) {
      const FiberIso &ac = *b.iso(a, c), &ae = *b.iso(a, e), &ec = *b.iso(e, c);
      bool ok = ac.lattice_map == ec.lattice_map * ae.lattice_map;
      for (const auto &[y, u] : ac.vertex_map)
        ok = ok && ec.vertex_map.at(ae.vertex_map.at(y)) == u;
      if (!ok)
        report.add("FB1", "cocycle fails: f^{" + class_text(b, a) + "," + class_text(b, c) +
                              "} differs from the composite through the base class");
    }
  return report;
}

ValidationReport check_compatibility(const FiberBundle &b) {
  ValidationReport report = check_monodromy(b.xi(), b.total());
  if (!report.ok()) return report;
  std::vector<FiberData> data;
  try {
    data = compute_fiber_data(b);
  } catch (const Error &err) {
    report.add("sign", err.what());
    return report;
  }
  const MomentGraph &g = b.total();
  const auto base_labels = sorted(b.class_labels(b.base_class()));

  for (std::size_t c = 0; c < b.class_count(); ++c) {
    const LatticeAutomorphism &f = b.iso(c, b.base_class())->lattice_map;
    for (VertexId y : b.members(c)) {
      const auto &labels = data[y].fiber_labels;
      std::vector<LatticeVector> transported;
      for (const auto &gamma : labels) transported.push_back(f(gamma));
      if (sorted(transported) != base_labels)
        report.add("transport", "f^{[v],[e]} does not map the fibre labels at " + g.id(y) +
                                    " onto those of the base fibre");

      const Polynomial product = Polynomial::product_of_linear(g.rank(), labels);
      const Polynomial image = product.apply(b.xi()[y] * f);
      if (image != product && image != -product)
        report.add("CF1", "xi_y f(prod L) = " + image.str() + " is not +-" + product.str() +
                              " at " + g.id(y));
    }
  }

  for (const auto &e : g.edges()) {
    if (!b.relation().equivalent(e.tail, e.head)) continue;
    const FiberData &dy = data[e.tail], &dz = data[e.head];
    if (dy.n_set.size() % 2 == dz.n_set.size() % 2)
      report.add("CF2a", "#N has equal parity at " + g.id(e.tail) + " and " + g.id(e.head));
    const LatticeVector diff = sum_of_images(b.xi()[e.tail], dy.n_set, g.rank()) -
                               sum_of_images(b.xi()[e.head], dz.n_set, g.rank());
    if (!is_integer_multiple(diff, e.label))
      report.add("CF2b", "sum difference " + diff.str() + " is not in " + e.label.str() +
                             "Z along " + g.id(e.tail) + " -> " + g.id(e.head));
  }
  return report;
}

ValidationReport check_regularity(const FiberBundle &b) {
  ValidationReport report;
  const MomentGraph &g = b.total();
  for (std::size_t c = 0; c < b.class_count(); ++c) {
    const auto reference = sorted(b.class_labels(c));
    for (VertexId y : b.members(c))
      if (sorted(b.fiber_labels(y)) != reference)
        report.add("REG1", "fibre labels at " + g.id(y) + " differ from those of " +
                               class_text(b, c));
    for (std::size_t i = 0; i < reference.size(); ++i) {
      if (!reference[i].is_primitive())
        report.add("REG2", "label " + reference[i].str() + " in " + class_text(b, c) +
                               " is not primitive");
      for (std::size_t j = i + 1; j < reference.size(); ++j)
        if (proportional(reference[i], reference[j]))
          report.add("REG3", "labels " + reference[i].str() + " and " + reference[j].str() +
                                 " in " + class_text(b, c) + " are proportional");
    }
  }
  return report;
}

MultElement pushforward_mult(const FiberBundle &b, const MultElement &z,
                             const PushOptions &opt) {
  if (!opt.unsafe) {
    require_preconditions(b);
    require_member(z, b);
  }
  const auto data = compute_fiber_data(b);
  const std::size_t rank = b.total().rank();
  std::vector<LaurentPolynomial> out(b.class_count());
  for_each_index(opt.exec, b.class_count(), [&](std::size_t c) {
    LaurentPolynomial numerator(rank);
    for (VertexId y : b.members(c)) {
      const LaurentPolynomial term =
          z[y].shifted(sum_of_images(b.xi()[y], data[y].n_set, rank));
      if (data[y].sign > 0)
        numerator += term;
      else
        numerator -= term;
    }
    for (const auto &gamma : b.class_labels(c))
      numerator = exact_divide_laurent(numerator, gamma);
    out[c] = std::move(numerator);
  });
  std::vector<LaurentPolynomial> values(b.class_count());
  for (std::size_t c = 0; c < b.class_count(); ++c)
    values[b.quotient().vertex_of_class[c]] = std::move(out[c]);
  return MultElement(b.quotient().graph, std::move(values));
}

AddElement pushforward_add(const FiberBundle &b, const AddElement &z,
                           const PushOptions &opt) {
  return pushforward_additive(b, z, opt);
}

TruncElement pushforward_add(const FiberBundle &b, const TruncElement &z,
                             const PushOptions &opt) {
  return pushforward_additive(b, z, opt);
}

MultElement pullback(const FiberBundle &b, const MultElement &z) {
  std::vector<LaurentPolynomial> values;
  for (VertexId v = 0; v < b.total().size(); ++v)
    values.push_back(z[b.quotient().projection.vertex_map[v]]);
  return MultElement(b.total_ptr(), std::move(values));
}

bool projection_check(const FiberBundle &b, const MultElement &zq, const MultElement &z,
                      const PushOptions &opt) {
  const MultElement lhs = pushforward_mult(b, pullback(b, zq) * z, opt);
  const MultElement rhs = zq * pushforward_mult(b, z, opt);
  return lhs == rhs;
}

MultElement push_pull(const FiberBundle &b, const MultElement &z, const PushOptions &opt) {
  return pullback(b, pushforward_mult(b, z, opt));
}

FiberBundle matching_bundle(GraphPtr g, const SpecialMatching &m, Monodromy xi) {
  EquivalenceRelation relation = matching_relation(m, *g);
  const std::size_t k = relation.classes().size();
  const std::size_t base = relation.class_of(g->linear_extension().front());

  std::vector<VertexId> lower(k), upper(k);
  std::vector<UnimodularCompletion> completion;
  for (std::size_t c = 0; c < k; ++c) {
    const auto &cls = relation.classes()[c];
    lower[c] = g->less(cls[0], cls[1]) ? cls[0] : cls[1];
    upper[c] = lower[c] == cls[0] ? cls[1] : cls[0];
    const auto *edge = g->edge(lower[c], upper[c]);
    if (!edge)
      throw PreconditionFailed("no edge between matched vertices " + g->id(lower[c]) +
                               " and " + g->id(upper[c]));
    completion.push_back(complete_to_unimodular(edge->label));
  }
  // B_c sends the base label to the label of class c.
  std::vector<LatticeAutomorphism> carry;
  for (std::size_t c = 0; c < k; ++c) {
    if (completion[c].multiplier != completion[base].multiplier)
      throw PreconditionFailed("fibre labels of " + g->id(lower[c]) + " and " +
                               g->id(lower[base]) + " have different content");
    carry.push_back(completion[c].inverse * completion[base].transform);
  }
  std::map<FiberBundle::ClassPair, FiberIso> isos;
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t d = 0; d < k; ++d) {
      FiberIso f{{{lower[c], lower[d]}, {upper[c], upper[d]}},
                 carry[d] * carry[c].inverse()};
      isos.emplace(std::make_pair(c, d), std::move(f));
    }
  return FiberBundle(std::move(g), std::move(relation), base, std::move(isos), std::move(xi));
}

} // namespace momentrr
