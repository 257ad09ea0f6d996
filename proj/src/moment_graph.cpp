#include "momentrr/moment_graph.hpp"

#include <algorithm>
#include <set>

namespace momentrr {

namespace {

std::string edge_text(const MomentGraph &g, const MomentGraph::Edge &e) {
  return g.id(e.tail) + " -> " + g.id(e.head) + " [" + e.label.str() + "]";
}

} // namespace

MomentGraph::MomentGraph(
    std::size_t rank, std::vector<std::string> vertices,
    const std::vector<std::pair<std::string, std::string>> &covers,
    const std::vector<EdgeSpec> &edges)
    : rank_(rank), ids_(std::move(vertices)) {
  std::sort(ids_.begin(), ids_.end());
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (i > 0 && ids_[i] == ids_[i - 1])
      throw SchemaError("duplicate vertex id '" + ids_[i] + "'");
    index_.emplace(ids_[i], i);
  }
  const std::size_t n = ids_.size();

  for (const auto &[a, b] : covers) generators_.emplace_back(index(a), index(b));

  incident_.resize(n);
  for (const auto &spec : edges) {
    if (spec.label.rank() != rank_)
      throw SchemaError("edge " + spec.from + " -> " + spec.to +
                        ": label has rank " + std::to_string(spec.label.rank()) +
                        ", graph has rank " + std::to_string(rank_));
    Edge e{index(spec.from), index(spec.to), spec.label};
    const std::size_t k = edges_.size();
    edge_index_.emplace(std::make_pair(e.tail, e.head), k);
    incident_[e.tail].push_back(k);
    if (e.head != e.tail) incident_[e.head].push_back(k);
    edges_.push_back(std::move(e));
  }

  leq_.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) leq_[i][i] = true;
  for (const auto &[a, b] : generators_) leq_[a][b] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq_[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq_[k][j]) leq_[i][j] = true;

  hasse_.assign(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!less(a, b)) continue;
      bool cover = true;
      for (std::size_t c = 0; c < n && cover; ++c)
        if (c != a && c != b && less(a, c) && less(c, b)) cover = false;
      hasse_[a][b] = cover;
    }
}

VertexId MomentGraph::index(const std::string &id) const {
  const auto it = index_.find(id);
  if (it == index_.end()) throw SchemaError("unknown vertex id '" + id + "'");
  return it->second;
}

std::optional<VertexId> MomentGraph::find(const std::string &id) const {
  const auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<VertexId, VertexId>> MomentGraph::hasse_pairs() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = 0; b < size(); ++b)
      if (hasse_[a][b]) out.emplace_back(a, b);
  return out;
}

const MomentGraph::Edge *MomentGraph::edge(VertexId tail, VertexId head) const {
  const auto it = edge_index_.find({tail, head});
  return it == edge_index_.end() ? nullptr : &edges_[it->second];
}

const MomentGraph::Edge *MomentGraph::edge_between(VertexId a, VertexId b) const {
  if (const Edge *e = edge(a, b)) return e;
  return edge(b, a);
}

std::vector<VertexId> MomentGraph::linear_extension() const {
  const std::size_t n = size();
  std::vector<std::size_t> below(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (less(a, b) && !less(b, a)) ++below[b];
  std::vector<VertexId> out;
  std::vector<bool> placed(n, false);
  while (out.size() < n) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v)
      if (!placed[v] && below[v] == 0) {
        pick = v;
        break;
      }
    if (pick == n) { // cyclic order: append the rest in index order
      for (std::size_t v = 0; v < n; ++v)
        if (!placed[v]) out.push_back(v);
      break;
    }
    placed[pick] = true;
    out.push_back(pick);
    for (std::size_t b = 0; b < n; ++b)
      if (less(pick, b) && !less(b, pick)) --below[b];
  }
  return out;
}

std::vector<VertexId> MomentGraph::minimal() const {
  std::vector<VertexId> out;
  for (std::size_t v = 0; v < size(); ++v) {
    bool is_min = true;
    for (std::size_t u = 0; u < size() && is_min; ++u)
      if (less(u, v)) is_min = false;
    if (is_min) out.push_back(v);
  }
  return out;
}

std::vector<VertexId> MomentGraph::maximal() const {
  std::vector<VertexId> out;
  for (std::size_t v = 0; v < size(); ++v) {
    bool is_max = true;
    for (std::size_t u = 0; u < size() && is_max; ++u)
      if (less(v, u)) is_max = false;
    if (is_max) out.push_back(v);
  }
  return out;
}

MomentGraph MomentGraph::full_subgraph(const std::vector<VertexId> &vertices) const {
  std::vector<std::string> names;
  std::vector<bool> keep(size(), false);
  for (VertexId v : vertices) {
    names.push_back(id(v));
    keep.at(v) = true;
  }
  std::vector<std::pair<std::string, std::string>> covers;
  for (VertexId a : vertices)
    for (VertexId b : vertices)
      if (less(a, b)) covers.emplace_back(id(a), id(b));
  std::vector<EdgeSpec> specs;
  for (const auto &e : edges_)
    if (keep[e.tail] && keep[e.head]) specs.push_back({id(e.tail), id(e.head), e.label});
  return MomentGraph(rank_, std::move(names), covers, specs);
}

GraphMorphism GraphMorphism::identity(const MomentGraph &g) {
  GraphMorphism f;
  for (std::size_t v = 0; v < g.size(); ++v) {
    f.vertex_map.push_back(v);
    f.lattice_maps.push_back(LatticeAutomorphism::identity(g.rank()));
  }
  return f;
}

GraphMorphism GraphMorphism::by_ids(const MomentGraph &g, const MomentGraph &target) {
  GraphMorphism f;
  for (std::size_t v = 0; v < g.size(); ++v) {
    f.vertex_map.push_back(target.index(g.id(v)));
    f.lattice_maps.push_back(LatticeAutomorphism::identity(g.rank()));
  }
  return f;
}

Monodromy Monodromy::trivial(const MomentGraph &g) {
  return Monodromy{std::vector<LatticeAutomorphism>(
      g.size(), LatticeAutomorphism::identity(g.rank()))};
}

EquivalenceRelation::EquivalenceRelation(std::size_t n,
                                         std::vector<std::vector<VertexId>> classes)
    : classes_(std::move(classes)), class_of_(n, n) {
  for (auto &cls : classes_) {
    if (cls.empty()) throw SchemaError("relation has an empty class");
    std::sort(cls.begin(), cls.end());
  }
  std::sort(classes_.begin(), classes_.end());
  for (std::size_t c = 0; c < classes_.size(); ++c)
    for (VertexId v : classes_[c]) {
      if (v >= n) throw SchemaError("relation mentions an unknown vertex");
      if (class_of_[v] != n)
        throw SchemaError("relation classes are not disjoint");
      class_of_[v] = c;
    }
  for (std::size_t v = 0; v < n; ++v)
    if (class_of_[v] == n) throw SchemaError("relation classes do not cover every vertex");
}

EquivalenceRelation EquivalenceRelation::trivial(std::size_t n) {
  std::vector<VertexId> all(n);
  for (std::size_t v = 0; v < n; ++v) all[v] = v;
  return EquivalenceRelation(n, n == 0 ? std::vector<std::vector<VertexId>>{}
                                       : std::vector<std::vector<VertexId>>{all});
}

EquivalenceRelation EquivalenceRelation::discrete(std::size_t n) {
  std::vector<std::vector<VertexId>> classes;
  for (std::size_t v = 0; v < n; ++v) classes.push_back({v});
  return EquivalenceRelation(n, std::move(classes));
}

ValidationReport validate_graph(const MomentGraph &g) {
  ValidationReport report;
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = a + 1; b < g.size(); ++b)
      if (g.leq(a, b) && g.leq(b, a))
        report.add("MG1", "order is not antisymmetric: " + g.id(a) + " <= " +
                              g.id(b) + " <= " + g.id(a));

  std::set<std::pair<VertexId, VertexId>> seen;
  for (const auto &e : g.edges()) {
    if (e.label.is_zero()) report.add("MG2", "zero label on " + edge_text(g, e));
    if (!seen.emplace(e.tail, e.head).second)
      report.add("MG2", "parallel edges " + g.id(e.tail) + " -> " + g.id(e.head));
    if (!g.less(e.tail, e.head) || g.leq(e.head, e.tail))
      report.add("MG3", "edge does not respect the order: " + edge_text(g, e));
  }
  return report;
}

ValidationReport validate_morphism(const GraphMorphism &f, const MomentGraph &g,
                                   const MomentGraph &target) {
  ValidationReport report;
  if (f.vertex_map.size() != g.size() || f.lattice_maps.size() != g.size()) {
    report.add("MR1", "morphism does not cover every source vertex");
    return report;
  }
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (f.vertex_map[v] >= target.size())
      report.add("MR1", "vertex " + g.id(v) + " maps outside the target");
    if (f.lattice_maps[v].rank() != g.rank() || g.rank() != target.rank())
      report.add("MR2", "lattice map at " + g.id(v) + " has the wrong rank");
  }
  if (!report.ok()) return report;

  const auto &fv = f.vertex_map;
  for (const auto &[a, b] : g.generators())
    if (!target.leq(fv[a], fv[b]))
      report.add("MR1", "order not preserved: " + g.id(a) + " <= " + g.id(b) +
                            " but " + target.id(fv[a]) + " !<= " + target.id(fv[b]));

  for (const auto &e : g.edges()) {
    const VertexId a = fv[e.tail], b = fv[e.head];
    if (a == b) continue;
    const MomentGraph::Edge *image = target.edge_between(a, b);
    if (!image) {
      report.add("MR1", edge_text(g, e) + " maps to a non-edge " + target.id(a) +
                            " - " + target.id(b));
      continue;
    }
    const LatticeVector &l2 = image->label;
    for (VertexId end : {e.tail, e.head}) {
      const LatticeVector img = f.lattice_maps[end](e.label);
      if (img != l2 && img != -l2)
        report.add("MR2a", "f_l at " + g.id(end) + " sends " + e.label.str() +
                               " to " + img.str() + ", expected +-" + l2.str());
    }
    for (std::size_t i = 0; i < g.rank(); ++i) {
      const LatticeVector diff = f.lattice_maps[e.tail].column(i) -
                                 f.lattice_maps[e.head].column(i);
      if (!is_integer_multiple(diff, l2)) {
        report.add("MR2b", "f_l differs modulo " + l2.str() + " across " +
                               edge_text(g, e));
        break;
      }
    }
  }
  return report;
}

ValidationReport check_monodromy(const Monodromy &xi, const MomentGraph &g) {
  ValidationReport report;
  if (xi.maps.size() != g.size()) {
    report.add("monodromy", "expected " + std::to_string(g.size()) +
                                " automorphisms, got " + std::to_string(xi.maps.size()));
    return report;
  }
  for (std::size_t v = 0; v < g.size(); ++v)
    if (xi.maps[v].rank() != g.rank()) {
      report.add("monodromy", "automorphism at " + g.id(v) + " has the wrong rank");
      return report;
    }
  for (const auto &e : g.edges())
    for (std::size_t i = 0; i < g.rank(); ++i) {
      const LatticeVector diff = xi[e.tail].column(i) - xi[e.head].column(i);
      if (!is_integer_multiple(diff, e.label)) {
        report.add("monodromy", "xi difference " + diff.str() + " on basis vector " +
                                    std::to_string(i + 1) + " is not in " +
                                    e.label.str() + "Z along " + edge_text(g, e));
        break;
      }
    }
  return report;
}

ValidationReport check_relation(const EquivalenceRelation &r, const MomentGraph &g) {
  ValidationReport report;
  if (r.classes().empty() && g.size() == 0) return report;
  std::size_t covered = 0;
  for (const auto &cls : r.classes()) covered += cls.size();
  if (covered != g.size()) {
    report.add("EQV", "relation is on " + std::to_string(covered) +
                          " vertices, graph has " + std::to_string(g.size()));
    return report;
  }

  for (const auto &cls : r.classes())
    for (VertexId v : cls)
      for (VertexId w : cls) {
        if (!g.less(v, w)) continue;
        for (std::size_t u = 0; u < g.size(); ++u)
          if (g.less(v, u) && g.less(u, w) && !r.equivalent(u, v))
            report.add("EQV1", g.id(v) + " ~ " + g.id(w) + " but " + g.id(u) +
                                   " lies between them in another class");
      }

  for (const auto &e : g.edges()) {
    if (r.equivalent(e.tail, e.head)) continue;
    const auto &target_class = r.classes()[r.class_of(e.head)];
    for (VertexId v2 : r.classes()[r.class_of(e.tail)]) {
      std::size_t lifts = 0;
      for (VertexId w2 : target_class)
        if (const MomentGraph::Edge *lift = g.edge(v2, w2)) {
          ++lifts;
          if (lift->label != e.label)
            report.add("EQV2", "lift " + edge_text(g, *lift) + " of " +
                                   edge_text(g, e) + " has a different label");
        }
      if (lifts != 1)
        report.add("EQV2", edge_text(g, e) + " has " + std::to_string(lifts) +
                               " lifts at " + g.id(v2));
    }
  }
  return report;
}

ValidationReport check_matching(const SpecialMatching &m, const MomentGraph &g) {
  ValidationReport report;
  const std::size_t n = g.size();
  if (m.pairing.size() != n) {
    report.add("matching", "pairing does not cover every vertex");
    return report;
  }
  for (std::size_t v = 0; v < n; ++v)
    if (m(v) >= n || m(m(v)) != v || m(v) == v) {
      report.add("matching", "not a fixed-point-free involution at " + g.id(v));
      return report;
    }
  for (std::size_t v = 0; v < n; ++v)
    if (!g.covered_by(v, m(v)) && !g.covered_by(m(v), v))
      report.add("covering", g.id(v) + " and " + g.id(m(v)) +
                                 " are not in a covering relation");
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = 0; w < n; ++w)
      if (w != m(v) && g.covered_by(v, w) && !g.leq(m(v), m(w)))
        report.add("lifting", g.id(v) + " is covered by " + g.id(w) + " but " +
                                  g.id(m(v)) + " !<= " + g.id(m(w)));
  for (const auto &e : g.edges()) {
    if (e.head == m(e.tail)) continue;
    const MomentGraph::Edge *image = g.edge(m(e.tail), m(e.head));
    if (!image)
      report.add("(i)", "no edge " + g.id(m(e.tail)) + " -> " + g.id(m(e.head)) +
                            " matching " + edge_text(g, e));
    else if (image->label != e.label)
      report.add("(ii)", edge_text(g, *image) + " and " + edge_text(g, e) +
                             " carry different labels");
  }
  return report;
}

std::string class_name(const MomentGraph &g, const std::vector<VertexId> &cls) {
  std::vector<VertexId> minimal;
  for (VertexId v : cls) {
    bool is_min = true;
    for (VertexId u : cls)
      if (g.less(u, v)) is_min = false;
    if (is_min) minimal.push_back(v);
  }
  if (minimal.size() == 1) return g.id(minimal.front());
  std::string best = g.id(cls.front());
  for (VertexId v : cls) best = std::min(best, g.id(v));
  return best;
}

Quotient build_quotient(const MomentGraph &g, const EquivalenceRelation &r) {
  const ValidationReport report = check_relation(r, g);
  if (!report.ok()) throw IncompatibleRelation("relation is not compatible:\n" + report.summary());

  const auto &classes = r.classes();
  std::vector<std::string> names;
  for (const auto &cls : classes) names.push_back(class_name(g, cls));

  std::map<std::pair<std::size_t, std::size_t>, LatticeVector> qedges;
  for (const auto &e : g.edges()) {
    const std::size_t a = r.class_of(e.tail), b = r.class_of(e.head);
    if (a != b) qedges.emplace(std::make_pair(a, b), e.label);
  }
  std::vector<std::pair<std::string, std::string>> covers;
  std::vector<MomentGraph::EdgeSpec> specs;
  for (const auto &[key, label] : qedges) {
    covers.emplace_back(names[key.first], names[key.second]);
    specs.push_back({names[key.first], names[key.second], label});
  }
  auto graph = std::make_shared<const MomentGraph>(g.rank(), names, covers, specs);

  Quotient q;
  q.graph = graph;
  for (const auto &name : names) q.vertex_of_class.push_back(graph->index(name));
  for (std::size_t v = 0; v < g.size(); ++v) {
    q.projection.vertex_map.push_back(q.vertex_of_class[r.class_of(v)]);
    q.projection.lattice_maps.push_back(LatticeAutomorphism::identity(g.rank()));
  }
  return q;
}

EquivalenceRelation matching_relation(const SpecialMatching &m, const MomentGraph &g) {
  const ValidationReport report = check_matching(m, g);
  if (!report.ok()) throw NotSpecialMatching("invalid special matching:\n" + report.summary());
  std::vector<std::vector<VertexId>> classes;
  for (std::size_t v = 0; v < g.size(); ++v)
    if (v < m(v)) classes.push_back({v, m(v)});
  return EquivalenceRelation(g.size(), std::move(classes));
}

bool check_isomorphism(const GraphMorphism &f, const MomentGraph &g,
                       const MomentGraph &target) {
  if (g.size() != target.size()) return false;
  if (!validate_morphism(f, g, target).ok()) return false;
  std::vector<bool> hit(target.size(), false);
  for (VertexId v : f.vertex_map) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  std::map<std::pair<VertexId, VertexId>, std::size_t> lifts;
  for (const auto &e : g.edges()) ++lifts[{f.vertex_map[e.tail], f.vertex_map[e.head]}];
  for (const auto &e : target.edges()) {
    const auto it = lifts.find({e.tail, e.head});
    if (it == lifts.end() || it->second != 1) return false;
  }
  return g.edges().size() == target.edges().size();
}

} // namespace momentrr
