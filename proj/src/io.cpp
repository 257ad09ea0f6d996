#include "momentrr/io.hpp"

#include <fstream>
#include <sstream>

namespace momentrr::io {

namespace {

[[noreturn]] void bad(const std::string &what) { throw SchemaError(what); }

const Json &field(const Json &j, const char *key) {
  if (!j.is_object()) bad(std::string("expected an object with field '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field '") + key + "'");
  return *it;
}

std::string as_string(const Json &j, const char *what) {
  if (!j.is_string()) bad(std::string(what) + " must be a string");
  return j.get<std::string>();
}

Coord as_coord(const Json &j, const char *what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<Coord>();
}

mpz_class parse_integer(const Json &j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<Coord>()));
  mpz_class z;
  if (!j.is_string() || z.set_str(j.get<std::string>(), 10) != 0)
    bad("coefficient " + j.dump() + " is not a decimal integer");
  return z;
}

mpq_class parse_rational(const Json &j) {
  if (j.is_number_integer()) return mpq_class(mpz_class(std::to_string(j.get<Coord>())));
  if (!j.is_string()) bad("coefficient " + j.dump() + " is not a rational string");
  const std::string s = j.get<std::string>();
  const auto slash = s.find('/');
  mpz_class num, den = 1;
  if (num.set_str(s.substr(0, slash), 10) != 0 ||
      (slash != std::string::npos && den.set_str(s.substr(slash + 1), 10) != 0))
    bad("coefficient '" + s + "' is not of the form p/q");
  if (den == 0) bad("coefficient '" + s + "' has a zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

std::string rational_string(const mpq_class &q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

VertexId vertex(const MomentGraph &g, const Json &j) {
  return g.index(as_string(j, "vertex id"));
}

} // namespace

Json to_json(const LatticeVector &v) { return Json(v.coords()); }

LatticeVector vector_from_json(const Json &j, std::size_t rank) {
  if (!j.is_array() || j.size() != rank)
    bad("lattice vector " + j.dump() + " must be an array of " + std::to_string(rank) +
        " integers");
  LatticeVector v(rank);
  for (std::size_t i = 0; i < rank; ++i) v[i] = as_coord(j[i], "lattice coordinate");
  return v;
}

Json to_json(const LatticeAutomorphism &m) { return Json(m.rows()); }

LatticeAutomorphism automorphism_from_json(const Json &j, std::size_t rank) {
  if (!j.is_array() || j.size() != rank)
    bad("matrix " + j.dump() + " must have " + std::to_string(rank) + " rows");
  std::vector<std::vector<Coord>> rows;
  for (const auto &row : j) rows.push_back(vector_from_json(row, rank).coords());
  try {
    return LatticeAutomorphism::from_rows(std::move(rows));
  } catch (const MathError &e) {
    bad(std::string("matrix is not a lattice automorphism: ") + e.what());
  }
}

Json to_json(const LaurentPolynomial &p) {
  Json out = Json::array();
  for (const auto &[e, c] : p.terms())
    out.push_back({{"coeff", c.get_str()}, {"exp", to_json(e)}});
  return out;
}

LaurentPolynomial laurent_from_json(const Json &j, std::size_t rank) {
  if (!j.is_array()) bad("Laurent polynomial must be an array of terms");
  LaurentPolynomial p(rank);
  for (const auto &t : j)
    p.add_term(vector_from_json(field(t, "exp"), rank), parse_integer(field(t, "coeff")));
  return p;
}

Json to_json(const Polynomial &p) {
  Json out = Json::array();
  for (const auto &[e, c] : p.terms())
    out.push_back({{"coeff", rational_string(c)}, {"exp", to_json(e)}});
  return out;
}

Polynomial polynomial_from_json(const Json &j, std::size_t rank) {
  if (!j.is_array()) bad("polynomial must be an array of terms");
  Polynomial p(rank);
  for (const auto &t : j) {
    const LatticeVector e = vector_from_json(field(t, "exp"), rank);
    for (std::size_t i = 0; i < rank; ++i)
      if (e[i] < 0) bad("polynomial exponent " + e.str() + " is negative");
    p.add_term(e, parse_rational(field(t, "coeff")));
  }
  return p;
}

Json to_json(const MomentGraph &g) {
  Json covers = Json::array(), edges = Json::array();
  for (const auto &[a, b] : g.hasse_pairs()) covers.push_back({g.id(a), g.id(b)});
  for (const auto &e : g.edges())
    edges.push_back({{"from", g.id(e.tail)}, {"to", g.id(e.head)}, {"label", to_json(e.label)}});
  return {{"rank", g.rank()}, {"vertices", g.ids()}, {"covers", covers}, {"edges", edges}};
}

GraphPtr graph_from_json(const Json &j) {
  const Coord rank = as_coord(field(j, "rank"), "rank");
  if (rank < 0) bad("rank must be non-negative");
  const Json &vs = field(j, "vertices");
  if (!vs.is_array()) bad("'vertices' must be an array");
  std::vector<std::string> vertices;
  for (const auto &v : vs) vertices.push_back(as_string(v, "vertex id"));
  std::vector<std::pair<std::string, std::string>> covers;
  if (j.contains("covers")) {
    for (const auto &c : field(j, "covers")) {
      if (!c.is_array() || c.size() != 2) bad("each cover must be a pair of vertex ids");
      covers.emplace_back(as_string(c[0], "vertex id"), as_string(c[1], "vertex id"));
    }
  }
  std::vector<MomentGraph::EdgeSpec> edges;
  for (const auto &e : field(j, "edges"))
    edges.push_back({as_string(field(e, "from"), "edge end"),
                     as_string(field(e, "to"), "edge end"),
                     vector_from_json(field(e, "label"), static_cast<std::size_t>(rank))});
  return std::make_shared<const MomentGraph>(static_cast<std::size_t>(rank),
                                             std::move(vertices), covers, edges);
}

Json to_json(const EquivalenceRelation &r, const MomentGraph &g) {
  Json classes = Json::array();
  for (const auto &cls : r.classes()) {
    Json ids = Json::array();
    for (VertexId v : cls) ids.push_back(g.id(v));
    classes.push_back(ids);
  }
  return {{"classes", classes}};
}

EquivalenceRelation relation_from_json(const Json &j, const MomentGraph &g) {
  std::vector<std::vector<VertexId>> classes;
  for (const auto &cls : field(j, "classes")) {
    if (!cls.is_array()) bad("each class must be an array of vertex ids");
    std::vector<VertexId> ids;
    for (const auto &v : cls) ids.push_back(vertex(g, v));
    classes.push_back(std::move(ids));
  }
  return EquivalenceRelation(g.size(), std::move(classes));
}

Json to_json(const GraphMorphism &f, const MomentGraph &source, const MomentGraph &target) {
  Json vm = Json::object(), lm = Json::object();
  for (VertexId v = 0; v < source.size(); ++v) {
    vm[source.id(v)] = target.id(f.vertex_map[v]);
    lm[source.id(v)] = to_json(f.lattice_maps[v]);
  }
  return {{"vertex_map", vm}, {"lattice_maps", lm}};
}

GraphMorphism morphism_from_json(const Json &j, const MomentGraph &source,
                                 const MomentGraph &target) {
  const Json &vm = field(j, "vertex_map");
  const Json &lm = field(j, "lattice_maps");
  GraphMorphism f;
  for (VertexId v = 0; v < source.size(); ++v) {
    f.vertex_map.push_back(vertex(target, field(vm, source.id(v).c_str())));
    f.lattice_maps.push_back(automorphism_from_json(field(lm, source.id(v).c_str()),
                                                    source.rank()));
  }
  return f;
}

Json to_json(const Monodromy &xi, const MomentGraph &g) {
  Json out = Json::object();
  for (VertexId v = 0; v < g.size(); ++v) out[g.id(v)] = to_json(xi[v]);
  return out;
}

Monodromy monodromy_from_json(const Json &j, const MomentGraph &g) {
  Monodromy xi;
  for (VertexId v = 0; v < g.size(); ++v)
    xi.maps.push_back(automorphism_from_json(field(j, g.id(v).c_str()), g.rank()));
  return xi;
}

Json to_json(const SpecialMatching &m, const MomentGraph &g) {
  Json out = Json::object();
  for (VertexId v = 0; v < g.size(); ++v) out[g.id(v)] = g.id(m.pairing[v]);
  return {{"pairing", out}};
}

SpecialMatching matching_from_json(const Json &j, const MomentGraph &g) {
  const Json &p = field(j, "pairing");
  SpecialMatching m;
  for (VertexId v = 0; v < g.size(); ++v) m.pairing.push_back(vertex(g, field(p, g.id(v).c_str())));
  return m;
}

namespace {

template <class Ring, class F>
Json element_json(const StructureElement<Ring> &z, const char *flavor, F encode) {
  Json values = Json::object();
  for (VertexId v = 0; v < z.size(); ++v) values[z.graph().id(v)] = encode(z[v]);
  Json out{{"flavor", flavor}, {"values", values}};
  return out;
}

} // namespace

Json to_json(const MultElement &z) {
  return element_json(z, "mult", [](const LaurentPolynomial &p) { return to_json(p); });
}

Json to_json(const AddElement &z) {
  return element_json(z, "add", [](const Polynomial &p) { return to_json(p); });
}

Json to_json(const TruncElement &z) {
  Json out =
      element_json(z, "trunc", [](const TruncatedSeries &s) { return to_json(s.poly()); });
  out["bound"] = z.size() ? z[0].bound() : 0;
  return out;
}

AnyElement element_from_json(const Json &j, GraphPtr g) {
  AnyElement out;
  out.flavor = as_string(field(j, "flavor"), "flavor");
  const Json &values = field(j, "values");
  if (!values.is_object()) bad("'values' must map vertex ids to polynomials");
  if (values.size() != g->size())
    bad("element has " + std::to_string(values.size()) + " values for " +
        std::to_string(g->size()) + " vertices");
  for (const auto &[key, _] : values.items()) (void)g->index(key);
  auto value = [&](VertexId v) -> const Json & { return field(values, g->id(v).c_str()); };
  if (out.flavor == "mult") {
    std::vector<LaurentPolynomial> vs;
    for (VertexId v = 0; v < g->size(); ++v) vs.push_back(laurent_from_json(value(v), g->rank()));
    out.mult = MultElement(std::move(g), std::move(vs));
  } else if (out.flavor == "add") {
    std::vector<Polynomial> vs;
    for (VertexId v = 0; v < g->size(); ++v)
      vs.push_back(polynomial_from_json(value(v), g->rank()));
    out.add = AddElement(std::move(g), std::move(vs));
  } else if (out.flavor == "trunc") {
    const Coord bound = as_coord(field(j, "bound"), "bound");
    if (bound < 0) bad("bound must be non-negative");
    std::vector<TruncatedSeries> vs;
    for (VertexId v = 0; v < g->size(); ++v)
      vs.emplace_back(polynomial_from_json(value(v), g->rank()), bound);
    out.trunc = TruncElement(std::move(g), std::move(vs));
  } else {
    bad("unknown flavor '" + out.flavor + "'");
  }
  return out;
}

MultElement mult_from_json(const Json &j, GraphPtr g) {
  AnyElement e = element_from_json(j, std::move(g));
  if (e.flavor != "mult") bad("expected a mult element, got " + e.flavor);
  return e.mult;
}

Json to_json(const FiberBundle &b) {
  const MomentGraph &g = b.total();
  Json isos = Json::array();
  for (const auto &[pair, f] : b.isos()) {
    Json vm = Json::object();
    for (const auto &[y, u] : f.vertex_map) vm[g.id(y)] = g.id(u);
    isos.push_back({{"from_class", b.base().id(b.quotient().vertex_of_class[pair.first])},
                    {"to_class", b.base().id(b.quotient().vertex_of_class[pair.second])},
                    {"vertex_map", vm},
                    {"lattice_map", to_json(f.lattice_map)}});
  }
  return {{"graph", to_json(g)},
          {"relation", to_json(b.relation(), g)},
          {"base_class", b.base().id(b.quotient().vertex_of_class[b.base_class()])},
          {"isos", isos},
          {"monodromy", to_json(b.xi(), g)}};
}

FiberBundle bundle_from_json(const Json &j) {
  GraphPtr g = graph_from_json(field(j, "graph"));
  EquivalenceRelation relation = relation_from_json(field(j, "relation"), *g);
  std::map<std::string, std::size_t> by_name;
  for (std::size_t c = 0; c < relation.classes().size(); ++c)
    by_name[class_name(*g, relation.classes()[c])] = c;
  auto class_index = [&](const Json &name) {
    const auto it = by_name.find(as_string(name, "class name"));
    if (it == by_name.end()) bad("unknown class " + name.dump());
    return it->second;
  };
  const std::size_t base = class_index(field(j, "base_class"));
  std::map<FiberBundle::ClassPair, FiberIso> isos;
  for (const auto &iso : field(j, "isos")) {
    FiberIso f{{}, automorphism_from_json(field(iso, "lattice_map"), g->rank())};
    const Json &vm = field(iso, "vertex_map");
    if (!vm.is_object()) bad("'vertex_map' must be an object");
    for (const auto &[from, to] : vm.items()) f.vertex_map[g->index(from)] = vertex(*g, to);
    const auto key = std::make_pair(class_index(field(iso, "from_class")),
                                    class_index(field(iso, "to_class")));
    if (!isos.emplace(key, std::move(f)).second) bad("duplicate fibre isomorphism");
  }
  Monodromy xi = monodromy_from_json(field(j, "monodromy"), *g);
  return FiberBundle(std::move(g), std::move(relation), base, std::move(isos), std::move(xi));
}

Json to_json(const ValidationReport &r) {
  Json violations = Json::array();
  for (const auto &v : r.violations()) violations.push_back({{"rule", v.rule}, {"detail", v.detail}});
  return {{"ok", r.ok()}, {"violations", violations}};
}

Json to_json(const RRReport &r) {
  Json per_class = Json::object();
  for (const auto &c : r.per_class) {
    Json entry{{"agree_through_degree", c.agree_through_degree}, {"first_mismatch", nullptr}};
    if (c.first_mismatch) {
      Json m{{"degree", c.first_mismatch->degree},
             {"lhs", c.first_mismatch->lhs},
             {"rhs", c.first_mismatch->rhs}};
      if (!c.first_mismatch->remainder.empty()) m["remainder"] = c.first_mismatch->remainder;
      entry["first_mismatch"] = m;
    }
    per_class[c.vertex] = entry;
  }
  return {{"convention", convention_name(r.convention)},
          {"bound", r.bound},
          {"agree_through_degree", r.agree_through_degree()},
          {"per_class", per_class}};
}

Json read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) bad("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception &e) {
    bad("'" + path + "' is not valid JSON: " + e.what());
  }
}

} // namespace momentrr::io
