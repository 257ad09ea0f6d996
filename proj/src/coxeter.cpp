#include "momentrr/coxeter.hpp"

#include <algorithm>
#include <deque>

#include <gmpxx.h>

namespace momentrr {

namespace {

constexpr std::size_t kMaxRoots = 2000;
constexpr std::size_t kMaxElements = 100000;

bool is_positive(const LatticeVector &v) {
  bool nonzero = false;
  for (Coord c : v.coords()) {
    if (c < 0) return false;
    if (c > 0) nonzero = true;
  }
  return nonzero;
}

LatticeAutomorphism simple_reflection_matrix(const CartanMatrix &a, std::size_t i) {
  const std::size_t n = a.rank();
  std::vector<std::vector<Coord>> rows(n, std::vector<Coord>(n, 0));
  for (std::size_t r = 0; r < n; ++r) rows[r][r] = 1;
  for (std::size_t c = 0; c < n; ++c) rows[i][c] -= a(i, c);
  return LatticeAutomorphism::from_rows(std::move(rows));
}

std::string word_name(const std::vector<std::size_t> &word) {
  if (word.empty()) return "e";
  std::string s;
  for (std::size_t i : word) s += "s" + std::to_string(i + 1);
  return s;
}

// A generalized Cartan matrix is of finite type iff it is symmetrizable with
// a positive definite symmetrization.
bool is_finite_type(const CartanMatrix &a) {
  const std::size_t n = a.rank();
  std::vector<mpq_class> d(n, 0);
  for (std::size_t start = 0; start < n; ++start) {
    if (d[start] != 0) continue;
    d[start] = 1;
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      const std::size_t i = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || a(i, j) == 0) continue;
        const mpq_class dj = d[i] * a(i, j) / a(j, i);
        if (d[j] == 0) {
          d[j] = dj;
          queue.push_back(j);
        } else if (d[j] != dj) {
          return false;
        }
      }
    }
  }
  std::vector<std::vector<mpq_class>> b(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b[i][j] = d[i] * a(i, j);
  for (std::size_t k = 0; k < n; ++k) {
    if (b[k][k] <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      const mpq_class f = b[i][k] / b[k][k];
      for (std::size_t j = k; j < n; ++j) b[i][j] -= f * b[k][j];
    }
  }
  return true;
}

} // namespace

CartanMatrix::CartanMatrix(std::vector<std::vector<Coord>> a) : a_(std::move(a)) {
  const std::size_t n = a_.size();
  if (n == 0) throw NotFiniteType("Cartan matrix is empty");
  for (std::size_t i = 0; i < n; ++i) {
    if (a_[i].size() != n) throw NotFiniteType("Cartan matrix is not square");
    if (a_[i][i] != 2) throw NotFiniteType("Cartan matrix diagonal entry is not 2");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a_[i][j] > 0) throw NotFiniteType("positive off-diagonal Cartan entry");
      if ((a_[i][j] == 0) != (a_[j][i] == 0))
        throw NotFiniteType("Cartan matrix zero pattern is not symmetric");
    }
}

CartanMatrix CartanMatrix::of_type(const std::string &type, std::size_t n) {
  auto chain = [](std::size_t n) {
    std::vector<std::vector<Coord>> a(n, std::vector<Coord>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      a[i][i] = 2;
      if (i + 1 < n) a[i][i + 1] = a[i + 1][i] = -1;
    }
    return a;
  };
  if (type == "A" && n >= 1) return CartanMatrix(chain(n));
  if (type == "B" && n >= 2) {
    auto a = chain(n);
    a[n - 1][n - 2] = -2;
    return CartanMatrix(a);
  }
  if (type == "C" && n >= 2) {
    auto a = chain(n);
    a[n - 2][n - 1] = -2;
    return CartanMatrix(a);
  }
  if (type == "D" && n >= 4) {
    auto a = chain(n);
    a[n - 2][n - 1] = a[n - 1][n - 2] = 0;
    a[n - 3][n - 1] = a[n - 1][n - 3] = -1;
    return CartanMatrix(a);
  }
  if (type == "G" && n == 2) return CartanMatrix({{2, -3}, {-1, 2}});
  throw SchemaError("unsupported Cartan type " + type + std::to_string(n));
}

RootSystem build_root_system(const CartanMatrix &a) {
  if (!is_finite_type(a)) throw NotFiniteType("Cartan matrix is not of finite type");
  RootSystem rs(a);
  const std::size_t n = a.rank();
  std::vector<LatticeAutomorphism> simple;
  for (std::size_t i = 0; i < n; ++i) simple.push_back(simple_reflection_matrix(a, i));

  // Positive roots by breadth-first search; s_beta for beta = s_j(gamma) is
  // s_j s_gamma s_j.
  std::map<LatticeVector, std::size_t> seen;
  std::deque<std::size_t> queue;
  for (std::size_t i = 0; i < n; ++i) {
    seen.emplace(LatticeVector::unit(n, i), rs.roots_.size());
    rs.simple_.push_back(rs.roots_.size());
    rs.roots_.push_back(LatticeVector::unit(n, i));
    rs.reflections_.push_back(simple[i]);
    queue.push_back(i);
  }
  while (!queue.empty()) {
    const std::size_t k = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < n; ++j) {
      LatticeVector beta = simple[j](rs.roots_[k]);
      if (!is_positive(beta) || seen.count(beta)) continue;
      if (rs.roots_.size() >= kMaxRoots)
        throw NotFiniteType("root system exceeds " + std::to_string(kMaxRoots) +
                            " positive roots");
      seen.emplace(beta, rs.roots_.size());
      rs.reflections_.push_back(simple[j] * rs.reflections_[k] * simple[j]);
      rs.roots_.push_back(std::move(beta));
      queue.push_back(rs.roots_.size() - 1);
    }
  }

  // Weyl group: BFS over w -> w s_i processes elements in shortlex order of
  // their words, so the first word found is the lexicographically smallest.
  rs.elements_.push_back(LatticeAutomorphism::identity(n));
  rs.words_.push_back({});
  rs.by_matrix_.emplace(rs.elements_[0], 0);
  for (std::size_t k = 0; k < rs.elements_.size(); ++k)
    for (std::size_t i = 0; i < n; ++i) {
      LatticeAutomorphism m = rs.elements_[k] * simple[i];
      if (rs.by_matrix_.count(m)) continue;
      if (rs.elements_.size() >= kMaxElements)
        throw NotFiniteType("Weyl group exceeds " + std::to_string(kMaxElements) +
                            " elements");
      std::vector<std::size_t> word = rs.words_[k];
      word.push_back(i);
      rs.by_matrix_.emplace(m, rs.elements_.size());
      rs.elements_.push_back(std::move(m));
      rs.words_.push_back(std::move(word));
    }
  for (std::size_t w = 0; w < rs.elements_.size(); ++w) {
    rs.names_.push_back(word_name(rs.words_[w]));
    rs.by_name_.emplace(rs.names_.back(), w);
  }
  for (std::size_t i = 0; i < n; ++i) rs.simple_elements_.push_back(rs.element(simple[i]));
  for (const auto &r : rs.reflections_) rs.reflection_elements_.push_back(rs.element(r));
  return rs;
}

std::optional<std::size_t> RootSystem::root_index(const LatticeVector &beta) const {
  const auto it = std::find(roots_.begin(), roots_.end(), beta);
  if (it == roots_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - roots_.begin());
}

ElementId RootSystem::element(const std::string &name) const {
  const auto it = by_name_.find(name);
  if (it == by_name_.end()) throw SchemaError("unknown Weyl group element '" + name + "'");
  return it->second;
}

ElementId RootSystem::element(const LatticeAutomorphism &m) const {
  const auto it = by_matrix_.find(m);
  if (it == by_matrix_.end()) throw MathError("matrix is not a Weyl group element");
  return it->second;
}

ElementId RootSystem::multiply(ElementId a, ElementId b) const {
  return element(elements_.at(a) * elements_.at(b));
}

ElementId RootSystem::inverse(ElementId w) const {
  return element(elements_.at(w).inverse());
}

std::size_t RootSystem::inversions(ElementId w) const {
  std::size_t count = 0;
  for (const auto &beta : roots_)
    if (!is_positive(elements_.at(w)(beta))) ++count;
  return count;
}

Parabolic::Parabolic(const RootSystem &rs, std::vector<std::size_t> theta)
    : theta_(std::move(theta)) {
  std::sort(theta_.begin(), theta_.end());
  theta_.erase(std::unique(theta_.begin(), theta_.end()), theta_.end());
  for (std::size_t i : theta_)
    if (i >= rs.rank()) throw SchemaError("parabolic index out of range");
  rep_.resize(rs.order());
  for (ElementId w = 0; w < rs.order(); ++w) {
    ElementId u = w;
    for (bool reduced = false; !reduced;) {
      reduced = true;
      for (std::size_t i : theta_)
        if (!is_positive(rs.matrix(u)(rs.simple_root(i)))) {
          u = rs.multiply(u, rs.simple(i));
          reduced = false;
        }
    }
    rep_[w] = u;
    cosets_[u].push_back(w);
  }
  for (const auto &[rep, members] : cosets_) reps_.push_back(rep);
}

std::vector<LatticeVector> Parabolic::positive_roots(const RootSystem &rs) const {
  std::vector<LatticeVector> out;
  for (const auto &beta : rs.positive_roots()) {
    bool inside = true;
    for (std::size_t i = 0; i < beta.rank(); ++i)
      if (beta[i] != 0 && !std::binary_search(theta_.begin(), theta_.end(), i))
        inside = false;
    if (inside) out.push_back(beta);
  }
  return out;
}

GraphPtr bruhat_graph(const RootSystem &rs) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> covers;
  std::vector<MomentGraph::EdgeSpec> edges;
  for (ElementId w = 0; w < rs.order(); ++w) {
    names.push_back(rs.name(w));
    for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
      const ElementId u = rs.multiply(rs.reflection_element(k), w);
      if (rs.length(u) <= rs.length(w)) continue;
      covers.emplace_back(rs.name(w), rs.name(u));
      edges.push_back({rs.name(w), rs.name(u), rs.positive_roots()[k]});
    }
  }
  return std::make_shared<const MomentGraph>(rs.rank(), names, covers, edges);
}

GraphPtr parabolic_graph(const RootSystem &rs, const Parabolic &p) {
  const GraphPtr full = bruhat_graph(rs);
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> covers;
  std::vector<MomentGraph::EdgeSpec> edges;
  for (ElementId w : p.representatives()) {
    names.push_back(rs.name(w));
    const VertexId vw = full->index(rs.name(w));
    for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
      const ElementId u = p.representative(rs.multiply(rs.reflection_element(k), w));
      if (u == w || !full->less(vw, full->index(rs.name(u)))) continue;
      covers.emplace_back(rs.name(w), rs.name(u));
      edges.push_back({rs.name(w), rs.name(u), rs.positive_roots()[k]});
    }
  }
  return std::make_shared<const MomentGraph>(rs.rank(), names, covers, edges);
}

EquivalenceRelation coset_relation(const RootSystem &rs, const MomentGraph &bruhat,
                                   const Parabolic &p) {
  std::vector<std::vector<VertexId>> classes;
  for (ElementId rep : p.representatives()) {
    std::vector<VertexId> cls;
    for (ElementId w : p.coset(rep)) cls.push_back(bruhat.index(rs.name(w)));
    classes.push_back(std::move(cls));
  }
  return EquivalenceRelation(bruhat.size(), std::move(classes));
}

Monodromy weyl_monodromy(const RootSystem &rs, const MomentGraph &g) {
  Monodromy xi;
  for (VertexId v = 0; v < g.size(); ++v) xi.maps.push_back(rs.matrix(rs.element(g.id(v))));
  return xi;
}

SpecialMatching right_multiplication(const RootSystem &rs, const MomentGraph &bruhat,
                                     std::size_t i) {
  SpecialMatching m;
  for (VertexId v = 0; v < bruhat.size(); ++v) {
    const ElementId w = rs.multiply(rs.element(bruhat.id(v)), rs.simple(i));
    m.pairing.push_back(bruhat.index(rs.name(w)));
  }
  return m;
}

FiberBundle weyl_fibration(const RootSystem &rs, const Parabolic &p) {
  GraphPtr g = bruhat_graph(rs);
  EquivalenceRelation relation = coset_relation(rs, *g, p);
  const std::size_t k = relation.classes().size();
  std::vector<ElementId> rep(k);
  for (ElementId r : p.representatives())
    rep[relation.class_of(g->index(rs.name(r)))] = r;

  std::map<FiberBundle::ClassPair, FiberIso> isos;
  for (std::size_t from = 0; from < k; ++from)
    for (std::size_t to = 0; to < k; ++to) {
      const ElementId shift = rs.multiply(rep[to], rs.inverse(rep[from]));
      FiberIso f{{}, rs.matrix(shift)};
      for (VertexId y : relation.classes()[from])
        f.vertex_map[y] = g->index(rs.name(rs.multiply(shift, rs.element(g->id(y)))));
      isos.emplace(std::make_pair(from, to), std::move(f));
    }
  const std::size_t base = relation.class_of(g->index("e"));
  Monodromy xi = weyl_monodromy(rs, *g);
  return FiberBundle(std::move(g), std::move(relation), base, std::move(isos),
                     std::move(xi));
}

} // namespace momentrr
