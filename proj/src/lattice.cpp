#include "momentrr/lattice.hpp"

#include <gmpxx.h>

#include <numeric>
#include <sstream>

#include "momentrr/errors.hpp"

namespace momentrr {

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (const auto &v : violations_) os << v.rule << ": " << v.detail << '\n';
  return os.str();
}

void require_rank(std::size_t expected, std::size_t got, const char *what) {
  if (expected != got)
    throw RankMismatch(std::string(what) + ": expected rank " +
                       std::to_string(expected) + ", got " +
                       std::to_string(got));
}

LatticeVector LatticeVector::unit(std::size_t rank, std::size_t i) {
  LatticeVector v(rank);
  v.coords_.at(i) = 1;
  return v;
}

bool LatticeVector::is_zero() const noexcept {
  for (Coord c : coords_)
    if (c != 0) return false;
  return true;
}

Coord LatticeVector::content() const noexcept {
  Coord g = 0;
  for (Coord c : coords_) g = std::gcd(g, c);
  return g;
}

Coord LatticeVector::degree() const noexcept {
  Coord s = 0;
  for (Coord c : coords_) s += c;
  return s;
}

LatticeVector &LatticeVector::operator+=(const LatticeVector &o) {
  require_rank(rank(), o.rank(), "lattice addition");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

LatticeVector &LatticeVector::operator-=(const LatticeVector &o) {
  require_rank(rank(), o.rank(), "lattice subtraction");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

LatticeVector LatticeVector::operator-() const {
  LatticeVector r(*this);
  for (Coord &c : r.coords_) c = -c;
  return r;
}

LatticeVector operator*(Coord k, LatticeVector v) {
  for (Coord &c : v.coords_) c *= k;
  return v;
}

std::string LatticeVector::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i)
    os << (i ? "," : "") << coords_[i];
  os << ')';
  return os.str();
}

bool is_integer_multiple(const LatticeVector &v, const LatticeVector &w) {
  require_rank(w.rank(), v.rank(), "multiple test");
  std::size_t pivot = w.rank();
  for (std::size_t i = 0; i < w.rank(); ++i)
    if (w[i] != 0) {
      pivot = i;
      break;
    }
  if (pivot == w.rank()) return v.is_zero();
  if (v[pivot] % w[pivot] != 0) return false;
  const Coord k = v[pivot] / w[pivot];
  for (std::size_t i = 0; i < w.rank(); ++i)
    if (v[i] != k * w[i]) return false;
  return true;
}

bool proportional(const LatticeVector &v, const LatticeVector &w) {
  require_rank(w.rank(), v.rank(), "proportionality test");
  // All 2x2 minors vanish.
  for (std::size_t i = 0; i < v.rank(); ++i)
    for (std::size_t j = i + 1; j < v.rank(); ++j)
      if (v[i] * w[j] != v[j] * w[i]) return false;
  return true;
}

// ---------------------------------------------------------------------------

namespace {

// Exact determinant via Gaussian elimination over Q.
mpq_class rational_det(std::size_t n, const std::vector<Coord> &m) {
  std::vector<mpq_class> a(m.begin(), m.end());
  mpq_class det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p * n + c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a[p * n + k], a[c * n + k]);
      det = -det;
    }
    det *= a[c * n + c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r * n + c] == 0) continue;
      mpq_class f = a[r * n + c] / a[c * n + c];
      for (std::size_t k = c; k < n; ++k) a[r * n + k] -= f * a[c * n + k];
    }
  }
  return det;
}

} // namespace

LatticeAutomorphism
LatticeAutomorphism::from_rows(std::vector<std::vector<Coord>> rows) {
  const std::size_t n = rows.size();
  std::vector<Coord> m;
  m.reserve(n * n);
  for (const auto &r : rows) {
    if (r.size() != n)
      throw NotUnimodular("lattice automorphism must be a square matrix");
    m.insert(m.end(), r.begin(), r.end());
  }
  const mpq_class d = rational_det(n, m);
  if (d != 1 && d != -1)
    throw NotUnimodular("lattice map has determinant " + d.get_str() +
                        ", expected +1 or -1");
  return LatticeAutomorphism(n, std::move(m));
}

LatticeAutomorphism LatticeAutomorphism::identity(std::size_t rank) {
  std::vector<Coord> m(rank * rank, 0);
  for (std::size_t i = 0; i < rank; ++i) m[i * rank + i] = 1;
  return LatticeAutomorphism(rank, std::move(m));
}

LatticeAutomorphism LatticeAutomorphism::negation(std::size_t rank) {
  std::vector<Coord> m(rank * rank, 0);
  for (std::size_t i = 0; i < rank; ++i) m[i * rank + i] = -1;
  return LatticeAutomorphism(rank, std::move(m));
}

std::vector<std::vector<Coord>> LatticeAutomorphism::rows() const {
  std::vector<std::vector<Coord>> r(rank_);
  for (std::size_t i = 0; i < rank_; ++i)
    r[i].assign(m_.begin() + i * rank_, m_.begin() + (i + 1) * rank_);
  return r;
}

LatticeVector LatticeAutomorphism::apply(const LatticeVector &v) const {
  require_rank(rank_, v.rank(), "automorphism application");
  LatticeVector r(rank_);
  for (std::size_t i = 0; i < rank_; ++i) {
    Coord s = 0;
    for (std::size_t j = 0; j < rank_; ++j) s += m_[i * rank_ + j] * v[j];
    r[i] = s;
  }
  return r;
}

LatticeVector LatticeAutomorphism::column(std::size_t i) const {
  LatticeVector r(rank_);
  for (std::size_t k = 0; k < rank_; ++k) r[k] = m_[k * rank_ + i];
  return r;
}

LatticeAutomorphism operator*(const LatticeAutomorphism &a,
                              const LatticeAutomorphism &b) {
  require_rank(a.rank_, b.rank_, "automorphism composition");
  const std::size_t n = a.rank_;
  std::vector<Coord> m(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Coord aik = a.m_[i * n + k];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) m[i * n + j] += aik * b.m_[k * n + j];
    }
  return LatticeAutomorphism(n, std::move(m));
}

int LatticeAutomorphism::determinant() const {
  return rational_det(rank_, m_) > 0 ? 1 : -1;
}

bool LatticeAutomorphism::is_identity() const {
  return *this == identity(rank_);
}

LatticeAutomorphism LatticeAutomorphism::inverse() const {
  // Gauss-Jordan over Q; the result is integral because det = +-1.
  const std::size_t n = rank_;
  std::vector<mpq_class> a(m_.begin(), m_.end());
  std::vector<mpq_class> inv(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (a[p * n + c] == 0) ++p;
    if (p != c)
      for (std::size_t k = 0; k < n; ++k) {
        std::swap(a[p * n + k], a[c * n + k]);
        std::swap(inv[p * n + k], inv[c * n + k]);
      }
    const mpq_class piv = a[c * n + c];
    for (std::size_t k = 0; k < n; ++k) {
      a[c * n + k] /= piv;
      inv[c * n + k] /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r * n + c] == 0) continue;
      const mpq_class f = a[r * n + c];
      for (std::size_t k = 0; k < n; ++k) {
        a[r * n + k] -= f * a[c * n + k];
        inv[r * n + k] -= f * inv[c * n + k];
      }
    }
  }
  std::vector<Coord> m(n * n);
  for (std::size_t i = 0; i < n * n; ++i) m[i] = inv[i].get_num().get_si();
  return LatticeAutomorphism(n, std::move(m));
}

std::string LatticeAutomorphism::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rank_; ++i) {
    os << (i ? "," : "") << '[';
    for (std::size_t j = 0; j < rank_; ++j)
      os << (j ? "," : "") << m_[i * rank_ + j];
    os << ']';
  }
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------

namespace {

// g = a*x + b*y with g = gcd(x, y) >= 0.
void extended_gcd(Coord x, Coord y, Coord &g, Coord &a, Coord &b) {
  Coord old_r = x, r = y, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const Coord q = old_r / r;
    Coord tmp = old_r - q * r;
    old_r = r, r = tmp;
    tmp = old_s - q * s;
    old_s = s, s = tmp;
    tmp = old_t - q * t;
    old_t = t, t = tmp;
  }
  if (old_r < 0) old_r = -old_r, old_s = -old_s, old_t = -old_t;
  g = old_r, a = old_s, b = old_t;
}

} // namespace

UnimodularCompletion complete_to_unimodular(const LatticeVector &gamma) {
  if (gamma.is_zero())
    throw ZeroVector("cannot complete the zero vector to a basis");
  const std::size_t n = gamma.rank();
  // Row operations are applied simultaneously to u (the transform), its
  // inverse, and the working column v = u * gamma.
  std::vector<std::vector<Coord>> u(n, std::vector<Coord>(n, 0));
  std::vector<std::vector<Coord>> ui = u;
  for (std::size_t i = 0; i < n; ++i) u[i][i] = ui[i][i] = 1;
  std::vector<Coord> v = gamma.coords();

  for (std::size_t i = 1; i < n; ++i) {
    if (v[i] == 0) continue;
    Coord g, a, b;
    extended_gcd(v[0], v[i], g, a, b);
    // [[a, b], [-v_i/g, v_0/g]] has determinant 1.
    const Coord c = -v[i] / g, d = v[0] / g;
    for (std::size_t k = 0; k < n; ++k) {
      const Coord r0 = u[0][k], ri = u[i][k];
      u[0][k] = a * r0 + b * ri;
      u[i][k] = c * r0 + d * ri;
    }
    // Inverse of the 2x2 block is [[d, -b], [-c, a]], applied on the right.
    for (std::size_t k = 0; k < n; ++k) {
      const Coord c0 = ui[k][0], ci = ui[k][i];
      ui[k][0] = c0 * d - ci * c;
      ui[k][i] = -c0 * b + ci * a;
    }
    v[0] = g;
    v[i] = 0;
  }
  if (v[0] < 0) {
    for (std::size_t k = 0; k < n; ++k) {
      u[0][k] = -u[0][k];
      ui[k][0] = -ui[k][0];
    }
    v[0] = -v[0];
  }
  return {LatticeAutomorphism::from_rows(std::move(u)),
          LatticeAutomorphism::from_rows(std::move(ui)), v[0]};
}

} // namespace momentrr
