#include "momentrr/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "momentrr/errors.hpp"

namespace momentrr {

Polynomial Polynomial::constant(std::size_t rank, const mpq_class &c) {
  Polynomial p(rank);
  p.add_term(LatticeVector(rank), c);
  return p;
}

Polynomial Polynomial::linear(const LatticeVector &lambda) {
  Polynomial p(lambda.rank());
  for (std::size_t i = 0; i < lambda.rank(); ++i)
    p.add_term(LatticeVector::unit(lambda.rank(), i), lambda[i]);
  return p;
}

Polynomial Polynomial::product_of_linear(std::size_t rank,
                                         const std::vector<LatticeVector> &forms) {
  Polynomial p = one(rank);
  for (const auto &f : forms) p = p * linear(f);
  return p;
}

mpq_class Polynomial::coeff(const LatticeVector &exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

mpq_class Polynomial::constant_term() const {
  return coeff(LatticeVector(rank_));
}

Coord Polynomial::degree() const {
  return terms_.empty() ? -1 : terms_.rbegin()->first.degree();
}

Coord Polynomial::min_degree() const {
  return terms_.empty() ? -1 : terms_.begin()->first.degree();
}

Polynomial Polynomial::homogeneous_part(Coord k) const {
  Polynomial r(rank_);
  for (const auto &[e, c] : terms_)
    if (e.degree() == k) r.terms_.emplace_hint(r.terms_.end(), e, c);
  return r;
}

bool Polynomial::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto &t) { return t.second.get_den() == 1; });
}

void Polynomial::add_term(const LatticeVector &exponent, const mpq_class &c) {
  require_rank(rank_, exponent.rank(), "polynomial term");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::truncated(Coord bound) const {
  Polynomial r(rank_);
  for (const auto &[e, c] : terms_) {
    if (e.degree() > bound) break; // graded order: degrees are nondecreasing
    r.terms_.emplace_hint(r.terms_.end(), e, c);
  }
  return r;
}

Polynomial &Polynomial::operator+=(const Polynomial &o) {
  require_rank(rank_, o.rank_, "polynomial addition");
  for (const auto &[e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &o) {
  require_rank(rank_, o.rank_, "polynomial subtraction");
  for (const auto &[e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial &Polynomial::operator*=(const mpq_class &c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto &[e, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto &[e, v] : r.terms_) v = -v;
  return r;
}

Polynomial Polynomial::multiply(const Polynomial &a, const Polynomial &b,
                                Coord bound) {
  require_rank(a.rank_, b.rank_, "polynomial multiplication");
  Polynomial r(a.rank_);
  mpq_class prod;
  for (const auto &[ea, ca] : a.terms_) {
    const Coord da = ea.degree();
    if (bound >= 0 && da > bound) break;
    for (const auto &[eb, cb] : b.terms_) {
      if (bound >= 0 && da + eb.degree() > bound) break;
      prod = ca * cb;
      r.add_term(ea + eb, prod);
    }
  }
  return r;
}

Polynomial Polynomial::apply(const LatticeAutomorphism &phi) const {
  require_rank(rank_, phi.rank(), "automorphism on S*(Lambda)");
  if (terms_.empty()) return *this;
  // powers[i][k] = phi(x_i)^k
  std::vector<std::vector<Polynomial>> powers(rank_);
  for (std::size_t i = 0; i < rank_; ++i) {
    Coord top = 0;
    for (const auto &[e, c] : terms_) top = std::max(top, e[i]);
    const Polynomial image = linear(phi.column(i));
    powers[i].push_back(one(rank_));
    for (Coord k = 1; k <= top; ++k) powers[i].push_back(powers[i].back() * image);
  }
  Polynomial r(rank_);
  for (const auto &[e, c] : terms_) {
    Polynomial t = constant(rank_, c);
    for (std::size_t i = 0; i < rank_; ++i)
      if (e[i] > 0) t = t * powers[i][static_cast<std::size_t>(e[i])];
    r += t;
  }
  return r;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[e, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    first = false;
    const mpq_class a = abs(c);
    if (e.is_zero()) {
      os << a.get_str();
      continue;
    }
    bool need_star = false;
    if (a != 1) {
      os << a.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < rank_; ++i) {
      if (e[i] == 0) continue;
      os << (need_star ? "*" : "") << 'x' << (i + 1);
      if (e[i] > 1) os << '^' << e[i];
      need_star = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------

TruncatedSeries::TruncatedSeries(Polynomial poly, Coord bound)
    : poly_(poly.truncated(bound)), bound_(bound) {
  if (bound < 0) throw MathError("truncation bound must be nonnegative");
}

TruncatedSeries TruncatedSeries::truncated(Coord bound) const {
  return {poly_, std::min(bound, bound_)};
}

TruncatedSeries &TruncatedSeries::operator+=(const TruncatedSeries &o) {
  bound_ = std::min(bound_, o.bound_);
  poly_ += o.poly_;
  poly_ = poly_.truncated(bound_);
  return *this;
}

TruncatedSeries &TruncatedSeries::operator-=(const TruncatedSeries &o) {
  bound_ = std::min(bound_, o.bound_);
  poly_ -= o.poly_;
  poly_ = poly_.truncated(bound_);
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b) {
  const Coord bound = std::min(a.bound_, b.bound_);
  return {Polynomial::multiply(a.poly_, b.poly_, bound), bound};
}

std::string TruncatedSeries::str() const {
  return poly_.str() + " + O(deg " + std::to_string(bound_ + 1) + ")";
}

// ---------------------------------------------------------------------------

LinearDivision divide_by_linear(const Polynomial &p, const LatticeVector &gamma) {
  require_rank(p.rank(), gamma.rank(), "division by a linear form");
  const UnimodularCompletion basis = complete_to_unimodular(gamma);
  // transform(gamma) = m e_1: after the substitution the linear form gamma
  // is m * x_1.
  const Polynomial moved = p.apply(basis.transform);
  Polynomial q(p.rank()), r(p.rank());
  const mpq_class m = mpq_class(mpz_class(static_cast<long>(basis.multiplier)));
  for (const auto &[e, c] : moved.terms()) {
    if (e[0] == 0) {
      r.add_term(e, c);
      continue;
    }
    LatticeVector lowered = e;
    lowered[0] -= 1;
    q.add_term(lowered, c / m);
  }
  return {q.apply(basis.inverse), r.apply(basis.inverse)};
}

Polynomial exact_divide_linear(const Polynomial &p, const LatticeVector &gamma,
                               CoeffDomain domain) {
  LinearDivision d = divide_by_linear(p, gamma);
  if (!d.remainder.is_zero())
    throw NotDivisible("linear form " + gamma.str() + " does not divide " +
                           p.str(),
                       d.remainder.str());
  if (domain == CoeffDomain::Integer && p.is_integral() &&
      !d.quotient.is_integral())
    throw NotDivisible("quotient of " + p.str() + " by " + gamma.str() +
                           " is not integral",
                       d.quotient.str());
  return std::move(d.quotient);
}

TruncatedSeries exact_divide_linear(const TruncatedSeries &s,
                                    const LatticeVector &gamma) {
  if (s.bound() < 1 && !s.is_zero())
    throw NotDivisible("nonzero constant is not divisible by " + gamma.str(),
                       s.poly().str());
  const Polynomial q = exact_divide_linear(s.poly(), gamma);
  return {q, std::max<Coord>(s.bound() - 1, 0)};
}

TruncatedSeries evaluate_at_form(const std::vector<mpq_class> &coeffs,
                                 const LatticeVector &lambda, Coord bound) {
  const std::size_t n = lambda.rank();
  const Polynomial form = Polynomial::linear(lambda);
  Polynomial result(n), power = Polynomial::one(n);
  for (Coord j = 0; j <= bound && static_cast<std::size_t>(j) < coeffs.size();
       ++j) {
    if (j > 0) power = power * form;
    result += power * coeffs[static_cast<std::size_t>(j)];
  }
  return {result, bound};
}

TruncatedSeries truncated_exp(const LatticeVector &lambda, Coord bound) {
  std::vector<mpq_class> c(static_cast<std::size_t>(bound) + 1);
  mpz_class factorial = 1;
  for (Coord j = 0; j <= bound; ++j) {
    if (j > 0) factorial *= static_cast<unsigned long>(j);
    c[static_cast<std::size_t>(j)] = mpq_class(mpz_class(1), factorial);
  }
  return evaluate_at_form(c, lambda, bound);
}

std::vector<mpq_class> todd_coefficients(Coord bound) {
  const std::size_t n = static_cast<std::size_t>(bound) + 1;
  // a_j = (-1)^j / (j+1)!  is the series of (1 - e^{-x}) / x.
  std::vector<mpq_class> a(n);
  mpz_class factorial = 1;
  for (std::size_t j = 0; j < n; ++j) {
    factorial *= static_cast<unsigned long>(j + 1);
    a[j] = mpq_class(mpz_class(j % 2 ? -1 : 1), factorial);
  }
  std::vector<mpq_class> b(n);
  b[0] = 1;
  for (std::size_t k = 1; k < n; ++k) {
    mpq_class s = 0;
    for (std::size_t j = 1; j <= k; ++j) s += a[j] * b[k - j];
    b[k] = -s;
  }
  return b;
}

TruncatedSeries todd_series(const LatticeVector &lambda, Coord bound) {
  if (lambda.is_zero()) throw ZeroVector("Todd series of the zero vector");
  return evaluate_at_form(todd_coefficients(bound), lambda, bound);
}

} // namespace momentrr
