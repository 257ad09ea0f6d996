#include "momentrr/laurent.hpp"

#include <functional>
#include <sstream>
#include <utility>

#include "momentrr/errors.hpp"

namespace momentrr {

LaurentPolynomial LaurentPolynomial::constant(std::size_t rank,
                                              const mpz_class &c) {
  LaurentPolynomial p(rank);
  p.add_term(LatticeVector(rank), c);
  return p;
}

LaurentPolynomial LaurentPolynomial::monomial(const LatticeVector &lambda,
                                              const mpz_class &c) {
  LaurentPolynomial p(lambda.rank());
  p.add_term(lambda, c);
  return p;
}

LaurentPolynomial LaurentPolynomial::x(const LatticeVector &lambda) {
  LaurentPolynomial p(lambda.rank());
  p.add_term(LatticeVector(lambda.rank()), 1);
  p.add_term(-lambda, -1);
  return p;
}

mpz_class LaurentPolynomial::coeff(const LatticeVector &exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void LaurentPolynomial::add_term(const LatticeVector &exponent,
                                 const mpz_class &c) {
  require_rank(rank_, exponent.rank(), "Laurent term");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

mpz_class LaurentPolynomial::augmentation() const {
  mpz_class s = 0;
  for (const auto &[e, c] : terms_) s += c;
  return s;
}

LaurentPolynomial &LaurentPolynomial::operator+=(const LaurentPolynomial &o) {
  require_rank(rank_, o.rank_, "Laurent addition");
  for (const auto &[e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial &LaurentPolynomial::operator-=(const LaurentPolynomial &o) {
  require_rank(rank_, o.rank_, "Laurent subtraction");
  for (const auto &[e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial &LaurentPolynomial::operator*=(const mpz_class &c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto &[e, v] : terms_) v *= c;
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r(*this);
  for (auto &[e, v] : r.terms_) v = -v;
  return r;
}

LaurentPolynomial operator*(const LaurentPolynomial &a,
                            const LaurentPolynomial &b) {
  require_rank(a.rank_, b.rank_, "Laurent multiplication");
  LaurentPolynomial r(a.rank_);
  mpz_class prod;
  for (const auto &[ea, ca] : a.terms_)
    for (const auto &[eb, cb] : b.terms_) {
      prod = ca * cb;
      r.add_term(ea + eb, prod);
    }
  return r;
}

LaurentPolynomial LaurentPolynomial::shifted(const LatticeVector &lambda) const {
  require_rank(rank_, lambda.rank(), "Laurent shift");
  LaurentPolynomial r(rank_);
  for (const auto &[e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + lambda, c);
  return r;
}

LaurentPolynomial
LaurentPolynomial::apply(const LatticeAutomorphism &phi) const {
  require_rank(rank_, phi.rank(), "automorphism on Z[Lambda]");
  LaurentPolynomial r(rank_);
  // phi is injective on exponents, so no two terms collide.
  for (const auto &[e, c] : terms_) r.terms_.emplace(phi(e), c);
  return r;
}

std::string LaurentPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[e, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    first = false;
    const mpz_class a = abs(c);
    if (e.is_zero()) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << '*';
    os << "e^" << e.str();
  }
  return os.str();
}

// ---------------------------------------------------------------------------

LaurentDivision divide_by_x(const LaurentPolynomial &z,
                            const LatticeVector &gamma) {
  require_rank(z.rank(), gamma.rank(), "division by x_gamma");
  const UnimodularCompletion basis = complete_to_unimodular(gamma);
  const Coord m = basis.multiplier;
  const std::size_t n = z.rank();

  // In the new basis x_gamma = 1 - t^{-m} with t = e^{e_1}. Group the terms
  // by (exponent of the other variables, residue of the t-exponent mod m);
  // within a group q_k = sum_{j >= 0} c_{k + j m}.
  using Group = std::map<Coord, mpz_class, std::greater<>>;
  std::map<std::pair<LatticeVector, Coord>, Group> groups;
  for (const auto &[e, c] : z.terms()) {
    LatticeVector f = basis.transform(e);
    const Coord k = f[0];
    f[0] = 0;
    const Coord residue = ((k % m) + m) % m;
    groups[{std::move(f), residue}].emplace(k, c);
  }

  LaurentPolynomial q(n), r(n);
  for (const auto &[key, group] : groups) {
    LatticeVector exp = key.first;
    const Coord lowest = group.rbegin()->first;
    mpz_class running = 0;
    auto it = group.begin();
    for (Coord k = group.begin()->first; k >= lowest; k -= m) {
      if (it != group.end() && it->first == k) {
        running += it->second;
        ++it;
      }
      exp[0] = k;
      if (k > lowest) q.add_term(exp, running);
      else r.add_term(exp, running);
    }
  }
  return {q.apply(basis.inverse), r.apply(basis.inverse)};
}

LaurentPolynomial exact_divide_laurent(const LaurentPolynomial &z,
                                       const LatticeVector &gamma) {
  LaurentDivision d = divide_by_x(z, gamma);
  if (!d.remainder.is_zero())
    throw NotDivisible("x_" + gamma.str() + " does not divide " + z.str(),
                       d.remainder.str());
  return std::move(d.quotient);
}

LaurentPolynomial divide_exact(const LaurentPolynomial &p,
                               const LaurentPolynomial &d) {
  require_rank(p.rank(), d.rank(), "Laurent division");
  if (d.is_zero()) throw NotDivisible("division by zero", p.str());
  // Lexicographic order on Z^n is a group order: the leading term of a
  // product is the product of the leading terms, and likewise for the
  // trailing terms, which bounds the exponents any exact quotient can use.
  using Lex = std::less<LatticeVector>;
  auto lead = [](const LaurentPolynomial &f) {
    auto best = f.terms().begin();
    for (auto it = f.terms().begin(); it != f.terms().end(); ++it)
      if (Lex{}(best->first, it->first)) best = it;
    return *best;
  };
  auto trail = [](const LaurentPolynomial &f) {
    auto best = f.terms().begin();
    for (auto it = f.terms().begin(); it != f.terms().end(); ++it)
      if (Lex{}(it->first, best->first)) best = it;
    return *best;
  };
  LaurentPolynomial q(p.rank()), rest = p;
  if (rest.is_zero()) return q;
  const auto [d_lead_exp, d_lead_c] = lead(d);
  const LatticeVector floor_exp = trail(p).first - trail(d).first;
  while (!rest.is_zero()) {
    const auto [r_exp, r_c] = lead(rest);
    const LatticeVector e = r_exp - d_lead_exp;
    if (Lex{}(e, floor_exp) || !mpz_divisible_p(r_c.get_mpz_t(),
                                                d_lead_c.get_mpz_t()))
      throw NotDivisible(d.str() + " does not divide " + p.str(), rest.str());
    const mpz_class c = r_c / d_lead_c;
    q.add_term(e, c);
    rest -= LaurentPolynomial::monomial(e, c) * d;
  }
  return q;
}

} // namespace momentrr
