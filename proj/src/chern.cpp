#include "momentrr/chern.hpp"

#include <algorithm>
#include <cctype>

namespace momentrr {

TruncatedSeries chern_character(const LaurentPolynomial &z, Coord bound) {
  TruncatedSeries out(Polynomial(z.rank()), bound);
  for (const auto &[exponent, c] : z.terms())
    out += truncated_exp(exponent, bound) * mpq_class(c);
  return out;
}

TruncElement chern_localized(const MultElement &z, Coord bound) {
  std::vector<TruncatedSeries> values;
  values.reserve(z.size());
  for (const auto &v : z.values()) values.push_back(chern_character(v, bound));
  return TruncElement(z.graph_ptr(), std::move(values));
}

const char *convention_name(ToddConvention c) {
  switch (c) {
  case ToddConvention::PaperStated:
    return "paper_stated";
  case ToddConvention::SignFlipped:
    return "sign_flipped";
  case ToddConvention::Exact:
    return "exact";
  }
  return "exact";
}

ToddConvention parse_convention(const std::string &name) {
  std::string lower;
  for (char ch : name) lower.push_back(ch == '-' ? '_' : static_cast<char>(std::tolower(ch)));
  for (ToddConvention c : kAllConventions)
    if (lower == convention_name(c)) return c;
  throw SchemaError("unknown Todd convention '" + name + "'");
}

TruncElement todd_genus(const FiberBundle &b, Coord bound, ToddConvention c) {
  const auto data = compute_fiber_data(b);
  const std::size_t rank = b.total().rank();
  const auto base_labels = b.class_labels(b.base_class());
  std::vector<TruncatedSeries> values;
  for (VertexId y = 0; y < b.total().size(); ++y) {
    const LatticeAutomorphism &xi = b.xi()[y];
    if (c == ToddConvention::Exact) {
      TruncatedSeries td = TruncatedSeries::one(rank, bound);
      for (const auto &beta : base_labels) td = td * todd_series(xi(beta), bound);
      values.push_back(std::move(td));
      continue;
    }
    LatticeVector sum(rank);
    for (const auto &beta : data[y].n_set) sum += xi(beta);
    values.push_back(truncated_exp(c == ToddConvention::PaperStated ? -sum : sum, bound));
  }
  return TruncElement(b.total_ptr(), std::move(values));
}

Coord RRReport::agree_through_degree() const {
  Coord out = bound;
  for (const auto &r : per_class) out = std::min(out, r.agree_through_degree);
  return out;
}

RRReport rr_check(const FiberBundle &b, const MultElement &z, Coord bound, ToddConvention c,
                  Exec exec) {
  const auto data = compute_fiber_data(b);
  const std::size_t rank = b.total().rank();
  const Coord working = bound + static_cast<Coord>(b.class_labels(b.base_class()).size());

  const TruncElement cch = chern_localized(z, working);
  const TruncElement td = todd_genus(b, working, c);
  const TruncElement rhs = chern_localized(pushforward_mult(b, z, {false, exec}), bound);

  RRReport report;
  report.convention = c;
  report.bound = bound;
  std::vector<RRClassResult> results(b.class_count());
  for_each_index(exec, b.class_count(), [&](std::size_t cls) {
    const VertexId q = b.quotient().vertex_of_class[cls];
    RRClassResult &r = results[cls];
    r.vertex = b.base().id(q);

    TruncatedSeries numerator(Polynomial(rank), working);
    for (VertexId y : b.members(cls)) {
      const TruncatedSeries term = cch[y] * td[y];
      if (data[y].sign > 0)
        numerator += term;
      else
        numerator -= term;
    }
    TruncatedSeries lhs = numerator;
    try {
      for (const auto &gamma : b.class_labels(cls)) lhs = exact_divide_linear(lhs, gamma);
    } catch (const NotDivisible &err) {
      r.agree_through_degree = -1;
      r.first_mismatch = RRMismatch{0, numerator.str(), rhs[q].str(), err.remainder()};
      return;
    }
    lhs = lhs.truncated(bound);
    r.agree_through_degree = bound;
    for (Coord k = 0; k <= bound; ++k) {
      const Polynomial left = lhs.poly().homogeneous_part(k);
      const Polynomial right = rhs[q].poly().homogeneous_part(k);
      if (left != right) {
        r.agree_through_degree = k - 1;
        r.first_mismatch = RRMismatch{k, left.str(), right.str(), {}};
        break;
      }
    }
  });
  report.per_class = std::move(results);
  std::vector<RRClassResult> ordered(report.per_class.size());
  for (std::size_t cls = 0; cls < ordered.size(); ++cls)
    ordered[b.quotient().vertex_of_class[cls]] = std::move(report.per_class[cls]);
  report.per_class = std::move(ordered);
  return report;
}

std::vector<RRRow> rr_report(const FiberBundle &b, const std::vector<MultElement> &elements,
                             Coord max_degree, Exec exec) {
  std::vector<RRRow> rows;
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (ToddConvention c : kAllConventions)
      rows.push_back({i, c, rr_check(b, elements[i], max_degree, c, exec).agree_through_degree()});
  return rows;
}

} // namespace momentrr
