#pragma once

#include <optional>
#include <string>
#include <vector>

#include "momentrr/fibration.hpp"
#include "momentrr/structure_algebra.hpp"

namespace momentrr {

/// ch_D(sum c_l e^l) = sum c_l exp_D(l).
TruncatedSeries chern_character(const LaurentPolynomial &z, Coord bound);

/// Vertexwise ch_D.
TruncElement chern_localized(const MultElement &z, Coord bound);

enum class ToddConvention { PaperStated, SignFlipped, Exact };

const char *convention_name(ToddConvention c);
// Accepts "paper_stated", "sign_flipped", "exact" (case-insensitive).
// Throws SchemaError otherwise.
ToddConvention parse_convention(const std::string &name);
inline constexpr ToddConvention kAllConventions[] = {
    ToddConvention::PaperStated, ToddConvention::SignFlipped, ToddConvention::Exact};

/// PaperStated: exp_D(-sum_{beta in N_y} xi_y(beta));
/// SignFlipped: exp_D(+sum_{beta in N_y} xi_y(beta));
/// Exact: prod_{beta in L_[e]} Q(xi_y(beta)) with Q(x) = x / (1 - e^{-x}).
/// Throws AmbiguousSign.
TruncElement todd_genus(const FiberBundle &b, Coord bound, ToddConvention c);

struct RRMismatch {
  Coord degree = 0;
  std::string lhs;
  std::string rhs;
  std::string remainder; // nonempty when the numerator was not divisible
};

struct RRClassResult {
  std::string vertex; // quotient vertex id
  Coord agree_through_degree = -1;
  std::optional<RRMismatch> first_mismatch;
};

struct RRReport {
  ToddConvention convention = ToddConvention::Exact;
  Coord bound = 0;
  std::vector<RRClassResult> per_class; // in quotient vertex order
  // Minimum over classes; equals `bound` when both sides agree everywhere.
  Coord agree_through_degree() const;
};

/// Compares pi_*(cch(z) td) with cch(pi_*(z)) through degree D. Both inputs
/// to the additive push-forward are computed at bound D + #L_[e]. A
/// numerator that the fibre labels do not divide is recorded as a mismatch.
RRReport rr_check(const FiberBundle &b, const MultElement &z, Coord bound,
                  ToddConvention c, Exec exec = Exec::Parallel);

struct RRRow {
  std::size_t element = 0;
  ToddConvention convention = ToddConvention::Exact;
  Coord agree_through_degree = -1;
};

/// One row per element and convention, elements in input order and
/// conventions in the order of kAllConventions.
std::vector<RRRow> rr_report(const FiberBundle &b, const std::vector<MultElement> &elements,
                             Coord max_degree, Exec exec = Exec::Parallel);

} // namespace momentrr
