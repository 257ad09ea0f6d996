#pragma once

#include <vector>

#include <gmpxx.h>

#include "momentrr/fibration.hpp"
#include "momentrr/structure_algebra.hpp"

namespace momentrr {

/// A family (zeta_w) indexed by the vertices, zeta_w supported on {v >= w}
/// with zeta_w(w) != 0.
struct TriangularBasis {
  GraphPtr graph;
  std::vector<MultElement> elements; // indexed by vertex
};

/// zeta_top is the point class at the unique maximal vertex; then
/// zeta_{M(w)} = push_pull_M(zeta_w) whenever M(w) < w, for each matching M.
/// Elements reached along several routes must agree. Throws NotTriangular on
/// a disagreement, a support violation or an unreached vertex, and
/// PreconditionFailed if the graph has no unique maximal vertex or a
/// matching bundle is not a regular xi-fibration.
TriangularBasis triangular_family(GraphPtr g, const Monodromy &xi,
                                  const std::vector<SpecialMatching> &matchings,
                                  Exec exec = Exec::Parallel);

struct ForgetfulCoordinates {
  std::vector<LaurentPolynomial> coefficients; // z = sum_w c_w zeta_w
  std::vector<mpz_class> epsilon;              // augmentations of the c_w
};

/// Back-substitution along a linear extension. Throws NotInSpan.
ForgetfulCoordinates forgetful_map(const MultElement &z, const TriangularBasis &basis);

} // namespace momentrr
