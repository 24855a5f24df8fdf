#ifndef ISECT_ORACLE_HPP
#define ISECT_ORACLE_HPP

#include <cstddef>
#include <vector>

#include "isect/cones.hpp"
#include "isect/core.hpp"
#include "isect/diophantine.hpp"

// Brute-force reference implementations for the test suite and the CLI
// `verify` command. These share data types with the fast modules but never
// call the operations they are used to check; every membership test and
// reduction here is computed locally.

namespace isect {

struct BoxSpec {
  Int rs_bound{25};
  Int m_bound{0};
  Int multiplier_bound{4};
};

/// Box sized from the fan's primitive ray data: rs_bound twice the largest
/// fundamental-parallelogram corner coordinate (an upper bound for twice the
/// largest Hilbert-basis coordinate), m_bound scaled by the largest exponent.
BoxSpec default_box(const ExponentPair& ep);

/// Exponents of the generator of I^r intersect J^s: m_t = max(a_t*r, b_t*s).
std::vector<Int> oracle_intersection_exponents(const ExponentPair& ep, Int r,
                                               Int s);

/// All cone lattice points in the box that are not sums of two nonzero cone
/// points. The box must contain the closed fundamental parallelogram.
std::vector<LatticePoint2> oracle_hilbert_basis(const Cone2D& c,
                                                const BoxSpec& box);

/// Strictly positive solutions in the box, minimal under componentwise
/// order. Minimality is exact for each reported element; the box only
/// limits which elements are found.
std::vector<EPhiElement> oracle_minimal_positive(const ExponentPair& ep,
                                                 const BoxSpec& box);

/// Exact decomposability test: true iff no solution lies strictly between
/// 0 and beta componentwise. Needs no box; decompositions are componentwise
/// below beta.
bool oracle_is_fundamental(const ExponentPair& ep, const EPhiElement& beta);

/// Fundamental solutions in the box: nonzero members whose only
/// decomposition into two members is trivial. Exact within the box since
/// decompositions are componentwise below the decomposed element.
std::vector<EPhiElement> oracle_fundamental_elements(const ExponentPair& ep,
                                                     const BoxSpec& box);

/// True iff for every 1 <= c <= c_max, every decomposition of c*beta into
/// two solutions uses only multiples of beta (the completely fundamental
/// property, certified up to c_max).
bool oracle_cf_multiples_only(const ExponentPair& ep, const EPhiElement& beta,
                              Int c_max);

/// All N-combinations of the generators inside the box. Vector layout is
/// (x_1, ..., x_{d-2}, r, s): the last two coordinates are capped by
/// rs_bound, the rest by m_bound.
std::vector<std::vector<Int>> oracle_semigroup_closure(
    const std::vector<std::vector<Int>>& gens, const BoxSpec& box);

}  // namespace isect

#endif
