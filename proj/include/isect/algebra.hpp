#ifndef ISECT_ALGEBRA_HPP
#define ISECT_ALGEBRA_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "isect/core.hpp"
#include "isect/diophantine.hpp"

namespace isect {

/// A monomial x_1^{m_1} ... x_n^{m_n} u^r v^s of the algebra, as its
/// exponent data. Membership requires m_t >= max(a_t*r, b_t*s) for all t.
struct GradedMonomial {
  std::vector<Int> m;
  Int r{0};
  Int s{0};

  /// Exponent vector in the standard (m_1, ..., m_n, r, s) order.
  std::vector<Int> log() const;

  friend auto operator<=>(const GradedMonomial&, const GradedMonomial&) = default;
};

/// The algebra generators over the ground field: one monomial per
/// Hilbert-basis point (with m_t = max(a_t*r, b_t*s)) plus the n variables.
/// Shared-face duplicates are emitted once.
std::vector<GradedMonomial> generators(const ExponentPair& ep);

struct MinimalityResult {
  bool minimal{false};
  struct Redundancy {
    std::size_t index;  // position of the redundant generator
    std::vector<std::pair<std::size_t, Int>> combo;  // (other index, power)
  };
  std::optional<Redundancy> witness;
};

/// True iff no generator's log is an N-combination of the other logs.
/// Decided by a bounded multi-dimensional coin-change search; all logs must
/// be nonzero, so the search terminates.
MinimalityResult check_minimality(const std::vector<GradedMonomial>& gens);

/// One factor (1 - z^exponent)^multiplicity of the Hilbert-series
/// denominator, exponents over the variables (r, s, m_1, ..., m_n).
struct SeriesFactor {
  std::vector<Int> exponent;
  Int multiplicity{1};

  friend auto operator<=>(const SeriesFactor&, const SeriesFactor&) = default;
};

/// Denominator in lowest terms: n factors (1 - m_i) plus one factor per
/// distinct reduced boundary ray (q_i, p_i), i = 0..n+1, with exponent
/// (q_i, p_i, max(a_j q_i, b_j p_i), ...).
std::vector<SeriesFactor> hilbert_series_denominator(const ExponentPair& ep);

/// Necessary condition for lowest terms: no factor exponent is a scalar
/// multiple of another's.
bool denominator_factors_independent(const std::vector<SeriesFactor>& factors);

/// Sparse polynomial over (r, s, m_1, ..., m_n), all stored exponents of
/// total degree <= degree_cap.
struct TruncatedSeries {
  std::map<std::vector<Int>, Int> coefficients;
  Int degree_cap{0};

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;
};

/// The lattice-point counting series: one term z^(r,s,m_1..m_n) per algebra
/// monomial of total degree <= cap.
TruncatedSeries counting_series(const ExponentPair& ep, Int degree_cap);

/// Counting series times every denominator factor, truncated at the cap.
/// Exact through the cap; the constant coefficient is always 1.
TruncatedSeries hilbert_series_numerator_truncated(const ExponentPair& ep,
                                                   Int degree_cap);

/// Generators of the canonical ideal: the minimal positive solutions
/// projected to monomials (drop the h, k slack coordinates).
std::vector<GradedMonomial> canonical_ideal_generators(const ExponentPair& ep);

struct GorensteinResult {
  bool gorenstein{false};
  std::optional<EPhiElement> witness;  // the unique minimal element, if so
};

/// Gorenstein iff the minimal positive set is a singleton. Degenerate input
/// falls back to the brute-force oracle with an automatically sized box.
GorensteinResult is_gorenstein(const ExponentPair& ep);

/// Number of canonical-ideal generators: sum of Hilbert-basis sizes minus
/// (n+2). Requires non-degenerate input.
Int count_minimal(const ExponentPair& ep);

struct BoundResult {
  Int q{0};
  Int l{0};
  Int bound{0};
};

/// Upper bound a - l + 1 on the number of minimal positive elements for
/// n = 1, gcd(a,b) = 1, a > b >= 2, where a = b*q + l with 1 <= l <= b-1.
BoundResult minimal_count_bound(Int a, Int b);

/// Rank of the integer lattice spanned by the generator logs
/// (fraction-free elimination); equals n+2.
Int krull_dimension(const ExponentPair& ep);

}  // namespace isect

#endif
