#ifndef ISECT_FANALG_HPP
#define ISECT_FANALG_HPP

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "isect/cones.hpp"
#include "isect/core.hpp"

namespace isect {

/// Nonnegative rational coefficient, reduced, den >= 1.
struct Rational {
  Int num{0};
  Int den{1};

  Rational() = default;
  Rational(Int n, Int d);

  friend bool operator==(const Rational&, const Rational&) = default;
};

/// A function linear on each cone of the fan: on cone i it evaluates to
/// coeff_r(i)*r + coeff_s(i)*s. Values must be integers on lattice points
/// and the pieces must agree on shared rays.
struct FanLinearFunction {
  std::vector<std::pair<Rational, Rational>> cone_coeffs;  // (c_r, c_s) per cone
  /// Set for the built-in functions max(a_t*r, b_t*s); their subadditivity
  /// is exact, so box certification is skipped.
  bool max_form{false};
  Int max_a{0};
  Int max_b{0};
};

/// The coordinate function f_t(r,s) = max(a_t*r, b_t*s) of the intersection
/// algebra, expressed piecewise: a_t*r on cones at or right of the t-th ray,
/// b_t*s on the cones left of it.
FanLinearFunction max_form_function(const ExponentPair& ep, std::size_t t);

/// Value of the piece owning p (smallest cone index). Throws
/// NonIntegralValue when the rational form does not evaluate to an integer.
Int evaluate(const FanLinearFunction& f, const Fan& fan,
             const LatticePoint2& p);

struct FanLinearViolation {
  std::string kind;  // "non-integral" | "face-disagreement" | "subadditivity"
  LatticePoint2 p1;
  LatticePoint2 p2;  // second point of a subadditivity pair, else (0,0)
  std::string detail;
};

struct FanLinearCheck {
  bool ok{false};
  /// True when subadditivity holds by the exact max-form argument rather
  /// than by box certification.
  bool exact_subadditivity{false};
  Int box_bound{0};
  std::optional<FanLinearViolation> violation;
};

/// Face agreement and Hilbert-basis integrality are checked exactly;
/// subadditivity exhaustively over [0, box_bound]^2 (or exactly for the
/// max-form fast path). Reports the lexicographically first violation.
FanLinearCheck check_fan_linear(const FanLinearFunction& f, const Fan& fan,
                                Int box_bound);

struct NormalityCounterexample {
  std::vector<Int> z;  // (z_1..z_n, r, s) outside Q with a multiple inside
  Int multiplier;
};

struct NormalityResult {
  bool normal{false};
  Int box_bound{0};
  Int multiplier_bound{0};
  std::optional<NormalityCounterexample> counterexample;
};

/// Membership predicate over (z_1..z_n, r, s).
using SemigroupPredicate = std::function<bool(std::span<const Int>)>;

/// Saturation scan: every z in [0, box_bound]^(n+2) with m*z in the
/// semigroup for some 2 <= m <= max_multiplier must itself be a member.
/// The first counterexample in (z, m) lexicographic order is reported.
NormalityResult normality_check(std::size_t n, Int box_bound,
                                Int max_multiplier,
                                const SemigroupPredicate& member);

/// Saturation of the intersection-algebra semigroup z_t >= max(a_t*r, b_t*s).
NormalityResult normality_check(const ExponentPair& ep, Int box_bound,
                                Int max_multiplier);

/// Saturation of the fan-algebra semigroup z_t >= f_t(r, s).
NormalityResult normality_check(const std::vector<FanLinearFunction>& fs,
                                const Fan& fan, Int box_bound,
                                Int max_multiplier);

}  // namespace isect

#endif
