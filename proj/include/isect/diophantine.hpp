#ifndef ISECT_DIOPHANTINE_HPP
#define ISECT_DIOPHANTINE_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "isect/cones.hpp"
#include "isect/core.hpp"

namespace isect {

/// The 2n x (3n+2) system a_t*r + h_t - m_t = 0, b_t*s + k_t - m_t = 0 over
/// columns (r, s, h_1, k_1, m_1, ..., h_n, k_n, m_n).
struct PhiMatrix {
  std::size_t n{0};
  std::vector<std::vector<Int>> rows;

  std::size_t cols() const { return 3 * n + 2; }
  Int a(std::size_t t) const { return rows[2 * t][0]; }      // t in 0..n-1
  Int b(std::size_t t) const { return rows[2 * t + 1][1]; }
};

PhiMatrix build_phi(const ExponentPair& ep);

/// A nonnegative solution (r, s, h_1, k_1, m_1, ..., h_n, k_n, m_n) of the
/// system, i.e. an element of the solution semigroup.
struct EPhiElement {
  std::vector<Int> vec;

  std::size_t n() const { return (vec.size() - 2) / 3; }
  Int r() const { return vec[0]; }
  Int s() const { return vec[1]; }
  Int h(std::size_t t) const { return vec[2 + 3 * t]; }
  Int k(std::size_t t) const { return vec[3 + 3 * t]; }
  Int m(std::size_t t) const { return vec[4 + 3 * t]; }
  /// The coordinate projection (r, s, h_t, k_t, m_t).
  std::array<Int, 5> pi(std::size_t t) const {
    return {r(), s(), h(t), k(t), m(t)};
  }

  friend auto operator<=>(const EPhiElement&, const EPhiElement&) = default;
};

/// The unique solution over (r, s) with componentwise-minimal slack:
/// m_t = max(a_t*r, b_t*s), so min(h_t, k_t) = 0 for every t.
EPhiElement lift(const ExponentPair& ep, const LatticePoint2& p);

/// All entries nonnegative and phi * v = 0.
bool is_member(const PhiMatrix& phi, std::span<const Int> v);

/// The fundamental elements: the n unit-slack vectors alpha_t (one per
/// variable) plus one lifted element per distinct Hilbert-basis point.
struct FundSet {
  struct Beta {
    std::size_t cone_index;  // smallest cone whose basis contains the point
    LatticePoint2 point;
    EPhiElement elem;
  };
  std::vector<EPhiElement> alphas;
  std::vector<Beta> betas;

  /// Sorted union of alphas and beta elements.
  std::vector<EPhiElement> all() const;
};

FundSet fund_elements(const ExponentPair& ep);

/// The completely fundamental elements: the alphas plus the lifted primitive
/// boundary rays (q_i, p_i), i = 0..n+1, duplicates emitted once.
std::vector<EPhiElement> cf_elements(const ExponentPair& ep);

/// Minimal strictly positive elements, valid only for non-degenerate input:
/// every fundamental element other than the alphas and the two sentinel-ray
/// lifts, shifted by +1 in every h, k, m coordinate.
std::vector<EPhiElement> minimal_positive(const ExponentPair& ep);

/// All members with r, s <= bound_rs and every m_t <= bound_m, sorted
/// lexicographically. h_t and k_t are determined by (r, s, m_t).
std::vector<EPhiElement> enumerate_members(const PhiMatrix& phi, Int bound_rs,
                                           Int bound_m);

}  // namespace isect

#endif
