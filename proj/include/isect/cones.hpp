#ifndef ISECT_CONES_HPP
#define ISECT_CONES_HPP

#include <compare>
#include <cstddef>
#include <vector>

#include "isect/core.hpp"

namespace isect {

/// A point (r, s) of the plane the fan lives in: r counts powers of I,
/// s powers of J.
struct LatticePoint2 {
  Int r{0};
  Int s{0};

  friend auto operator<=>(const LatticePoint2&, const LatticePoint2&) = default;
};

/// u.s * p.r - u.r * p.s. Positive when p lies strictly on the low-slope
/// side of the ray through u, zero when p is on the ray.
inline Int cross(const LatticePoint2& u, const LatticePoint2& p) {
  return checked_sub(checked_mul(u.s, p.r), checked_mul(u.r, p.s));
}

/// p divided by gcd(r, s). Rejects (0,0).
LatticePoint2 primitive(const LatticePoint2& p);

/// Cone C_i spanned by the consecutive rays (b_i, a_i) (high slope) and
/// (b_{i+1}, a_{i+1}) (low slope). Degenerate when the rays are parallel.
struct Cone2D {
  std::size_t index{0};
  LatticePoint2 ray_low;
  LatticePoint2 ray_high;
  LatticePoint2 primitive_low;
  LatticePoint2 primitive_high;
  bool degenerate{false};
};

/// Both half-plane tests: p on or below ray_high and on or above ray_low.
bool cone_contains(const Cone2D& c, const LatticePoint2& p);

/// The fan of n+1 cones covering the closed first quadrant, with sentinel
/// rays (0,1) and (1,0) at the ends.
struct Fan {
  std::vector<Cone2D> cones;
  ExponentPair ep;

  std::size_t n() const { return ep.size(); }
};

Fan build_fan(const ExponentPair& ep);

/// The unique minimal generating set of Q_i = C_i intersected with the
/// integer lattice, sorted lexicographically.
struct HilbertBasis {
  std::size_t cone_index{0};
  std::vector<LatticePoint2> points;
};

/// Candidates are the lattice points of the closed fundamental
/// parallelogram of the primitive rays; every candidate expressible as a
/// sum of two nonzero cone points is discarded. A degenerate cone yields
/// the singleton primitive ray generator.
HilbertBasis hilbert_basis(const Cone2D& c);

/// Hilbert bases of all cones; computed per cone in parallel, output
/// deterministic.
std::vector<HilbertBasis> hilbert_bases(const Fan& f);

/// Smallest index i with p in Q_i (face points belong to both neighbours;
/// the least index is the canonical owner).
std::size_t cone_assignment(const Fan& f, const LatticePoint2& p);

}  // namespace isect

#endif
