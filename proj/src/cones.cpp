#include "isect/cones.hpp"

#include <algorithm>
#include <numeric>

namespace isect {

LatticePoint2 primitive(const LatticePoint2& p) {
  if (p.r == 0 && p.s == 0) throw Error("ZeroVector", "primitive of (0,0)");
  Int g = std::gcd(p.r, p.s);
  return {p.r / g, p.s / g};
}

bool cone_contains(const Cone2D& c, const LatticePoint2& p) {
  return cross(c.ray_high, p) >= 0 && cross(c.ray_low, p) <= 0;
}

Fan build_fan(const ExponentPair& ep) {
  Fan fan;
  fan.ep = ep;
  std::size_t n = ep.size();
  fan.cones.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    Cone2D c;
    c.index = i;
    c.ray_high = {ep.b_ext(i), ep.a_ext(i)};
    c.ray_low = {ep.b_ext(i + 1), ep.a_ext(i + 1)};
    c.primitive_high = primitive(c.ray_high);
    c.primitive_low = primitive(c.ray_low);
    c.degenerate = cross(c.ray_high, c.ray_low) == 0;
    fan.cones.push_back(c);
  }
  return fan;
}

HilbertBasis hilbert_basis(const Cone2D& c) {
  HilbertBasis hb;
  hb.cone_index = c.index;
  if (c.degenerate) {
    hb.points = {c.primitive_high};
    return hb;
  }

  const LatticePoint2 high = c.primitive_high;
  const LatticePoint2 low = c.primitive_low;
  // p = l1*high + l2*low with cross(high, low) = D > 0:
  //   l1 = cross(p, low) / D  and  l2 = cross(high, p) / D.
  const Int det = cross(high, low);

  std::vector<LatticePoint2> candidates;
  for (Int r = 0; r <= high.r + low.r; ++r) {
    for (Int s = 0; s <= high.s + low.s; ++s) {
      LatticePoint2 p{r, s};
      if (p == LatticePoint2{0, 0}) continue;
      Int l1 = cross(p, low);
      Int l2 = cross(high, p);
      if (l1 >= 0 && l1 <= det && l2 >= 0 && l2 <= det)
        candidates.push_back(p);
    }
  }

  auto in_cone = [&](const LatticePoint2& p) {
    return cross(high, p) >= 0 && cross(low, p) <= 0;
  };
  for (const LatticePoint2& x : candidates) {
    bool reducible = false;
    for (Int yr = 0; yr <= x.r && !reducible; ++yr) {
      for (Int ys = 0; ys <= x.s; ++ys) {
        LatticePoint2 y{yr, ys};
        if (y == LatticePoint2{0, 0} || y == x) continue;
        LatticePoint2 z{x.r - yr, x.s - ys};
        if (in_cone(y) && in_cone(z)) {
          reducible = true;
          break;
        }
      }
    }
    if (!reducible) hb.points.push_back(x);
  }
  std::sort(hb.points.begin(), hb.points.end());
  return hb;
}

std::vector<HilbertBasis> hilbert_bases(const Fan& f) {
  std::vector<HilbertBasis> out(f.cones.size());
  parallel_for(f.cones.size(),
               [&](std::size_t i) { out[i] = hilbert_basis(f.cones[i]); });
  return out;
}

std::size_t cone_assignment(const Fan& f, const LatticePoint2& p) {
  for (const Cone2D& c : f.cones)
    if (cone_contains(c, p)) return c.index;
  // The cones cover the first quadrant, so this is unreachable for p >= 0.
  throw Error("OutsideFan", "point lies outside the first quadrant");
}

}  // namespace isect
