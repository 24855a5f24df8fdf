#include "isect/diophantine.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace isect {

PhiMatrix build_phi(const ExponentPair& ep) {
  PhiMatrix phi;
  phi.n = ep.size();
  phi.rows.assign(2 * phi.n, std::vector<Int>(phi.cols(), 0));
  for (std::size_t t = 0; t < phi.n; ++t) {
    auto& row_a = phi.rows[2 * t];
    auto& row_b = phi.rows[2 * t + 1];
    row_a[0] = ep.a[t];
    row_a[2 + 3 * t] = 1;   // h_t
    row_a[4 + 3 * t] = -1;  // m_t
    row_b[1] = ep.b[t];
    row_b[3 + 3 * t] = 1;   // k_t
    row_b[4 + 3 * t] = -1;
  }
  return phi;
}

EPhiElement lift(const ExponentPair& ep, const LatticePoint2& p) {
  EPhiElement e;
  e.vec.reserve(3 * ep.size() + 2);
  e.vec.push_back(p.r);
  e.vec.push_back(p.s);
  for (std::size_t t = 0; t < ep.size(); ++t) {
    Int ar = checked_mul(ep.a[t], p.r);
    Int bs = checked_mul(ep.b[t], p.s);
    Int m = std::max(ar, bs);
    e.vec.push_back(m - ar);
    e.vec.push_back(m - bs);
    e.vec.push_back(m);
  }
  return e;
}

bool is_member(const PhiMatrix& phi, std::span<const Int> v) {
  if (v.size() != phi.cols())
    throw Error("LengthMismatch", "vector length does not match 3n+2");
  for (Int x : v)
    if (x < 0) return false;
  for (const auto& row : phi.rows) {
    Int acc = 0;
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) acc = checked_add(acc, checked_mul(row[j], v[j]));
    if (acc != 0) return false;
  }
  return true;
}

std::vector<EPhiElement> FundSet::all() const {
  std::vector<EPhiElement> out = alphas;
  for (const Beta& b : betas) out.push_back(b.elem);
  std::sort(out.begin(), out.end());
  return out;
}

static EPhiElement alpha_element(std::size_t n, std::size_t t) {
  EPhiElement e;
  e.vec.assign(3 * n + 2, 0);
  e.vec[2 + 3 * t] = 1;
  e.vec[3 + 3 * t] = 1;
  e.vec[4 + 3 * t] = 1;
  return e;
}

FundSet fund_elements(const ExponentPair& ep) {
  FundSet fund;
  for (std::size_t t = 0; t < ep.size(); ++t)
    fund.alphas.push_back(alpha_element(ep.size(), t));

  // Shared-face points appear in consecutive bases; keep one entry tagged
  // with the smallest cone index.
  std::map<LatticePoint2, std::size_t> owner;
  for (const HilbertBasis& hb : hilbert_bases(build_fan(ep)))
    for (const LatticePoint2& p : hb.points)
      if (!owner.count(p)) owner.emplace(p, hb.cone_index);

  for (const auto& [p, cone] : owner)
    fund.betas.push_back({cone, p, lift(ep, p)});
  return fund;
}

// Reduced boundary rays (q_i, p_i) for i = 0..n+1, sentinel rays included.
static std::vector<LatticePoint2> boundary_rays(const ExponentPair& ep) {
  std::vector<LatticePoint2> rays;
  for (std::size_t i = 0; i <= ep.size() + 1; ++i) {
    Int a = ep.a_ext(i);
    Int b = ep.b_ext(i);
    LatticePoint2 ray = b == 0 ? LatticePoint2{0, 1} : primitive({b, a});
    if (std::find(rays.begin(), rays.end(), ray) == rays.end())
      rays.push_back(ray);
  }
  return rays;
}

std::vector<EPhiElement> cf_elements(const ExponentPair& ep) {
  std::vector<EPhiElement> out;
  for (std::size_t t = 0; t < ep.size(); ++t)
    out.push_back(alpha_element(ep.size(), t));
  for (const LatticePoint2& ray : boundary_rays(ep)) out.push_back(lift(ep, ray));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<EPhiElement> minimal_positive(const ExponentPair& ep) {
  if (!is_non_degenerate(ep))
    throw Error("DegenerateInput",
                "minimal positive elements require non-degenerate exponents");
  std::vector<EPhiElement> out;
  for (const FundSet::Beta& b : fund_elements(ep).betas) {
    if (b.point == LatticePoint2{1, 0} || b.point == LatticePoint2{0, 1})
      continue;
    EPhiElement shifted = b.elem;
    for (std::size_t j = 2; j < shifted.vec.size(); ++j)
      shifted.vec[j] = checked_add(shifted.vec[j], 1);
    out.push_back(std::move(shifted));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EPhiElement> enumerate_members(const PhiMatrix& phi, Int bound_rs,
                                           Int bound_m) {
  if (bound_rs < 0 || bound_m < 0)
    throw Error("InvalidBox", "enumeration bounds must be nonnegative");
  std::vector<EPhiElement> out;
  std::size_t n = phi.n;
  std::vector<Int> lo(n), m(n);
  for (Int r = 0; r <= bound_rs; ++r) {
    for (Int s = 0; s <= bound_rs; ++s) {
      bool feasible = true;
      for (std::size_t t = 0; t < n; ++t) {
        lo[t] = std::max(checked_mul(phi.a(t), r), checked_mul(phi.b(t), s));
        if (lo[t] > bound_m) {
          feasible = false;
          break;
        }
      }
      if (!feasible) continue;
      m = lo;
      // odometer over (m_1, ..., m_n), last coordinate fastest
      auto advance = [&]() -> bool {
        std::size_t t = n;
        while (t-- > 0) {
          if (m[t] < bound_m) {
            ++m[t];
            return true;
          }
          m[t] = lo[t];
        }
        return false;
      };
      do {
        EPhiElement e;
        e.vec.reserve(3 * n + 2);
        e.vec.push_back(r);
        e.vec.push_back(s);
        for (std::size_t t = 0; t < n; ++t) {
          e.vec.push_back(m[t] - checked_mul(phi.a(t), r));
          e.vec.push_back(m[t] - checked_mul(phi.b(t), s));
          e.vec.push_back(m[t]);
        }
        out.push_back(std::move(e));
      } while (advance());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace isect
