#include "isect/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace isect {

namespace {

// Local copies of the elementary geometry; the oracle does not call into
// the modules it is used to check.
Int xcross(const LatticePoint2& u, const LatticePoint2& p) {
  return checked_sub(checked_mul(u.s, p.r), checked_mul(u.r, p.s));
}

LatticePoint2 reduce_ray(const LatticePoint2& p) {
  Int g = std::gcd(p.r, p.s);
  return g == 0 ? p : LatticePoint2{p.r / g, p.s / g};
}

bool leq(const std::vector<Int>& x, const std::vector<Int>& y) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] > y[i]) return false;
  return true;
}

bool all_zero(const std::vector<Int>& x) {
  return std::all_of(x.begin(), x.end(), [](Int v) { return v == 0; });
}

// All solutions with r,s <= rs_bound and every m_t <= m_bound, enumerated
// directly from the defining equations m_t = a_t*r + h_t = b_t*s + k_t.
std::vector<std::vector<Int>> enumerate_box(const ExponentPair& ep,
                                            const BoxSpec& box) {
  std::size_t n = ep.size();
  std::vector<std::vector<Int>> out;
  std::vector<Int> lo(n), m(n);
  for (Int r = 0; r <= box.rs_bound; ++r) {
    for (Int s = 0; s <= box.rs_bound; ++s) {
      bool feasible = true;
      for (std::size_t t = 0; t < n && feasible; ++t) {
        lo[t] = std::max(checked_mul(ep.a[t], r), checked_mul(ep.b[t], s));
        feasible = lo[t] <= box.m_bound;
      }
      if (!feasible) continue;
      m = lo;
      auto advance = [&]() -> bool {
        std::size_t t = n;
        while (t-- > 0) {
          if (m[t] < box.m_bound) {
            ++m[t];
            return true;
          }
          m[t] = lo[t];
        }
        return false;
      };
      do {
        std::vector<Int> v;
        v.reserve(3 * n + 2);
        v.push_back(r);
        v.push_back(s);
        for (std::size_t t = 0; t < n; ++t) {
          v.push_back(m[t] - checked_mul(ep.a[t], r));
          v.push_back(m[t] - checked_mul(ep.b[t], s));
          v.push_back(m[t]);
        }
        out.push_back(std::move(v));
      } while (advance());
    }
  }
  return out;
}

// Number of solutions gamma componentwise between 0 and the target that sit
// over (r', s'). For fixed (r', s') the constraints decouple: each m'_t
// ranges over an interval, so the count is a product of interval lengths.
// target must itself be a solution times a nonneg integer.
Int solutions_under(const ExponentPair& ep, const std::vector<Int>& target,
                    Int rp, Int sp) {
  Int count = 1;
  for (std::size_t t = 0; t < ep.size(); ++t) {
    Int lo = std::max(checked_mul(ep.a[t], rp), checked_mul(ep.b[t], sp));
    // h' <= H and k' <= K translate to upper bounds on m'_t.
    Int hi = std::min(
        checked_sub(target[4 + 3 * t],
                    checked_mul(ep.a[t], checked_sub(target[0], rp))),
        checked_sub(target[4 + 3 * t],
                    checked_mul(ep.b[t], checked_sub(target[1], sp))));
    if (hi < lo) return 0;
    count = checked_mul(count, hi - lo + 1);
  }
  return count;
}

}  // namespace

BoxSpec default_box(const ExponentPair& ep) {
  Int corner = 1;
  for (std::size_t i = 0; i <= ep.size(); ++i) {
    LatticePoint2 high = reduce_ray({ep.b_ext(i), ep.a_ext(i)});
    LatticePoint2 low = reduce_ray({ep.b_ext(i + 1), ep.a_ext(i + 1)});
    corner = std::max(
        {corner, checked_add(high.r, low.r), checked_add(high.s, low.s)});
  }
  Int maxab = 1;
  for (std::size_t t = 0; t < ep.size(); ++t)
    maxab = std::max({maxab, ep.a[t], ep.b[t]});
  BoxSpec box;
  box.rs_bound = checked_mul(2, corner);
  box.m_bound = checked_add(checked_mul(maxab, box.rs_bound), 2);
  return box;
}

std::vector<Int> oracle_intersection_exponents(const ExponentPair& ep, Int r,
                                               Int s) {
  std::vector<Int> m;
  m.reserve(ep.size());
  for (std::size_t t = 0; t < ep.size(); ++t)
    m.push_back(std::max(checked_mul(ep.a[t], r), checked_mul(ep.b[t], s)));
  return m;
}

std::vector<LatticePoint2> oracle_hilbert_basis(const Cone2D& c,
                                                const BoxSpec& box) {
  LatticePoint2 high = reduce_ray(c.ray_high);
  LatticePoint2 low = reduce_ray(c.ray_low);
  if (box.rs_bound < checked_add(high.r, low.r) ||
      box.rs_bound < checked_add(high.s, low.s))
    throw Error("BoxTooSmall",
                "box does not contain the fundamental parallelogram");

  auto in_cone = [&](const LatticePoint2& p) {
    return xcross(high, p) >= 0 && xcross(low, p) <= 0;
  };

  std::vector<LatticePoint2> members;
  for (Int r = 0; r <= box.rs_bound; ++r)
    for (Int s = 0; s <= box.rs_bound; ++s)
      if (!(r == 0 && s == 0) && in_cone({r, s})) members.push_back({r, s});

  std::vector<LatticePoint2> basis;
  for (const LatticePoint2& x : members) {
    bool reducible = false;
    for (const LatticePoint2& y : members) {
      if (y.r > x.r || y.s > x.s || y == x) continue;
      if (in_cone({x.r - y.r, x.s - y.s})) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(x);
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

std::vector<EPhiElement> oracle_minimal_positive(const ExponentPair& ep,
                                                 const BoxSpec& box) {
  // A minimal positive solution has m_t = max(a_t*r, b_t*s) + 1 for every t:
  // with any larger m_t both slacks stay >= 1 after decrementing it, giving a
  // strictly smaller positive solution. So one candidate per (r,s) >= (1,1)
  // suffices, and dominance among candidates decides minimality exactly.
  std::vector<std::vector<Int>> candidates;
  for (Int r = 1; r <= box.rs_bound; ++r) {
    for (Int s = 1; s <= box.rs_bound; ++s) {
      std::vector<Int> v;
      v.reserve(3 * ep.size() + 2);
      v.push_back(r);
      v.push_back(s);
      bool inside = true;
      for (std::size_t t = 0; t < ep.size(); ++t) {
        Int ar = checked_mul(ep.a[t], r);
        Int bs = checked_mul(ep.b[t], s);
        Int m = checked_add(std::max(ar, bs), 1);
        if (m > box.m_bound) {
          inside = false;
          break;
        }
        v.push_back(m - ar);
        v.push_back(m - bs);
        v.push_back(m);
      }
      if (inside) candidates.push_back(std::move(v));
    }
  }

  std::vector<EPhiElement> out;
  for (const auto& v : candidates) {
    bool dominated = false;
    for (const auto& w : candidates) {
      if (w != v && leq(w, v)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(EPhiElement{v});
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool oracle_is_fundamental(const ExponentPair& ep, const EPhiElement& beta) {
  if (all_zero(beta.vec)) return false;
  // Count solutions componentwise below beta; beta reduces iff any besides
  // 0 and beta itself exists. Decompositions never leave that region, so the
  // answer is exact without any box.
  Int strict = 0;
  for (Int rp = 0; rp <= beta.r(); ++rp) {
    for (Int sp = 0; sp <= beta.s(); ++sp) {
      Int cell = solutions_under(ep, beta.vec, rp, sp);
      if (rp == 0 && sp == 0) cell -= 1;  // gamma = 0
      if (rp == beta.r() && sp == beta.s()) cell -= 1;  // gamma = beta
      strict = checked_add(strict, cell);
      if (strict > 0) return false;
    }
  }
  return true;
}

std::vector<EPhiElement> oracle_fundamental_elements(const ExponentPair& ep,
                                                     const BoxSpec& box) {
  std::vector<EPhiElement> out;
  for (auto& v : enumerate_box(ep, box)) {
    EPhiElement e{std::move(v)};
    if (oracle_is_fundamental(ep, e)) out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool oracle_cf_multiples_only(const ExponentPair& ep, const EPhiElement& beta,
                              Int c_max) {
  if (all_zero(beta.vec)) return false;
  for (Int c = 1; c <= c_max; ++c) {
    std::vector<Int> target(beta.vec.size());
    for (std::size_t i = 0; i < target.size(); ++i)
      target[i] = checked_mul(beta.vec[i], c);

    for (Int rp = 0; rp <= target[0]; ++rp) {
      for (Int sp = 0; sp <= target[1]; ++sp) {
        Int cell = solutions_under(ep, target, rp, sp);
        if (cell == 0) continue;

        // Subtract the multiples j*beta that fall in this cell; anything
        // left is a non-multiple summand gamma (its complement is then a
        // solution as well, so c*beta decomposes off the ray of beta).
        Int multiples = 0;
        if (beta.r() == 0 && beta.s() == 0) {
          // Multiples j*beta, 0 <= j <= c, all live in the (0,0) cell with
          // m'_t = j*m_t inside [0, c*m_t].
          if (rp == 0 && sp == 0) multiples = c + 1;
        } else {
          Int j = -1;
          if (beta.r() > 0 && rp % beta.r() == 0) j = rp / beta.r();
          if (beta.r() == 0 && beta.s() > 0 && sp % beta.s() == 0)
            j = sp / beta.s();
          if (j >= 0 && rp == checked_mul(j, beta.r()) &&
              sp == checked_mul(j, beta.s())) {
            bool fits = true;
            for (std::size_t t = 0; t < ep.size() && fits; ++t) {
              Int mt = checked_mul(j, beta.m(t));
              Int lo = std::max(checked_mul(ep.a[t], rp),
                                checked_mul(ep.b[t], sp));
              Int hi = std::min(
                  checked_sub(target[4 + 3 * t],
                              checked_mul(ep.a[t],
                                          checked_sub(target[0], rp))),
                  checked_sub(target[4 + 3 * t],
                              checked_mul(ep.b[t],
                                          checked_sub(target[1], sp))));
              fits = lo <= mt && mt <= hi;
            }
            if (fits) multiples = 1;
          }
        }
        if (cell > multiples) return false;
      }
    }
  }
  return true;
}

std::vector<std::vector<Int>> oracle_semigroup_closure(
    const std::vector<std::vector<Int>>& gens, const BoxSpec& box) {
  std::size_t dim = 0;
  for (const auto& g : gens) {
    if (dim == 0) dim = g.size();
    if (g.size() != dim)
      throw Error("LengthMismatch", "generators of mixed dimension");
    if (all_zero(g)) throw Error("ZeroVector", "zero generator");
    for (Int x : g)
      if (x < 0) throw Error("NegativeEntry", "negative generator entry");
  }
  auto inside = [&](const std::vector<Int>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      Int cap = i + 2 >= v.size() ? box.rs_bound : box.m_bound;
      if (v[i] > cap) return false;
    }
    return true;
  };

  std::set<std::vector<Int>> closure;
  std::vector<std::vector<Int>> frontier;
  std::vector<Int> zero(dim, 0);
  closure.insert(zero);
  frontier.push_back(zero);
  while (!frontier.empty()) {
    std::vector<Int> v = std::move(frontier.back());
    frontier.pop_back();
    for (const auto& g : gens) {
      std::vector<Int> next(v.size());
      for (std::size_t i = 0; i < v.size(); ++i)
        next[i] = checked_add(v[i], g[i]);
      if (inside(next) && closure.insert(next).second)
        frontier.push_back(next);
    }
  }
  return {closure.begin(), closure.end()};
}

}  // namespace isect
