#include "isect/fanalg.hpp"

#include <algorithm>
#include <numeric>

namespace isect {

Rational::Rational(Int n, Int d) : num(n), den(d) {
  if (den <= 0) throw Error("InvalidRatio", "denominator must be positive");
  if (num < 0) throw Error("InvalidRatio", "coefficient must be nonnegative");
  Int g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

FanLinearFunction max_form_function(const ExponentPair& ep, std::size_t t) {
  FanLinearFunction f;
  f.max_form = true;
  f.max_a = ep.a[t];
  f.max_b = ep.b[t];
  for (std::size_t i = 0; i <= ep.size(); ++i) {
    if (i >= t + 1)
      f.cone_coeffs.emplace_back(Rational(ep.a[t], 1), Rational(0, 1));
    else
      f.cone_coeffs.emplace_back(Rational(0, 1), Rational(ep.b[t], 1));
  }
  return f;
}

namespace {

// Exact value of one piece at p, as (num, den) with den > 0.
std::pair<Int, Int> piece_value(const std::pair<Rational, Rational>& g,
                                const LatticePoint2& p) {
  const auto& [cr, cs] = g;
  Int num = checked_add(checked_mul(checked_mul(cr.num, p.r), cs.den),
                        checked_mul(checked_mul(cs.num, p.s), cr.den));
  Int den = checked_mul(cr.den, cs.den);
  return {num, den};
}

Int piece_value_integral(const std::pair<Rational, Rational>& g,
                         const LatticePoint2& p) {
  auto [num, den] = piece_value(g, p);
  if (num % den != 0)
    throw Error("NonIntegralValue", "fan-linear value is not an integer");
  return num / den;
}

}  // namespace

Int evaluate(const FanLinearFunction& f, const Fan& fan,
             const LatticePoint2& p) {
  if (f.cone_coeffs.size() != fan.cones.size())
    throw Error("LengthMismatch", "one coefficient pair per cone required");
  return piece_value_integral(f.cone_coeffs[cone_assignment(fan, p)], p);
}

FanLinearCheck check_fan_linear(const FanLinearFunction& f, const Fan& fan,
                                Int box_bound) {
  if (f.cone_coeffs.size() != fan.cones.size())
    throw Error("LengthMismatch", "one coefficient pair per cone required");
  if (box_bound < 1) throw Error("InvalidBox", "box bound must be >= 1");

  FanLinearCheck res;
  res.box_bound = box_bound;
  res.exact_subadditivity = f.max_form;

  // Integer values on the Hilbert-basis points, which generate each Q_i.
  for (const HilbertBasis& hb : hilbert_bases(fan)) {
    for (const LatticePoint2& p : hb.points) {
      auto [num, den] = piece_value(f.cone_coeffs[hb.cone_index], p);
      if (num % den != 0) {
        res.violation = {"non-integral", p, {0, 0},
                         "piece " + std::to_string(hb.cone_index) +
                             " is not integral on a basis point"};
        return res;
      }
    }
  }

  // Exact agreement of consecutive pieces on the shared primitive ray.
  for (std::size_t i = 0; i + 1 < fan.cones.size(); ++i) {
    LatticePoint2 ray = fan.cones[i].primitive_low;
    auto [n1, d1] = piece_value(f.cone_coeffs[i], ray);
    auto [n2, d2] = piece_value(f.cone_coeffs[i + 1], ray);
    if (checked_mul(n1, d2) != checked_mul(n2, d1)) {
      res.violation = {"face-disagreement", ray, {0, 0},
                       "pieces " + std::to_string(i) + " and " +
                           std::to_string(i + 1) +
                           " differ on the shared ray"};
      return res;
    }
  }

  if (!f.max_form) {
    // Subadditivity certified on the box only.
    for (Int r1 = 0; r1 <= box_bound; ++r1)
      for (Int s1 = 0; s1 <= box_bound; ++s1)
        for (Int r2 = 0; r2 <= box_bound; ++r2)
          for (Int s2 = 0; s2 <= box_bound; ++s2) {
            LatticePoint2 p1{r1, s1}, p2{r2, s2};
            LatticePoint2 sum{checked_add(r1, r2), checked_add(s1, s2)};
            try {
              if (evaluate(f, fan, p1) + evaluate(f, fan, p2) <
                  evaluate(f, fan, sum)) {
                res.violation = {"subadditivity", p1, p2,
                                 "f(p1) + f(p2) < f(p1 + p2)"};
                return res;
              }
            } catch (const Error& e) {
              if (e.name() != "NonIntegralValue") throw;
              res.violation = {"non-integral", p1, p2, e.what()};
              return res;
            }
          }
  }

  res.ok = true;
  return res;
}

NormalityResult normality_check(std::size_t n, Int box_bound,
                                Int max_multiplier,
                                const SemigroupPredicate& member) {
  if (box_bound < 1 || max_multiplier < 1)
    throw Error("InvalidBox", "bounds must be >= 1");
  NormalityResult res;
  res.box_bound = box_bound;
  res.multiplier_bound = max_multiplier;

  std::size_t dim = n + 2;
  std::size_t slots = static_cast<std::size_t>(box_bound) + 1;
  std::vector<std::optional<NormalityCounterexample>> found(slots);

  parallel_for(slots, [&](std::size_t slot) {
    std::vector<Int> z(dim, 0);
    z[0] = static_cast<Int>(slot);
    std::vector<Int> mz(dim);
    // odometer over the remaining coordinates, last fastest
    auto advance = [&]() -> bool {
      std::size_t t = dim;
      while (t-- > 1) {
        if (z[t] < box_bound) {
          ++z[t];
          return true;
        }
        z[t] = 0;
      }
      return false;
    };
    do {
      bool z_in = member(z);
      if (z_in) continue;
      for (Int mult = 2; mult <= max_multiplier; ++mult) {
        for (std::size_t i = 0; i < dim; ++i)
          mz[i] = checked_mul(z[i], mult);
        if (member(mz)) {
          found[slot] = NormalityCounterexample{z, mult};
          return;
        }
      }
    } while (advance());
  });

  for (const auto& hit : found) {
    if (hit) {
      res.counterexample = hit;
      return res;
    }
  }
  res.normal = true;
  return res;
}

NormalityResult normality_check(const ExponentPair& ep, Int box_bound,
                                Int max_multiplier) {
  std::size_t n = ep.size();
  auto member = [&ep, n](std::span<const Int> z) {
    Int r = z[n];
    Int s = z[n + 1];
    for (std::size_t t = 0; t < n; ++t) {
      Int need = std::max(checked_mul(ep.a[t], r), checked_mul(ep.b[t], s));
      if (z[t] < need) return false;
    }
    return true;
  };
  return normality_check(n, box_bound, max_multiplier, member);
}

NormalityResult normality_check(const std::vector<FanLinearFunction>& fs,
                                const Fan& fan, Int box_bound,
                                Int max_multiplier) {
  std::size_t n = fs.size();
  // Precompute f_t over every (r,s) the scan can reach.
  Int reach = checked_mul(box_bound, std::max<Int>(max_multiplier, 1));
  std::vector<std::vector<Int>> table(n);
  for (std::size_t t = 0; t < n; ++t) {
    table[t].resize(static_cast<std::size_t>(reach + 1) *
                    static_cast<std::size_t>(reach + 1));
    for (Int r = 0; r <= reach; ++r)
      for (Int s = 0; s <= reach; ++s)
        table[t][static_cast<std::size_t>(r) * (reach + 1) + s] =
            evaluate(fs[t], fan, {r, s});
  }
  auto member = [&table, n, reach](std::span<const Int> z) {
    Int r = z[n];
    Int s = z[n + 1];
    for (std::size_t t = 0; t < n; ++t) {
      Int need = table[t][static_cast<std::size_t>(r) * (reach + 1) + s];
      if (z[t] < need) return false;
    }
    return true;
  };
  return normality_check(n, box_bound, max_multiplier, member);
}

}  // namespace isect
