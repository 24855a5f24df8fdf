#include "isect/algebra.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>

#include "isect/oracle.hpp"

namespace isect {

std::vector<Int> GradedMonomial::log() const {
  std::vector<Int> v = m;
  v.push_back(r);
  v.push_back(s);
  return v;
}

std::vector<GradedMonomial> generators(const ExponentPair& ep) {
  std::size_t n = ep.size();
  std::vector<GradedMonomial> gens;
  for (std::size_t t = 0; t < n; ++t) {
    GradedMonomial var;
    var.m.assign(n, 0);
    var.m[t] = 1;
    gens.push_back(std::move(var));
  }
  for (const HilbertBasis& hb : hilbert_bases(build_fan(ep))) {
    for (const LatticePoint2& p : hb.points) {
      GradedMonomial g;
      g.r = p.r;
      g.s = p.s;
      g.m.reserve(n);
      for (std::size_t t = 0; t < n; ++t)
        g.m.push_back(std::max(checked_mul(ep.a[t], p.r),
                               checked_mul(ep.b[t], p.s)));
      gens.push_back(std::move(g));
    }
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return gens;
}

namespace {

bool leq_componentwise(const std::vector<Int>& x, const std::vector<Int>& y) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] > y[i]) return false;
  return true;
}

bool is_zero(const std::vector<Int>& x) {
  return std::all_of(x.begin(), x.end(), [](Int v) { return v == 0; });
}

// Coin-change search for target as an N-combination of coins (all nonzero),
// coins taken in non-decreasing index order so (remainder, start) memoizes.
bool representable(const std::vector<Int>& remainder,
                   const std::vector<std::vector<Int>>& coins,
                   std::size_t start,
                   std::set<std::pair<std::vector<Int>, std::size_t>>& dead,
                   std::vector<Int>& counts) {
  if (is_zero(remainder)) return true;
  auto key = std::make_pair(remainder, start);
  if (dead.count(key)) return false;
  for (std::size_t j = start; j < coins.size(); ++j) {
    if (!leq_componentwise(coins[j], remainder)) continue;
    std::vector<Int> next(remainder.size());
    for (std::size_t i = 0; i < next.size(); ++i)
      next[i] = remainder[i] - coins[j][i];
    ++counts[j];
    if (representable(next, coins, j, dead, counts)) return true;
    --counts[j];
  }
  dead.insert(std::move(key));
  return false;
}

}  // namespace

MinimalityResult check_minimality(const std::vector<GradedMonomial>& gens) {
  std::vector<std::vector<Int>> logs;
  logs.reserve(gens.size());
  for (const GradedMonomial& g : gens) {
    logs.push_back(g.log());
    if (is_zero(logs.back()))
      throw Error("InvalidGenerator", "generator with zero log");
  }

  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<std::vector<Int>> coins;
    std::vector<std::size_t> coin_pos;
    for (std::size_t j = 0; j < logs.size(); ++j) {
      if (j == i) continue;
      coins.push_back(logs[j]);
      coin_pos.push_back(j);
    }
    std::set<std::pair<std::vector<Int>, std::size_t>> dead;
    std::vector<Int> counts(coins.size(), 0);
    if (representable(logs[i], coins, 0, dead, counts)) {
      MinimalityResult res;
      res.minimal = false;
      MinimalityResult::Redundancy red;
      red.index = i;
      for (std::size_t j = 0; j < counts.size(); ++j)
        if (counts[j] > 0) red.combo.emplace_back(coin_pos[j], counts[j]);
      res.witness = std::move(red);
      return res;
    }
  }
  return {true, std::nullopt};
}

namespace {

// Reduced boundary rays as (q_i, p_i), i = 0..n+1, duplicates dropped.
std::vector<LatticePoint2> reduced_rays(const ExponentPair& ep) {
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

}  // namespace

std::vector<SeriesFactor> hilbert_series_denominator(const ExponentPair& ep) {
  std::size_t n = ep.size();
  std::map<std::vector<Int>, Int> merged;
  for (std::size_t t = 0; t < n; ++t) {
    std::vector<Int> e(n + 2, 0);
    e[2 + t] = 1;  // the factor (1 - m_t)
    merged[e] += 1;
  }
  for (const LatticePoint2& ray : reduced_rays(ep)) {
    std::vector<Int> e(n + 2, 0);
    e[0] = ray.r;  // q_i
    e[1] = ray.s;  // p_i
    for (std::size_t t = 0; t < n; ++t)
      e[2 + t] = std::max(checked_mul(ep.a[t], ray.r),
                          checked_mul(ep.b[t], ray.s));
    merged[e] += 1;
  }
  std::vector<SeriesFactor> out;
  for (const auto& [e, mult] : merged) out.push_back({e, mult});
  return out;
}

bool denominator_factors_independent(const std::vector<SeriesFactor>& factors) {
  auto proportional = [](const std::vector<Int>& e, const std::vector<Int>& f) {
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = i + 1; j < e.size(); ++j)
        if (checked_mul(e[i], f[j]) != checked_mul(e[j], f[i])) return false;
    return true;
  };
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = i + 1; j < factors.size(); ++j)
      if (proportional(factors[i].exponent, factors[j].exponent)) return false;
  return true;
}

namespace {

Int total_degree(const std::vector<Int>& e) {
  Int d = 0;
  for (Int x : e) d = checked_add(d, x);
  return d;
}

// series *= (1 - z^exponent), truncated to the cap.
void multiply_by_factor(TruncatedSeries& series, const std::vector<Int>& exponent) {
  std::map<std::vector<Int>, Int> out = series.coefficients;
  for (const auto& [mon, coef] : series.coefficients) {
    std::vector<Int> shifted(mon.size());
    for (std::size_t i = 0; i < mon.size(); ++i)
      shifted[i] = checked_add(mon[i], exponent[i]);
    if (total_degree(shifted) > series.degree_cap) continue;
    out[shifted] -= coef;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  series.coefficients = std::move(out);
}

}  // namespace

TruncatedSeries counting_series(const ExponentPair& ep, Int degree_cap) {
  if (degree_cap < 0) throw Error("InvalidCap", "degree cap must be >= 0");
  TruncatedSeries series;
  series.degree_cap = degree_cap;
  PhiMatrix phi = build_phi(ep);
  for (const EPhiElement& e : enumerate_members(phi, degree_cap, degree_cap)) {
    std::vector<Int> mon(ep.size() + 2);
    mon[0] = e.r();
    mon[1] = e.s();
    for (std::size_t t = 0; t < ep.size(); ++t) mon[2 + t] = e.m(t);
    if (total_degree(mon) <= degree_cap) series.coefficients[mon] = 1;
  }
  return series;
}

TruncatedSeries hilbert_series_numerator_truncated(const ExponentPair& ep,
                                                   Int degree_cap) {
  TruncatedSeries series = counting_series(ep, degree_cap);
  for (const SeriesFactor& f : hilbert_series_denominator(ep))
    for (Int rep = 0; rep < f.multiplicity; ++rep)
      multiply_by_factor(series, f.exponent);
  return series;
}

std::vector<GradedMonomial> canonical_ideal_generators(const ExponentPair& ep) {
  std::vector<GradedMonomial> out;
  for (const EPhiElement& e : minimal_positive(ep)) {
    GradedMonomial g;
    g.r = e.r();
    g.s = e.s();
    for (std::size_t t = 0; t < ep.size(); ++t) g.m.push_back(e.m(t));
    out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end());
  return out;
}

GorensteinResult is_gorenstein(const ExponentPair& ep) {
  std::vector<EPhiElement> minimal =
      is_non_degenerate(ep) ? minimal_positive(ep)
                            : oracle_minimal_positive(ep, default_box(ep));
  GorensteinResult res;
  res.gorenstein = minimal.size() == 1;
  if (res.gorenstein) res.witness = minimal.front();
  return res;
}

Int count_minimal(const ExponentPair& ep) {
  if (!is_non_degenerate(ep))
    throw Error("DegenerateInput",
                "counting formula requires non-degenerate exponents");
  Int total = 0;
  for (const HilbertBasis& hb : hilbert_bases(build_fan(ep)))
    total = checked_add(total, static_cast<Int>(hb.points.size()));
  return total - static_cast<Int>(ep.size() + 2);
}

BoundResult minimal_count_bound(Int a, Int b) {
  if (a <= 0 || b <= 0)
    throw Error("NotApplicable", "bound requires positive a and b");
  if (std::gcd(a, b) != 1)
    throw Error("NotCoprime", "bound requires gcd(a,b) = 1");
  if (b == 1)
    throw Error("NotApplicable", "bound requires b >= 2");
  if (a <= b)
    throw Error("NotApplicable", "bound requires a > b");
  Int q = a / b;
  Int l = a - b * q;
  if (l == 0)
    throw Error("NotApplicable", "bound requires b not dividing a");
  return {q, l, a - l + 1};
}

Int krull_dimension(const ExponentPair& ep) {
  std::vector<std::vector<Int>> rows;
  for (const GradedMonomial& g : generators(ep)) rows.push_back(g.log());

  // Bareiss fraction-free elimination; divisions are exact.
  std::size_t dim = ep.size() + 2;
  std::size_t rank = 0;
  Int prev = 1;
  for (std::size_t col = 0; col < dim && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    Int p = rows[rank][col];
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      for (std::size_t j = col + 1; j < dim; ++j) {
        Int num = checked_sub(checked_mul(rows[i][j], p),
                              checked_mul(rows[rank][j], rows[i][col]));
        assert(num % prev == 0);
        rows[i][j] = num / prev;
      }
      rows[i][col] = 0;
    }
    prev = p;
    ++rank;
  }
  return static_cast<Int>(rank);
}

}  // namespace isect
