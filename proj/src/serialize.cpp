#include "isect/serialize.hpp"

namespace isect {

json to_json(const LatticePoint2& p) { return json::array({p.r, p.s}); }

json to_json(const Fan& fan) {
  json cones = json::array();
  for (const Cone2D& c : fan.cones) {
    cones.push_back({{"index", c.index},
                     {"ray_high", to_json(c.ray_high)},
                     {"ray_low", to_json(c.ray_low)},
                     {"primitive_high", to_json(c.primitive_high)},
                     {"primitive_low", to_json(c.primitive_low)},
                     {"degenerate", c.degenerate}});
  }
  return cones;
}

json to_json(const std::vector<HilbertBasis>& bases) {
  json out = json::array();
  for (const HilbertBasis& hb : bases) {
    json points = json::array();
    for (const LatticePoint2& p : hb.points) points.push_back(to_json(p));
    out.push_back({{"cone_index", hb.cone_index}, {"points", points}});
  }
  return out;
}

json to_json(const GradedMonomial& g) {
  return {{"m", g.m}, {"r", g.r}, {"s", g.s}};
}

json to_json(const EPhiElement& e) { return json(e.vec); }

json to_json(const FundSet& fund) {
  json alphas = json::array();
  for (const EPhiElement& a : fund.alphas) alphas.push_back(to_json(a));
  json betas = json::array();
  for (const FundSet::Beta& b : fund.betas) {
    betas.push_back({{"cone_index", b.cone_index},
                     {"point", to_json(b.point)},
                     {"element", to_json(b.elem)}});
  }
  return {{"alphas", alphas}, {"betas", betas}};
}

json to_json(const std::vector<SeriesFactor>& factors) {
  json out = json::array();
  for (const SeriesFactor& f : factors)
    out.push_back({{"exponent", f.exponent}, {"multiplicity", f.multiplicity}});
  return out;
}

json to_json(const TruncatedSeries& series) {
  json terms = json::array();
  for (const auto& [exponent, coefficient] : series.coefficients)
    terms.push_back({{"exponent", exponent}, {"coefficient", coefficient}});
  return terms;
}

json to_json(const VerifyReport& report) {
  json checks = json::array();
  for (const VerifyCheck& c : report.checks)
    checks.push_back({{"name", c.name},
                      {"pass", c.pass},
                      {"skipped", c.skipped},
                      {"detail", c.detail}});
  return checks;
}

namespace {

void append_power(std::string& out, const std::string& var, Int e) {
  if (e <= 0) return;
  if (!out.empty()) out += "*";
  out += var;
  if (e > 1) out += "^" + std::to_string(e);
}

}  // namespace

std::string monomial_string(const GradedMonomial& g) {
  std::string out;
  for (std::size_t t = 0; t < g.m.size(); ++t)
    append_power(out, "x" + std::to_string(t + 1), g.m[t]);
  append_power(out, "u", g.r);
  append_power(out, "v", g.s);
  return out.empty() ? "1" : out;
}

std::string vector_string(const std::vector<Int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

namespace {

// Exponents are over (r, s, m1..mn).
std::string term_string(const std::vector<Int>& exponent) {
  std::string out;
  append_power(out, "r", exponent[0]);
  append_power(out, "s", exponent[1]);
  for (std::size_t t = 2; t < exponent.size(); ++t)
    append_power(out, "m" + std::to_string(t - 1), exponent[t]);
  return out.empty() ? "1" : out;
}

}  // namespace

std::string factor_string(const SeriesFactor& f) {
  std::string out = "(1 - " + term_string(f.exponent) + ")";
  if (f.multiplicity > 1) out += "^" + std::to_string(f.multiplicity);
  return out;
}

std::string series_string(const TruncatedSeries& series) {
  if (series.coefficients.empty()) return "0";
  std::string out;
  for (const auto& [exponent, coefficient] : series.coefficients) {
    Int c = coefficient;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    Int abs = c < 0 ? -c : c;
    std::string term = term_string(exponent);
    if (abs != 1 || term == "1")
      out += std::to_string(abs) + (term == "1" ? "" : "*" + term);
    else
      out += term;
  }
  return out;
}

}  // namespace isect
