#ifndef ISECT_SERIALIZE_HPP
#define ISECT_SERIALIZE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "isect/algebra.hpp"
#include "isect/cones.hpp"
#include "isect/core.hpp"
#include "isect/diophantine.hpp"
#include "isect/verify.hpp"

namespace isect {

using json = nlohmann::json;

json to_json(const LatticePoint2& p);
json to_json(const Fan& fan);
json to_json(const std::vector<HilbertBasis>& bases);
json to_json(const GradedMonomial& g);
json to_json(const EPhiElement& e);
json to_json(const FundSet& fund);
json to_json(const std::vector<SeriesFactor>& factors);
json to_json(const TruncatedSeries& series);
json to_json(const VerifyReport& report);

/// "x1^6*u*v^3"; the empty monomial renders as "1".
std::string monomial_string(const GradedMonomial& g);

/// "(1,3,1,0,6)"
std::string vector_string(const std::vector<Int>& v);

/// "(1 - r^2*s^5*m1^10)" over the variables r, s, m1..mn.
std::string factor_string(const SeriesFactor& f);

/// "1 - r*s*m1^2" with terms in exponent order.
std::string series_string(const TruncatedSeries& series);

}  // namespace isect

#endif
