#ifndef ISECT_VERIFY_HPP
#define ISECT_VERIFY_HPP

#include <string>
#include <vector>

#include "isect/core.hpp"
#include "isect/oracle.hpp"

namespace isect {

struct VerifyCheck {
  std::string name;
  bool pass{false};
  bool skipped{false};
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool all_pass() const;
};

/// Cross-checks every fast computation against its brute-force oracle for
/// one input: Hilbert bases, fundamental and completely fundamental
/// elements, minimal positive elements, generator closure, counting
/// formula, minimality, dimension, normality, and the truncated series
/// identity. Box parameters trade time for coverage; the fundamental-element
/// comparison is skipped for n > 2 (its enumeration grows too fast).
VerifyReport run_verify(const ExponentPair& ep, const BoxSpec& box,
                        Int degree_cap);

}  // namespace isect

#endif
