#ifndef ISECT_CORE_HPP
#define ISECT_CORE_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace isect {

using Int = std::int64_t;

/// Domain error with a stable machine-readable name ("ZeroPair",
/// "DegenerateInput", ...). The CLI maps these to exit code 3.
class Error : public std::runtime_error {
public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
};

[[noreturn]] void throw_overflow(const char* op);

// All arithmetic on user-derived quantities goes through these; a product of
// two large inputs raises Overflow instead of wrapping.
inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw_overflow("add");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw_overflow("sub");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw_overflow("mul");
  return r;
}

/// Nonnegative rational stored in lowest terms; den == 0 encodes infinity.
struct Ratio {
  Int num{0};
  Int den{1};

  Ratio() = default;
  Ratio(Int n, Int d);  // reduces; rejects (0,0) and negative entries

  friend bool operator==(const Ratio&, const Ratio&) = default;
};

/// Exact comparison by cross-multiplication; infinity compares greater than
/// every finite ratio and equal to itself.
std::strong_ordering ratio_cmp(const Ratio& r1, const Ratio& r2);

/// Exponent vectors of the two principal generators, stored fan ordered
/// (ratios a_i/b_i non-increasing, b_i = 0 counting as infinity).
struct ExponentPair {
  std::vector<Int> a;
  std::vector<Int> b;
  /// perm[i] = position in the caller's input of fan-ordered entry i.
  std::vector<std::size_t> perm;

  std::size_t size() const { return a.size(); }

  // Sentinel-extended entries for i = 0..n+1: (a_0,b_0) = (1,0) and
  // (a_{n+1},b_{n+1}) = (0,1).
  Int a_ext(std::size_t i) const;
  Int b_ext(std::size_t i) const;
  Ratio ratio_ext(std::size_t i) const { return Ratio(a_ext(i), b_ext(i)); }
};

/// Validates and reorders raw exponent vectors into fan order. Ties keep
/// their input order, so the result is deterministic and idempotent.
ExponentPair normalize_fan_order(const std::vector<Int>& a_raw,
                                 const std::vector<Int>& b_raw);

/// True iff all n+1 consecutive ratio comparisons, sentinels included, are
/// strict.
bool is_non_degenerate(const ExponentPair& ep);

/// Worker-thread cap: ISECT_ALG_THREADS if set (>= 1), else the hardware
/// concurrency.
std::size_t thread_cap();

/// Runs body(i) for i in [0, count), split across up to thread_cap()
/// workers. Distinct indices must touch distinct state.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace isect

#endif
