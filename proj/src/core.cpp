#include "isect/core.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <thread>

namespace isect {

void throw_overflow(const char* op) {
  throw Error("Overflow", std::string("64-bit overflow in checked ") + op);
}

Ratio::Ratio(Int n, Int d) : num(n), den(d) {
  if (num < 0 || den < 0)
    throw Error("InvalidRatio", "ratio entries must be nonnegative");
  if (num == 0 && den == 0)
    throw Error("InvalidRatio", "ratio (0,0) is undefined");
  Int g = std::gcd(num, den);  // gcd(x,0) = x
  num /= g;
  den /= g;
}

std::strong_ordering ratio_cmp(const Ratio& r1, const Ratio& r2) {
  Int lhs = checked_mul(r1.num, r2.den);
  Int rhs = checked_mul(r2.num, r1.den);
  return lhs <=> rhs;
}

Int ExponentPair::a_ext(std::size_t i) const {
  if (i == 0) return 1;
  if (i == size() + 1) return 0;
  return a[i - 1];
}

Int ExponentPair::b_ext(std::size_t i) const {
  if (i == 0) return 0;
  if (i == size() + 1) return 1;
  return b[i - 1];
}

ExponentPair normalize_fan_order(const std::vector<Int>& a_raw,
                                 const std::vector<Int>& b_raw) {
  if (a_raw.size() != b_raw.size())
    throw Error("LengthMismatch", "exponent vectors differ in length");
  if (a_raw.empty())
    throw Error("LengthMismatch", "exponent vectors must have n >= 1");
  for (std::size_t i = 0; i < a_raw.size(); ++i) {
    if (a_raw[i] < 0 || b_raw[i] < 0)
      throw Error("NegativeEntry",
                  "negative exponent at index " + std::to_string(i + 1));
    if (a_raw[i] == 0 && b_raw[i] == 0)
      throw Error("ZeroPair",
                  "(a,b) = (0,0) at index " + std::to_string(i + 1));
  }

  std::vector<std::size_t> order(a_raw.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) {
                     return ratio_cmp(Ratio(a_raw[i], b_raw[i]),
                                      Ratio(a_raw[j], b_raw[j])) ==
                            std::strong_ordering::greater;
                   });

  ExponentPair ep;
  ep.a.reserve(order.size());
  ep.b.reserve(order.size());
  for (std::size_t idx : order) {
    ep.a.push_back(a_raw[idx]);
    ep.b.push_back(b_raw[idx]);
  }
  ep.perm = std::move(order);
  return ep;
}

bool is_non_degenerate(const ExponentPair& ep) {
  for (std::size_t i = 0; i + 1 <= ep.size() + 1; ++i) {
    if (ratio_cmp(ep.ratio_ext(i), ep.ratio_ext(i + 1)) !=
        std::strong_ordering::greater)
      return false;
  }
  return true;
}

std::size_t thread_cap() {
  static const std::size_t cap = [] {
    if (const char* env = std::getenv("ISECT_ALG_THREADS")) {
      long v = std::strtol(env, nullptr, 10);
      if (v >= 1) return static_cast<std::size_t>(v);
    }
    std::size_t hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : std::size_t{1};
  }();
  return cap;
}

void parallel_for(std::size_t count,
                  const std::function<void(std::size_t)>& body) {
  std::size_t workers = std::min(thread_cap(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::exception_ptr first_error;
  std::mutex err_mu;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace isect
