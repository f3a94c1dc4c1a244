#pragma once

// Exact signed partial sums of a ValueTable at a set of checkpoints.
// Integer tables accumulate in 128 bits; reciprocal tables are summed as
// rationals by binary splitting over each segment between checkpoints.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "altsum/errors.hpp"
#include "altsum/mult_functions.hpp"
#include "altsum/value.hpp"

namespace altsum {

/// Sign pattern t(n) in {+1, -1}. `tq` is -1 exactly when some prime of Q divides n.
class Sign {
 public:
  static Sign plain() { return Sign(Kind::plain, {}); }
  static Sign alternating() { return Sign(Kind::alternating, {}); }
  static Sign tq(std::vector<std::uint64_t> q) { return Sign(Kind::tq, std::move(q)); }

  int operator()(std::uint64_t n) const {
    switch (kind_) {
      case Kind::plain:
        return 1;
      case Kind::alternating:
        return (n & 1) ? 1 : -1;
      case Kind::tq:
        for (auto q : q_)
          if (n % q == 0) return -1;
        return 1;
    }
    return 1;
  }

 private:
  enum class Kind { plain, alternating, tq };
  Sign(Kind k, std::vector<std::uint64_t> q) : kind_(k), q_(std::move(q)) {}
  Kind kind_;
  std::vector<std::uint64_t> q_;
};

namespace detail {

inline mpq_class reciprocal_segment(const ValueTable& t, const Sign& sign, std::uint64_t lo,
                                    std::uint64_t hi) {
  // sum over lo <= n < hi
  if (hi - lo <= 8) {
    mpq_class acc = 0;
    for (std::uint64_t n = lo; n < hi; ++n) {
      mpq_class term(sign(n), t.base(n));
      term.canonicalize();
      acc += term;
    }
    return acc;
  }
  const std::uint64_t mid = lo + (hi - lo) / 2;
  mpq_class a = reciprocal_segment(t, sign, lo, mid);
  mpq_class b = reciprocal_segment(t, sign, mid, hi);
  return a + b;
}

}  // namespace detail

/// Exact sums S(c) = sum_{n<=c} t(n) f(n) for each checkpoint c (any order,
/// duplicates allowed, 0 gives 0). Results follow the input order.
inline std::vector<Value> prefix_sums(const ValueTable& t, const std::vector<std::uint64_t>& checkpoints,
                                      const Sign& sign) {
  std::vector<std::uint64_t> sorted(checkpoints);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (!sorted.empty() && sorted.back() > t.size())
    throw CapacityError("prefix_sums: checkpoint beyond table size");

  std::vector<Value> at_sorted(sorted.size());
  if (!t.reciprocal()) {
    __int128 acc = 0;
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      for (; n <= sorted[i]; ++n) acc += static_cast<__int128>(sign(n)) * t.base(n);
      at_sorted[i] = to_mpz(acc);
    }
  } else {
    mpq_class acc = 0;
    std::uint64_t prev = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted[i] > prev) acc += detail::reciprocal_segment(t, sign, prev + 1, sorted[i] + 1);
      prev = sorted[i];
      at_sorted[i] = normalize(acc);
    }
  }
  std::vector<Value> out;
  out.reserve(checkpoints.size());
  for (auto c : checkpoints) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), c);
    out.push_back(at_sorted[static_cast<std::size_t>(it - sorted.begin())]);
  }
  return out;
}

inline Value partial_sum(const ValueTable& t, std::uint64_t x, const Sign& sign) {
  return prefix_sums(t, {x}, sign).front();
}

/// Floating-point partial sums (compensated), for quick diagnostics.
inline Real partial_sum_real(const ValueTable& t, std::uint64_t x, const Sign& sign) {
  CompensatedSum acc;
  for (std::uint64_t n = 1; n <= x; ++n) acc += sign(n) * t.real_at(n);
  return acc.value();
}

}  // namespace altsum
