#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "twinned/errors.hpp"

namespace twinned {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Integer coordinate vector. Configurations here only carry entries in
/// {-1, 0, 1}; facet normals stay small after primitive normalization and all
/// arithmetic on them is overflow-checked.
using IntVector = std::vector<std::int64_t>;
using RationalVector = std::vector<Rational>;

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw InternalError("int64 overflow in multiplication");
  return out;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw InternalError("int64 overflow in addition");
  return out;
}

/// C(n, k), zero outside 0 <= k <= n.
BigInt binomial(int n, int k);

}  // namespace twinned
