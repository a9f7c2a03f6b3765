#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mekr {

using BigInt = boost::multiprecision::cpp_int;

/// Binomial coefficient C(n, r).  Returns 0 whenever r < 0, n < 0 or r > n,
/// so callers can sum truncated series without special-casing the tail.
inline BigInt binomial(long long n, long long r) {
  if (n < 0 || r < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  BigInt result = 1;
  for (long long i = 1; i <= r; ++i) {
    result *= n - r + i;
    result /= i;  // exact: result is C(n-r+i, i) * i! / i! at each step
  }
  return result;
}

/// Number of k-multisets over a ground set of size m, i.e. C(m+k-1, k).
/// The empty multiset counts, so multichoose(m, 0) == 1.
inline BigInt multichoose(long long m, long long k) {
  if (m < 1) throw std::domain_error("multichoose: ground set size must be >= 1");
  if (k < 0) throw std::domain_error("multichoose: cardinality must be >= 0");
  return binomial(m + k - 1, k);
}

inline std::uint64_t to_u64(const BigInt& v, const char* what = "value") {
  if (v < 0 || v > BigInt(UINT64_MAX))
    throw std::overflow_error(std::string(what) + " does not fit in 64 bits");
  return static_cast<std::uint64_t>(v);
}

/// C(n, r) as uint64_t; throws std::overflow_error if the result overflows.
inline std::uint64_t binomial_u64(long long n, long long r) {
  if (n < 0 || r < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  unsigned __int128 result = 1;
  for (long long i = 1; i <= r; ++i) {
    result *= static_cast<unsigned __int128>(n - r + i);
    result /= static_cast<unsigned __int128>(i);
    if (result > UINT64_MAX) throw std::overflow_error("binomial_u64 overflow");
  }
  return static_cast<std::uint64_t>(result);
}

}  // namespace mekr
