#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <vector>

namespace quandles {

using BigInt = boost::multiprecision::cpp_int;

/// Deterministic Miller-Rabin; exact for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/// Exact for |n| < 3.3e24 (deterministic Miller-Rabin base set); for larger
/// inputs the same fixed base set is used, which errs only towards reporting
/// a composite as prime -- a spurious extra "solution" in a scan, never a
/// silently passed one.  No scan at default bounds reaches that regime.
bool is_prime(const BigInt& n);

struct PrimePower {
  std::uint64_t prime;
  int exponent;
};

/// Trial factorization; exact for n <= 10^12.
std::optional<PrimePower> as_prime_power(std::uint64_t n);

/// Primes <= limit, ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

/// Prime powers p^k <= limit (k >= 1), ascending.
std::vector<std::uint64_t> prime_powers_up_to(std::uint64_t limit);

/// True iff n is a perfect square.
bool is_perfect_square(const BigInt& n);

}  // namespace quandles
