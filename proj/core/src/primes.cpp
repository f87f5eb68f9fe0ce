#include "quandles/primes.hpp"

#include <algorithm>

namespace quandles {

namespace {

using boost::multiprecision::sqrt;

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod_u64(result, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Strong pseudoprime test: proven deterministic for n < 3,317,044,064,679,887,385,961,981
// with this base set, which covers every 64-bit integer.
constexpr std::uint64_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : kBases) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kBases) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  if (n <= std::numeric_limits<std::uint64_t>::max())
    return is_prime_u64(static_cast<std::uint64_t>(n));
  for (std::uint64_t p : kBases)
    if (n % p == 0) return false;
  BigInt d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kBases) {
    BigInt x = powm(BigInt(a), d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = (x * x) % n;
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::optional<PrimePower> as_prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  std::uint64_t p = 0;
  if (n % 2 == 0)
    p = 2;
  else {
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
      if (n % d == 0) {
        p = d;
        break;
      }
    }
    if (p == 0) return PrimePower{n, 1};  // n itself is prime
  }
  int exponent = 0;
  std::uint64_t m = n;
  while (m % p == 0) {
    m /= p;
    ++exponent;
  }
  if (m != 1) return std::nullopt;
  return PrimePower{p, exponent};
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> result;
  if (limit < 2) return result;
  std::vector<bool> sieve(limit + 1, true);
  sieve[0] = sieve[1] = false;
  for (std::uint64_t i = 2; i * i <= limit; ++i)
    if (sieve[i])
      for (std::uint64_t j = i * i; j <= limit; j += i) sieve[j] = false;
  for (std::uint64_t i = 2; i <= limit; ++i)
    if (sieve[i]) result.push_back(i);
  return result;
}

std::vector<std::uint64_t> prime_powers_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> result;
  for (std::uint64_t p : primes_up_to(limit))
    for (std::uint64_t q = p; q <= limit; q *= p) {
      result.push_back(q);
      if (q > limit / p) break;
    }
  std::sort(result.begin(), result.end());
  return result;
}

bool is_perfect_square(const BigInt& n) {
  if (n < 0) return false;
  BigInt root = sqrt(n);
  return root * root == n;
}

}  // namespace quandles
