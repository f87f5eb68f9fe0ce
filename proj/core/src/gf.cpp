#include "quandles/gf.hpp"

#include <stdexcept>

#include "quandles/primes.hpp"

namespace quandles {

namespace {

// Polynomial arithmetic over Z_p with coefficient vectors, low degree first.
using Poly = std::vector<int>;

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& modulus, int p) {
  std::vector<int> prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  // reduce modulo the monic polynomial
  int k = static_cast<int>(modulus.size()) - 1;
  for (int d = static_cast<int>(prod.size()) - 1; d >= k; --d) {
    int coeff = prod[d];
    if (coeff == 0) continue;
    prod[d] = 0;
    for (int j = 0; j < k; ++j) {
      int t = prod[d - k + j] - coeff * modulus[j] % p;
      prod[d - k + j] = ((t % p) + p) % p;
    }
  }
  prod.resize(k, 0);
  return prod;
}

}  // namespace

GF::GF(std::uint64_t q) : q_(q) {
  auto pp = as_prime_power(q);
  if (!pp) throw std::invalid_argument("field size must be a prime power");
  p_ = pp->prime;
  k_ = pp->exponent;
  const int p = static_cast<int>(p_);
  const int n = static_cast<int>(q_);

  add_.resize(static_cast<std::size_t>(n) * n);
  mul_.resize(static_cast<std::size_t>(n) * n);
  neg_.resize(n);
  inv_.assign(n, -1);

  auto decode = [&](int value) {
    Poly digits(k_, 0);
    for (int i = 0; i < k_; ++i) {
      digits[i] = value % p;
      value /= p;
    }
    return digits;
  };
  auto encode = [&](const Poly& digits) {
    int value = 0;
    for (int i = k_ - 1; i >= 0; --i) value = value * p + digits[i];
    return value;
  };

  Poly modulus;
  if (k_ > 1) {
    // find a monic irreducible of degree k by exhausting products of all
    // lower-degree pairs; q is tiny, so the direct sieve is fine
    std::vector<bool> reducible(1, false);
    int total = 1;
    for (int i = 0; i < k_ + 1; ++i) total *= p;  // monic polys of degree k: p^k choices
    auto poly_of = [&](int code, int degree) {
      Poly poly(degree + 1, 0);
      for (int i = 0; i < degree; ++i) {
        poly[i] = code % p;
        code /= p;
      }
      poly[degree] = 1;  // monic
      return poly;
    };
    auto mul_plain = [&](const Poly& a, const Poly& b) {
      Poly prod(a.size() + b.size() - 1, 0);
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
          prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
      return prod;
    };
    // mark every monic product of two monic factors of positive degree
    std::vector<bool> is_reducible(total / p, false);
    for (int da = 1; da < k_; ++da) {
      int db = k_ - da;
      if (db < da) break;
      int ca_count = 1, cb_count = 1;
      for (int i = 0; i < da; ++i) ca_count *= p;
      for (int i = 0; i < db; ++i) cb_count *= p;
      for (int ca = 0; ca < ca_count; ++ca)
        for (int cb = 0; cb < cb_count; ++cb) {
          Poly prod = mul_plain(poly_of(ca, da), poly_of(cb, db));
          int code = 0;
          for (int i = k_ - 1; i >= 0; --i) code = code * p + prod[i];
          is_reducible[code] = true;
        }
    }
    for (int code = 0; code < total / p; ++code) {
      if (!is_reducible[code]) {
        modulus = poly_of(code, k_);
        break;
      }
    }
  } else {
    modulus = {0, 1};  // placeholder; arithmetic below is plain mod p
  }

  for (int a = 0; a < n; ++a) {
    Poly pa = decode(a);
    Poly na(k_);
    for (int i = 0; i < k_; ++i) na[i] = (p - pa[i]) % p;
    neg_[a] = encode(na);
    for (int b = 0; b < n; ++b) {
      Poly pb = decode(b);
      Poly sum(k_);
      for (int i = 0; i < k_; ++i) sum[i] = (pa[i] + pb[i]) % p;
      add_[idx(a, b)] = encode(sum);
      mul_[idx(a, b)] =
          k_ == 1 ? (a * b) % p : encode(poly_mul_mod(pa, pb, modulus, p));
    }
  }
  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b)
      if (mul_[idx(a, b)] == 1) inv_[a] = b;

  primitive_ = -1;
  for (int g = 1; g < n && primitive_ < 0; ++g) {
    int x = g;
    std::uint64_t order = 1;
    while (x != 1) {
      x = mul(x, g);
      ++order;
    }
    if (order == q_ - 1) primitive_ = g;
  }
  if (n == 2) primitive_ = 1;
}

int GF::inv(int a) const {
  if (a == 0) throw std::invalid_argument("zero has no inverse");
  return inv_[a];
}

}  // namespace quandles
