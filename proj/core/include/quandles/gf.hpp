#pragma once

#include <cstdint>
#include <vector>

namespace quandles {

/// Finite field GF(p^k), elements encoded as 0..q-1 (base-p digit vectors of
/// polynomial coefficients over a fixed monic irreducible of degree k).
/// Intended for the small q needed by the projective-line constructions.
class GF {
 public:
  /// Throws std::invalid_argument unless q is a prime power.
  explicit GF(std::uint64_t q);

  std::uint64_t size() const { return q_; }
  std::uint64_t characteristic() const { return p_; }
  int extension_degree() const { return k_; }

  int add(int a, int b) const { return add_[idx(a, b)]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int mul(int a, int b) const { return mul_[idx(a, b)]; }
  int neg(int a) const { return neg_[a]; }
  int inv(int a) const;  // throws on 0

  /// A generator of the multiplicative group.
  int primitive_element() const { return primitive_; }

 private:
  std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * q_ + b; }

  std::uint64_t q_;
  std::uint64_t p_;
  int k_;
  int primitive_;
  std::vector<int> add_, mul_, neg_, inv_;
};

}  // namespace quandles
