#include "quandles/standard_groups.hpp"

#include <numeric>
#include <stdexcept>

#include "quandles/primes.hpp"

namespace quandles {

PermGroup symmetric_group(int n) {
  if (n < 1) throw std::invalid_argument("degree must be positive");
  if (n == 1) return PermGroup::trivial(1);
  std::vector<Perm> gens{perm_from_cycles(n, {{0, 1}})};
  if (n > 2) {
    std::vector<int> cycle(n);
    std::iota(cycle.begin(), cycle.end(), 0);
    gens.push_back(perm_from_cycles(n, {cycle}));
  }
  return PermGroup(n, std::move(gens));
}

PermGroup alternating_group(int n) {
  if (n < 1) throw std::invalid_argument("degree must be positive");
  if (n <= 2) return PermGroup::trivial(n);
  std::vector<Perm> gens;
  for (int i = 0; i + 2 < n; ++i) gens.push_back(perm_from_cycles(n, {{i, i + 1, i + 2}}));
  return PermGroup(n, std::move(gens));
}

PermGroup cyclic_group(int n) {
  if (n < 1) throw std::invalid_argument("degree must be positive");
  if (n == 1) return PermGroup::trivial(1);
  std::vector<int> cycle(n);
  std::iota(cycle.begin(), cycle.end(), 0);
  return PermGroup(n, {perm_from_cycles(n, {cycle})});
}

PermGroup dihedral_group(int n) {
  if (n < 3) throw std::invalid_argument("dihedral action needs n >= 3");
  std::vector<int> rotation(n), reflection(n);
  for (int i = 0; i < n; ++i) {
    rotation[i] = (i + 1) % n;
    reflection[i] = (n - i) % n;
  }
  return PermGroup(n, {perm_unchecked(std::move(rotation)), perm_unchecked(std::move(reflection))});
}

PermGroup agl1(int p) {
  if (!is_prime_u64(static_cast<std::uint64_t>(p)))
    throw std::invalid_argument("AGL(1,p) needs a prime p");
  if (p == 2) return symmetric_group(2);
  // x -> x + 1 and x -> gx for a primitive root g mod p
  std::vector<int> shift(p);
  for (int i = 0; i < p; ++i) shift[i] = (i + 1) % p;
  int g = 2;
  for (;; ++g) {
    std::uint64_t x = 1;
    int order = 0;
    do {
      x = x * static_cast<std::uint64_t>(g) % static_cast<std::uint64_t>(p);
      ++order;
    } while (x != 1);
    if (order == p - 1) break;
  }
  std::vector<int> mult(p);
  for (int i = 0; i < p; ++i) mult[i] = static_cast<int>(static_cast<std::uint64_t>(i) * g % p);
  return PermGroup(p, {perm_unchecked(std::move(shift)), perm_unchecked(std::move(mult))});
}

}  // namespace quandles
