#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "quandles/partition.hpp"
#include "quandles/perm.hpp"

namespace quandles {

using Integer = boost::multiprecision::cpp_int;

/// A group-invariant partition of the acted-on points.
struct BlockPartition {
  int degree;
  Partition partition;
};

/// Raised when an element-enumeration step would exceed the configured bound.
struct EnumerationBoundExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Result of checking centre triviality of the index-2 subgroups of a point
/// stabilizer in a 2-transitive group of prime degree.
struct HoltReport {
  int degree = 0;
  Integer group_order;
  bool preconditions_ok = false;
  bool two_transitive = false;
  bool soluble = false;
  Integer stabilizer_order;
  struct Entry {
    Integer subgroup_order;
    Integer center_order;
    bool center_trivial;
  };
  std::vector<Entry> subgroups;
  bool lemma_holds = false;  // every index-2 subgroup has trivial centre
  std::vector<std::string> notes;
};

/// Permutation group given by generators, with a base and strong generating
/// set computed on first use (deterministic Schreier-Sims) and then shared
/// read-only; values are freely copyable and thread-safe.
class PermGroup {
 public:
  /// Throws if the generator list is empty or mixes degrees.  Identity
  /// generators are dropped; a trivial group keeps a single identity.
  PermGroup(int degree, std::vector<Perm> generators);

  static PermGroup trivial(int degree);

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }

  /// Exact order via the stabilizer chain; arbitrary precision.
  Integer order() const;

  /// Membership by sifting through the strong generating set.
  bool contains(const Perm& p) const;

  /// Smallest invariant set containing the point; sorted.
  std::vector<int> orbit(int point) const;

  /// All orbits, canonically ordered (by minimum element).
  std::vector<std::vector<int>> orbits() const;

  bool is_transitive() const;

  /// Decided by iterated point stabilizers; k >= 1.
  bool is_k_transitive(int k) const;

  /// Stabilizer of a point, from a stabilizer chain based at that point.
  PermGroup point_stabilizer(int point) const;

  /// Finest invariant partition with a and b in one class.
  /// Requires a transitive group and a != b.
  BlockPartition minimal_block(int a, int b) const;

  /// True iff every minimal block through {0, b} is the full set.
  /// Requires a transitive group of degree >= 2.
  bool is_primitive() const;

  /// Normal closure of the commutators of generator pairs.
  PermGroup derived_subgroup() const;

  /// True iff the derived series reaches the trivial group.
  bool is_soluble() const;

  /// All elements in canonical (image-lexicographic) order.
  /// Throws EnumerationBoundExceeded if the order exceeds max_order.
  std::vector<Perm> elements(std::uint64_t max_order = kDefaultEnumerationBound) const;

  /// Subgroup of elements commuting with every generator, by filtering the
  /// element list.  Throws EnumerationBoundExceeded past the bound.
  PermGroup center(std::uint64_t max_order = kDefaultEnumerationBound) const;

  /// Conjugation orbit of x under the group, sorted canonically.
  /// Throws std::invalid_argument if x is not a member.
  std::vector<Perm> conjugacy_class(const Perm& x) const;

  /// All subgroups of index 2: kernels of the surjections onto the group of
  /// order 2, enumerated as hyperplanes of the elementary abelian 2-quotient.
  std::vector<PermGroup> index2_subgroups() const;

  bool operator==(const PermGroup& other) const;

  static constexpr std::uint64_t kDefaultEnumerationBound = 1000000;

 private:
  struct Level {
    int base_point;
    std::vector<Perm> gens;           // strong generators fixing earlier base points
    std::vector<int> orbit;           // in BFS discovery order
    std::vector<std::optional<Perm>> transversal;  // u with base^u = point
  };
  struct Bsgs {
    std::vector<Level> levels;
  };
  struct Cache;

  const Bsgs& bsgs() const;
  static Bsgs compute_bsgs(int degree, const std::vector<Perm>& gens,
                           const std::vector<int>& base_hint);
  /// Sift p through levels [from, end); returns the residue and the level
  /// reached (levels.size() means p sifted through every level).
  static std::pair<Perm, std::size_t> strip(const Bsgs& bsgs, Perm p, std::size_t from);

  int degree_;
  std::vector<Perm> generators_;
  std::shared_ptr<Cache> cache_;
};

/// Checks D. Holt's observation on a doubly transitive group of prime
/// degree: the centre of every index-2 subgroup of a point stabilizer is
/// trivial.  Precondition failures are reported in the result, and the raw
/// verdict is reported without interpretation (with a note when the group
/// is soluble and the hypotheses' context is unclear).
HoltReport holt_lemma_check(const PermGroup& g);

/// Greedily extracts a small generating subset from a list of elements.
PermGroup group_from_elements(int degree, const std::vector<Perm>& elements);

}  // namespace quandles
