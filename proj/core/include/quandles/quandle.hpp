#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "quandles/partition.hpp"
#include "quandles/perm_group.hpp"

namespace quandles {

/// Witness record for a failed axiom check.
struct AxiomViolation {
  enum class Kind { Malformed, Q1, Q2, Q3 };
  Kind kind;
  // Witness data: Q1 -> column + repeated value; Q2 -> (a, b, c); Q3 -> a.
  int a = -1;
  int b = -1;
  int c = -1;
  std::string message;
};

/// Finite quandle as an n x n Cayley table: entry(a, b) = a <| b, with the
/// row the left operand.  Column b read as a map a -> a <| b is the right
/// translation rho_b.  Instances are immutable once built.
class Quandle {
 public:
  int order() const { return order_; }
  int entry(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  const std::vector<int>& flat_table() const { return table_; }

  std::vector<int> row(int a) const;
  std::vector<int> column(int b) const;

  bool operator==(const Quandle& other) const {
    return order_ == other.order_ && table_ == other.table_;
  }
  bool operator<(const Quandle& other) const {
    return order_ != other.order_ ? order_ < other.order_ : table_ < other.table_;
  }

 private:
  Quandle(int order, std::vector<int> table) : order_(order), table_(std::move(table)) {}

  int order_;
  std::vector<int> table_;  // row-major

  friend std::variant<Quandle, AxiomViolation> validate(const std::vector<std::vector<int>>&);
  friend std::variant<Quandle, AxiomViolation> validate_flat(int, std::vector<int>);
};

/// Decides the quandle axioms; returns the quandle or a witness violation.
std::variant<Quandle, AxiomViolation> validate(const std::vector<std::vector<int>>& table);
std::variant<Quandle, AxiomViolation> validate_flat(int order, std::vector<int> table);

/// Throwing convenience for tables known to be valid (fixtures, constructions).
Quandle quandle_from_rows(const std::vector<std::vector<int>>& table);

/// entry(a, b) = a: every right translation is the identity.
Quandle trivial_quandle(int n);

/// entry(a, b) = 2b - a (mod n).
Quandle dihedral_quandle(int n);

/// entry(a, b) = t*a + (1 - t)*b (mod m); requires gcd(t, m) = 1.
Quandle alexander_quandle(int m, int t);

/// The conjugation quandle on the class of x in g, elements in canonical
/// order; entry(i, j) is the index of class[j]^-1 class[i] class[j].
struct ConjugationClassQuandle {
  Quandle quandle;
  std::vector<Perm> labeling;  // element i of the quandle is labeling[i]
};
ConjugationClassQuandle conjugation_class_quandle(const PermGroup& g, const Perm& x);

/// Right translation rho_b: the permutation a -> entry(a, b).
Perm rho(const Quandle& q, int b);

/// Inner automorphism group, generated by the columns.
PermGroup inn(const Quandle& q);

bool is_connected(const Quandle& q);

/// Smallest congruence containing the given pairs: the fixpoint of
/// x ~ y  =>  x <| z ~ y <| z  and  z <| x ~ z <| y.
Partition congruence_generated(const Quandle& q, const std::vector<std::pair<int, int>>& pairs);

struct QuandleHom {
  int source_order;
  int target_order;
  std::vector<int> map;

  bool is_homomorphism(const Quandle& source, const Quandle& target) const;
  bool is_bijective() const;
};

/// Raised by quotient() when the partition is not a congruence; carries a
/// witness (a ~ b but a <| z and b <| z land in different classes, or the
/// symmetric failure).
struct NotACongruence : std::runtime_error {
  NotACongruence(std::string msg, int a, int b, int z, bool right_side)
      : std::runtime_error(std::move(msg)), a(a), b(b), z(z), right_side(right_side) {}
  int a, b, z;
  bool right_side;
};

/// Quotient quandle on the classes, with the natural map.
std::pair<Quandle, QuandleHom> quotient(const Quandle& q, const Partition& p);

/// More than one element, and every nontrivial congruence is total.
bool is_simple(const Quandle& q);

/// Requires a connected quandle; decides primitivity of Inn Q.
bool is_primitive_quandle(const Quandle& q);

/// Structure checks for a simple quandle of non-prime-power order:
/// trivial centre, injectivity of rho, a single generating conjugacy class,
/// and conjugation equivariance on sampled triples.
struct SimpleStructureReport {
  bool hypothesis_met = false;
  std::string hypothesis_note;
  bool center_trivial = false;
  bool rho_injective = false;
  bool single_conjugacy_class = false;
  bool class_generates = false;
  bool equivariance_ok = false;
  bool all_passed() const {
    return hypothesis_met && center_trivial && rho_injective && single_conjugacy_class &&
           class_generates && equivariance_ok;
  }
};
SimpleStructureReport simple_structure_report(const Quandle& q);

/// Relabels: entry'(pi(a), pi(b)) = pi(entry(a, b)).
Quandle relabel(const Quandle& q, const Perm& pi);

}  // namespace quandles
