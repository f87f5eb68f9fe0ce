#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace quandles {

/// A permutation of {0, ..., n-1}, stored as its image sequence.
///
/// Composition is left-to-right throughout the library: the point x under
/// p * q is q(p(x)).  This makes the translation identity
/// rho_{a <| b} = rho_b^-1 * rho_a * rho_b read exactly as written.
class Perm {
 public:
  /// Identity permutation of the given degree.
  explicit Perm(int degree);

  /// From an image sequence; throws std::invalid_argument unless the
  /// sequence is a bijection of {0, ..., n-1}.
  explicit Perm(std::vector<int> images);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int point) const { return images_[point]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;

  /// Left-to-right product: (p * q)[x] == q[p[x]].
  Perm operator*(const Perm& other) const;

  Perm inverse() const;

  /// g^-1 * (*this) * g, computed without forming g^-1.
  Perm conjugate_by(const Perm& g) const;

  /// Cycle lengths in decreasing order, fixed points included.
  std::vector<int> cycle_type() const;

  int count_fixed_points() const;

  /// Smallest point moved, or -1 for the identity.
  int first_moved_point() const;

  /// Disjoint cycle notation, e.g. "(0 1)(2 4 3)"; "()" for the identity.
  std::string to_cycle_string() const;

  bool operator==(const Perm& other) const { return images_ == other.images_; }
  bool operator!=(const Perm& other) const { return images_ != other.images_; }
  /// Lexicographic on image sequences; the canonical order used in reports.
  bool operator<(const Perm& other) const { return images_ < other.images_; }

 private:
  struct unchecked_t {};
  Perm(std::vector<int> images, unchecked_t) : images_(std::move(images)) {}

  std::vector<int> images_;

  friend Perm perm_unchecked(std::vector<int> images);
};

/// Trusted constructor for internal hot paths; no bijection check.
Perm perm_unchecked(std::vector<int> images);

/// Commutator p^-1 q^-1 p q under left-to-right composition.
Perm commutator(const Perm& p, const Perm& q);

/// Builds a permutation from 0-based disjoint cycles over {0,...,degree-1}.
/// Throws std::invalid_argument on repeated or out-of-range points.
Perm perm_from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

/// Parses cycle notation such as "(0 1)(2 3 4)"; "()" gives the identity.
Perm parse_cycles(int degree, const std::string& text);

}  // namespace quandles

template <>
struct std::hash<quandles::Perm> {
  std::size_t operator()(const quandles::Perm& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (int v : p.images()) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ull;
    return h;
  }
};
