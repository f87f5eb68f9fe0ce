#pragma once

#include <vector>

namespace quandles {

/// Union-find partition of {0, ..., size-1}.  Carries quandle congruences
/// and group block systems.  Class lists are reported in canonical order:
/// classes sorted by their minimum element, elements ascending.
class Partition {
 public:
  explicit Partition(int size);

  int size() const { return static_cast<int>(parent_.size()); }

  int find(int x) const;

  /// Merges the classes of a and b; returns true if they were distinct.
  bool merge(int a, int b);

  bool same(int a, int b) const { return find(a) == find(b); }

  int class_count() const { return classes_; }

  bool is_discrete() const { return classes_ == size(); }
  bool is_full() const { return classes_ == 1; }

  std::vector<std::vector<int>> classes() const;

  /// class_index()[x] is the position of x's class in classes().
  std::vector<int> class_index() const;

  bool operator==(const Partition& other) const;

 private:
  mutable std::vector<int> parent_;
  std::vector<int> rank_;
  int classes_;
};

}  // namespace quandles
