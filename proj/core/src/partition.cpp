#include "quandles/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace quandles {

Partition::Partition(int size) : parent_(size), rank_(size, 0), classes_(size) {
  if (size < 1) throw std::invalid_argument("partition size must be positive");
  std::iota(parent_.begin(), parent_.end(), 0);
}

int Partition::find(int x) const {
  int root = x;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[x] != root) {
    int next = parent_[x];
    parent_[x] = root;
    x = next;
  }
  return root;
}

bool Partition::merge(int a, int b) {
  int ra = find(a);
  int rb = find(b);
  if (ra == rb) return false;
  if (rank_[ra] < rank_[rb]) std::swap(ra, rb);
  parent_[rb] = ra;
  if (rank_[ra] == rank_[rb]) ++rank_[ra];
  --classes_;
  return true;
}

std::vector<std::vector<int>> Partition::classes() const {
  std::vector<std::vector<int>> by_root(size());
  for (int x = 0; x < size(); ++x) by_root[find(x)].push_back(x);
  std::vector<std::vector<int>> result;
  for (auto& cls : by_root)
    if (!cls.empty()) result.push_back(std::move(cls));
  // roots are visited in ascending order and each class already holds its
  // minimum first, so the result is canonically ordered
  std::sort(result.begin(), result.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return result;
}

std::vector<int> Partition::class_index() const {
  auto cls = classes();
  std::vector<int> index(size(), -1);
  for (std::size_t i = 0; i < cls.size(); ++i)
    for (int x : cls[i]) index[x] = static_cast<int>(i);
  return index;
}

bool Partition::operator==(const Partition& other) const {
  if (size() != other.size()) return false;
  return class_index() == other.class_index();
}

}  // namespace quandles
