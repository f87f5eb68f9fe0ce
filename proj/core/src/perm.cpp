#include "quandles/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace quandles {

Perm::Perm(int degree) {
  if (degree < 1) throw std::invalid_argument("permutation degree must be positive");
  images_.resize(degree);
  std::iota(images_.begin(), images_.end(), 0);
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty()) throw std::invalid_argument("permutation degree must be positive");
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[v])
      throw std::invalid_argument("image sequence is not a bijection");
    seen[v] = true;
  }
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::operator*(const Perm& other) const {
  if (degree() != other.degree()) throw std::invalid_argument("degree mismatch in composition");
  std::vector<int> result(images_.size());
  for (int i = 0; i < degree(); ++i) result[i] = other.images_[images_[i]];
  return Perm(std::move(result), unchecked_t{});
}

Perm Perm::inverse() const {
  std::vector<int> result(images_.size());
  for (int i = 0; i < degree(); ++i) result[images_[i]] = i;
  return Perm(std::move(result), unchecked_t{});
}

Perm Perm::conjugate_by(const Perm& g) const {
  if (degree() != g.degree()) throw std::invalid_argument("degree mismatch in conjugation");
  // (g^-1 p g)[g[x]] = g[p[x]]
  std::vector<int> result(images_.size());
  for (int x = 0; x < degree(); ++x) result[g.images_[x]] = g.images_[images_[x]];
  return Perm(std::move(result), unchecked_t{});
}

std::vector<int> Perm::cycle_type() const {
  std::vector<int> type;
  std::vector<bool> seen(images_.size(), false);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.begin(), type.end(), std::greater<int>());
  return type;
}

int Perm::count_fixed_points() const {
  int count = 0;
  for (int i = 0; i < degree(); ++i)
    if (images_[i] == i) ++count;
  return count;
}

int Perm::first_moved_point() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return i;
  return -1;
}

std::string Perm::to_cycle_string() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) {
      seen[i] = true;
      continue;
    }
    any = true;
    out << '(' << i;
    seen[i] = true;
    for (int j = images_[i]; j != i; j = images_[j]) {
      out << ' ' << j;
      seen[j] = true;
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

Perm perm_unchecked(std::vector<int> images) {
  return Perm(std::move(images), Perm::unchecked_t{});
}

Perm commutator(const Perm& p, const Perm& q) {
  return p.inverse() * q.inverse() * p * q;
}

Perm perm_from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  if (degree < 1) throw std::invalid_argument("permutation degree must be positive");
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      int a = cycle[k];
      int b = cycle[(k + 1) % cycle.size()];
      if (a < 0 || a >= degree || b < 0 || b >= degree)
        throw std::invalid_argument("cycle point out of range");
      if (used[a]) throw std::invalid_argument("repeated point in cycle notation");
      used[a] = true;
      images[a] = b;
    }
  }
  return perm_unchecked(std::move(images));
}

Perm parse_cycles(int degree, const std::string& text) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("expected '(' in cycle notation");
    ++i;
    std::vector<int> cycle;
    skip_space();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("expected point in cycle notation");
      int value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        ++i;
      }
      cycle.push_back(value);
      skip_space();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_space();
      }
    }
    if (i == text.size()) throw std::invalid_argument("unterminated cycle");
    ++i;  // ')'
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_space();
  }
  return perm_from_cycles(degree, cycles);
}

}  // namespace quandles
