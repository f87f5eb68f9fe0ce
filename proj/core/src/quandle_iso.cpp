#include "quandles/quandle_iso.hpp"

#include <algorithm>
#include <map>

namespace quandles {

namespace {

// Backtracking search for bijective homomorphisms source -> target.
// Propagation: once images of a and b are fixed, the image of a <| b is
// forced; conflicts cut the branch.
class IsoSearch {
 public:
  IsoSearch(const Quandle& source, const Quandle& target, bool first_only,
            std::uint64_t limit)
      : source_(source),
        target_(target),
        n_(source.order()),
        first_only_(first_only),
        limit_(limit),
        img_(n_, -1),
        pre_(n_, -1) {
    // candidates must share the column cycle type
    std::map<std::vector<int>, int> type_ids;
    auto type_of = [&](const Quandle& q, int a) {
      auto type = rho(q, a).cycle_type();
      auto [it, unused] = type_ids.emplace(type, static_cast<int>(type_ids.size()));
      return it->second;
    };
    for (int a = 0; a < n_; ++a) source_types_.push_back(type_of(source_, a));
    for (int a = 0; a < n_; ++a) target_types_.push_back(type_of(target_, a));
  }

  std::vector<std::vector<int>> run() {
    if (source_.order() == target_.order()) {
      auto st = source_types_;
      auto tt = target_types_;
      std::sort(st.begin(), st.end());
      std::sort(tt.begin(), tt.end());
      if (st == tt) extend();
    }
    return std::move(results_);
  }

 private:
  bool assign(int a, int v, std::vector<int>& trail) {
    if (img_[a] >= 0) return img_[a] == v;
    if (pre_[v] >= 0) return false;
    if (source_types_[a] != target_types_[v]) return false;
    img_[a] = v;
    pre_[v] = a;
    trail.push_back(a);
    // propagate forced images against every already-mapped element
    for (int b = 0; b < n_; ++b) {
      if (img_[b] < 0) continue;
      if (!assign(source_.entry(a, b), target_.entry(v, img_[b]), trail)) return false;
      if (!assign(source_.entry(b, a), target_.entry(img_[b], v), trail)) return false;
    }
    return true;
  }

  void undo(std::vector<int>& trail, std::size_t mark) {
    while (trail.size() > mark) {
      int a = trail.back();
      trail.pop_back();
      pre_[img_[a]] = -1;
      img_[a] = -1;
    }
  }

  bool done() const { return first_only_ && !results_.empty(); }

  void extend() {
    if (done() || results_.size() >= limit_) return;
    int a = -1;
    for (int i = 0; i < n_; ++i)
      if (img_[i] < 0) {
        a = i;
        break;
      }
    if (a < 0) {
      results_.push_back(img_);
      return;
    }
    std::vector<int> trail;
    for (int v = 0; v < n_; ++v) {
      if (pre_[v] >= 0) continue;
      if (assign(a, v, trail)) extend();
      undo(trail, 0);
      if (done() || results_.size() >= limit_) return;
    }
  }

  const Quandle& source_;
  const Quandle& target_;
  int n_;
  bool first_only_;
  std::uint64_t limit_;
  std::vector<int> img_, pre_;
  std::vector<int> source_types_, target_types_;
  std::vector<std::vector<int>> results_;
};

}  // namespace

PermGroup automorphism_group(const Quandle& q, int order_bound) {
  if (q.order() > order_bound)
    throw EnumerationBoundExceeded("quandle order exceeds the automorphism search bound");
  IsoSearch search(q, q, false, std::numeric_limits<std::uint64_t>::max());
  auto maps = search.run();
  std::vector<Perm> elements;
  elements.reserve(maps.size());
  for (auto& m : maps) elements.push_back(perm_unchecked(std::move(m)));
  std::sort(elements.begin(), elements.end());
  return group_from_elements(q.order(), elements);
}

std::optional<QuandleHom> are_isomorphic(const Quandle& q, const Quandle& r) {
  if (q.order() != r.order()) return std::nullopt;
  IsoSearch search(q, r, true, 1);
  auto maps = search.run();
  if (maps.empty()) return std::nullopt;
  return QuandleHom{q.order(), r.order(), maps.front()};
}

namespace {

// Builds the lexicographically least relabeled table.  Labels are assigned
// densely in order of first appearance, which the minimal table always
// satisfies, so the search space is the choice of which old element takes
// each fresh row/column label.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Quandle& q)
      : q_(q), n_(q.order()), to_new_(n_, -1), to_old_(n_, -1), out_(n_ * n_, 0) {}

  Quandle run() {
    emit(0, true);
    auto result = validate_flat(n_, best_);
    return std::get<Quandle>(std::move(result));
  }

 private:
  void assign(int old_elem, int label) {
    to_new_[old_elem] = label;
    to_old_[label] = old_elem;
    ++next_label_;
  }
  void unassign(int old_elem, int label) {
    to_new_[old_elem] = -1;
    to_old_[label] = -1;
    --next_label_;
  }

  // equal_prefix: out_[0..pos) equals best_[0..pos).  Values are compared
  // only while the prefix is tight; the final table is compared in full, so
  // a stale flag after best_ improves can only cost pruning, not soundness.
  void emit(int pos, bool equal_prefix) {
    if (pos == n_ * n_) {
      if (best_.empty() || out_ < best_) best_ = out_;
      return;
    }
    int i = pos / n_;
    int j = pos % n_;
    if (j == 0 && to_old_[i] < 0) {
      branch_label(i, pos, equal_prefix);
      return;
    }
    if (to_old_[j] < 0) {
      branch_label(j, pos, equal_prefix);
      return;
    }
    int w = q_.entry(to_old_[i], to_old_[j]);
    bool fresh = to_new_[w] < 0;
    if (fresh) assign(w, next_label_);
    int v = to_new_[w];
    bool keep_going = true;
    if (!best_.empty() && equal_prefix) {
      if (v > best_[pos]) keep_going = false;
      if (v < best_[pos]) equal_prefix = false;
    }
    if (keep_going) {
      out_[pos] = v;
      emit(pos + 1, equal_prefix);
    }
    if (fresh) unassign(w, v);
  }

  void branch_label(int label, int pos, bool equal_prefix) {
    for (int x = 0; x < n_; ++x) {
      if (to_new_[x] >= 0) continue;
      assign(x, label);
      emit(pos, equal_prefix);
      unassign(x, label);
    }
  }

  const Quandle& q_;
  int n_;
  std::vector<int> to_new_, to_old_;
  int next_label_ = 0;
  std::vector<int> out_;
  std::vector<int> best_;
};

}  // namespace

Quandle canonical_form(const Quandle& q) { return CanonicalSearch(q).run(); }

}  // namespace quandles
