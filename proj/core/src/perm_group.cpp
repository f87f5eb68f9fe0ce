#include "quandles/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "quandles/primes.hpp"

namespace quandles {

struct PermGroup::Cache {
  std::once_flag once;
  std::optional<Bsgs> bsgs;
};

PermGroup::PermGroup(int degree, std::vector<Perm> generators)
    : degree_(degree), cache_(std::make_shared<Cache>()) {
  if (degree < 1) throw std::invalid_argument("group degree must be positive");
  if (generators.empty()) throw std::invalid_argument("generator set must be nonempty");
  for (const Perm& g : generators) {
    if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
    if (g.is_identity()) continue;
    if (std::find(generators_.begin(), generators_.end(), g) == generators_.end())
      generators_.push_back(g);
  }
  if (generators_.empty()) generators_.push_back(Perm(degree));
}

PermGroup PermGroup::trivial(int degree) { return PermGroup(degree, {Perm(degree)}); }

const PermGroup::Bsgs& PermGroup::bsgs() const {
  std::call_once(cache_->once, [this] { cache_->bsgs = compute_bsgs(degree_, generators_, {}); });
  return *cache_->bsgs;
}

PermGroup::Bsgs PermGroup::compute_bsgs(int degree, const std::vector<Perm>& gens,
                                        const std::vector<int>& base_hint) {
  Bsgs bsgs;

  auto add_level = [&](int point) {
    Level level;
    level.base_point = point;
    bsgs.levels.push_back(std::move(level));
  };

  auto rebuild_orbit = [&](std::size_t i) {
    Level& level = bsgs.levels[i];
    level.orbit.clear();
    level.transversal.assign(degree, std::nullopt);
    level.orbit.push_back(level.base_point);
    level.transversal[level.base_point] = Perm(degree);
    for (std::size_t head = 0; head < level.orbit.size(); ++head) {
      int point = level.orbit[head];
      for (const Perm& g : level.gens) {
        int image = g[point];
        if (!level.transversal[image]) {
          level.transversal[image] = *level.transversal[point] * g;
          level.orbit.push_back(image);
        }
      }
    }
  };

  auto fixes_prefix = [&](const Perm& g, std::size_t levels) {
    for (std::size_t i = 0; i < levels; ++i)
      if (g[bsgs.levels[i].base_point] != bsgs.levels[i].base_point) return false;
    return true;
  };

  for (int b : base_hint) add_level(b);
  for (const Perm& g : gens) {
    if (g.is_identity()) continue;
    if (fixes_prefix(g, bsgs.levels.size())) add_level(g.first_moved_point());
  }
  if (bsgs.levels.empty()) add_level(0);

  // Distribute generators over the chain.
  for (const Perm& g : gens) {
    if (g.is_identity()) continue;
    for (std::size_t i = 0; i < bsgs.levels.size(); ++i) {
      bsgs.levels[i].gens.push_back(g);
      if (g[bsgs.levels[i].base_point] != bsgs.levels[i].base_point) break;
    }
  }
  for (std::size_t i = 0; i < bsgs.levels.size(); ++i) rebuild_orbit(i);

  // Deterministic Schreier-Sims: verify each level against the chain below,
  // adding sift residues of Schreier generators as new strong generators.
  // Returns the level to verify next, or nothing if level i checks out.
  auto verify_level = [&](std::size_t i) -> std::optional<std::size_t> {
    for (std::size_t oi = 0; oi < bsgs.levels[i].orbit.size(); ++oi) {
      int beta = bsgs.levels[i].orbit[oi];
      for (std::size_t si = 0; si < bsgs.levels[i].gens.size(); ++si) {
        Perm s = bsgs.levels[i].gens[si];
        int target = s[beta];
        Perm schreier =
            *bsgs.levels[i].transversal[beta] * s * bsgs.levels[i].transversal[target]->inverse();
        if (schreier.is_identity()) continue;
        auto [residue, j] = strip(bsgs, schreier, i + 1);
        if (residue.is_identity()) continue;
        if (j == bsgs.levels.size()) add_level(residue.first_moved_point());
        for (std::size_t l = i + 1; l <= j; ++l) {
          bsgs.levels[l].gens.push_back(residue);
          rebuild_orbit(l);
        }
        return j;
      }
    }
    return std::nullopt;
  };

  std::size_t i = bsgs.levels.size();
  while (i > 0) {
    --i;
    if (auto next = verify_level(i)) i = *next + 1;
  }
  return bsgs;
}

std::pair<Perm, std::size_t> PermGroup::strip(const Bsgs& bsgs, Perm p, std::size_t from) {
  for (std::size_t l = from; l < bsgs.levels.size(); ++l) {
    const Level& level = bsgs.levels[l];
    int image = p[level.base_point];
    if (!level.transversal[image]) return {std::move(p), l};
    p = p * level.transversal[image]->inverse();
  }
  return {std::move(p), bsgs.levels.size()};
}

Integer PermGroup::order() const {
  Integer result = 1;
  for (const Level& level : bsgs().levels) result *= static_cast<unsigned>(level.orbit.size());
  return result;
}

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree_) throw std::invalid_argument("degree mismatch in membership test");
  auto [residue, level] = strip(bsgs(), p, 0);
  (void)level;
  return residue.is_identity();
}

std::vector<int> PermGroup::orbit(int point) const {
  if (point < 0 || point >= degree_) throw std::invalid_argument("point out of range");
  std::vector<bool> seen(degree_, false);
  std::vector<int> queue{point};
  seen[point] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const Perm& g : generators_) {
      int image = g[queue[head]];
      if (!seen[image]) {
        seen[image] = true;
        queue.push_back(image);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

std::vector<std::vector<int>> PermGroup::orbits() const {
  std::vector<bool> seen(degree_, false);
  std::vector<std::vector<int>> result;
  for (int p = 0; p < degree_; ++p) {
    if (seen[p]) continue;
    auto orb = orbit(p);
    for (int x : orb) seen[x] = true;
    result.push_back(std::move(orb));
  }
  return result;
}

bool PermGroup::is_transitive() const {
  return static_cast<int>(orbit(0).size()) == degree_;
}

bool PermGroup::is_k_transitive(int k) const {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (degree_ < k) throw std::invalid_argument("degree must be at least k");
  PermGroup current = *this;
  std::vector<bool> fixed(degree_, false);
  int remaining = degree_;
  for (int step = 0; step < k; ++step) {
    int point = 0;
    while (fixed[point]) ++point;
    if (static_cast<int>(current.orbit(point).size()) != remaining) return false;
    if (step + 1 < k) {
      current = current.point_stabilizer(point);
      fixed[point] = true;
      --remaining;
    }
  }
  return true;
}

PermGroup PermGroup::point_stabilizer(int point) const {
  if (point < 0 || point >= degree_) throw std::invalid_argument("point out of range");
  Bsgs chain = compute_bsgs(degree_, generators_, {point});
  std::vector<Perm> stab_gens;
  if (chain.levels.size() > 1)
    stab_gens = chain.levels[1].gens;
  if (stab_gens.empty()) stab_gens.push_back(Perm(degree_));
  return PermGroup(degree_, std::move(stab_gens));
}

BlockPartition PermGroup::minimal_block(int a, int b) const {
  if (!is_transitive()) throw std::invalid_argument("minimal_block requires a transitive group");
  if (a == b) throw std::invalid_argument("minimal_block requires distinct points");
  if (a < 0 || a >= degree_ || b < 0 || b >= degree_)
    throw std::invalid_argument("point out of range");
  Partition partition(degree_);
  std::deque<std::pair<int, int>> queue;
  partition.merge(a, b);
  queue.emplace_back(a, b);
  while (!queue.empty()) {
    auto [x, y] = queue.front();
    queue.pop_front();
    for (const Perm& g : generators_) {
      int gx = g[x];
      int gy = g[y];
      if (partition.merge(gx, gy)) queue.emplace_back(gx, gy);
    }
  }
  return BlockPartition{degree_, std::move(partition)};
}

bool PermGroup::is_primitive() const {
  if (degree_ < 2) throw std::invalid_argument("primitivity needs degree >= 2");
  if (!is_transitive()) throw std::invalid_argument("primitivity requires a transitive group");
  for (int b = 1; b < degree_; ++b)
    if (!minimal_block(0, b).partition.is_full()) return false;
  return true;
}

PermGroup PermGroup::derived_subgroup() const {
  std::vector<Perm> closure_gens;
  std::vector<Perm> frontier;
  auto add = [&](const Perm& p) {
    if (p.is_identity()) return false;
    if (std::find(closure_gens.begin(), closure_gens.end(), p) != closure_gens.end())
      return false;
    closure_gens.push_back(p);
    frontier.push_back(p);
    return true;
  };
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = i + 1; j < generators_.size(); ++j)
      add(commutator(generators_[i], generators_[j]));
  if (closure_gens.empty()) return PermGroup::trivial(degree_);

  PermGroup result(degree_, closure_gens);
  while (!frontier.empty()) {
    Perm k = frontier.back();
    frontier.pop_back();
    for (const Perm& g : generators_) {
      Perm c = k.conjugate_by(g);
      if (!result.contains(c) && add(c)) result = PermGroup(degree_, closure_gens);
    }
  }
  return result;
}

bool PermGroup::is_soluble() const {
  PermGroup current = *this;
  Integer size = current.order();
  while (size != 1) {
    PermGroup derived = current.derived_subgroup();
    Integer derived_size = derived.order();
    if (derived_size == size) return false;  // perfect core
    current = std::move(derived);
    size = std::move(derived_size);
  }
  return true;
}

std::vector<Perm> PermGroup::elements(std::uint64_t max_order) const {
  if (order() > max_order)
    throw EnumerationBoundExceeded("group order exceeds the enumeration bound");
  const Bsgs& chain = bsgs();
  std::vector<Perm> result{Perm(degree_)};
  // element = u^(k-1) * ... * u^(0); build from the deepest level outwards
  for (std::size_t l = chain.levels.size(); l-- > 0;) {
    const Level& level = chain.levels[l];
    std::vector<int> points = level.orbit;
    std::sort(points.begin(), points.end());
    std::vector<Perm> next;
    next.reserve(result.size() * points.size());
    for (const Perm& x : result)
      for (int p : points) next.push_back(x * *level.transversal[p]);
    result = std::move(next);
  }
  std::sort(result.begin(), result.end());
  return result;
}

PermGroup PermGroup::center(std::uint64_t max_order) const {
  std::vector<Perm> central;
  for (const Perm& z : elements(max_order)) {
    bool commutes = true;
    for (const Perm& g : generators_) {
      if (!(z * g == g * z)) {
        commutes = false;
        break;
      }
    }
    if (commutes && !z.is_identity()) central.push_back(z);
  }
  if (central.empty()) return PermGroup::trivial(degree_);
  return PermGroup(degree_, std::move(central));
}

std::vector<Perm> PermGroup::conjugacy_class(const Perm& x) const {
  if (!contains(x)) throw std::invalid_argument("element is not a member of the group");
  std::set<Perm> seen{x};
  std::vector<Perm> queue{x};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Perm current = queue[head];
    for (const Perm& g : generators_) {
      Perm c = current.conjugate_by(g);
      if (seen.insert(c).second) queue.push_back(c);
    }
  }
  return std::vector<Perm>(seen.begin(), seen.end());
}

std::vector<PermGroup> PermGroup::index2_subgroups() const {
  PermGroup derived = derived_subgroup();
  std::vector<Perm> h_gens;
  for (const Perm& g : derived.generators())
    if (!g.is_identity()) h_gens.push_back(g);
  for (const Perm& g : generators_) {
    Perm sq = g * g;
    if (!sq.is_identity()) h_gens.push_back(sq);
  }
  // H = [G,G] . <generator squares>; G/H is elementary abelian of exponent 2
  PermGroup h = h_gens.empty() ? PermGroup::trivial(degree_) : PermGroup(degree_, h_gens);
  std::vector<Perm> basis;
  PermGroup span = h;
  for (const Perm& g : generators_) {
    if (!span.contains(g)) {
      basis.push_back(g);
      std::vector<Perm> span_gens = span.generators();
      span_gens.push_back(g);
      span = PermGroup(degree_, std::move(span_gens));
    }
  }
  std::vector<PermGroup> result;
  std::size_t r = basis.size();
  Integer whole = order();
  for (std::uint64_t mask = 1; mask < (1ull << r); ++mask) {
    std::size_t pivot = 0;
    while (!((mask >> pivot) & 1)) ++pivot;
    std::vector<Perm> k_gens = h_gens;
    for (std::size_t i = 0; i < r; ++i) {
      if (i == pivot) continue;
      if ((mask >> i) & 1)
        k_gens.push_back(basis[i] * basis[pivot]);
      else
        k_gens.push_back(basis[i]);
    }
    PermGroup kernel =
        k_gens.empty() ? PermGroup::trivial(degree_) : PermGroup(degree_, std::move(k_gens));
    if (kernel.order() * 2 != whole)
      throw std::logic_error("index-2 kernel has wrong order");
    result.push_back(std::move(kernel));
  }
  return result;
}

bool PermGroup::operator==(const PermGroup& other) const {
  if (degree_ != other.degree_) return false;
  if (order() != other.order()) return false;
  for (const Perm& g : generators_)
    if (!other.contains(g)) return false;
  return true;
}

HoltReport holt_lemma_check(const PermGroup& g) {
  HoltReport report;
  report.degree = g.degree();
  report.group_order = g.order();
  if (!is_prime_u64(static_cast<std::uint64_t>(g.degree()))) {
    report.notes.push_back("degree is not prime; hypotheses not met");
    return report;
  }
  if (!g.is_transitive() || !g.is_k_transitive(2)) {
    report.notes.push_back("group is not doubly transitive; hypotheses not met");
    return report;
  }
  report.preconditions_ok = true;
  report.two_transitive = true;
  report.soluble = g.is_soluble();
  if (report.soluble)
    report.notes.push_back(
        "group is soluble; the result is reported raw, as the statement's use "
        "in context assumes an insoluble group");
  PermGroup stabilizer = g.point_stabilizer(0);
  report.stabilizer_order = stabilizer.order();
  auto subgroups = stabilizer.index2_subgroups();
  report.lemma_holds = true;
  if (subgroups.empty())
    report.notes.push_back("point stabilizer has no subgroup of index 2; vacuous");
  for (const PermGroup& n : subgroups) {
    PermGroup z = n.center();
    HoltReport::Entry entry{n.order(), z.order(), z.order() == 1};
    if (!entry.center_trivial) report.lemma_holds = false;
    report.subgroups.push_back(std::move(entry));
  }
  return report;
}

PermGroup group_from_elements(int degree, const std::vector<Perm>& elements) {
  PermGroup result = PermGroup::trivial(degree);
  std::vector<Perm> gens;
  for (const Perm& e : elements) {
    if (!result.contains(e)) {
      gens.push_back(e);
      result = PermGroup(degree, gens);
    }
  }
  return result;
}

}  // namespace quandles
