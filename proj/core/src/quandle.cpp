#include "quandles/quandle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "quandles/primes.hpp"

namespace quandles {

std::vector<int> Quandle::row(int a) const {
  return std::vector<int>(table_.begin() + static_cast<std::size_t>(a) * order_,
                          table_.begin() + static_cast<std::size_t>(a + 1) * order_);
}

std::vector<int> Quandle::column(int b) const {
  std::vector<int> result(order_);
  for (int a = 0; a < order_; ++a) result[a] = entry(a, b);
  return result;
}

std::variant<Quandle, AxiomViolation> validate_flat(int order, std::vector<int> table) {
  if (order < 1 || static_cast<std::size_t>(order) * order != table.size())
    return AxiomViolation{AxiomViolation::Kind::Malformed, -1, -1, -1, "table is not square"};
  for (int v : table)
    if (v < 0 || v >= order)
      return AxiomViolation{AxiomViolation::Kind::Malformed, -1, -1, -1,
                            "entry out of range"};
  auto at = [&](int a, int b) { return table[static_cast<std::size_t>(a) * order + b]; };
  // Q1: each column is a bijection
  for (int b = 0; b < order; ++b) {
    std::vector<int> seen(order, -1);
    for (int a = 0; a < order; ++a) {
      int v = at(a, b);
      if (seen[v] >= 0) {
        std::ostringstream msg;
        msg << "Q1 violated: column " << b << " repeats value " << v << " (rows " << seen[v]
            << " and " << a << ")";
        return AxiomViolation{AxiomViolation::Kind::Q1, seen[v], b, v, msg.str()};
      }
      seen[v] = a;
    }
  }
  // Q3: idempotence
  for (int a = 0; a < order; ++a) {
    if (at(a, a) != a) {
      std::ostringstream msg;
      msg << "Q3 violated at a=" << a;
      return AxiomViolation{AxiomViolation::Kind::Q3, a, -1, -1, msg.str()};
    }
  }
  // Q2: right self-distributivity
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      for (int c = 0; c < order; ++c)
        if (at(at(a, b), c) != at(at(a, c), at(b, c))) {
          std::ostringstream msg;
          msg << "Q2 violated at (a,b,c)=(" << a << "," << b << "," << c << ")";
          return AxiomViolation{AxiomViolation::Kind::Q2, a, b, c, msg.str()};
        }
  return Quandle(order, std::move(table));
}

std::variant<Quandle, AxiomViolation> validate(const std::vector<std::vector<int>>& table) {
  int order = static_cast<int>(table.size());
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(order) * order);
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != order)
      return AxiomViolation{AxiomViolation::Kind::Malformed, -1, -1, -1, "table is not square"};
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return validate_flat(order, std::move(flat));
}

Quandle quandle_from_rows(const std::vector<std::vector<int>>& table) {
  auto result = validate(table);
  if (auto* violation = std::get_if<AxiomViolation>(&result))
    throw std::invalid_argument(violation->message);
  return std::get<Quandle>(std::move(result));
}

Quandle trivial_quandle(int n) {
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a][b] = a;
  return quandle_from_rows(table);
}

Quandle dihedral_quandle(int n) {
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a][b] = ((2 * b - a) % n + n) % n;
  return quandle_from_rows(table);
}

Quandle alexander_quandle(int m, int t) {
  if (m < 1) throw std::invalid_argument("modulus must be positive");
  t = ((t % m) + m) % m;
  if (std::gcd(t, m) != 1)
    throw std::invalid_argument("multiplier must be a unit: gcd(t, m) = 1 fails Q1");
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) table[a][b] = ((t * a + (1 - t) * b) % m + m) % m;
  return quandle_from_rows(table);
}

ConjugationClassQuandle conjugation_class_quandle(const PermGroup& g, const Perm& x) {
  std::vector<Perm> elements = g.conjugacy_class(x);  // sorted, throws if x not in g
  std::map<Perm, int> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index[elements[i]] = static_cast<int>(i);
  int n = static_cast<int>(elements.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = index.at(elements[i].conjugate_by(elements[j]));
  return ConjugationClassQuandle{quandle_from_rows(table), std::move(elements)};
}

Perm rho(const Quandle& q, int b) {
  if (b < 0 || b >= q.order()) throw std::invalid_argument("column out of range");
  return perm_unchecked(q.column(b));
}

PermGroup inn(const Quandle& q) {
  std::vector<Perm> gens;
  for (int b = 0; b < q.order(); ++b) gens.push_back(rho(q, b));
  return PermGroup(q.order(), std::move(gens));
}

bool is_connected(const Quandle& q) { return inn(q).is_transitive(); }

Partition congruence_generated(const Quandle& q,
                               const std::vector<std::pair<int, int>>& pairs) {
  Partition partition(q.order());
  std::deque<std::pair<int, int>> queue;
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= q.order() || b < 0 || b >= q.order())
      throw std::invalid_argument("pair out of range");
    if (partition.merge(a, b)) queue.emplace_back(a, b);
  }
  while (!queue.empty()) {
    auto [x, y] = queue.front();
    queue.pop_front();
    for (int z = 0; z < q.order(); ++z) {
      if (partition.merge(q.entry(x, z), q.entry(y, z)))
        queue.emplace_back(q.entry(x, z), q.entry(y, z));
      if (partition.merge(q.entry(z, x), q.entry(z, y)))
        queue.emplace_back(q.entry(z, x), q.entry(z, y));
    }
  }
  return partition;
}

bool QuandleHom::is_homomorphism(const Quandle& source, const Quandle& target) const {
  if (source.order() != source_order || target.order() != target_order) return false;
  if (static_cast<int>(map.size()) != source_order) return false;
  for (int a = 0; a < source_order; ++a)
    for (int b = 0; b < source_order; ++b)
      if (map[source.entry(a, b)] != target.entry(map[a], map[b])) return false;
  return true;
}

bool QuandleHom::is_bijective() const {
  if (source_order != target_order) return false;
  std::vector<bool> seen(target_order, false);
  for (int v : map) {
    if (v < 0 || v >= target_order || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

std::pair<Quandle, QuandleHom> quotient(const Quandle& q, const Partition& p) {
  if (p.size() != q.order()) throw std::invalid_argument("partition size mismatch");
  // re-verify compatibility in both arguments
  for (int a = 0; a < q.order(); ++a)
    for (int b = a + 1; b < q.order(); ++b) {
      if (!p.same(a, b)) continue;
      for (int z = 0; z < q.order(); ++z) {
        if (!p.same(q.entry(a, z), q.entry(b, z))) {
          std::ostringstream msg;
          msg << "not a congruence: " << a << " ~ " << b << " but " << a << "<|" << z
              << " !~ " << b << "<|" << z;
          throw NotACongruence(msg.str(), a, b, z, true);
        }
        if (!p.same(q.entry(z, a), q.entry(z, b))) {
          std::ostringstream msg;
          msg << "not a congruence: " << a << " ~ " << b << " but " << z << "<|" << a
              << " !~ " << z << "<|" << b;
          throw NotACongruence(msg.str(), a, b, z, false);
        }
      }
    }
  auto classes = p.classes();
  auto index = p.class_index();
  int m = static_cast<int>(classes.size());
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      table[i][j] = index[q.entry(classes[i].front(), classes[j].front())];
  QuandleHom hom{q.order(), m, index};
  return {quandle_from_rows(table), std::move(hom)};
}

bool is_simple(const Quandle& q) {
  if (q.order() <= 1) return false;
  for (int a = 0; a < q.order(); ++a)
    for (int b = a + 1; b < q.order(); ++b)
      if (!congruence_generated(q, {{a, b}}).is_full()) return false;
  return true;
}

bool is_primitive_quandle(const Quandle& q) {
  if (!is_connected(q)) throw std::invalid_argument("primitivity is defined for connected quandles");
  if (q.order() == 1) return true;
  return inn(q).is_primitive();
}

SimpleStructureReport simple_structure_report(const Quandle& q) {
  SimpleStructureReport report;
  if (!is_simple(q)) {
    report.hypothesis_note = "quandle is not simple";
    return report;
  }
  if (as_prime_power(static_cast<std::uint64_t>(q.order()))) {
    report.hypothesis_note = "order is a prime power; hypothesis not met, no claim";
    return report;
  }
  report.hypothesis_met = true;

  PermGroup g = inn(q);
  report.center_trivial = g.center().order() == 1;

  std::vector<Perm> translations;
  for (int a = 0; a < q.order(); ++a) translations.push_back(rho(q, a));
  std::vector<Perm> sorted_translations = translations;
  std::sort(sorted_translations.begin(), sorted_translations.end());
  report.rho_injective = std::adjacent_find(sorted_translations.begin(),
                                            sorted_translations.end()) ==
                         sorted_translations.end();

  std::vector<Perm> cls = g.conjugacy_class(translations[0]);
  report.single_conjugacy_class = report.rho_injective && cls == sorted_translations;
  report.class_generates = PermGroup(q.order(), cls).order() == g.order();

  // conjugation equivariance on sampled triples: every inner automorphism
  // respects the table
  std::mt19937 rng(20120521);
  std::uniform_int_distribution<int> pick_point(0, q.order() - 1);
  std::uniform_int_distribution<int> pick_gen(0, static_cast<int>(g.generators().size()) - 1);
  std::uniform_int_distribution<int> pick_len(1, 6);
  report.equivariance_ok = true;
  for (int trial = 0; trial < 100; ++trial) {
    Perm word(q.order());
    int len = pick_len(rng);
    for (int i = 0; i < len; ++i) word = word * g.generators()[pick_gen(rng)];
    int a = pick_point(rng);
    int b = pick_point(rng);
    if (q.entry(word[a], word[b]) != word[q.entry(a, b)]) {
      report.equivariance_ok = false;
      break;
    }
  }
  return report;
}

Quandle relabel(const Quandle& q, const Perm& pi) {
  if (pi.degree() != q.order()) throw std::invalid_argument("relabeling degree mismatch");
  int n = q.order();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[pi[a]][pi[b]] = pi[q.entry(a, b)];
  return quandle_from_rows(table);
}

}  // namespace quandles
