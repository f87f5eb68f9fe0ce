#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "quandles/perm.hpp"
#include "quandles/perm_group.hpp"
#include "quandles/quandle.hpp"
#include "quandles/standard_groups.hpp"
#include "support.hpp"

using namespace quandles;
using testsupport::group_catalog;

namespace {

// brute-force element closure, the order oracle for small groups
std::set<Perm> closure(const PermGroup& g, std::size_t limit = 5000) {
  std::set<Perm> elements{Perm(g.degree())};
  std::vector<Perm> queue{Perm(g.degree())};
  while (!queue.empty()) {
    Perm current = queue.back();
    queue.pop_back();
    for (const Perm& gen : g.generators()) {
      Perm next = current * gen;
      if (elements.insert(next).second) {
        queue.push_back(next);
        REQUIRE(elements.size() <= limit);
      }
    }
  }
  return elements;
}

Perm random_perm(int degree, std::mt19937& rng) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  std::shuffle(images.begin(), images.end(), rng);
  return Perm(std::move(images));
}

}  // namespace

TEST_CASE("composition is left to right") {
  Perm id3(3);
  CHECK(id3 * id3 == id3);

  // left-to-right: x under p*q is q(p(x)), so (0 1)(1 2) sends 0 to 2
  Perm p = perm_from_cycles(3, {{0, 1}});
  Perm q = perm_from_cycles(3, {{1, 2}});
  CHECK((p * q).images() == std::vector<int>{2, 0, 1});

  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Perm r = random_perm(8, rng);
    CHECK((r * r.inverse()).is_identity());
    CHECK((r.inverse() * r).is_identity());
  }
  CHECK_THROWS_AS(Perm(3) * Perm(4), std::invalid_argument);
}

TEST_CASE("conjugation and commutators") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    Perm p = random_perm(7, rng);
    Perm g = random_perm(7, rng);
    CHECK(p.conjugate_by(g) == g.inverse() * p * g);
    CHECK(p.conjugate_by(g).cycle_type() == p.cycle_type());
  }
  Perm a = perm_from_cycles(4, {{0, 1, 2}});
  CHECK(commutator(a, a).is_identity());
}

TEST_CASE("cycle parsing and printing") {
  Perm p = parse_cycles(5, "(0 1)(2 3 4)");
  CHECK(p.images() == std::vector<int>{1, 0, 3, 4, 2});
  CHECK(p.to_cycle_string() == "(0 1)(2 3 4)");
  CHECK(parse_cycles(4, "()").is_identity());
  CHECK_THROWS_AS(parse_cycles(3, "(0 0)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycles(3, "(0 5)"), std::invalid_argument);
}

TEST_CASE("orbits") {
  PermGroup c5 = cyclic_group(5);
  CHECK(c5.orbit(0) == std::vector<int>{0, 1, 2, 3, 4});
  PermGroup trivial = PermGroup::trivial(4);
  CHECK(trivial.orbit(2) == std::vector<int>{2});
  CHECK_THROWS_AS(trivial.orbit(9), std::invalid_argument);
  // the columns of the first order-6 table generate a transitive group
  CHECK(inn(testsupport::table1()).orbit(0).size() == 6);
}

TEST_CASE("group order via the stabilizer chain") {
  CHECK(symmetric_group(5).order() == 120);
  CHECK(inn(trivial_quandle(4)).order() == 1);
  CHECK(inn(dihedral_quandle(3)).order() == 6);
  CHECK(symmetric_group(8).order() == 40320);
  // no overflow at degree 64: 64! has 90 digits
  {
    std::vector<int> cycle(64);
    std::iota(cycle.begin(), cycle.end(), 0);
    PermGroup s64(64, {perm_from_cycles(64, {{0, 1}}), perm_from_cycles(64, {cycle})});
    CHECK(s64.order().str().size() == 90);
  }
}

TEST_CASE("membership by sifting") {
  PermGroup c3 = PermGroup(3, {perm_from_cycles(3, {{0, 1, 2}})});
  CHECK_FALSE(c3.contains(perm_from_cycles(3, {{0, 1}})));
  PermGroup a5 = alternating_group(5);
  CHECK(a5.contains(perm_from_cycles(5, {{0, 1}, {2, 3}})));
  CHECK_FALSE(a5.contains(perm_from_cycles(5, {{0, 1}})));
  for (const Perm& g : a5.generators())
    for (const Perm& h : a5.generators()) CHECK(a5.contains(g * h));
}

TEST_CASE("k-transitivity by iterated stabilizers") {
  CHECK(symmetric_group(5).is_k_transitive(3));
  CHECK_FALSE(cyclic_group(7).is_k_transitive(2));
  PermGroup inner = inn(testsupport::a5_five_cycle_quandle());
  CHECK(inner.is_transitive());
  CHECK_FALSE(inner.is_k_transitive(2));  // order 60 < 12 * 11
  CHECK(symmetric_group(6).is_k_transitive(6));
}

TEST_CASE("point stabilizers and orbit-stabilizer") {
  CHECK(symmetric_group(5).point_stabilizer(0).order() == 24);
  CHECK(cyclic_group(6).point_stabilizer(3).order() == 1);
  PermGroup psl13 = casecheck::psl2_projective_action(13);
  CHECK(psl13.order() == 1092);
  CHECK(psl13.point_stabilizer(0).order() == 78);
  for (const PermGroup& g : group_catalog())
    for (int point : {0, g.degree() - 1}) {
      Integer orbit_size = static_cast<unsigned>(g.orbit(point).size());
      CHECK(g.order() == orbit_size * g.point_stabilizer(point).order());
    }
}

TEST_CASE("bsgs order and membership agree with brute-force closure") {
  std::mt19937 rng(101);
  for (const PermGroup& g : group_catalog()) {
    if (g.order() > 5000) continue;
    auto elements = closure(g);
    CHECK(g.order() == static_cast<unsigned>(elements.size()));
    std::uniform_int_distribution<int> pick(0, static_cast<int>(g.generators().size()) - 1);
    for (int trial = 0; trial < 100; ++trial) {
      Perm product(g.degree());
      for (int i = 0; i < 4; ++i) product = product * g.generators()[pick(rng)];
      CHECK(g.contains(product));
      CHECK(elements.count(product) == 1);
    }
    int found = 0;
    for (int trial = 0; trial < 300 && found < 100; ++trial) {
      Perm candidate = random_perm(g.degree(), rng);
      bool member = elements.count(candidate) == 1;
      CHECK(g.contains(candidate) == member);
      if (!member) ++found;
    }
  }
}

TEST_CASE("minimal blocks") {
  // S_5 on the 10 transpositions is primitive: every pair's block is everything
  PermGroup s5_pairs = inn(testsupport::s5_transposition_quandle());
  for (int b = 1; b < 10; ++b) CHECK(s5_pairs.minimal_block(0, b).partition.is_full());

  // A_5 on its 12-element class of 5-cycles has a nontrivial block system
  PermGroup a5_class = inn(testsupport::a5_five_cycle_quandle());
  bool found_proper = false;
  for (int b = 1; b < 12 && !found_proper; ++b) {
    Partition blocks = a5_class.minimal_block(0, b).partition;
    if (!blocks.is_full()) {
      found_proper = true;
      // invariance under every generator
      for (const Perm& g : a5_class.generators())
        for (int x = 0; x < 12; ++x)
          for (int y = 0; y < 12; ++y)
            if (blocks.same(x, y)) CHECK(blocks.same(g[x], g[y]));
    }
  }
  CHECK(found_proper);

  PermGroup c4 = cyclic_group(4);
  Partition blocks = c4.minimal_block(0, 2).partition;
  CHECK(blocks.classes() == std::vector<std::vector<int>>{{0, 2}, {1, 3}});
  CHECK_THROWS_AS(c4.minimal_block(1, 1), std::invalid_argument);
}

TEST_CASE("primitivity") {
  CHECK(inn(testsupport::s5_transposition_quandle()).is_primitive());
  CHECK_FALSE(inn(testsupport::a5_five_cycle_quandle()).is_primitive());
  // any transitive group of prime degree is primitive
  CHECK(cyclic_group(7).is_primitive());
  CHECK(agl1(13).is_primitive());
}

TEST_CASE("derived subgroups and solubility") {
  CHECK(symmetric_group(5).derived_subgroup().order() == 60);
  CHECK(PermGroup(3, {perm_from_cycles(3, {{0, 1, 2}})}).derived_subgroup().order() == 1);
  // the derived series of S_5 stabilizes at the perfect group of order 60
  PermGroup d1 = symmetric_group(5).derived_subgroup();
  PermGroup d2 = d1.derived_subgroup();
  CHECK(d1.order() == 60);
  CHECK(d2.order() == 60);

  CHECK(dihedral_group(5).is_soluble());
  CHECK_FALSE(alternating_group(5).is_soluble());
  CHECK(PermGroup::trivial(3).is_soluble());
  // derived subgroup is normal: conjugates of its generators stay inside
  for (const PermGroup& g : {symmetric_group(4), agl1(7), dihedral_group(6)}) {
    PermGroup derived = g.derived_subgroup();
    for (const Perm& d : derived.generators())
      for (const Perm& c : g.generators()) CHECK(derived.contains(d.conjugate_by(c)));
  }
}

TEST_CASE("centers") {
  CHECK(symmetric_group(3).center().order() == 1);
  PermGroup c4 = cyclic_group(4);
  CHECK(c4.center().order() == 4);
  PermGroup stab = casecheck::psl2_projective_action(13).point_stabilizer(0);
  CHECK(stab.order() == 78);
  CHECK(stab.center().order() == 1);
  CHECK_THROWS_AS(symmetric_group(13).center(1000), EnumerationBoundExceeded);
}

TEST_CASE("conjugacy classes") {
  PermGroup s5 = symmetric_group(5);
  auto transpositions = s5.conjugacy_class(perm_from_cycles(5, {{0, 1}}));
  CHECK(transpositions.size() == 10);
  CHECK(std::is_sorted(transpositions.begin(), transpositions.end()));
  CHECK(s5.conjugacy_class(Perm(5)).size() == 1);
  auto five_cycles = alternating_group(5).conjugacy_class(perm_from_cycles(5, {{0, 1, 2, 3, 4}}));
  CHECK(five_cycles.size() == 12);
  CHECK_THROWS_AS(s5.conjugacy_class(Perm(4)), std::invalid_argument);

  // closure under conjugation by generators; class length divides the order
  for (const PermGroup& g : {symmetric_group(4), agl1(5), dihedral_group(6)}) {
    auto cls = g.conjugacy_class(g.generators().front());
    std::set<Perm> members(cls.begin(), cls.end());
    for (const Perm& x : cls)
      for (const Perm& c : g.generators()) CHECK(members.count(x.conjugate_by(c)) == 1);
    CHECK(g.order() % static_cast<unsigned>(cls.size()) == 0);
  }
}

TEST_CASE("index-2 subgroups") {
  auto from_s4 = symmetric_group(4).index2_subgroups();
  REQUIRE(from_s4.size() == 1);
  CHECK(from_s4[0].order() == 12);
  CHECK(from_s4[0] == alternating_group(4));

  CHECK(alternating_group(5).index2_subgroups().empty());

  PermGroup klein(4, {perm_from_cycles(4, {{0, 1}}), perm_from_cycles(4, {{2, 3}})});
  CHECK(klein.index2_subgroups().size() == 3);
}

TEST_CASE("holt check on stabilizer subgroups of index 2") {
  HoltReport s5 = holt_lemma_check(symmetric_group(5));
  CHECK(s5.preconditions_ok);
  CHECK(s5.subgroups.size() == 1);
  CHECK(s5.subgroups[0].subgroup_order == 12);
  CHECK(s5.lemma_holds);

  // PSL(2,11) on 11 points: the stabilizer is perfect, vacuous pass
  HoltReport psl11 = holt_lemma_check(testsupport::psl2_11_degree11());
  CHECK(psl11.preconditions_ok);
  CHECK(psl11.subgroups.empty());
  CHECK(psl11.lemma_holds);

  HoltReport agl7 = holt_lemma_check(agl1(7));
  CHECK(agl7.preconditions_ok);
  CHECK(agl7.soluble);
  REQUIRE(agl7.subgroups.size() == 1);
  CHECK(agl7.subgroups[0].subgroup_order == 3);
  CHECK_FALSE(agl7.subgroups[0].center_trivial);
  CHECK_FALSE(agl7.lemma_holds);  // raw result, reported without interpretation

  HoltReport not_prime = holt_lemma_check(symmetric_group(4));
  CHECK_FALSE(not_prime.preconditions_ok);
}

TEST_CASE("group equality and reconstruction from elements") {
  PermGroup s4 = symmetric_group(4);
  auto elements = s4.elements();
  CHECK(elements.size() == 24);
  CHECK(std::is_sorted(elements.begin(), elements.end()));
  PermGroup rebuilt = group_from_elements(4, elements);
  CHECK(rebuilt == s4);
  CHECK(rebuilt.generators().size() <= 6);
}

TEST_CASE("derived subgroup agrees with full commutator closure") {
  for (const PermGroup& g : {symmetric_group(4), agl1(5), dihedral_group(6),
                             alternating_group(4), testsupport::group_catalog()[40]}) {
    auto elements = g.elements(1000);
    std::vector<Perm> commutators;
    for (const Perm& x : elements)
      for (const Perm& y : elements) {
        Perm c = commutator(x, y);
        if (!c.is_identity()) commutators.push_back(c);
      }
    PermGroup reference = commutators.empty() ? PermGroup::trivial(g.degree())
                                              : PermGroup(g.degree(), commutators);
    CHECK(g.derived_subgroup() == reference);
  }
}

TEST_CASE("index-2 subgroup count matches the element-squares quotient") {
  for (const PermGroup& g : {symmetric_group(4), symmetric_group(5), dihedral_group(6),
                             dihedral_group(8), agl1(7), cyclic_group(12),
                             PermGroup(4, {perm_from_cycles(4, {{0, 1}}),
                                           perm_from_cycles(4, {{2, 3}})})}) {
    std::vector<Perm> h0_gens;
    PermGroup derived = g.derived_subgroup();
    for (const Perm& d : derived.generators())
      if (!d.is_identity()) h0_gens.push_back(d);
    for (const Perm& e : g.elements(2000)) {
      Perm sq = e * e;
      if (!sq.is_identity()) h0_gens.push_back(sq);
    }
    PermGroup h0 = h0_gens.empty() ? PermGroup::trivial(g.degree())
                                   : PermGroup(g.degree(), h0_gens);
    Integer quotient = g.order() / h0.order();
    CHECK(Integer(g.index2_subgroups().size()) == quotient - 1);
  }
}
