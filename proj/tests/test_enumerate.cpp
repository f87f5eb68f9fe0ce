#include <doctest.h>

#include <algorithm>

#include "quandles/enumerate.hpp"
#include "quandles/quandle_iso.hpp"
#include "quandles/standard_groups.hpp"
#include "support.hpp"

using namespace quandles;
using namespace quandles::enumeration;

namespace {

std::vector<std::vector<int>> flat_tables(const EnumerationResult& result) {
  std::vector<std::vector<int>> flats;
  for (const Quandle& q : result.tables) flats.push_back(q.flat_table());
  return flats;
}

}  // namespace

TEST_CASE("small-order counts") {
  const std::uint64_t expected[] = {0, 1, 0, 1, 1, 3, 2, 5, 3, 8};
  for (int n = 1; n <= 9; ++n) CHECK(count_connected(n) == expected[n]);
}

TEST_CASE("counts agree with the brute-force oracle for n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    auto searched = connected_quandles(n);
    auto reference = brute_force_oracle(n);
    CHECK(searched.count == reference.count);
    CHECK(flat_tables(searched) == flat_tables(reference));
  }
  CHECK_THROWS_AS(brute_force_oracle(6), std::invalid_argument);
}

TEST_CASE("oracle small cases") {
  CHECK(brute_force_oracle(2).count == 0);
  auto order3 = brute_force_oracle(3);
  REQUIRE(order3.count == 1);
  CHECK(are_isomorphic(order3.tables[0], dihedral_quandle(3)).has_value());
  CHECK(brute_force_oracle(4).count == 1);
}

TEST_CASE("order 6 gives the two fixture tables") {
  auto result = connected_quandles(6);
  REQUIRE(result.count == 2);
  std::vector<Quandle> canon{canonical_form(testsupport::table1()),
                             canonical_form(testsupport::table2())};
  std::sort(canon.begin(), canon.end());
  CHECK(result.tables == canon);
}

TEST_CASE("every emitted table is a valid connected canonical quandle") {
  for (int n : {4, 5, 6, 7, 8}) {
    auto result = connected_quandles(n);
    for (const Quandle& q : result.tables) {
      CHECK(std::holds_alternative<Quandle>(validate_flat(q.order(), q.flat_table())));
      CHECK(is_connected(q));
      CHECK(canonical_form(q) == q);  // canonical fixpoint
    }
    // pairwise distinct canonical forms = pairwise non-isomorphic
    auto flats = flat_tables(result);
    CHECK(std::adjacent_find(flats.begin(), flats.end()) == flats.end());
  }
}

TEST_CASE("prime orders are the affine quandles") {
  for (int p : {5, 7, 11}) {
    auto result = connected_quandles(p);
    CHECK(result.count == static_cast<std::uint64_t>(p - 2));
    std::vector<Quandle> affine;
    for (int t = 2; t <= p - 1; ++t) affine.push_back(canonical_form(alexander_quandle(p, t)));
    std::sort(affine.begin(), affine.end());
    affine.erase(std::unique(affine.begin(), affine.end()), affine.end());
    CHECK(flat_tables(result) == [&] {
      std::vector<std::vector<int>> flats;
      for (const Quandle& q : affine) flats.push_back(q.flat_table());
      return flats;
    }());
  }
}

TEST_CASE("determinism across runs and worker counts") {
  SearchOptions serial;
  SearchOptions parallel;
  parallel.jobs = 4;
  for (int n : {6, 7, 8}) {
    auto a = connected_quandles(n, serial);
    auto b = connected_quandles(n, serial);
    auto c = connected_quandles(n, parallel);
    CHECK(flat_tables(a) == flat_tables(b));
    CHECK(flat_tables(a) == flat_tables(c));
    CHECK(a.stats.nodes == b.stats.nodes);
    CHECK(a.stats.nodes == c.stats.nodes);
    CHECK(a.stats.leaves == c.stats.leaves);
  }
}

TEST_CASE("pruning does not change the emitted set") {
  SearchOptions raw;
  raw.prune_types = false;
  for (int n = 1; n <= 8; ++n) {
    auto pruned = connected_quandles(n);
    auto unpruned = connected_quandles(n, raw);
    CHECK(flat_tables(pruned) == flat_tables(unpruned));
  }
}

TEST_CASE("order bound is enforced") {
  CHECK_THROWS_AS(connected_quandles(15), std::invalid_argument);
  CHECK_THROWS_AS(connected_quandles(0), std::invalid_argument);
  SearchOptions wide;
  wide.max_order = 16;
  CHECK_NOTHROW(connected_quandles(4, wide));
}

TEST_CASE("verify-2p") {
  auto p3 = verify_2p(3);
  CHECK(p3.preconditions_ok);
  CHECK_FALSE(p3.theorem_asserted);
  CHECK(p3.count == 2);
  CHECK(p3.passed);

  auto p5 = verify_2p(5);
  CHECK(p5.preconditions_ok);
  CHECK(p5.theorem_asserted);
  CHECK(p5.count == 1);
  REQUIRE(p5.isomorphic_to_transposition_quandle.has_value());
  CHECK(*p5.isomorphic_to_transposition_quandle);
  REQUIRE(p5.all_simple.has_value());
  CHECK(*p5.all_simple);
  CHECK(p5.passed);

  auto p4 = verify_2p(4);
  CHECK_FALSE(p4.preconditions_ok);

  auto p11 = verify_2p(11);  // order 22 over the default bound
  CHECK_FALSE(p11.preconditions_ok);
}
