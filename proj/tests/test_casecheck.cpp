#include <doctest.h>

#include <algorithm>

#include "quandles/casecheck.hpp"
#include "quandles/gf.hpp"
#include "quandles/primes.hpp"
#include "quandles/standard_groups.hpp"
#include "support.hpp"

using namespace quandles;
using namespace quandles::casecheck;

TEST_CASE("prime tools") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(7919));
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64(7917));
  // around 2^61: 2305843009213693951 is the Mersenne prime 2^61 - 1
  CHECK(is_prime_u64(2305843009213693951ull));
  CHECK_FALSE(is_prime_u64(2305843009213693953ull));
  CHECK(is_prime(BigInt("170141183460469231731687303715884105727")));  // 2^127 - 1
  CHECK_FALSE(is_prime(BigInt("170141183460469231731687303715884105725")));

  auto pp = as_prime_power(729);
  REQUIRE(pp.has_value());
  CHECK(pp->prime == 3);
  CHECK(pp->exponent == 6);
  CHECK_FALSE(as_prime_power(12).has_value());
  CHECK(primes_up_to(20) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19});
  auto powers = prime_powers_up_to(16);
  CHECK(powers == std::vector<std::uint64_t>{2, 3, 4, 5, 7, 8, 9, 11, 13, 16});
  CHECK(is_perfect_square(BigInt(144)));
  CHECK_FALSE(is_perfect_square(BigInt(241)));
  CHECK_FALSE(is_perfect_square(BigInt(97)));
}

TEST_CASE("finite fields") {
  GF f9(9);
  CHECK(f9.characteristic() == 3);
  CHECK(f9.extension_degree() == 2);
  // multiplicative group is cyclic of order 8
  int g = f9.primitive_element();
  int x = g;
  int order = 1;
  while (x != 1) {
    x = f9.mul(x, g);
    ++order;
  }
  CHECK(order == 8);
  for (int a = 1; a < 9; ++a) CHECK(f9.mul(a, f9.inv(a)) == 1);
  for (int a = 0; a < 9; ++a) CHECK(f9.add(a, f9.neg(a)) == 0);
  CHECK_THROWS_AS(GF(12), std::invalid_argument);
}

TEST_CASE("projective actions of PSL(2,q)") {
  struct Row {
    std::uint64_t q;
    int degree;
    std::uint64_t order;
  };
  for (Row row : {Row{2, 3, 6}, Row{3, 4, 12}, Row{4, 5, 60}, Row{5, 6, 60}, Row{7, 8, 168},
                  Row{9, 10, 360}, Row{11, 12, 660}, Row{13, 14, 1092}}) {
    PermGroup g = psl2_projective_action(row.q);
    CHECK(g.degree() == row.degree);
    CHECK(g.order() == row.order);
    CHECK(g.order() == psl2_order(row.q));
    CHECK(g.is_k_transitive(2));  // classical 2-transitivity
  }
  CHECK_THROWS_AS(psl2_projective_action(6), std::invalid_argument);
  CHECK_THROWS_AS(psl2_projective_action(128), std::invalid_argument);
}

TEST_CASE("stabilizer centre checks") {
  auto q13 = stabilizer_center_check(13);
  CHECK(q13.p == 7);
  CHECK(q13.p_prime);
  CHECK(q13.stabilizer_order == 78);
  CHECK(q13.center_trivial);
  CHECK(q13.passed);

  auto q5 = stabilizer_center_check(5);
  CHECK(q5.stabilizer_order == 10);
  CHECK(q5.center_trivial);

  auto q9 = stabilizer_center_check(9);
  CHECK(q9.p == 5);
  CHECK(q9.stabilizer_order == 36);
  CHECK(q9.center_trivial);

  auto q7 = stabilizer_center_check(7);  // (7+1)/2 = 4 is not prime
  CHECK_FALSE(q7.p_prime);
  CHECK_FALSE(q7.passed);
}

TEST_CASE("burnside dichotomy spot checks") {
  auto cyclic = burnside_spot_check(cyclic_group(5));
  CHECK(cyclic.preconditions_ok);
  CHECK(cyclic.passed);
  CHECK(cyclic.soluble);

  auto a5 = burnside_spot_check(alternating_group(5));
  CHECK(a5.passed);
  CHECK(a5.two_transitive);
  CHECK_FALSE(a5.soluble);

  auto psl11 = burnside_spot_check(testsupport::psl2_11_degree11());
  CHECK(psl11.passed);
  CHECK(psl11.two_transitive);
  CHECK(psl11.branch == "doubly transitive");

  auto composite = burnside_spot_check(symmetric_group(4));
  CHECK_FALSE(composite.preconditions_ok);
}

TEST_CASE("case 1: alternating socle") {
  auto report = check_case(1);
  CHECK(report.passed);
  REQUIRE(report.solutions.size() == 2);
  CHECK(report.solutions[0].params[0].second == 4);
  CHECK(report.solutions[0].p == 3);
  CHECK(report.solutions[1].params[0].second == 5);
  CHECK(report.solutions[1].p == 5);
}

TEST_CASE("case 2: the point-hyperplane family") {
  auto report = check_case(2);
  CHECK(report.passed);
  // every solution has d = 2, q odd, p = (q+1)/2
  for (const Solution& s : report.solutions) {
    CHECK(s.params[1].second == 2);
    CHECK((s.params[0].second & 1) == 1);
    CHECK(s.p * 2 == s.params[0].second + 1);
  }
  auto has = [&](std::uint64_t q, std::uint64_t p) {
    return std::any_of(report.solutions.begin(), report.solutions.end(), [&](const Solution& s) {
      return s.params[0].second == q && s.p == p;
    });
  };
  CHECK(has(9, 5));
  CHECK(has(13, 7));
  CHECK(has(3, 2));  // the smallest member of the family
}

TEST_CASE("cases with no solutions") {
  for (int id : {3, 4, 5, 6, 7, 10, 11, 12, 13, 16, 17, 18, 19, 20, 21, 22}) {
    auto report = check_case(id);
    CHECK(report.passed);
    CHECK(report.solutions.empty());
  }
}

TEST_CASE("case 10 and 11 record the non-square reductions") {
  auto c10 = check_case(10);
  bool square_note = false;
  for (const auto& note : c10.notes)
    if (note.find("241") != std::string::npos &&
        note.find("not a perfect square") != std::string::npos)
      square_note = true;
  CHECK(square_note);

  auto c11 = check_case(11);
  square_note = false;
  for (const auto& note : c11.notes)
    if (note.find("97") != std::string::npos) square_note = true;
  CHECK(square_note);
}

TEST_CASE("case 12 notes the congruence near-miss") {
  auto report = check_case(12);
  CHECK(report.passed);
  bool near_miss = false;
  for (const auto& note : report.notes)
    if (note.find("q = 7") != std::string::npos) near_miss = true;
  CHECK(near_miss);
}

TEST_CASE("cases 14 and 15 force q^d = 4") {
  auto c14 = check_case(14);
  CHECK(c14.passed);
  REQUIRE(c14.solutions.size() == 2);
  for (const Solution& s : c14.solutions) CHECK((s.n == 6 || s.n == 10));

  auto c15 = check_case(15);
  CHECK(c15.passed);
  REQUIRE(c15.solutions.size() == 1);
  CHECK(c15.solutions[0].n == 10);
  CHECK(c15.solutions[0].p == 5);
}

TEST_CASE("case 8 and 9 solutions") {
  auto c8 = check_case(8);
  CHECK(c8.passed);
  CHECK(c8.solutions.size() == 4);
  auto c9 = check_case(9);
  CHECK(c9.passed);
  REQUIRE(c9.solutions.size() == 1);
  CHECK(c9.solutions[0].params[0].second == 4);
  CHECK(c9.solutions[0].p == 5);
}

TEST_CASE("case 21 parity and case 23 degree list") {
  auto c21 = check_case(21);
  CHECK(c21.passed);
  bool parity_note = false;
  for (const auto& note : c21.notes)
    if (note.find("odd") != std::string::npos) parity_note = true;
  CHECK(parity_note);

  auto c23 = check_case(23);
  CHECK(c23.passed);
  REQUIRE(c23.solutions.size() == 1);
  CHECK(c23.solutions[0].n == 22);
  CHECK(c23.solutions[0].p == 11);
}

TEST_CASE("all cases pass at the default bounds") {
  auto reports = check_all_cases();
  CHECK(reports.size() == 23);
  CHECK(all_passed(reports));
  for (const auto& report : reports) CHECK(solutions_satisfy_equations(report));
}

TEST_CASE("bounds too small is reported, not silently passed") {
  Bounds tiny;
  tiny.qmax = 4;
  auto reports = check_all_cases(tiny);
  CHECK_FALSE(all_passed(reports));
  auto c2 = check_case(2, tiny);
  CHECK_FALSE(c2.passed);
  CHECK_FALSE(c2.bounds_sufficient);
  auto c8 = check_case(8, tiny);
  CHECK_FALSE(c8.passed);
  CHECK_FALSE(c8.bounds_sufficient);
}

TEST_CASE("a deliberately wrong expectation fails the aggregate") {
  auto reports = check_all_cases();
  REQUIRE(all_passed(reports));
  // injecting a bogus solution into a passing report must flip the verdict
  reports[9].solutions.push_back(
      Solution{{{"q", BigInt(11)}}, BigInt(22), BigInt(11)});
  reports[9].passed = reports[9].solutions.empty();
  CHECK_FALSE(all_passed(reports));
}

TEST_CASE("unknown case ids are rejected") {
  CHECK_THROWS_AS(check_case(0), std::invalid_argument);
  CHECK_THROWS_AS(check_case(24), std::invalid_argument);
}
