#pragma once

#include <string>
#include <vector>

#include "quandles/casecheck.hpp"
#include "quandles/perm_group.hpp"
#include "quandles/quandle.hpp"
#include "quandles/standard_groups.hpp"

namespace testsupport {

using namespace quandles;

inline std::string fixture(const std::string& name) {
  return std::string(QUANDLES_FIXTURE_DIR) + "/" + name;
}

inline Quandle table1() {
  return quandle_from_rows({{0, 0, 3, 2, 5, 4},
                            {1, 1, 4, 5, 2, 3},
                            {3, 4, 2, 0, 1, 2},
                            {2, 5, 0, 3, 3, 1},
                            {5, 2, 1, 4, 4, 0},
                            {4, 3, 5, 1, 0, 5}});
}

inline Quandle table2() {
  return quandle_from_rows({{0, 0, 3, 4, 5, 2},
                            {1, 1, 5, 2, 3, 4},
                            {5, 3, 2, 0, 2, 1},
                            {2, 4, 1, 3, 0, 3},
                            {3, 5, 4, 1, 4, 0},
                            {4, 2, 0, 5, 1, 5}});
}

inline Quandle s5_transposition_quandle() {
  return conjugation_class_quandle(symmetric_group(5), perm_from_cycles(5, {{0, 1}})).quandle;
}

inline Quandle a5_five_cycle_quandle() {
  return conjugation_class_quandle(alternating_group(5), perm_from_cycles(5, {{0, 1, 2, 3, 4}}))
      .quandle;
}

/// PSL(2,11) in its doubly transitive degree-11 action on the cosets of an
/// icosahedral subgroup (derived once from the projective action; the point
/// stabilizer is A_5).
inline PermGroup psl2_11_degree11() {
  return PermGroup(11, {perm_unchecked({1, 10, 7, 9, 0, 8, 3, 6, 4, 5, 2}),
                        perm_unchecked({9, 0, 5, 8, 2, 3, 6, 1, 4, 10, 7}),
                        perm_unchecked({1, 0, 4, 3, 2, 8, 6, 9, 5, 7, 10})});
}

/// Deterministic catalog of at least 50 groups across degrees and shapes,
/// used by the orbit-stabilizer and order-oracle property suites.
inline std::vector<PermGroup> group_catalog() {
  std::vector<PermGroup> groups;
  for (int n = 2; n <= 7; ++n) groups.push_back(symmetric_group(n));        // 6
  for (int n = 3; n <= 8; ++n) groups.push_back(alternating_group(n));      // 6
  for (int n = 2; n <= 12; ++n) groups.push_back(cyclic_group(n));          // 11
  for (int n = 3; n <= 12; ++n) groups.push_back(dihedral_group(n));        // 10
  for (int p : {3, 5, 7, 11, 13}) groups.push_back(agl1(p));                // 5
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13})
    groups.push_back(casecheck::psl2_projective_action(q));                 // 9
  // direct products on disjoint points
  groups.push_back(PermGroup(5, {perm_from_cycles(5, {{0, 1}}), perm_from_cycles(5, {{2, 3, 4}})}));
  groups.push_back(PermGroup(6, {perm_from_cycles(6, {{0, 1, 2}}), perm_from_cycles(6, {{3, 4, 5}})}));
  groups.push_back(PermGroup(4, {perm_from_cycles(4, {{0, 1}}), perm_from_cycles(4, {{2, 3}})}));
  // S_4 acting on the 6 unordered pairs of {0,1,2,3}, pairs in lex order
  groups.push_back(PermGroup(6, {perm_unchecked({3, 4, 0, 5, 1, 2}),
                                 perm_unchecked({0, 3, 4, 1, 2, 5})}));
  // inner groups of the order-6 fixtures
  groups.push_back(inn(table1()));
  groups.push_back(inn(table2()));
  return groups;
}

}  // namespace testsupport
