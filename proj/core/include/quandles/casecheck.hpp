#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quandles/perm_group.hpp"
#include "quandles/primes.hpp"

namespace quandles::casecheck {

/// Scan box for the degree-equation cases.  Defaults are wide enough that
/// every known solution lies strictly inside.
struct Bounds {
  std::uint64_t qmax = 1000;    // prime powers q
  int dmax = 20;                // dimension-like exponents d
  std::uint64_t cmax = 1000000; // the alternating case's c
  int mmax = 20;                // q = 2^(2m+1) / 3^(2m+1) exponents
};

struct Solution {
  std::vector<std::pair<std::string, BigInt>> params;
  BigInt n;  // degree
  BigInt p;  // the prime with n = 2p

  bool operator==(const Solution& other) const {
    return params == other.params && n == other.n && p == other.p;
  }
};

enum class Expectation {
  NoSolutions,   // the scan must come back empty
  ExactSet,      // the scan must find exactly the listed solutions
  FamilyD2,      // case 2: every solution has d = 2 and p = (q+1)/2
};

struct CaseReport {
  int id = 0;
  std::string title;
  std::string equation;
  Bounds bounds;
  Expectation expectation = Expectation::NoSolutions;
  std::vector<Solution> solutions;
  std::vector<Solution> expected_solutions;  // ExactSet / required family members
  bool bounds_sufficient = true;  // box contains every expected solution
  bool passed = false;
  std::vector<std::string> notes;
};

/// Scans one numbered case (1..23) over the box: exact integer arithmetic,
/// the case's side conditions, and a verdict against the expected outcome.
CaseReport check_case(int id, const Bounds& bounds = {});

std::vector<CaseReport> check_all_cases(const Bounds& bounds = {});

bool all_passed(const std::vector<CaseReport>& reports);

/// Re-substitutes every reported solution into the case's degree equation;
/// used by the self-check suite.
bool solutions_satisfy_equations(const CaseReport& report);

/// PSL(2, q) in its natural action on the q + 1 points of the projective
/// line, for a prime power q (points 0..q-1 are the field, point q is the
/// point at infinity).  Generated by x -> x+1, x -> sx (s spanning the
/// square class) and x -> -1/x.
PermGroup psl2_projective_action(std::uint64_t q);

/// Order q(q^2-1)/gcd(2, q-1) of PSL(2, q).
Integer psl2_order(std::uint64_t q);

struct StabilizerCenterReport {
  std::uint64_t q = 0;
  int degree = 0;
  std::uint64_t p = 0;  // (q+1)/2
  bool p_prime = false;
  Integer group_order;
  Integer stabilizer_order;
  Integer center_order;
  bool center_trivial = false;
  bool passed = false;
  std::vector<std::string> notes;
};

/// The point-stabilizer centre test in the degree-(q+1) projective action:
/// a stabilizer with trivial centre cannot be the centralizer of a class
/// element, so no order-2p conjugation quandle arises from this group.
StabilizerCenterReport stabilizer_center_check(std::uint64_t q);

struct BurnsideReport {
  int degree = 0;
  Integer order;
  bool preconditions_ok = false;
  bool soluble = false;
  bool two_transitive = false;
  bool passed = false;
  std::string branch;  // which alternative held
  std::vector<std::string> notes;
};

/// A transitive group of prime degree must be soluble or doubly transitive.
BurnsideReport burnside_spot_check(const PermGroup& g);

}  // namespace quandles::casecheck
