#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quandles/quandle.hpp"

namespace quandles::enumeration {

struct SearchOptions {
  int max_order = 14;   // orders past this are refused unless raised explicitly
  int jobs = 1;         // worker threads; output is identical for any value
  /// Restrict candidate columns to rho_0's cycle type and enforce the
  /// fix-count regularity of connected quandles; sound for the connected
  /// enumeration this module performs.
  bool prune_types = true;
  bool keep_tables = true;
};

struct SearchStats {
  std::uint64_t nodes = 0;           // branch candidates tried
  std::uint64_t contradictions = 0;  // branches cut by propagation
  std::uint64_t leaves = 0;          // completed valid tables
  std::uint64_t connected_leaves = 0;

  SearchStats& operator+=(const SearchStats& other) {
    nodes += other.nodes;
    contradictions += other.contradictions;
    leaves += other.leaves;
    connected_leaves += other.connected_leaves;
    return *this;
  }
};

struct EnumerationResult {
  int order = 0;
  /// Canonical forms, sorted, pairwise distinct (hence pairwise non-isomorphic).
  std::vector<Quandle> tables;
  std::uint64_t count = 0;
  SearchStats stats;
  /// Informational only; never part of the deterministic report payload.
  double wall_seconds = 0.0;
  std::vector<std::string> notes;
};

/// Complete duplicate-free enumeration of the connected quandles of order n
/// up to isomorphism.  Backtracks over right-translation columns: rho_0 runs
/// over one representative per cycle type, Q2 is enforced as the conjugation
/// identity rho_{a <| b} = rho_b^-1 rho_a rho_b, which forces whole columns
/// at once, and leaves are deduplicated by canonical form.
EnumerationResult connected_quandles(int n, const SearchOptions& opts = {});

/// Count-only mode of connected_quandles.
std::uint64_t count_connected(int n, const SearchOptions& opts = {});

/// Independent oracle for n <= 5: enumerates all (n-1)!^n column tuples
/// with rho_b(b) = b, filters by Q2, keeps the connected tables, and
/// classifies them up to isomorphism.  Shares nothing with the main search
/// beyond validate and canonical_form.
EnumerationResult brute_force_oracle(int n);

struct Verify2pReport {
  int p = 0;
  int order = 0;
  bool preconditions_ok = false;
  std::uint64_t count = 0;
  std::optional<std::uint64_t> expected_count;
  bool count_matches = false;
  /// p = 5 only: the single quandle is the transposition class of S_5.
  std::optional<bool> isomorphic_to_transposition_quandle;
  /// Every connected quandle of order 2p found is simple (checked for p > 3).
  std::optional<bool> all_simple;
  bool theorem_asserted = false;  // false for p <= 3: hypothesis p > 3 fails
  bool passed = false;
  std::vector<std::string> notes;
  EnumerationResult enumeration;
};

/// Enumerates order 2p and checks it against the expected picture: exactly
/// one connected quandle for p = 5 (the S_5 transposition quandle), none for
/// larger primes in range, and every hit simple.
Verify2pReport verify_2p(int p, const SearchOptions& opts = {});

}  // namespace quandles::enumeration
