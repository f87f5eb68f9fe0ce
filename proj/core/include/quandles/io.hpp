#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "quandles/perm_group.hpp"
#include "quandles/quandle.hpp"

namespace quandles {

/// Parse failure with a 1-based line number.
struct ParseError : std::runtime_error {
  ParseError(std::string msg, int line) : std::runtime_error(std::move(msg)), line(line) {}
  int line;
};

/// Group file format:
///   line 1:             degree N
///   following lines:    img: i0 i1 ... i(N-1)     (0-based image sequence)
///                       cyc: (a b c)(d e)          (0-based cycles)
///   '#' starts a comment.
PermGroup read_group(std::istream& in);
PermGroup read_group_file(const std::string& path);
void write_group(std::ostream& out, const PermGroup& g);

/// Quandle file format:
///   line 1:             quandle N
///   then N rows of N space-separated 0-based entries; row = left operand.
///   '#' starts a comment.
/// read_quandle_table returns the raw table (possibly invalid as a quandle);
/// read_quandle validates and throws std::invalid_argument on axiom failure.
std::pair<int, std::vector<int>> read_quandle_table(std::istream& in);
std::pair<int, std::vector<int>> read_quandle_table_file(const std::string& path);
Quandle read_quandle_file(const std::string& path);
void write_quandle(std::ostream& out, const Quandle& q, const std::string& comment = "");
void write_quandle_file(const std::string& path, const Quandle& q,
                        const std::string& comment = "");

}  // namespace quandles
