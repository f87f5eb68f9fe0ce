#include "quandles/io.hpp"

#include <fstream>
#include <sstream>

namespace quandles {

namespace {

// Strips comments and whitespace; returns false when the stream is done.
bool next_content_line(std::istream& in, std::string& line, int& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto is_blank = line.find_first_not_of(" \t\r\n") == std::string::npos;
    if (!is_blank) return true;
  }
  return false;
}

}  // namespace

PermGroup read_group(std::istream& in) {
  std::string line;
  int line_no = 0;
  if (!next_content_line(in, line, line_no)) throw ParseError("empty group file", line_no);
  std::istringstream header(line);
  std::string keyword;
  int degree = 0;
  header >> keyword >> degree;
  if (keyword != "degree" || degree < 1)
    throw ParseError("expected header 'degree N'", line_no);
  std::vector<Perm> gens;
  while (next_content_line(in, line, line_no)) {
    std::istringstream row(line);
    std::string tag;
    row >> tag;
    try {
      if (tag == "img:") {
        std::vector<int> images;
        int v;
        while (row >> v) images.push_back(v);
        if (static_cast<int>(images.size()) != degree)
          throw ParseError("image sequence has wrong length", line_no);
        gens.push_back(Perm(std::move(images)));
      } else if (tag == "cyc:") {
        std::string rest;
        std::getline(row, rest);
        gens.push_back(parse_cycles(degree, rest));
      } else {
        throw ParseError("expected 'img:' or 'cyc:' generator line", line_no);
      }
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  if (gens.empty()) throw ParseError("group file has no generators", line_no);
  return PermGroup(degree, std::move(gens));
}

PermGroup read_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  return read_group(in);
}

void write_group(std::ostream& out, const PermGroup& g) {
  out << "degree " << g.degree() << "\n";
  for (const Perm& gen : g.generators()) out << "cyc: " << gen.to_cycle_string() << "\n";
}

std::pair<int, std::vector<int>> read_quandle_table(std::istream& in) {
  std::string line;
  int line_no = 0;
  if (!next_content_line(in, line, line_no)) throw ParseError("empty quandle file", line_no);
  std::istringstream header(line);
  std::string keyword;
  int order = 0;
  header >> keyword >> order;
  if (keyword != "quandle" || order < 1)
    throw ParseError("expected header 'quandle N'", line_no);
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(order) * order);
  for (int r = 0; r < order; ++r) {
    if (!next_content_line(in, line, line_no))
      throw ParseError("table row missing", line_no);
    std::istringstream row(line);
    int v;
    int count = 0;
    while (row >> v) {
      flat.push_back(v);
      ++count;
    }
    if (count != order) {
      std::ostringstream msg;
      msg << "row has " << count << " entries, expected " << order;
      throw ParseError(msg.str(), line_no);
    }
  }
  return {order, std::move(flat)};
}

std::pair<int, std::vector<int>> read_quandle_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  return read_quandle_table(in);
}

Quandle read_quandle_file(const std::string& path) {
  auto [order, flat] = read_quandle_table_file(path);
  auto result = validate_flat(order, std::move(flat));
  if (auto* violation = std::get_if<AxiomViolation>(&result))
    throw std::invalid_argument(violation->message);
  return std::get<Quandle>(std::move(result));
}

void write_quandle(std::ostream& out, const Quandle& q, const std::string& comment) {
  if (!comment.empty()) out << "# " << comment << "\n";
  out << "quandle " << q.order() << "\n";
  for (int a = 0; a < q.order(); ++a) {
    for (int b = 0; b < q.order(); ++b) {
      if (b) out << ' ';
      out << q.entry(a, b);
    }
    out << "\n";
  }
}

void write_quandle_file(const std::string& path, const Quandle& q, const std::string& comment) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path + " for writing", 0);
  write_quandle(out, q, comment);
}

}  // namespace quandles
