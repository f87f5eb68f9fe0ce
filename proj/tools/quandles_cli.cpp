// Command-line front end for the quandle toolkit: file I/O, analysis,
// construction, enumeration, and the degree-equation case scans.
//
// Exit codes: 0 success/verified, 1 verification failed, 2 input malformed,
// 3 axiom violation, 4 resource bound exceeded.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "quandles/casecheck.hpp"
#include "quandles/enumerate.hpp"
#include "quandles/io.hpp"
#include "quandles/quandle.hpp"
#include "quandles/quandle_iso.hpp"
#include "quandles/standard_groups.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace quandles;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kInputError = 2;
constexpr int kAxiomViolation = 3;
constexpr int kBoundExceeded = 4;

constexpr const char* kSchema = "quandles-report/1";

void emit(const json& doc, bool as_json) {
  if (as_json) std::cout << doc.dump(2) << "\n";
}

std::string order_str(const Integer& value) { return value.str(); }

json quandle_to_json(const Quandle& q) {
  json rows = json::array();
  for (int a = 0; a < q.order(); ++a) rows.push_back(q.row(a));
  return rows;
}

int load_quandle(const std::string& path, bool as_json, const char* command,
                 std::optional<Quandle>& out) {
  std::pair<int, std::vector<int>> raw;
  try {
    raw = read_quandle_table_file(path);
  } catch (const ParseError& e) {
    json doc{{"schema", kSchema}, {"command", command}, {"error", e.what()}, {"line", e.line}};
    emit(doc, as_json);
    std::cerr << "parse error (line " << e.line << "): " << e.what() << "\n";
    return kInputError;
  }
  auto result = validate_flat(raw.first, std::move(raw.second));
  if (auto* violation = std::get_if<AxiomViolation>(&result)) {
    json doc{{"schema", kSchema},
             {"command", command},
             {"valid", false},
             {"violation", violation->message}};
    emit(doc, as_json);
    std::cerr << violation->message << "\n";
    return violation->kind == AxiomViolation::Kind::Malformed ? kInputError : kAxiomViolation;
  }
  out = std::get<Quandle>(std::move(result));
  return kOk;
}

int cmd_validate(const std::string& path, bool as_json) {
  std::optional<Quandle> q;
  int status = load_quandle(path, as_json, "validate", q);
  if (status != kOk) return status;
  json doc{{"schema", kSchema}, {"command", "validate"}, {"valid", true}, {"order", q->order()}};
  emit(doc, as_json);
  if (!as_json) std::cout << "valid quandle of order " << q->order() << "\n";
  return kOk;
}

int cmd_analyze(const std::string& path, bool as_json) {
  std::optional<Quandle> maybe;
  int status = load_quandle(path, as_json, "analyze", maybe);
  if (status != kOk) return status;
  const Quandle& q = *maybe;

  PermGroup g = inn(q);
  bool connected = g.is_transitive();
  bool simple = is_simple(q);
  json doc{{"schema", kSchema}, {"command", "analyze"}, {"order", q.order()}};
  doc["inn_order"] = order_str(g.order());
  doc["connected"] = connected;
  doc["simple"] = simple;

  std::ostringstream text;
  text << "order:      " << q.order() << "\n";
  text << "|Inn|:      " << g.order() << "\n";
  text << "connected:  " << (connected ? "yes" : "no") << "\n";
  text << "simple:     " << (simple ? "yes" : "no") << "\n";

  if (connected && q.order() > 1) {
    bool primitive = is_primitive_quandle(q);
    doc["primitive"] = primitive;
    text << "primitive:  " << (primitive ? "yes" : "no") << "\n";
  }

  if (connected && !simple && q.order() > 1) {
    // witness: the first pair whose generated congruence is proper
    bool found = false;
    for (int a = 0; a < q.order() && !found; ++a)
      for (int b = a + 1; b < q.order() && !found; ++b) {
        Partition p = congruence_generated(q, {{a, b}});
        if (p.is_full()) continue;
        found = true;
        auto [quot, hom] = quotient(q, p);
        json classes = json::array();
        for (const auto& cls : p.classes()) classes.push_back(cls);
        doc["witness_congruence"] = classes;
        doc["quotient_order"] = quot.order();
        doc["quotient_table"] = quandle_to_json(quot);
        text << "witness congruence: {";
        bool first_class = true;
        for (const auto& cls : p.classes()) {
          if (!first_class) text << " | ";
          first_class = false;
          for (std::size_t i = 0; i < cls.size(); ++i) text << (i ? " " : "") << cls[i];
        }
        text << "}\n";
        text << "quotient:   connected quandle of order " << quot.order() << "\n";
      }
  }

  if (simple) {
    SimpleStructureReport report = simple_structure_report(q);
    json structure;
    structure["hypothesis_met"] = report.hypothesis_met;
    if (!report.hypothesis_note.empty()) structure["note"] = report.hypothesis_note;
    if (report.hypothesis_met) {
      structure["center_trivial"] = report.center_trivial;
      structure["rho_injective"] = report.rho_injective;
      structure["single_conjugacy_class"] = report.single_conjugacy_class;
      structure["class_generates"] = report.class_generates;
      structure["equivariance_ok"] = report.equivariance_ok;
      text << "structure:  " << (report.all_passed() ? "all checks pass" : "CHECKS FAILED")
           << " (centre trivial, rho injective, single generating class, equivariance)\n";
    } else {
      text << "structure:  " << report.hypothesis_note << "\n";
    }
    doc["structure"] = structure;
  }

  emit(doc, as_json);
  if (!as_json) std::cout << text.str();
  return kOk;
}

int cmd_construct(const std::string& kind, const std::vector<std::string>& params,
                  const std::string& out_path, const std::string& group_path,
                  const std::string& element, const std::string& word, bool canonical,
                  bool as_json) {
  std::optional<Quandle> q;
  std::string description;
  try {
    if (kind == "trivial" || kind == "dihedral") {
      if (params.size() != 1) throw std::invalid_argument(kind + " takes one parameter: n");
      int n = std::stoi(params[0]);
      q = kind == "trivial" ? trivial_quandle(n) : dihedral_quandle(n);
      description = kind + " quandle of order " + params[0];
    } else if (kind == "alexander") {
      if (params.size() != 2) throw std::invalid_argument("alexander takes parameters: m t");
      int m = std::stoi(params[0]);
      int t = std::stoi(params[1]);
      q = alexander_quandle(m, t);
      description = "alexander quandle on Z_" + params[0] + " with t = " + params[1];
    } else if (kind == "conj-class") {
      std::string group_file = group_path;
      if (group_file.empty() && params.size() == 1) group_file = params[0];
      if (group_file.empty())
        throw std::invalid_argument("conj-class needs a group file (positional or --group)");
      PermGroup g = read_group_file(group_file);
      Perm x(g.degree());
      if (!element.empty()) {
        x = parse_cycles(g.degree(), element);
      } else if (!word.empty()) {
        std::istringstream in(word);
        int index;
        bool any = false;
        while (in >> index) {
          if (index < 0 || index >= static_cast<int>(g.generators().size()))
            throw std::invalid_argument("generator index out of range in --word");
          x = x * g.generators()[index];
          any = true;
        }
        if (!any) throw std::invalid_argument("--word must list generator indices");
      } else {
        throw std::invalid_argument("conj-class needs --element or --word");
      }
      auto built = conjugation_class_quandle(g, x);
      q = built.quandle;
      description = "conjugation quandle of the class of " + x.to_cycle_string();
    } else {
      throw std::invalid_argument("unknown kind: " + kind);
    }
    if (canonical) q = canonical_form(*q);
    write_quandle_file(out_path, *q, description);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  bool connected = is_connected(*q);
  json doc{{"schema", kSchema},   {"command", "construct"},
           {"order", q->order()}, {"connected", connected},
           {"canonical", canonical}, {"output", out_path}};
  emit(doc, as_json);
  if (!as_json)
    std::cout << description << ": order " << q->order()
              << ", connected: " << (connected ? "yes" : "no") << " -> " << out_path << "\n";
  return kOk;
}

int cmd_iso(const std::string& path_a, const std::string& path_b, bool as_json) {
  std::optional<Quandle> a, b;
  int status = load_quandle(path_a, as_json, "iso", a);
  if (status != kOk) return status;
  status = load_quandle(path_b, as_json, "iso", b);
  if (status != kOk) return status;
  auto witness = are_isomorphic(*a, *b);
  json doc{{"schema", kSchema}, {"command", "iso"}, {"isomorphic", witness.has_value()}};
  if (witness) doc["witness"] = witness->map;
  emit(doc, as_json);
  if (!as_json) {
    if (witness) {
      std::cout << "isomorphic; witness map:";
      for (int v : witness->map) std::cout << ' ' << v;
      std::cout << "\n";
    } else {
      std::cout << "not isomorphic\n";
    }
  }
  return witness ? kOk : kVerifyFailed;
}

json enumeration_to_json(const enumeration::EnumerationResult& result, bool with_tables) {
  // wall time is intentionally left out: the machine-readable report is
  // byte-identical across runs and worker counts
  json doc;
  doc["order"] = result.order;
  doc["count"] = result.count;
  doc["nodes"] = result.stats.nodes;
  doc["contradictions"] = result.stats.contradictions;
  doc["leaves"] = result.stats.leaves;
  doc["connected_leaves"] = result.stats.connected_leaves;
  doc["notes"] = result.notes;
  if (with_tables) {
    json tables = json::array();
    for (const Quandle& q : result.tables) tables.push_back(quandle_to_json(q));
    doc["tables"] = tables;
  }
  return doc;
}

void print_enumeration_text(const enumeration::EnumerationResult& result) {
  std::cout << "connected quandles of order " << result.order << ": " << result.count << "\n";
  std::cout << "nodes " << result.stats.nodes << ", contradictions "
            << result.stats.contradictions << ", leaves " << result.stats.leaves << "\n";
  std::cout << "wall time " << result.wall_seconds << " s\n";
  for (const auto& note : result.notes) std::cout << "note: " << note << "\n";
}

int write_bundle(const std::string& dir, const enumeration::EnumerationResult& result) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    std::cerr << "cannot create " << dir << ": " << ec.message() << "\n";
    return kInputError;
  }
  for (std::size_t i = 0; i < result.tables.size(); ++i) {
    std::ostringstream name;
    name << dir << "/quandle_" << result.order << "_" << i << ".quandle";
    std::ostringstream comment;
    comment << "connected quandle " << i << " of order " << result.order << " (canonical form)";
    write_quandle_file(name.str(), result.tables[i], comment.str());
  }
  {
    std::ofstream summary(dir + "/summary.txt");
    summary << "connected quandles of order " << result.order << ": " << result.count << "\n";
    summary << "nodes " << result.stats.nodes << ", contradictions "
            << result.stats.contradictions << ", leaves " << result.stats.leaves << "\n";
    summary << "wall time " << result.wall_seconds << " s\n";
    for (const auto& note : result.notes) summary << "note: " << note << "\n";
  }
  {
    std::ofstream summary(dir + "/summary.json");
    summary << enumeration_to_json(result, false).dump(2) << "\n";
  }
  return kOk;
}

int cmd_enumerate(int n, bool count_only, const std::string& out_dir, int jobs, bool oracle,
                  bool no_prune, int max_order, bool as_json) {
  enumeration::SearchOptions opts;
  opts.jobs = jobs;
  opts.max_order = max_order;
  if (no_prune) opts.prune_types = false;
  enumeration::EnumerationResult result;
  try {
    result = enumeration::connected_quandles(n, opts);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBoundExceeded;
  }

  bool oracle_ok = true;
  if (oracle) {
    if (n > 5) {
      std::cerr << "error: the brute-force oracle supports n <= 5 only\n";
      return kBoundExceeded;
    }
    auto reference = enumeration::brute_force_oracle(n);
    oracle_ok = reference.tables == result.tables;
    result.notes.push_back(oracle_ok ? "oracle cross-check: canonical sets identical"
                                     : "oracle cross-check: MISMATCH");
  }

  if (!out_dir.empty()) {
    int status = write_bundle(out_dir, result);
    if (status != kOk) return status;
  }
  json doc{{"schema", kSchema}, {"command", "enumerate"}};
  doc.update(enumeration_to_json(result, !count_only));
  emit(doc, as_json);
  if (!as_json) print_enumeration_text(result);
  return oracle_ok ? kOk : kVerifyFailed;
}

int cmd_verify_2p(int p, int jobs, int max_order, bool as_json) {
  enumeration::SearchOptions opts;
  opts.jobs = jobs;
  opts.max_order = max_order;
  enumeration::Verify2pReport report = enumeration::verify_2p(p, opts);
  if (!report.preconditions_ok) {
    for (const auto& note : report.notes) std::cerr << note << "\n";
    bool bad_p = p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p));
    return bad_p ? kInputError : kBoundExceeded;
  }
  json doc{{"schema", kSchema}, {"command", "verify-2p"}, {"p", report.p}};
  doc["order"] = report.order;
  doc["count"] = report.count;
  if (report.expected_count) doc["expected_count"] = *report.expected_count;
  doc["count_matches"] = report.count_matches;
  doc["theorem_asserted"] = report.theorem_asserted;
  if (report.isomorphic_to_transposition_quandle)
    doc["isomorphic_to_transposition_quandle"] = *report.isomorphic_to_transposition_quandle;
  if (report.all_simple) doc["all_simple"] = *report.all_simple;
  doc["passed"] = report.passed;
  doc["notes"] = report.notes;
  doc["enumeration"] = enumeration_to_json(report.enumeration, false);
  emit(doc, as_json);
  if (!as_json) {
    std::cout << report.count << " connected quandle" << (report.count == 1 ? "" : "s")
              << " of order " << report.order << "\n";
    if (report.expected_count) std::cout << "expected: " << *report.expected_count << "\n";
    if (report.isomorphic_to_transposition_quandle)
      std::cout << "isomorphic to the S_5 transposition quandle: "
                << (*report.isomorphic_to_transposition_quandle ? "yes" : "NO") << "\n";
    if (report.all_simple)
      std::cout << "all simple: " << (*report.all_simple ? "yes" : "NO") << "\n";
    for (const auto& note : report.notes) std::cout << "note: " << note << "\n";
    std::cout << (report.passed ? "PASS" : "FAIL") << "\n";
  }
  return report.passed ? kOk : kVerifyFailed;
}

json case_report_to_json(const casecheck::CaseReport& report) {
  json doc;
  doc["case"] = report.id;
  doc["title"] = report.title;
  doc["equation"] = report.equation;
  doc["bounds"] = {{"qmax", report.bounds.qmax},
                   {"dmax", report.bounds.dmax},
                   {"cmax", report.bounds.cmax},
                   {"mmax", report.bounds.mmax}};
  json solutions = json::array();
  for (const auto& s : report.solutions) {
    json sol;
    for (const auto& [name, value] : s.params) sol[name] = value.str();
    sol["n"] = s.n.str();
    sol["p"] = s.p.str();
    solutions.push_back(sol);
  }
  doc["solutions"] = solutions;
  doc["bounds_sufficient"] = report.bounds_sufficient;
  doc["passed"] = report.passed;
  doc["notes"] = report.notes;
  return doc;
}

int cmd_casecheck(std::vector<int> ids, const casecheck::Bounds& bounds, bool as_json) {
  if (ids.empty())
    for (int id = 1; id <= 23; ++id) ids.push_back(id);
  std::vector<casecheck::CaseReport> reports;
  for (int id : ids) {
    if (id < 1 || id > 23) {
      std::cerr << "error: case id must be in 1..23\n";
      return kInputError;
    }
    reports.push_back(casecheck::check_case(id, bounds));
  }
  bool all_ok = casecheck::all_passed(reports);
  json doc{{"schema", kSchema}, {"command", "casecheck"}};
  json cases = json::array();
  int passed_count = 0;
  for (const auto& report : reports) {
    cases.push_back(case_report_to_json(report));
    if (report.passed) ++passed_count;
    if (!as_json) {
      std::cout << "case " << report.id << ": " << (report.passed ? "PASS" : "FAIL") << "  "
                << report.title;
      if (!report.solutions.empty()) std::cout << "  [" << report.solutions.size() << " solution"
                                               << (report.solutions.size() == 1 ? "" : "s") << "]";
      std::cout << "\n";
    }
  }
  doc["cases"] = cases;
  doc["passed"] = all_ok;
  emit(doc, as_json);
  if (!as_json)
    std::cout << passed_count << "/" << reports.size() << " cases pass\n";
  return all_ok ? kOk : kVerifyFailed;
}

int cmd_group_info(const std::string& path, bool as_json) {
  PermGroup g = [&]() -> PermGroup {
    try {
      return read_group_file(path);
    } catch (const ParseError& e) {
      std::cerr << "parse error (line " << e.line << "): " << e.what() << "\n";
      std::exit(kInputError);
    }
  }();
  json doc{{"schema", kSchema}, {"command", "group-info"}, {"degree", g.degree()}};
  doc["order"] = order_str(g.order());
  doc["generators"] = static_cast<int>(g.generators().size());
  doc["orbits"] = g.orbits();
  bool transitive = g.is_transitive();
  doc["transitive"] = transitive;
  std::ostringstream text;
  text << "degree:        " << g.degree() << "\n";
  text << "order:         " << g.order() << "\n";
  text << "transitive:    " << (transitive ? "yes" : "no") << "\n";
  if (transitive && g.degree() >= 2) {
    bool two_transitive = g.is_k_transitive(2);
    doc["two_transitive"] = two_transitive;
    text << "2-transitive:  " << (two_transitive ? "yes" : "no") << "\n";
    if (g.degree() >= 3) {
      bool three_transitive = two_transitive && g.is_k_transitive(3);
      doc["three_transitive"] = three_transitive;
      text << "3-transitive:  " << (three_transitive ? "yes" : "no") << "\n";
    }
    bool primitive = g.is_primitive();
    doc["primitive"] = primitive;
    text << "primitive:     " << (primitive ? "yes" : "no") << "\n";
  }
  bool soluble = g.is_soluble();
  doc["soluble"] = soluble;
  text << "soluble:       " << (soluble ? "yes" : "no") << "\n";
  json derived_orders = json::array();
  {
    PermGroup current = g;
    derived_orders.push_back(order_str(current.order()));
    for (;;) {
      PermGroup next = current.derived_subgroup();
      if (next.order() == current.order()) break;
      derived_orders.push_back(order_str(next.order()));
      if (next.order() == 1) break;
      current = next;
    }
  }
  doc["derived_series_orders"] = derived_orders;
  try {
    doc["center_order"] = order_str(g.center().order());
    text << "centre order:  " << doc["center_order"].get<std::string>() << "\n";
  } catch (const EnumerationBoundExceeded&) {
    doc["center_order"] = nullptr;
    text << "centre order:  skipped (order above the enumeration bound)\n";
  }
  emit(doc, as_json);
  if (!as_json) std::cout << text.str();
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite quandle toolkit"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit a machine-readable JSON report");

  std::string path_a, path_b;
  auto* validate_cmd = app.add_subcommand("validate", "decide the quandle axioms for a table file");
  validate_cmd->add_option("file", path_a, "quandle file")->required();

  auto* analyze_cmd = app.add_subcommand("analyze", "one-page dossier for a quandle file");
  analyze_cmd->add_option("file", path_a, "quandle file")->required();

  std::string kind, out_path, group_path, element, word;
  std::vector<std::string> params;
  bool canonical = false;
  auto* construct_cmd = app.add_subcommand("construct", "build a quandle and write it to a file");
  construct_cmd->add_option("kind", kind, "trivial | dihedral | alexander | conj-class")
      ->required();
  construct_cmd->add_option("params", params, "numeric parameters");
  construct_cmd->add_option("-o,--out", out_path, "output file")->required();
  construct_cmd->add_option("--group", group_path, "group file (conj-class)");
  construct_cmd->add_option("--element", element, "class element in cycle notation");
  construct_cmd->add_option("--word", word, "class element as generator indices, e.g. \"0 1\"");
  construct_cmd->add_flag("--canonical", canonical, "write the canonical form");

  auto* iso_cmd = app.add_subcommand("iso", "isomorphism test with witness");
  iso_cmd->add_option("a", path_a, "first quandle file")->required();
  iso_cmd->add_option("b", path_b, "second quandle file")->required();

  int order_n = 0, jobs = 1, max_order = 14, prime_p = 0;
  bool count_only = false, oracle = false, no_prune = false;
  std::string out_dir;
  auto* enum_cmd = app.add_subcommand("enumerate",
                                      "connected quandles of order n up to isomorphism");
  enum_cmd->add_option("n", order_n, "order")->required();
  enum_cmd->add_flag("--count-only", count_only, "omit tables from the report");
  enum_cmd->add_option("--out", out_dir, "write a bundle directory (tables + summaries)");
  enum_cmd->add_option("--jobs", jobs, "worker threads (output is identical for any value)");
  enum_cmd->add_flag("--oracle", oracle, "cross-check against the brute-force oracle (n <= 5)");
  enum_cmd->add_flag("--no-prune", no_prune, "disable search pruning (same output, slower)");
  enum_cmd->add_option("--max-order", max_order, "raise the order bound (default 14)");

  auto* verify_cmd = app.add_subcommand("verify-2p", "enumerate order 2p and check the count");
  verify_cmd->add_option("p", prime_p, "odd prime")->required();
  verify_cmd->add_option("--jobs", jobs, "worker threads");
  verify_cmd->add_option("--max-order", max_order, "raise the order bound (default 14)");

  casecheck::Bounds bounds;
  std::vector<int> case_ids;
  bool all_cases = false;
  auto* case_cmd = app.add_subcommand("casecheck", "degree-equation case scans");
  case_cmd->add_option("--case", case_ids, "case id (1..23); repeatable");
  case_cmd->add_flag("--all", all_cases, "run all 23 cases (default when no --case)");
  case_cmd->add_option("--qmax", bounds.qmax, "prime-power bound (default 1000)");
  case_cmd->add_option("--dmax", bounds.dmax, "dimension bound (default 20)");
  case_cmd->add_option("--cmax", bounds.cmax, "alternating-case bound (default 10^6)");
  case_cmd->add_option("--mmax", bounds.mmax, "exponent bound (default 20)");

  auto* group_cmd = app.add_subcommand("group-info", "dossier for a permutation group file");
  group_cmd->add_option("file", path_a, "group file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate_cmd->parsed()) return cmd_validate(path_a, as_json);
    if (analyze_cmd->parsed()) return cmd_analyze(path_a, as_json);
    if (construct_cmd->parsed())
      return cmd_construct(kind, params, out_path, group_path, element, word, canonical, as_json);
    if (iso_cmd->parsed()) return cmd_iso(path_a, path_b, as_json);
    if (enum_cmd->parsed())
      return cmd_enumerate(order_n, count_only, out_dir, jobs, oracle, no_prune, max_order,
                           as_json);
    if (verify_cmd->parsed()) return cmd_verify_2p(prime_p, jobs, max_order, as_json);
    if (case_cmd->parsed()) return cmd_casecheck(case_ids, bounds, as_json);
    if (group_cmd->parsed()) return cmd_group_info(path_a, as_json);
  } catch (const EnumerationBoundExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBoundExceeded;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
