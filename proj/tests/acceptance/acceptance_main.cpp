// Acceptance suite: exercises the shipped CLI end to end and prints one
// PASS/FAIL line per criterion. Invoke with the cmred binary path as argv[1].

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cmred/cm_types.hpp"
#include "cmred/output.hpp"
#include "cmred/pipeline.hpp"
#include "golden_tables.hpp"
#include "oracles.hpp"

using namespace cmred;
using Clock = std::chrono::steady_clock;

namespace {

std::string g_tool;
int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << criterion << ": "
            << detail << "\n";
  if (!pass) ++g_failures;
}

struct CliResult {
  int exit_code = -1;
  std::string output;
  double seconds = 0.0;
};

CliResult run_cli(const std::string& args, const std::string& env = "") {
  const std::string command = env + (env.empty() ? "" : " ") + g_tool + " " +
                              args + " 2>/dev/null";
  const auto start = Clock::now();
  FILE* pipe = popen(command.c_str(), "r");
  CliResult result;
  if (!pipe) return result;
  std::array<char, 4096> buffer;
  std::size_t n = 0;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return result;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.2fs", s);
  return buffer;
}

// ---- criterion 1: classification tables ------------------------------------

void criterion_1() {
  const std::size_t expected_counts[] = {2, 1, 2, 3, 6};
  bool pass = true;
  std::string detail;
  double total = 0.0;
  for (std::uint32_t g = 1; g <= 5; ++g) {
    const CliResult cli =
        run_cli("classify --g " + std::to_string(g) + " --format json");
    total += cli.seconds;
    if (cli.exit_code != 0) {
      pass = false;
      detail = "classify --g " + std::to_string(g) + " failed";
      break;
    }
    const auto doc = nlohmann::json::parse(cli.output);
    const auto& entries = doc.at("entries");
    if (entries.size() != expected_counts[g - 1]) {
      pass = false;
      detail = "classify --g " + std::to_string(g) + " emitted " +
               std::to_string(entries.size()) + " pieces";
      break;
    }
    const auto& golden_rows = golden::classification(g);
    for (std::size_t i = 0; i < entries.size(); ++i) {
      std::set<std::string> got;
      for (const auto& w : entries[i].at("words"))
        got.insert(CircularWord::parse(w.get<std::string>()).text());
      std::set<std::string> want;
      for (const std::string& raw : golden_rows[i].words)
        want.insert(CircularWord::from_letters(raw).text());
      if (got != want || entries[i].at("name") != golden_rows[i].name ||
          entries[i].at("a").get<std::uint32_t>() != golden_rows[i].a) {
        pass = false;
        detail = "classify --g " + std::to_string(g) + " row " +
                 std::to_string(i) + " disagrees";
      }
    }
    if (!pass) break;
  }
  if (pass && total >= 1.0) {
    pass = false;
    detail = "runtime " + fmt_seconds(total) + " exceeds 1s";
  }
  if (pass)
    detail = "classification tables g=1..5 match, word for word (" +
             fmt_seconds(total) + ")";
  report(1, pass, detail);
}

// ---- criterion 2: the worked example ---------------------------------------

void criterion_2(std::set<InvariantPair>& collected_pairs) {
  const CliResult cli = run_cli(
      "reduce --group builtin:G40_12 --g 5 --format json", "CMRED_THREADS=1");
  bool pass = cli.exit_code == 0;
  std::string detail = "reduce failed";
  if (pass) {
    const auto records = parse_records_json(cli.output);
    std::map<std::string, std::set<std::string>> produced;
    for (const ParsedRecord& record : records) {
      WordMultiset m;
      for (const std::string& w : record.words)
        m.add(CircularWord::parse(w));
      produced[record.signature].insert(m.canonical_text());
      collected_pairs.insert(
          {record.p_rank, record.a_number, record.alpha, record.beta});
    }
    std::map<std::string, std::set<std::string>> expected;
    for (const golden::WordRow& row : golden::g40_word_table())
      for (const auto& spellings : row.multisets) {
        WordMultiset m;
        for (const std::string& raw : spellings)
          m.add(CircularWord::from_letters(raw));
        expected[row.signature].insert(m.factored().canonical_text());
      }
    pass = produced == expected;
    detail = pass ? "worked-example table reproduced (8 signatures, " +
                        std::to_string(records.size()) + " records, " +
                        fmt_seconds(cli.seconds) + " single-threaded)"
                  : "worked-example table disagrees";
    if (pass && cli.seconds >= 30.0) {
      pass = false;
      detail = "runtime " + fmt_seconds(cli.seconds) + " exceeds 30s";
    }
  }
  report(2, pass, detail);
}

// ---- criterion 3: low-dimension tables -------------------------------------

using PieceList = std::vector<std::pair<std::string, std::uint32_t>>;

struct Row {
  std::string signature;
  PieceList pieces;
  std::uint32_t f;
  std::uint32_t a;

  friend bool operator<(const Row& x, const Row& y) {
    return std::tie(x.signature, x.pieces, x.f, x.a) <
           std::tie(y.signature, y.pieces, y.f, y.a);
  }
  friend bool operator==(const Row& x, const Row& y) {
    return std::tie(x.signature, x.pieces, x.f, x.a) ==
           std::tie(y.signature, y.pieces, y.f, y.a);
  }
};

std::set<Row> union_rows(const std::vector<std::string>& specs,
                         std::uint32_t g, std::set<InvariantPair>* pairs) {
  std::set<Row> rows;
  for (const std::string& spec : specs) {
    RunOptions options;
    options.g = g;
    for (const CorrespondenceRecord& record :
         compute_correspondences(build_group(spec), options)) {
      PieceList pieces;
      for (const NamedPiece& piece : record.pieces)
        pieces.emplace_back(piece.name.base_text(), piece.multiplicity);
      std::sort(pieces.begin(), pieces.end());
      rows.insert(Row{record.signature.label(), std::move(pieces),
                      record.p_rank, record.a_number});
      if (pairs)
        pairs->insert({record.p_rank, record.a_number,
                       record.signature.alpha, record.signature.beta});
    }
  }
  return rows;
}

std::set<Row> golden_rows(const std::vector<golden::SchemeRow>& table) {
  std::set<Row> rows;
  for (const golden::SchemeRow& row : table) {
    PieceList pieces = row.pieces;
    std::sort(pieces.begin(), pieces.end());
    rows.insert(Row{row.signature, std::move(pieces), row.f, row.a});
  }
  return rows;
}

void criterion_3(std::set<InvariantPair>& collected_pairs) {
  const auto start = Clock::now();
  const bool dim1 = union_rows({"cyclic:2"}, 1, &collected_pairs) ==
                    golden_rows(golden::dimension1());
  const bool dim2 = union_rows({"cyclic:4", "dihedral:8"}, 2,
                               &collected_pairs) ==
                    golden_rows(golden::dimension2());
  const bool dim3 =
      union_rows({"cyclic:6", "dihedral:12", "product:alternating:4,cyclic:2",
                  "wreath-c2:symmetric:3"},
                 3, &collected_pairs) == golden_rows(golden::dimension3());
  const double elapsed = seconds_since(start);
  bool pass = dim1 && dim2 && dim3 && elapsed < 120.0;
  std::string detail =
      std::string("dimension tables: 1 ") + (dim1 ? "ok" : "BAD") + ", 2 " +
      (dim2 ? "ok" : "BAD") + ", 3 " + (dim3 ? "ok" : "BAD") + " (" +
      fmt_seconds(elapsed) + ")";
  report(3, pass, detail);
}

// ---- criterion 4: reference-table consistency ------------------------------

void criterion_4(const std::set<InvariantPair>& collected_pairs) {
  const auto start = Clock::now();
  bool pass = true;
  std::string complaint;

  std::set<InvariantPair> pairs = collected_pairs;
  RunOptions options;
  options.g = 4;
  options.subgroup_cap = 500;
  for (const CorrespondenceRecord& record : compute_correspondences(
           build_group("wreath-c2:symmetric:4"), options))
    pairs.insert({record.p_rank, record.a_number, record.signature.alpha,
                  record.signature.beta});

  for (const InvariantPair& pair : pairs)
    if (!is_admissible_pair(pair)) {
      pass = false;
      complaint = " pair (f=" + std::to_string(pair.p_rank) + ",a=" +
                  std::to_string(pair.a_number) + ")->(" +
                  std::to_string(pair.alpha) + "," +
                  std::to_string(pair.beta) + ") is outside the table";
    }

  // coverage: every pair of the dimension 1-3 tables appears
  for (const auto& [f, a, alpha, beta] : golden::low_dimension_pairs())
    if (pairs.count({f, a, alpha, beta}) == 0) {
      pass = false;
      complaint = " low-dimension pair missing";
    }

  const double elapsed = seconds_since(start);
  if (elapsed >= 1800.0) {
    pass = false;
    complaint = " runtime " + fmt_seconds(elapsed) + " exceeds 30min";
  }
  report(4, pass,
         "all " + std::to_string(pairs.size()) +
             " pairs admissible, low-dimension coverage complete (" +
             fmt_seconds(elapsed) + ")" + complaint);
}

// ---- criterion 5: oracle equivalences --------------------------------------

void criterion_5() {
  // (a) least rotation vs the naive scan
  std::mt19937 rng(2024);
  std::size_t mismatches = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t length = 1 + rng() % 20;
    std::string raw(length, 'F');
    for (char& c : raw)
      if (rng() & 1) c = 'V';
    if (CircularWord::from_letters(raw).text() !=
        oracles::naive_least_rotation(raw))
      ++mismatches;
  }
  report(5, mismatches == 0,
         "(a) canonicalization vs naive oracle: " +
             std::to_string(mismatches) + " mismatches in 10000 words");

  // (b) aperiodic enumeration vs the exhaustive scan
  bool enum_ok = true;
  for (std::size_t n = 1; n <= 12; ++n) {
    std::set<std::string> generated;
    for (const CircularWord& w : aperiodic_classes(n))
      generated.insert(w.text());
    if (generated != oracles::exhaustive_aperiodic_classes(n)) enum_ok = false;
  }
  report(5, enum_ok, "(b) aperiodic enumeration equals the 2^n scan, n <= 12");

  // (c) stabilizer vs fiber primitivity, (d) orbit vs partition counts
  bool primitivity_ok = true;
  bool cosets_ok = true;
  const char* const specs[] = {
      "cyclic:2",   "cyclic:4",    "cyclic:6",
      "dihedral:8", "dihedral:12", "product:alternating:4,cyclic:2",
      "wreath-c2:symmetric:3"};
  for (const char* spec : specs) {
    const FiniteGroup g = build_group(spec).group;
    for (std::size_t m = 1; m <= g.order(); ++m) {
      if (g.order() % m != 0) continue;
      for (const FiniteGroup& h : subgroups_of_order(g, m)) {
        const CosetSpace space(g, h);
        for (const Permutation& sigma : g.elements())
          if (orbit_count(space, CosetAction::LeftMultiplication, sigma) !=
              oracles::double_coset_count(g, h, sigma))
            cosets_ok = false;
        if (g.order() / m > 8) continue;  // CM-type scan bound
        for (const Permutation& iota : central_involutions(g)) {
          if (h.contains(iota)) continue;
          for (const CMType& type : enumerate_cm_types(space, iota))
            if (is_primitive(space, type) !=
                !oracles::fiber_imprimitive(space, type))
              primitivity_ok = false;
        }
      }
    }
  }
  report(5, primitivity_ok,
         "(c) stabilizer and overgroup-fiber primitivity verdicts agree on "
         "all CM data of the order <= 48 catalog");
  report(5, cosets_ok,
         "(d) orbit counts equal the explicit double-coset partition on all "
         "(subgroup, element) pairs of the order <= 48 catalog");
}

// ---- criterion 6: property suite -------------------------------------------

void criterion_6() {
  bool pass = true;
  std::string complaint;
  const std::pair<const char*, std::uint32_t> runs[] = {
      {"cyclic:2", 1}, {"cyclic:4", 2}, {"dihedral:8", 2},
      {"cyclic:6", 3}, {"dihedral:12", 3},
      {"product:alternating:4,cyclic:2", 3},
      {"wreath-c2:symmetric:3", 3}, {"builtin:G40_12", 5}};
  for (const auto& [spec, g] : runs) {
    RunOptions options;
    options.g = g;
    WordMultiset aggregate;
    bool identity_row = false;
    for (const CorrespondenceRecord& record :
         compute_correspondences(build_group(spec), options)) {
      if (record.words.total_length() != 2 * record.g) pass = false;
      if (record.signature.beta > record.signature.alpha ||
          record.signature.alpha > 2 * record.signature.beta)
        pass = false;
      for (const auto& [w, mult] : record.words.entries())
        aggregate.add(w, mult);
      WordMultiset expected;
      expected.add(CircularWord::from_letters("F"), g);
      expected.add(CircularWord::from_letters("V"), g);
      if (record.signature.alpha == 2 * g && record.signature.beta == g &&
          record.words == expected && record.p_rank == g &&
          record.a_number == 0)
        identity_row = true;
    }
    if (!aggregate.is_self_dual()) {
      pass = false;
      complaint = " aggregate multiset not dual-closed for " +
                  std::string(spec);
    }
    if (!identity_row) {
      pass = false;
      complaint = " identity row missing for " + std::string(spec);
    }
  }
  report(6, pass,
         "word-length, signature, dual-closure and identity-row properties "
         "hold on every catalog run" +
             complaint);
}

// ---- criterion 7: determinism ----------------------------------------------

void criterion_7() {
  const std::string args =
      "reduce --group builtin:G40_12 --g 5 --format json";
  const CliResult first = run_cli(args, "CMRED_THREADS=1");
  const CliResult second = run_cli(args, "CMRED_THREADS=1");
  const CliResult threaded = run_cli(args, "CMRED_THREADS=4");
  const CliResult threaded_again = run_cli(args, "CMRED_THREADS=4");
  bool pass = first.exit_code == 0 && !first.output.empty() &&
              first.output == second.output &&
              threaded.output == threaded_again.output;
  // the record payload is also independent of the thread count
  if (pass) {
    auto strip_meta = [](const std::string& doc) {
      auto parsed = nlohmann::json::parse(doc);
      parsed["meta"].erase("flags");
      return parsed.dump();
    };
    pass = strip_meta(first.output) == strip_meta(threaded.output);
  }
  report(7, pass,
         "byte-identical stdout across repeated runs, single- and "
         "multi-threaded");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cmred_acceptance <path-to-cmred>\n";
    return 2;
  }
  g_tool = argv[1];

  std::set<InvariantPair> pairs;
  criterion_1();
  criterion_2(pairs);
  criterion_3(pairs);
  criterion_4(pairs);
  criterion_5();
  criterion_6();
  criterion_7();

  if (g_failures == 0) {
    std::cout << "acceptance: all criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << g_failures << " criterion/criteria FAILED\n";
  return 1;
}
