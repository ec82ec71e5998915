#include "kissing/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstddef>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "kissing/closedform.hpp"
#include "kissing/errors.hpp"
#include "kissing/oracle.hpp"
#include "kissing/rowgen.hpp"
#include "kissing/search.hpp"

namespace kissing {
namespace {

using ordered_json = nlohmann::ordered_json;

#ifndef KISSING_VERSION_STRING
#define KISSING_VERSION_STRING "0.0.0"
#endif
constexpr const char* kVersion = KISSING_VERSION_STRING;

// Progress cadence for long scans; small runs finish below it silently.
constexpr u128 kProgressInterval = 5'000'000;

// Budget tiers, as total subset counts over all splits.  The cells of
// the published distance table sort themselves into the tiers this way;
// new cells classify themselves by cost, not by name.
constexpr u128 kFastLimit = 10'000;
constexpr u128 kStandardLimit = 5'000'000;
constexpr u128 kHeavyLimit = 2'100'000'000;

// The published distance table: 1/eps^2 per cell.
struct DistanceCell {
  int d, k;
  const char* inv;
};
constexpr DistanceCell kDistanceTable[] = {
    {3, 1, "6"},     {3, 2, "50"},    {3, 3, "299"},  {3, 4, "1050"},
    {3, 5, "2870"},  {3, 6, "6466"},  {3, 7, "12750"}, {3, 8, "22826"},
    {4, 1, "18"},    {4, 2, "452"},   {4, 3, "8591"},
    {5, 1, "58"},    {6, 1, "202"},
};

// The published row-count table: |L| per cell.
struct RowCountCell {
  int d, k;
  long count;
};
constexpr RowCountCell kRowCountTable[] = {
    {3, 1, 6},    {3, 2, 24},   {3, 3, 72},    {3, 4, 144},  {3, 5, 288},
    {3, 6, 432},  {3, 7, 720},  {3, 8, 1008},  {3, 9, 1440}, {3, 10, 1872},
    {4, 1, 14},   {4, 2, 89},   {4, 3, 359},   {4, 4, 929},  {4, 5, 2189},
    {4, 6, 4019}, {4, 7, 7469}, {4, 8, 11969},
    {5, 1, 30},   {5, 2, 300},  {5, 3, 1620},  {5, 4, 5400}, {5, 5, 15120},
    {6, 1, 62},   {6, 2, 965},  {6, 3, 6971},
    {7, 1, 126},  {7, 2, 3024},
};

int default_workers() {
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

u128 parse_u128_flag(const std::string& text, const char* flag) {
  const std::optional<u128> v = u128_from_string(text);
  if (!v)
    throw CLI::ValidationError(flag, "'" + text +
                                         "' is not an unsigned 128-bit "
                                         "integer");
  return *v;
}

double approx_sqrt(const BigRational& squared) {
  return std::sqrt(squared.to_double());
}

std::ostream& approx_stream(std::ostream& os) {
  os.precision(std::numeric_limits<double>::max_digits10);
  return os;
}

ordered_json witness_json(const SimplexPair& pair) {
  ordered_json w;
  w["P"] = pair.p;
  w["Q"] = pair.q;
  return w;
}

ordered_json stats_json(const SearchStats& s) {
  ordered_json j;
  j["subsets"] = u128_to_string(s.subsets_evaluated);
  j["singular"] = u128_to_string(s.singular_count);
  j["zero"] = u128_to_string(s.zero_count);
  j["seconds"] = s.elapsed_seconds;
  return j;
}

ordered_json report_head(const char* command) {
  ordered_json j;
  j["command"] = command;
  j["version"] = kVersion;
  return j;
}

void print_vertices(std::ostream& out, const char* name,
                    const std::vector<std::vector<int>>& vs) {
  out << name << ":";
  for (const std::vector<int>& v : vs) {
    out << " (";
    for (std::size_t i = 0; i < v.size(); ++i)
      out << (i ? "," : "") << v[i];
    out << ")";
  }
  out << "\n";
}

// Total subsets the full pipeline scans for one cell.
u128 cell_subsets(int d, int k) {
  u128 total = 0;
  for (const Split& s : splits(d)) {
    const RowList list = generate_rows(d, k, s.n, s.m);
    const u128 c = binomial_u128(static_cast<unsigned>(list.rows.size()),
                                 static_cast<unsigned>(d));
    if (c == kU128Max || total + c < total) return kU128Max;
    total += c;
  }
  return total;
}

struct EpsilonFlags {
  int workers = default_workers();
  std::string resume;
  std::string max_subsets;
  bool naive = false;
  bool json = false;
};

int cmd_epsilon(int d, int k, const EpsilonFlags& f, std::ostream& out,
                std::ostream& err) {
  SearchConfig cfg;
  cfg.worker_count = f.workers;
  cfg.kernel = f.naive ? Kernel::naive : Kernel::fast;
  cfg.progress = &err;
  cfg.progress_interval = kProgressInterval;
  if (!f.resume.empty()) cfg.resume_token = parse_u128_flag(f.resume, "--resume");
  if (!f.max_subsets.empty())
    cfg.max_subsets = parse_u128_flag(f.max_subsets, "--max-subsets");

  const SearchResult r = epsilon(d, k, cfg);

  if (f.json) {
    ordered_json rep = report_head("epsilon");
    rep["d"] = r.d;
    rep["k"] = r.k;
    rep["inv_eps_sq"] = r.inv_eps_squared.str();
    rep["eps_approx"] = approx_sqrt(r.min_squared_distance);
    rep["certified"] = r.certified;
    rep["witness"] = r.witness ? witness_json(*r.witness) : ordered_json(nullptr);
    rep["stats"] = stats_json(r.stats);
    out << rep.dump() << "\n";
  } else {
    out << "inv_eps_squared = " << r.inv_eps_squared.str() << "\n";
    approx_stream(out) << "eps ~= " << approx_sqrt(r.min_squared_distance)
                       << " (approximate)\n";
    out << "certified: " << (r.certified ? "yes" : "no")
        << (r.complete ? "" : "  (partial scan: bound only)") << "\n";
    out << "split: (" << r.witness_split.n << "," << r.witness_split.m
        << ")\n";
    if (r.witness) {
      print_vertices(out, "P", r.witness->p);
      print_vertices(out, "Q", r.witness->q);
    }
    out << "subsets evaluated: " << u128_to_string(r.stats.subsets_evaluated)
        << " (singular " << u128_to_string(r.stats.singular_count) << ", zero "
        << u128_to_string(r.stats.zero_count) << ")\n";
    out << "elapsed: " << r.stats.elapsed_seconds << " s\n";
  }
  return r.certified ? 0 : 2;
}

int cmd_rows(int d, int k, const std::string& split_text, bool full, bool json,
             std::ostream& out) {
  int n = 0;
  int m = d - 1;
  if (!split_text.empty()) {
    const std::size_t comma = split_text.find(',');
    bool ok = comma != std::string::npos;
    if (ok) {
      try {
        std::size_t used_n = 0;
        std::size_t used_m = 0;
        const std::string mt = split_text.substr(comma + 1);
        n = std::stoi(split_text, &used_n);
        m = std::stoi(mt, &used_m);
        ok = used_n == comma && used_m == mt.size();
      } catch (const std::exception&) {
        ok = false;
      }
    }
    if (!ok)
      throw CLI::ValidationError("--split", "expected the form n,m");
  }

  const RowList list = generate_rows(d, k, n, m);
  if (json) {
    ordered_json rep = report_head("rows");
    rep["d"] = d;
    rep["k"] = k;
    rep["split"] = ordered_json{{"n", n}, {"m", m}};
    rep["count"] = list.rows.size();
    if (full) {
      ordered_json rows = ordered_json::array();
      for (const CanonicalRow& r : list.rows) {
        ordered_json row;
        row["entries"] = r.entries;
        row["divisor"] = r.divisor;
        row["flipped"] = r.flipped;
        row["provenance"] = ordered_json{{"x0", r.provenance.x0},
                                         {"x", r.provenance.x},
                                         {"y0", r.provenance.y0},
                                         {"y", r.provenance.y}};
        rows.push_back(std::move(row));
      }
      rep["rows"] = std::move(rows);
    }
    out << rep.dump() << "\n";
  } else {
    out << "rows = " << list.rows.size() << "\n";
    if (full) {
      for (const CanonicalRow& r : list.rows) {
        for (std::size_t i = 0; i < r.entries.size(); ++i)
          out << (i ? " " : "") << r.entries[i];
        out << "\n";
      }
    }
  }
  return 0;
}

int cmd_verify(const std::string& path, bool json, std::ostream& out,
               std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "verify: cannot read " << path << "\n";
    return 3;
  }
  std::ostringstream text;
  text << in.rdbuf();

  std::vector<WitnessFixture> fixtures;
  try {
    fixtures = parse_witness_json(text.str());
  } catch (const ParseError& e) {
    err << "verify: " << e.what() << "\n";
    return 3;
  }

  bool all_match = true;
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < fixtures.size(); ++i) {
    const WitnessFixture& f = fixtures[i];
    const BigRational sq = simplex_distance_squared(f.pair);
    const bool positive = sq.sign() > 0;
    bool match = true;
    if (f.expected_inv_squared)
      match = positive && sq.reciprocal() ==
                              BigRational(*f.expected_inv_squared, BigInt(1));
    all_match = all_match && match;

    if (json) {
      ordered_json row;
      row["d"] = f.d;
      row["k"] = f.k;
      row["computed_sq"] = sq.str();
      row["computed_inv_sq"] =
          positive ? ordered_json(sq.reciprocal().str()) : ordered_json(nullptr);
      row["expected_inv_sq"] = f.expected_inv_squared
                                   ? ordered_json(f.expected_inv_squared->str())
                                   : ordered_json(nullptr);
      row["match"] = match;
      rows.push_back(std::move(row));
    } else {
      out << "fixture " << i << ": d=" << f.d << " k=" << f.k
          << " computed inv_sq = " << (positive ? sq.reciprocal().str() : "-")
          << " (squared distance " << sq.str() << ")";
      if (f.expected_inv_squared)
        out << " expected " << f.expected_inv_squared->str() << " "
            << (match ? "MATCH" : "MISMATCH");
      out << "\n";
    }
  }
  if (json) {
    ordered_json rep = report_head("verify");
    rep["fixtures"] = std::move(rows);
    rep["all_match"] = all_match;
    out << rep.dump() << "\n";
  } else {
    out << (all_match ? "all fixtures match" : "MISMATCH detected") << "\n";
  }
  return all_match ? 0 : 1;
}

int cmd_oracle(int d, int k, bool json, std::ostream& out) {
  const BruteForceResult r = brute_force_epsilon(d, k);
  if (json) {
    ordered_json rep = report_head("oracle");
    rep["d"] = d;
    rep["k"] = k;
    rep["inv_eps_sq"] = r.squared.reciprocal().str();
    rep["eps_approx"] = approx_sqrt(r.squared);
    rep["witness"] = witness_json(r.witness);
    out << rep.dump() << "\n";
  } else {
    out << "inv_eps_squared = " << r.squared.reciprocal().str() << "\n";
    approx_stream(out) << "eps ~= " << approx_sqrt(r.squared)
                       << " (approximate)\n";
    print_vertices(out, "P", r.witness.p);
    print_vertices(out, "Q", r.witness.q);
  }
  return 0;
}

int cmd_closedform(const std::string& op, int k, bool allow_large, bool json,
                   std::ostream& out) {
  BigRational value;
  if (op == "planar") {
    value = epsilon2_squared(k);
  } else if (op == "planar-scan") {
    value = min_quotient_2d_squared(k);
  } else if (op == "spatial-scan") {
    value = min_quotient_3d_squared(k, allow_large);
  } else {
    value = segment_pair_3k_squared(k);
  }
  if (json) {
    ordered_json rep = report_head("closedform");
    rep["op"] = op;
    rep["k"] = k;
    rep["value_sq"] = value.str();
    rep["inv_sq"] = value.reciprocal().str();
    rep["approx"] = approx_sqrt(value);
    out << rep.dump() << "\n";
  } else {
    out << "value_sq = " << value.str() << "\n";
    out << "inv_sq = " << value.reciprocal().str() << "\n";
    approx_stream(out) << "value ~= " << approx_sqrt(value)
                       << " (approximate)\n";
  }
  return 0;
}

u128 budget_limit(const std::string& budget) {
  if (budget == "fast") return kFastLimit;
  if (budget == "standard") return kStandardLimit;
  return kHeavyLimit;
}

int cmd_table(int which, const std::string& budget, int workers,
              std::ostream& out, std::ostream& err) {
  out << "d,k,published,computed,status\n";
  bool all_pass = true;
  if (which == 2) {
    for (const RowCountCell& cell : kRowCountTable) {
      const RowList list = generate_rows(cell.d, cell.k, 0, cell.d - 1);
      const auto computed = static_cast<long>(list.rows.size());
      const bool pass = computed == cell.count;
      all_pass = all_pass && pass;
      out << cell.d << "," << cell.k << "," << cell.count << "," << computed
          << "," << (pass ? "PASS" : "FAIL") << "\n";
    }
    return all_pass ? 0 : 1;
  }
  const u128 limit = budget_limit(budget);
  for (const DistanceCell& cell : kDistanceTable) {
    if (cell_subsets(cell.d, cell.k) > limit) continue;
    SearchConfig cfg;
    cfg.worker_count = workers;
    cfg.progress = &err;
    cfg.progress_interval = kProgressInterval;
    const SearchResult r = epsilon(cell.d, cell.k, cfg);
    const std::string computed = r.inv_eps_squared.str();
    const bool pass = computed == cell.inv && r.certified;
    all_pass = all_pass && pass;
    out << cell.d << "," << cell.k << "," << cell.inv << "," << computed << ","
        << (pass ? "PASS" : "FAIL") << "\n";
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact minimum distance between disjoint lattice simplices"};
  app.name("kissing");
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  int exit_code = 0;

  // epsilon
  int eps_d = 0;
  int eps_k = 0;
  EpsilonFlags eps_flags;
  CLI::App* eps = app.add_subcommand(
      "epsilon", "search the smallest distance for one (d, k) cell");
  eps->add_option("-d", eps_d, "ambient dimension")
      ->required()
      ->check(CLI::Range(2, 64));
  eps->add_option("-k", eps_k, "grid side")->required()->check(CLI::Range(1, 1'000'000));
  eps->add_option("--workers", eps_flags.workers, "worker thread count")
      ->check(CLI::Range(1, 4096));
  eps->add_option("--resume", eps_flags.resume,
                  "global subset index to restart from");
  eps->add_option("--max-subsets", eps_flags.max_subsets,
                  "stop after this many subsets");
  eps->add_flag("--naive-kernel", eps_flags.naive,
                "arbitrary-precision solve for every subset");
  eps->add_flag("--json", eps_flags.json, "machine-readable output");
  eps->callback([&] { exit_code = cmd_epsilon(eps_d, eps_k, eps_flags, out, err); });

  // rows
  int rows_d = 0;
  int rows_k = 0;
  std::string rows_split;
  bool rows_full = false;
  bool rows_json = false;
  CLI::App* rows = app.add_subcommand("rows", "generate the canonical row list");
  rows->add_option("-d", rows_d, "ambient dimension")
      ->required()
      ->check(CLI::Range(2, 64));
  rows->add_option("-k", rows_k, "grid side")
      ->required()
      ->check(CLI::Range(1, 1'000'000));
  rows->add_option("--split", rows_split, "simplex dimensions n,m (default 0,d-1)");
  rows->add_flag("--full", rows_full, "print every row, not just the count");
  rows->add_flag("--json", rows_json, "machine-readable output");
  rows->callback([&] {
    exit_code = cmd_rows(rows_d, rows_k, rows_split, rows_full, rows_json, out);
  });

  // verify
  std::string verify_path;
  bool verify_json = false;
  CLI::App* verify = app.add_subcommand(
      "verify", "recompute the exact distance of witness files");
  verify->add_option("file", verify_path, "witness JSON file")->required();
  verify->add_flag("--json", verify_json, "machine-readable output");
  verify->callback(
      [&] { exit_code = cmd_verify(verify_path, verify_json, out, err); });

  // oracle
  int oracle_d = 0;
  int oracle_k = 0;
  bool oracle_json = false;
  CLI::App* oracle = app.add_subcommand(
      "oracle", "from-the-definition reference computation (small cells)");
  oracle->add_option("-d", oracle_d, "ambient dimension")
      ->required()
      ->check(CLI::Range(2, 64));
  oracle->add_option("-k", oracle_k, "grid side")
      ->required()
      ->check(CLI::Range(1, 1'000'000));
  oracle->add_flag("--json", oracle_json, "machine-readable output");
  oracle->callback(
      [&] { exit_code = cmd_oracle(oracle_d, oracle_k, oracle_json, out); });

  // closedform
  std::string cf_op;
  int cf_k = 0;
  bool cf_allow_large = false;
  bool cf_json = false;
  CLI::App* cf = app.add_subcommand("closedform",
                                    "closed forms and exhaustive scans");
  cf->add_option("op", cf_op, "planar | planar-scan | spatial-scan | segment")
      ->required()
      ->check(CLI::IsMember({"planar", "planar-scan", "spatial-scan", "segment"}));
  cf->add_option("-k", cf_k, "grid side")->required()->check(CLI::Range(1, 1'000'000));
  cf->add_flag("--allow-large", cf_allow_large,
               "permit the spatial scan beyond k = 3");
  cf->add_flag("--json", cf_json, "machine-readable output");
  cf->callback([&] {
    exit_code = cmd_closedform(cf_op, cf_k, cf_allow_large, cf_json, out);
  });

  // table
  int table_which = 0;
  std::string table_budget = "standard";
  int table_workers = default_workers();
  CLI::App* table = app.add_subcommand(
      "table", "recompute the published tables cell by cell");
  table->add_option("which", table_which, "1 = distances, 2 = row counts")
      ->required()
      ->check(CLI::IsMember({1, 2}));
  table->add_option("--budget", table_budget, "fast | standard | heavy")
      ->check(CLI::IsMember({"fast", "standard", "heavy"}));
  table->add_option("--workers", table_workers, "worker thread count")
      ->check(CLI::Range(1, 4096));
  table->callback([&] {
    exit_code = cmd_table(table_which, table_budget, table_workers, out, err);
  });

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("kissing");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  }
  return exit_code;
}

}  // namespace kissing
