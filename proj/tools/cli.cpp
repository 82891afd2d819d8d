#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>

#include "crosscount/corpus.hpp"
#include "crosscount/crossing.hpp"
#include "crosscount/noncrossing.hpp"
#include "crosscount/oracle.hpp"
#include "crosscount/runs.hpp"
#include "crosscount/suffix.hpp"
#include "crosscount/text.hpp"

namespace crosscount::cli {
namespace {

using json = nlohmann::json;

struct Options {
  std::string input = "-";
  std::string mode = "byte";
  std::string format = "tsv";
  std::string out_path;
  std::string kind = "random";
  std::uint64_t seed = 20240917;
  std::size_t trials = 200;
  std::size_t max_n = 64;
  std::size_t min_n = 1024;
  std::size_t n = 0;
  std::size_t sigma = 0;
  std::uint64_t max_bytes = std::uint64_t{1} << 30;
  bool verbose = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

AlphabetMode parse_mode(const Options& opt) {
  return opt.mode == "unordered" ? AlphabetMode::opaque : AlphabetMode::byte;
}

std::string read_input(const Options& opt, std::istream& in) {
  std::string data;
  if (opt.input == "-") {
    data.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream file(opt.input, std::ios::binary);
    if (!file) {
      throw UsageError("cannot read input file '" + opt.input + "'");
    }
    data.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  }
  if (data.size() > opt.max_bytes) {
    throw UsageError("input of " + std::to_string(data.size()) + " bytes exceeds the cap of " +
                     std::to_string(opt.max_bytes));
  }
  return data;
}

// Writes to --out when given, otherwise to `out`.
class Sink {
 public:
  Sink(const Options& opt, std::ostream& out) : stream_(&out) {
    if (!opt.out_path.empty()) {
      file_.open(opt.out_path, std::ios::binary);
      if (!file_) {
        throw UsageError("cannot write output file '" + opt.out_path + "'");
      }
      stream_ = &file_;
    }
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

json runs_json(const std::vector<Run>& runs) {
  json arr = json::array();
  for (const Run& r : runs) {
    arr.push_back({r.i, r.j, r.p});
  }
  return arr;
}

void report_comparisons(const Options& opt, const ComparisonCounter& counter, std::ostream& err) {
  if (parse_mode(opt) == AlphabetMode::opaque) {
    err << "# equality tests: " << counter.count << '\n';
  }
}

int cmd_runs(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  const Text t = load_text(read_input(opt, in), parse_mode(opt));
  ComparisonCounter counter;
  const auto runs = find_runs(t, counter);
  Sink sink(opt, out);
  if (opt.format == "json") {
    sink.stream() << json{{"n", t.size()}, {"runs", runs_json(runs)}}.dump() << '\n';
  } else {
    for (const Run& r : runs) {
      sink.stream() << r.i << '\t' << r.j << '\t' << r.p << '\n';
    }
  }
  report_comparisons(opt, counter, err);
  return ok;
}

struct Counts {
  std::vector<Run> runs;
  CountArray crossing;
  CountArray duplicates;
  CountArray noncrossing;
};

Counts compute_crossing(const Text& t, ComparisonCounter& counter) {
  Counts c;
  c.runs = find_runs(t, counter);
  c.duplicates = sweep_duplicates(RunEventIndex(c.runs, t.size()));
  c.crossing.resize(t.size());
  const auto n = static_cast<std::int64_t>(t.size());
  for (std::int64_t k = 1; k <= n; ++k) {
    const auto idx = static_cast<std::size_t>(k - 1);
    c.crossing[idx] = k * (n - k + 1) - c.duplicates[idx];
  }
  return c;
}

CountArray compute_noncrossing(const Text& t, ComparisonCounter& counter) {
  if (t.mode() == AlphabetMode::opaque) {
    return count_noncrossing_unordered(t, counter);
  }
  return count_noncrossing_all(t);
}

int cmd_counts(const Options& opt, bool want_crossing, bool want_noncrossing, std::istream& in, std::ostream& out,
               std::ostream& err) {
  const Text t = load_text(read_input(opt, in), parse_mode(opt));
  ComparisonCounter counter;
  Counts c;
  if (want_crossing) {
    c = compute_crossing(t, counter);
  }
  if (want_noncrossing) {
    c.noncrossing = compute_noncrossing(t, counter);
  }
  Sink sink(opt, out);
  std::ostream& os = sink.stream();
  if (opt.format == "json") {
    json doc{{"n", t.size()}};
    if (want_crossing) {
      doc["C"] = c.crossing;
      if (opt.verbose) {
        doc["D"] = c.duplicates;
      }
    }
    if (want_noncrossing) {
      doc["N"] = c.noncrossing;
    }
    if (want_crossing && want_noncrossing) {
      doc["runs"] = runs_json(c.runs);
    }
    os << doc.dump() << '\n';
  } else {
    for (std::size_t k = 0; k < t.size(); ++k) {
      os << k + 1;
      if (want_crossing) {
        os << '\t' << c.crossing[k];
      }
      if (want_noncrossing) {
        os << '\t' << c.noncrossing[k];
      }
      if (want_crossing && opt.verbose) {
        os << '\t' << c.duplicates[k];
      }
      os << '\n';
    }
  }
  report_comparisons(opt, counter, err);
  return ok;
}

int cmd_tables(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  const Text t = load_text(read_input(opt, in), parse_mode(opt));
  ComparisonCounter counter;
  const FactorTables tables = factor_tables(to_integer_alphabet(t, counter));
  Sink sink(opt, out);
  if (opt.format == "json") {
    sink.stream() << json{{"n", t.size()}, {"LPnF", tables.lpnf}, {"LNF", tables.lnf}}.dump() << '\n';
  } else {
    for (std::size_t i = 0; i < t.size(); ++i) {
      sink.stream() << i + 1 << '\t' << tables.lpnf[i] << '\t' << tables.lnf[i] << '\n';
    }
  }
  report_comparisons(opt, counter, err);
  return ok;
}

std::string printable(const std::string& s) {
  std::ostringstream os;
  for (unsigned char ch : s) {
    if (ch >= 0x20 && ch < 0x7f) {
      os << ch;
    } else {
      os << "\\x" << std::hex << static_cast<int>(ch) << std::dec;
    }
  }
  return os.str();
}

// First disagreement between the fast pipelines and the oracles, if any.
std::optional<std::string> check_against_oracle(const std::string& raw) {
  for (AlphabetMode mode : {AlphabetMode::byte, AlphabetMode::opaque}) {
    const Text t = load_text(raw, mode);
    const Text plain = load_text(raw, AlphabetMode::byte);
    const char* label = mode == AlphabetMode::byte ? "byte" : "unordered";
    ComparisonCounter counter;
    if (find_runs(t, counter) != oracle::brute_runs(plain)) {
      return std::string("runs (") + label + ")";
    }
    if (count_crossing_all(t, counter) != oracle::brute_crossing_all(plain)) {
      return std::string("C (") + label + ")";
    }
    if (compute_noncrossing(t, counter) != oracle::brute_noncrossing_all(plain)) {
      return std::string("N (") + label + ")";
    }
    const FactorTables fast = factor_tables(to_integer_alphabet(t, counter));
    const FactorTables slow = oracle::brute_factor_tables(plain);
    if (fast.lpnf != slow.lpnf) {
      return std::string("LPnF (") + label + ")";
    }
    if (fast.lnf != slow.lnf) {
      return std::string("LNF (") + label + ")";
    }
  }
  return std::nullopt;
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
  constexpr std::size_t default_sigmas[] = {1, 2, 4, 26};
  std::mt19937_64 rng(opt.seed);
  Sink sink(opt, out);
  std::ostream& os = sink.stream();
  os << "seed: " << opt.seed << '\n';
  for (std::size_t trial = 0; trial < opt.trials; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(0, opt.max_n)(rng);
    const std::size_t sigma = opt.sigma != 0 ? opt.sigma : default_sigmas[trial % std::size(default_sigmas)];
    const std::string raw = gen_corpus(CorpusKind::random, n, sigma, rng());
    if (auto what = check_against_oracle(raw)) {
      os << "mismatch in " << *what << " at trial " << trial << " (seed " << opt.seed << ")\n";
      os << "counterexample: " << printable(raw) << '\n';
      err << "verification failed\n";
      return mismatch;
    }
  }
  os << "verified " << opt.trials << " trials, max n " << opt.max_n << ": all match\n";
  return ok;
}

int cmd_bench(const Options& opt, std::ostream& out) {
  using clock = std::chrono::steady_clock;
  auto seconds = [](clock::time_point a, clock::time_point b) { return std::chrono::duration<double>(b - a).count(); };
  const std::size_t sigma = opt.sigma != 0 ? opt.sigma : 2;
  Sink sink(opt, out);
  std::ostream& os = sink.stream();
  os << "# seed " << opt.seed << ", sigma " << sigma << ", mode " << opt.mode << '\n';
  os << "n,runs_seconds,runs_equality_tests,tests_per_nlog2n,crossing_seconds,noncrossing_seconds\n";
  for (std::size_t n = std::max<std::size_t>(opt.min_n, 2); n <= opt.max_n; n *= 2) {
    const Text t = load_text(gen_corpus(CorpusKind::random, n, sigma, opt.seed + n), parse_mode(opt));
    ComparisonCounter counter;
    const auto t0 = clock::now();
    const auto runs = find_runs(t, counter);
    const auto t1 = clock::now();
    const CountArray crossing = crossing_from_runs(runs, t.size());
    const auto t2 = clock::now();
    ComparisonCounter rename_counter;
    const CountArray noncrossing = compute_noncrossing(t, rename_counter);
    const auto t3 = clock::now();
    const double nlogn = static_cast<double>(n) * std::log2(static_cast<double>(n));
    os << n << ',' << seconds(t0, t1) << ',' << counter.count << ',' << static_cast<double>(counter.count) / nlogn
       << ',' << seconds(t1, t2) << ',' << seconds(t2, t3) << '\n';
  }
  return ok;
}

int cmd_gen(const Options& opt, std::ostream& out) {
  const auto kind = parse_corpus_kind(opt.kind);
  if (!kind) {
    throw UsageError("unknown corpus kind '" + opt.kind + "'");
  }
  std::string text;
  try {
    text = gen_corpus(*kind, opt.n, opt.sigma != 0 ? opt.sigma : 2, opt.seed);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Sink sink(opt, out);
  sink.stream() << text;
  return ok;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Runs, crossing and non-crossing distinct substring counts", "crosscount"};
  app.require_subcommand(1);

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", opt.input, "Input file, '-' for standard input")->capture_default_str();
    sub->add_option("--mode", opt.mode, "Alphabet model")
        ->check(CLI::IsMember({"byte", "unordered"}))
        ->capture_default_str();
    sub->add_option("--max-bytes", opt.max_bytes, "Refuse larger inputs")->capture_default_str();
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"tsv", "json"}))
        ->capture_default_str();
    sub->add_option("--out", opt.out_path, "Write to a file instead of standard output");
  };

  auto* runs = app.add_subcommand("runs", "Report all runs as i, j, p");
  add_input(runs);
  add_output(runs);
  auto* cross = app.add_subcommand("cross", "Distinct substrings crossing each position");
  add_input(cross);
  add_output(cross);
  cross->add_flag("--verbose", opt.verbose, "Add the duplicate count D as a third column");
  auto* noncross = app.add_subcommand("noncross", "Distinct substrings avoiding each position");
  add_input(noncross);
  add_output(noncross);
  auto* both = app.add_subcommand("both", "Crossing and non-crossing counts together");
  add_input(both);
  add_output(both);
  both->add_flag("--verbose", opt.verbose, "Add the duplicate count D as a fourth column");
  auto* tables = app.add_subcommand("tables", "Dump the LPnF and LNF tables");
  add_input(tables);
  add_output(tables);

  auto* verify = app.add_subcommand("verify", "Compare all pipelines against brute force on random strings");
  verify->add_option("--trials", opt.trials, "Number of random strings")->capture_default_str();
  verify->add_option("--max-n", opt.max_n, "Largest string length")->capture_default_str();
  verify->add_option("--seed", opt.seed, "Random seed")->capture_default_str();
  verify->add_option("--sigma", opt.sigma, "Alphabet size (0 cycles through 1, 2, 4, 26)")->capture_default_str();
  verify->add_option("--out", opt.out_path, "Write the report to a file");

  auto* bench = app.add_subcommand("bench", "Time the pipelines over a doubling size ladder");
  bench->add_option("--min-n", opt.min_n, "Smallest size")->capture_default_str();
  bench->add_option("--max-n", opt.max_n, "Largest size (default 65536)");
  bench->add_option("--sigma", opt.sigma, "Alphabet size (default 2)");
  bench->add_option("--seed", opt.seed, "Random seed")->capture_default_str();
  bench->add_option("--mode", opt.mode, "Alphabet model")
      ->check(CLI::IsMember({"byte", "unordered"}))
      ->capture_default_str();
  bench->add_option("--out", opt.out_path, "Write the CSV to a file");

  auto* gen = app.add_subcommand("gen", "Write a generated test string");
  gen->add_option("--kind", opt.kind, "random, unary, fibonacci, square_free_ternary or markers")
      ->capture_default_str();
  gen->add_option("--n", opt.n, "Length (base length for markers)")->required();
  gen->add_option("--sigma", opt.sigma, "Alphabet size (default 2)");
  gen->add_option("--seed", opt.seed, "Random seed")->capture_default_str();
  gen->add_option("--out", opt.out_path, "Write to a file instead of standard output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage_error;
  }

  try {
    if (bench->parsed() && bench->count("--max-n") == 0) {
      opt.max_n = 65536;
    }
    if (runs->parsed()) return cmd_runs(opt, in, out, err);
    if (cross->parsed()) return cmd_counts(opt, true, false, in, out, err);
    if (noncross->parsed()) return cmd_counts(opt, false, true, in, out, err);
    if (both->parsed()) return cmd_counts(opt, true, true, in, out, err);
    if (tables->parsed()) return cmd_tables(opt, in, out, err);
    if (verify->parsed()) return cmd_verify(opt, out, err);
    if (bench->parsed()) return cmd_bench(opt, out);
    if (gen->parsed()) return cmd_gen(opt, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }
  err << app.help();
  return usage_error;
}

}  // namespace crosscount::cli
