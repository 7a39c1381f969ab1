// dfds: diamond-free degree sequences, design hill climbs, witness checks.
//
// Exit codes: 0 success, 1 verification or diff failure, 2 bad input,
// 3 inconclusive search.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dfds/dfds.hpp"

namespace fs = std::filesystem;
using namespace dfds;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_bad_input = 2;
constexpr int exit_inconclusive = 3;

struct SolveFlags {
  int jobs = 1;
  std::uint64_t node_limit = 0; // 0: unlimited
  int max_n = 20;
  std::string format = "text";
  std::string witness_dir;
};

double seconds(std::chrono::nanoseconds d) { return std::chrono::duration<double>(d).count(); }

std::string fixed(double v, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

PipelineOptions pipeline_options(const SolveFlags &f) {
  PipelineOptions o;
  o.jobs = f.jobs;
  if (f.node_limit > 0)
    o.node_limit = f.node_limit;
  return o;
}

void check_order(int n, int max_n) {
  if (n < 4 || n > max_n)
    throw InputError("n must be in [4, " + std::to_string(max_n) + "], got " + std::to_string(n));
}

std::string witness_name(const DegreeSequence &s) {
  std::string name = "n" + std::to_string(s.size()) + "_";
  for (std::size_t i = 0; i < s.size(); ++i)
    name += (i ? "-" : "") + std::to_string(s[i]);
  return name + ".txt";
}

void write_witnesses(const PipelineResult &r, const std::string &dir) {
  if (dir.empty())
    return;
  fs::create_directories(dir);
  for (const auto &s : r.solutions) {
    std::ofstream out(fs::path(dir) / witness_name(s.sequence), std::ios::binary);
    out << to_matrix_text(s.witness);
    if (!out)
      throw std::runtime_error("cannot write witness into " + dir);
  }
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int run_solve(int n, const SolveFlags &f) {
  check_order(n, f.max_n);
  auto r = solve(n, pipeline_options(f));
  write_witnesses(r, f.witness_dir);
  if (f.format == "json") {
    nlohmann::json sols = nlohmann::json::array();
    for (const auto &s : r.solutions)
      sols.push_back({{"sequence", s.sequence.values()}, {"witness", to_json(s.witness)}});
    std::cout << nlohmann::json{{"n", n}, {"solutions", sols}}.dump(2) << "\n";
  } else if (f.format == "csv") {
    std::cout << "n,sequence\n";
    for (const auto &s : r.solutions)
      std::cout << n << "," << to_string(s.sequence) << "\n";
  } else {
    for (const auto &s : r.solutions)
      std::cout << to_string(s.sequence) << "\n";
  }
  std::cerr << "n=" << n << " solutions=" << r.solutions.size() << " time=" << fixed(seconds(r.wall_time), 3)
            << "s\n";
  return exit_ok;
}

int run_table(int n_min, int n_max, const SolveFlags &f) {
  if (n_min > n_max)
    throw InputError("table: n_min must not exceed n_max");
  check_order(n_min, f.max_n);
  check_order(n_max, f.max_n);
  if (f.format == "csv")
    std::cout << "n,sequence,time_s\n";
  else if (f.format != "text")
    throw InputError("table: format must be text or csv");
  for (int n = n_min; n <= n_max; ++n) {
    auto r = solve(n, pipeline_options(f));
    write_witnesses(r, f.witness_dir);
    // Measured times are not part of the golden table.
    for (const auto &s : r.solutions) {
      if (f.format == "csv")
        std::cout << n << "," << to_string(s.sequence) << "," << fixed(seconds(r.wall_time), 3) << "\n";
      else
        std::cout << n << " | " << to_string(s.sequence) << "\n";
    }
    std::cerr << "n=" << n << " solutions=" << r.solutions.size() << " time=" << fixed(seconds(r.wall_time), 3)
              << "s\n";
  }
  return exit_ok;
}

int report_verification(const std::string &label, const VerificationReport &rep) {
  if (!rep.parsed_ok) {
    std::cout << label << ": MALFORMED " << rep.failure_detail.value_or("") << "\n";
    return exit_bad_input;
  }
  std::cout << label << ": " << (rep.passed() ? "PASS" : "FAIL") << " simple=" << rep.simple_ok
            << " diamond_free=" << rep.diamond_free_ok << " degrees=" << rep.degrees_match_ok
            << " arithmetic=" << rep.arithmetic_ok;
  if (rep.failure_detail)
    std::cout << " (" << *rep.failure_detail << ")";
  std::cout << "\n";
  return rep.passed() ? exit_ok : exit_failed;
}

// Witness file names carry their sequence: n<N>_<d1>-<d2>-...txt
std::optional<std::vector<int>> sequence_from_name(const std::string &stem) {
  auto us = stem.find('_');
  if (us == std::string::npos)
    return std::nullopt;
  std::string body = stem.substr(us + 1);
  std::replace(body.begin(), body.end(), '-', ' ');
  try {
    return parse_sequence(body).values();
  } catch (const InputError &) {
    return std::nullopt;
  }
}

int run_verify(const std::string &file, const std::string &seq_text, int n, const std::string &dir) {
  if (!dir.empty()) {
    std::vector<fs::path> files;
    for (const auto &entry : fs::directory_iterator(dir))
      if (entry.is_regular_file() && entry.path().extension() == ".txt")
        files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty())
      throw InputError("verify: no witness files in " + dir);
    int worst = exit_ok;
    for (const auto &p : files) {
      auto seq = sequence_from_name(p.stem().string());
      int code;
      if (!seq) {
        std::cout << p.filename().string() << ": MALFORMED file name\n";
        code = exit_bad_input;
      } else {
        auto rep = verify_witness(read_file(p.string()), *seq, static_cast<int>(seq->size()));
        code = report_verification(p.filename().string(), rep);
      }
      worst = std::max(worst, code);
    }
    return worst;
  }
  if (file.empty() || seq_text.empty())
    throw InputError("verify: need FILE and --seq, or --dir");
  std::vector<int> seq;
  try {
    seq = parse_sequence(seq_text).values();
  } catch (const InputError &ex) {
    std::cout << "MALFORMED " << ex.what() << "\n";
    return exit_bad_input;
  }
  if (n <= 0)
    n = static_cast<int>(seq.size());
  return report_verification(file, verify_witness(read_file(file), seq, n));
}

template <class Climb>
auto with_restarts(std::uint64_t seed, int restarts, Climb climb) {
  for (int attempt = 0;; ++attempt) {
    try {
      return climb(RngSpec{seed + static_cast<std::uint64_t>(attempt)});
    } catch (const InconclusiveError &) {
      if (attempt >= restarts)
        throw;
      std::cerr << "attempt " << attempt << " hit the iteration cap, restarting\n";
    }
  }
}

int run_sts(int n, std::uint64_t seed, int restarts, std::uint64_t max_iterations, const std::string &format) {
  auto d = with_restarts(seed, restarts, [&](RngSpec rng) { return stinson_sts(n, rng, max_iterations); });
  if (!covers_every_pair_once(d)) {
    std::cerr << "sts: generated design fails pair coverage\n";
    return exit_failed;
  }
  if (format == "json")
    std::cout << to_json(d).dump() << "\n";
  else
    std::cout << to_block_text(d);
  std::cerr << "n=" << n << " blocks=" << d.blocks.size() << " pair coverage verified\n";
  return exit_ok;
}

int run_design4(int n, std::uint64_t seed, int restarts, std::uint64_t max_iterations, const std::string &out) {
  auto r = with_restarts(seed, restarts, [&](RngSpec rng) { return stinson_four(n, rng, max_iterations); });
  if (!out.empty()) {
    std::ofstream f(out, std::ios::binary);
    f << to_json(r.design).dump() << "\n";
    if (!f)
      throw std::runtime_error("cannot write " + out);
  }
  std::cout << to_json(r.report).dump(2) << "\n";
  return exit_ok;
}

int run_modela(int n, bool diff, const SolveFlags &f, int max_n) {
  if (n < 1 || n > max_n)
    throw InputError("modela: n must be in [1, " + std::to_string(max_n) + "]");
  std::optional<std::uint64_t> limit;
  if (f.node_limit > 0)
    limit = f.node_limit;
  auto found = solve_model_a(n, limit);
  std::vector<DegreeSequence> ordered(found.begin(), found.end());
  for (const auto &s : ordered)
    std::cout << to_string(s) << "\n";
  if (!diff)
    return exit_ok;
  std::vector<DegreeSequence> pipeline;
  if (n >= 4)
    pipeline = solution_sequences(solve(n, pipeline_options(f)));
  if (pipeline != ordered) {
    std::cout << "DIFF: model A and the pipeline disagree for n=" << n << "\n";
    return exit_failed;
  }
  std::cout << "model A agrees with the pipeline for n=" << n << " (" << ordered.size() << " sequences)\n";
  return exit_ok;
}

int run_bench(int n_min, int n_max, const SolveFlags &f) {
  if (n_min > n_max)
    throw InputError("bench: n_min must not exceed n_max");
  check_order(n_min, f.max_n);
  check_order(n_max, f.max_n);
  std::cout << "n,candidates,graphical,solutions,nodes,backtracks,time_s\n";
  for (int n = n_min; n <= n_max; ++n) {
    auto r = solve(n, pipeline_options(f));
    std::cout << n << "," << r.candidates << "," << r.graphical << "," << r.solutions.size() << ","
              << r.totals.nodes << "," << r.totals.backtracks << "," << fixed(seconds(r.wall_time), 3) << "\n";
  }
  return exit_ok;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Diamond-free degree sequences and block design hill climbs"};
  app.set_config("--config", "", "key=value file of option defaults");
  app.require_subcommand(1);

  SolveFlags flags;
  auto add_solver_flags = [&](CLI::App *cmd) {
    cmd->add_option("--jobs,-j", flags.jobs, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--node-limit", flags.node_limit, "per-sequence search node cap (0: none)");
    cmd->add_option("--max-n", flags.max_n, "largest accepted n");
  };

  int n = 0, n_min = 0, n_max = 0;

  auto *solve_cmd = app.add_subcommand("solve", "all sequences of length n with a diamond-free graph");
  solve_cmd->add_option("n", n)->required();
  solve_cmd->add_option("--format", flags.format)->check(CLI::IsMember({"text", "csv", "json"}));
  solve_cmd->add_option("--witness-dir", flags.witness_dir, "write one adjacency matrix file per solution");
  add_solver_flags(solve_cmd);

  auto *table_cmd = app.add_subcommand("table", "solution table for a range of n");
  table_cmd->add_option("n_min", n_min)->required();
  table_cmd->add_option("n_max", n_max)->required();
  table_cmd->add_option("--format", flags.format)->check(CLI::IsMember({"text", "csv"}));
  table_cmd->add_option("--witness-dir", flags.witness_dir);
  add_solver_flags(table_cmd);

  std::string graph_file, seq_text, dir;
  int verify_n = 0;
  auto *verify_cmd = app.add_subcommand("verify", "check a witness graph file");
  verify_cmd->add_option("file", graph_file);
  verify_cmd->add_option("--seq", seq_text, "claimed degree sequence, e.g. \"3 3 3 3 3 3 3 3\"");
  verify_cmd->add_option("--n", verify_n, "expected order (defaults to the sequence length)");
  verify_cmd->add_option("--dir", dir, "verify every witness file written by --witness-dir");

  std::uint64_t seed = 1, max_iterations = default_max_iterations;
  int restarts = 10;
  std::string out_file, design_format = "text";
  auto *sts_cmd = app.add_subcommand("sts", "Steiner triple system by hill climbing");
  sts_cmd->add_option("n", n)->required();
  sts_cmd->add_option("--seed", seed);
  sts_cmd->add_option("--restarts", restarts)->check(CLI::NonNegativeNumber);
  sts_cmd->add_option("--max-iterations", max_iterations)->check(CLI::PositiveNumber);
  sts_cmd->add_option("--format", design_format)->check(CLI::IsMember({"text", "json"}));

  auto *d4_cmd = app.add_subcommand("design4", "block-size-4 hill climb with structure report");
  d4_cmd->add_option("n", n)->required();
  d4_cmd->add_option("--seed", seed);
  d4_cmd->add_option("--restarts", restarts)->check(CLI::NonNegativeNumber);
  d4_cmd->add_option("--max-iterations", max_iterations)->check(CLI::PositiveNumber);
  d4_cmd->add_option("--out", out_file, "write the design as JSON");

  bool diff = false;
  int modela_max_n = 12;
  auto *modela_cmd = app.add_subcommand("modela", "single-stage model, for cross-checking");
  modela_cmd->add_option("n", n)->required();
  modela_cmd->add_flag("--diff", diff, "compare against the two-stage pipeline");
  modela_cmd->add_option("--node-limit", flags.node_limit);
  modela_cmd->add_option("--max-n", modela_max_n);

  auto *bench_cmd = app.add_subcommand("bench", "pipeline statistics and timings per n");
  bench_cmd->add_option("n_min", n_min)->required();
  bench_cmd->add_option("n_max", n_max)->required();
  add_solver_flags(bench_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_bad_input;
  }

  try {
    if (*solve_cmd)
      return run_solve(n, flags);
    if (*table_cmd)
      return run_table(n_min, n_max, flags);
    if (*verify_cmd)
      return run_verify(graph_file, seq_text, verify_n, dir);
    if (*sts_cmd)
      return run_sts(n, seed, restarts, max_iterations, design_format);
    if (*d4_cmd)
      return run_design4(n, seed, restarts, max_iterations, out_file);
    if (*modela_cmd)
      return run_modela(n, diff, flags, modela_max_n);
    if (*bench_cmd)
      return run_bench(n_min, n_max, flags);
  } catch (const InputError &ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return exit_bad_input;
  } catch (const InconclusiveError &ex) {
    std::cerr << "inconclusive: " << ex.what() << "\n";
    return exit_inconclusive;
  } catch (const std::exception &ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return exit_bad_input;
  }
  return exit_bad_input;
}
