// Command-line front end: solve, scramble, verify, oracle and bench
// subcommands over the text instance/move formats.
//
// Exit codes: 0 success, 1 parse/IO error, 2 verification failure,
// 3 unsortable input.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "torus/torus.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitVerify = 2;
constexpr int kExitUnsortable = 3;

torus::NaiveBoard load_instance(const std::string& path) {
  if (path == "-") return torus::parse_instance(std::cin, "stdin");
  std::ifstream in(path);
  if (!in) throw torus::ParseError(path, 0, 0, "cannot open file");
  return torus::parse_instance(in, path);
}

std::vector<torus::Move> load_moves(const std::string& path) {
  if (path == "-") return torus::parse_moves(std::cin, "stdin");
  std::ifstream in(path);
  if (!in) throw torus::ParseError(path, 0, 0, "cannot open file");
  return torus::parse_moves(in, path);
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw torus::ParseError(path, 0, 0, "cannot open file for writing");
  out << text;
}

std::string stats_block(const torus::SolveReport& rep, const std::string& engine) {
  std::ostringstream os;
  os << "m=" << rep.dims.m << '\n';
  os << "n=" << rep.dims.n << '\n';
  os << "engine=" << engine << '\n';
  os << "mode=" << (rep.mode == torus::SolveMode::Standard ? "standard" : "restricted") << '\n';
  os << "transposed=" << (rep.transposed ? 1 : 0) << '\n';
  os << "push=" << rep.push_count << '\n';
  os << "drag=" << rep.drag_count << '\n';
  os << "bound_ratio=" << rep.bound_ratio << '\n';
  os << "bound_constant=" << torus::SolveReport::kPushConstant << '\n';
  for (const auto& ph : rep.phases) {
    os << "phase." << ph.name << ".calls=" << ph.calls << '\n';
    os << "phase." << ph.name << ".row_rotations=" << ph.row_rotations << '\n';
    os << "phase." << ph.name << ".col_rotations=" << ph.col_rotations << '\n';
  }
  for (const auto& bc : rep.bound_checks) {
    os << "bound." << bc.name << "=" << (bc.ok ? "pass" : "fail") << '\n';
  }
  return os.str();
}

struct SizeSpec {
  int m = 0;
  int n = 0;
};

std::vector<SizeSpec> parse_sizes(const std::string& arg) {
  std::vector<SizeSpec> out;
  std::stringstream ss(arg);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto x = item.find('x');
    if (x == std::string::npos) {
      throw torus::ParseError("--sizes", 1, 1, "expected <m>x<n>, got '" + item + "'");
    }
    try {
      out.push_back(SizeSpec{std::stoi(item.substr(0, x)), std::stoi(item.substr(x + 1))});
    } catch (const std::exception&) {
      throw torus::ParseError("--sizes", 1, 1, "expected <m>x<n>, got '" + item + "'");
    }
  }
  if (out.empty()) throw torus::ParseError("--sizes", 1, 1, "empty size list");
  return out;
}

std::vector<std::uint64_t> parse_seeds(const std::string& arg) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(arg);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoull(item));
    } catch (const std::exception&) {
      throw torus::ParseError("--seeds", 1, 1, "expected integer seed, got '" + item + "'");
    }
  }
  if (out.empty()) throw torus::ParseError("--seeds", 1, 1, "empty seed list");
  return out;
}

int cmd_solve(const std::string& instance_path, const std::string& engine, const std::string& mode,
              const std::string& emit, bool check, const std::string& out_path) {
  torus::NaiveBoard start = load_instance(instance_path);
  torus::SolveOptions opts;
  opts.mode = mode == "restricted" ? torus::SolveMode::RestrictedRotationTypes
                                   : torus::SolveMode::Standard;
  opts.keep_moves = emit != "stats" || check;

  torus::SolveReport rep;
  if (engine == "naive") {
    torus::NaiveBoard board = start;
    rep = torus::solve(board, opts);
  } else {
    torus::FastBoard board(start);
    rep = torus::solve(board, opts);
  }

  if (check) {
    const auto replay = torus::replay_verify(start, rep.log.moves());
    if (!replay.final_sorted) {
      std::cerr << "error: replay of emitted moves does not sort the instance\n";
      return kExitVerify;
    }
  }

  std::string text;
  if (emit == "moves" || emit == "both") text += torus::format_moves(rep.log.moves());
  if (emit == "both") text += '\n';
  if (emit == "stats" || emit == "both") text += stats_block(rep, engine);
  write_output(out_path, text);
  return kExitOk;
}

int cmd_scramble(int m, int n, std::uint64_t seed, std::int64_t steps) {
  torus::ScrambleSpec spec{torus::Dims(m, n), seed, steps};
  const auto board = torus::random_sortable_scramble(spec);
  std::cout << torus::format_instance(board);
  return kExitOk;
}

int cmd_verify(const std::string& instance_path, const std::string& moves_path,
               const std::string& policy_name) {
  const torus::NaiveBoard start = load_instance(instance_path);
  const auto moves = load_moves(moves_path);
  torus::MovePolicy policy = torus::MovePolicy::Any;
  if (policy_name == "canonical") policy = torus::MovePolicy::RowsRightColsDown;
  if (policy_name == "first-row") policy = torus::MovePolicy::FirstRowRightColsDown;
  const auto rep = torus::replay_verify(start, moves, policy);
  std::cout << "final_sorted=" << (rep.final_sorted ? 1 : 0) << '\n';
  std::cout << "push=" << rep.push << '\n';
  std::cout << "drag=" << rep.drag << '\n';
  std::cout << "legal=" << (rep.legal ? 1 : 0) << '\n';
  if (!rep.legal) std::cout << "first_violation=" << rep.first_violation << '\n';
  return rep.final_sorted && rep.legal ? kExitOk : kExitVerify;
}

int cmd_oracle(int m, int n, bool reachable, const std::string& optimal_path, std::uint64_t cap,
               const std::string& csv_path) {
  const torus::Dims dims(m, n);
  const torus::BfsOracle oracle(dims, cap);
  if (reachable) {
    const auto rep = oracle.report();
    std::cout << "states=" << rep.state_count << '\n';
    std::cout << "reachable_count=" << rep.reachable_count << '\n';
    std::cout << "even_count=" << rep.even_count << '\n';
    std::cout << "odd_count=" << rep.odd_count << '\n';
    std::cout << "gods_number=" << rep.gods_number() << '\n';
    if (!csv_path.empty()) {
      std::ostringstream os;
      os << "depth,count\n";
      for (std::size_t d = 0; d < rep.depth_histogram.size(); ++d) {
        os << d << ',' << rep.depth_histogram[d] << '\n';
      }
      write_output(csv_path, os.str());
    }
    return kExitOk;
  }
  const torus::NaiveBoard board = load_instance(optimal_path);
  if (!torus::is_sortable(board)) {
    std::cerr << "error: unsortable instance (odd permutation on odd-by-odd board)\n";
    return kExitUnsortable;
  }
  std::cout << "optimal_push=" << torus::optimal_push_number(oracle, board) << '\n';
  return kExitOk;
}

int cmd_bench(const std::string& sizes_arg, const std::string& seeds_arg, const std::string& mode,
              const std::string& csv_path) {
  const auto sizes = parse_sizes(sizes_arg);
  const auto seeds = parse_seeds(seeds_arg);
  torus::SolveOptions opts;
  opts.mode = mode == "restricted" ? torus::SolveMode::RestrictedRotationTypes
                                   : torus::SolveMode::Standard;
  opts.keep_moves = false;

  std::ostringstream os;
  os << "m,n,seed,push,drag,wall_time_ns,bound_ratio\n";
  double ratio_min = 0, ratio_max = 0;
  bool first = true;
  for (const auto& sz : sizes) {
    for (const auto seed : seeds) {
      const torus::Dims dims(sz.m, sz.n);
      torus::ScrambleSpec spec{dims, seed, 10 * dims.cells()};
      torus::FastBoard board(torus::random_sortable_scramble(spec));
      const auto t0 = std::chrono::steady_clock::now();
      const auto rep = torus::solve(board, opts);
      const auto t1 = std::chrono::steady_clock::now();
      const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
      os << sz.m << ',' << sz.n << ',' << seed << ',' << rep.push_count << ',' << rep.drag_count
         << ',' << ns << ',' << rep.bound_ratio << '\n';
      ratio_min = first ? rep.bound_ratio : std::min(ratio_min, rep.bound_ratio);
      ratio_max = first ? rep.bound_ratio : std::max(ratio_max, rep.bound_ratio);
      first = false;
    }
  }
  os << "# bound_ratio_min=" << ratio_min << " bound_ratio_max=" << ratio_max << '\n';
  write_output(csv_path, os.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Torus puzzle solver and verification toolkit"};
  app.require_subcommand(1);

  // solve
  std::string instance_path, out_path;
  std::string engine = "fast", mode = "standard", emit = "moves";
  bool check = false;
  auto* solve = app.add_subcommand("solve", "solve an instance file ('-' for stdin)");
  solve->add_option("instance", instance_path, "instance file")->required();
  solve->add_option("--engine", engine, "board engine")
      ->check(CLI::IsMember({"fast", "naive"}));
  solve->add_option("--mode", mode, "rotation-type discipline")
      ->check(CLI::IsMember({"standard", "restricted"}));
  solve->add_option("--emit", emit, "what to print")
      ->check(CLI::IsMember({"moves", "stats", "both"}));
  solve->add_flag("--check", check, "replay the emitted moves on the naive engine");
  solve->add_option("--out", out_path, "output path (default stdout)");

  // scramble
  int sm = 0, sn = 0;
  std::uint64_t sseed = 1;
  std::int64_t ssteps = -1;
  auto* scramble = app.add_subcommand("scramble", "emit a random sortable instance");
  scramble->add_option("m", sm, "rows")->required();
  scramble->add_option("n", sn, "columns")->required();
  scramble->add_option("--seed", sseed, "PRNG seed (SplitMix64)");
  scramble->add_option("--steps", ssteps, "random unit rotations (default 10*m*n)");

  // verify
  std::string v_instance, v_moves, v_policy = "any";
  auto* verify = app.add_subcommand("verify", "replay a move file against an instance");
  verify->add_option("instance", v_instance, "instance file")->required();
  verify->add_option("moves", v_moves, "move file")->required();
  verify->add_option("--policy", v_policy, "direction policy to check")
      ->check(CLI::IsMember({"any", "canonical", "first-row"}));

  // oracle
  int om = 0, on = 0;
  bool o_reachable = false;
  std::string o_optimal, o_csv;
  std::uint64_t o_cap = torus::BfsOracle::kDefaultCap;
  auto* oracle = app.add_subcommand("oracle", "exhaustive BFS ground truth for small boards");
  oracle->add_option("m", om, "rows")->required();
  oracle->add_option("n", on, "columns")->required();
  oracle->add_flag("--reachable", o_reachable, "report the reachable set from sorted");
  oracle->add_option("--optimal", o_optimal, "instance file: report its optimal push number");
  oracle->add_option("--cap", o_cap, "state-count cap");
  oracle->add_option("--csv", o_csv, "write the depth histogram CSV here");

  // bench
  std::string b_sizes, b_seeds = "1,2,3,4,5", b_mode = "standard", b_csv;
  auto* bench = app.add_subcommand("bench", "solve scrambles across sizes, emit CSV");
  bench->add_option("--sizes", b_sizes, "comma-separated <m>x<n> list")->required();
  bench->add_option("--seeds", b_seeds, "comma-separated seed list");
  bench->add_option("--mode", b_mode, "rotation-type discipline")
      ->check(CLI::IsMember({"standard", "restricted"}));
  bench->add_option("--csv", b_csv, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return cmd_solve(instance_path, engine, mode, emit, check, out_path);
    if (scramble->parsed()) {
      if (ssteps < 0) ssteps = 10ll * sm * sn;
      return cmd_scramble(sm, sn, sseed, ssteps);
    }
    if (verify->parsed()) return cmd_verify(v_instance, v_moves, v_policy);
    if (oracle->parsed()) {
      if (o_reachable == o_optimal.empty()) {
        // exactly one of --reachable / --optimal
        return cmd_oracle(om, on, o_reachable, o_optimal, o_cap, o_csv);
      }
      std::cerr << "error: pass exactly one of --reachable or --optimal\n";
      return kExitParse;
    }
    if (bench->parsed()) return cmd_bench(b_sizes, b_seeds, b_mode, b_csv);
  } catch (const torus::Unsortable& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUnsortable;
  } catch (const torus::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  }
  return kExitParse;
}
