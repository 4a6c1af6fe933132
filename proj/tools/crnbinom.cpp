#include "crnbinom/crnbinom.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace crnbinom;

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::optional<ReactionNetwork> parse_or_report(const std::string& path, const std::string& text) {
  ParseResult parsed = parse_network(text);
  if (!parsed.ok()) {
    for (const ParseError& e : parsed.errors) {
      std::cerr << path << ":" << format_error(e) << "\n";
    }
    return std::nullopt;
  }
  return std::move(parsed.network);
}

BinomialityReport analyze(const ReactionNetwork& net) {
  return partition(net).irreversible.empty() ? test_reversible(net) : test_general(net);
}

struct CheckArgs {
  std::string path;
  std::string format{"text"};
  bool verify_groebner{false};
  bool emit_matrices{false};
  bool emit_generators{false};
};

int cmd_check(const CheckArgs& args) {
  std::optional<std::string> text = read_file(args.path);
  if (!text) {
    std::cerr << args.path << ": cannot read file\n";
    return kExitParse;
  }
  auto t0 = std::chrono::steady_clock::now();
  std::optional<ReactionNetwork> net = parse_or_report(args.path, *text);
  auto t1 = std::chrono::steady_clock::now();
  if (!net) return kExitParse;

  BinomialityReport rep = analyze(*net);
  rep.timings_us["parse"] =
      std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count();

  std::optional<OracleOutcome> oracle;
  if (args.verify_groebner) {
    oracle = oracle_crosscheck(*net, rep);
    if (!oracle->completed) {
      std::cerr << "warning: groebner oracle skipped: " << oracle->error << "\n";
    }
  }

  ReportOptions options{args.emit_matrices, args.emit_generators};
  if (args.format == "json") {
    std::cout << report_to_json(rep, *net, options, oracle).dump(2) << "\n";
  } else {
    std::cout << report_to_text(rep, *net, options, oracle);
  }
  return exit_code_for(rep.verdict.kind);
}

int cmd_ode(const std::string& path) {
  std::optional<std::string> text = read_file(path);
  if (!text) {
    std::cerr << path << ": cannot read file\n";
    return kExitParse;
  }
  std::optional<ReactionNetwork> net = parse_or_report(path, *text);
  if (!net) return kExitParse;
  VariableNames names = names_for(*net);
  std::vector<Polynomial> gens = ode_generators(*net);
  for (std::size_t s = 0; s < gens.size(); ++s) {
    std::cout << "d" << net->species_name(static_cast<int>(s)) << "/dt = "
              << render(gens[s], names) << "\n";
  }
  return 0;
}

int cmd_gen(const GenConfig& config) {
  try {
    std::cout << format_network(generate(config));
  } catch (const GenerationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}

struct BenchArgs {
  GenConfig config{};  // seed unused; seeds run 1..count
  int seeds{10};
  bool verify_groebner{false};
};

std::int64_t percentile_summary(std::vector<std::int64_t>& v, std::size_t which) {
  // which: 0 min, 1 median, 2 max
  std::sort(v.begin(), v.end());
  if (which == 0) return v.front();
  if (which == 2) return v.back();
  return v[v.size() / 2];
}

int cmd_bench(const BenchArgs& args) {
  std::map<std::string, std::vector<std::int64_t>> phases;
  std::map<std::string, int> verdicts;
  int oracle_agreed = 0, oracle_skipped = 0, oracle_disagreed = 0;

  for (int s = 1; s <= args.seeds; ++s) {
    GenConfig cfg = args.config;
    cfg.seed = static_cast<std::uint64_t>(s);
    ReactionNetwork net;
    try {
      net = generate(cfg);
    } catch (const GenerationError& e) {
      std::cerr << e.what() << "\n";
      return kExitUsage;
    }
    std::string text = format_network(net);

    auto t0 = std::chrono::steady_clock::now();
    ParseResult parsed = parse_network(text);
    auto t1 = std::chrono::steady_clock::now();
    if (!parsed.ok()) {
      std::cerr << "bench: generated network failed to parse (seed " << s << ")\n";
      return 1;
    }
    BinomialityReport rep = analyze(*parsed.network);
    std::int64_t parse_us =
        std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count();
    phases["parse"].push_back(parse_us);
    std::int64_t total = parse_us;
    for (const auto& [phase, us] : rep.timings_us) {
      phases[phase].push_back(us);
      total += us;
    }
    phases["total"].push_back(total);
    verdicts[to_string(rep.verdict.kind)]++;

    if (args.verify_groebner) {
      OracleOutcome oracle = oracle_crosscheck(*parsed.network, rep);
      if (!oracle.completed) {
        ++oracle_skipped;
      } else if (!oracle.agrees.has_value() || *oracle.agrees) {
        ++oracle_agreed;
      } else {
        ++oracle_disagreed;
        std::cerr << "bench: oracle disagreement at seed " << s << "\n";
      }
    }
  }

  std::cout << "seeds: " << args.seeds << "  (" << args.config.species_count << " species, "
            << args.config.reaction_count << " reactions, max-stoich "
            << args.config.max_stoich << ", reversible-fraction "
            << args.config.reversible_fraction << ")\n";
  std::cout << "phase        min_us    median_us       max_us\n";
  for (const char* phase : {"parse", "build", "rref", "combine", "total"}) {
    auto it = phases.find(phase);
    if (it == phases.end()) continue;
    std::vector<std::int64_t>& v = it->second;
    std::cout << phase << std::string(9 - std::string(phase).size(), ' ');
    for (std::size_t which = 0; which < 3; ++which) {
      std::string cell = std::to_string(percentile_summary(v, which));
      std::cout << std::string(13 - cell.size(), ' ') << cell;
    }
    std::cout << "\n";
  }
  std::cout << "verdicts:";
  for (const auto& [kind, count] : verdicts) std::cout << " " << kind << "=" << count;
  std::cout << "\n";
  if (args.verify_groebner) {
    std::cout << "oracle: agreed=" << oracle_agreed << " skipped=" << oracle_skipped
              << " disagreed=" << oracle_disagreed << "\n";
  }
  return oracle_disagreed > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unconditional binomiality of mass-action reaction networks"};
  app.require_subcommand(1);

  CheckArgs check_args;
  CLI::App* check = app.add_subcommand(
      "check", "Decide whether the steady-state ideal has a binomial generating set");
  check->add_option("file", check_args.path, "reaction network (.crn)")->required();
  check->add_option("--format", check_args.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  check->add_flag("--verify-groebner", check_args.verify_groebner,
                  "cross-check the verdict with the Buchberger oracle");
  check->add_flag("--emit-matrices", check_args.emit_matrices,
                  "include the coefficient matrix and its reduced form");
  check->add_flag("--emit-generators", check_args.emit_generators,
                  "include the emitted generators");

  std::string ode_path;
  CLI::App* ode = app.add_subcommand("ode", "Print the mass-action ODE right-hand sides");
  ode->add_option("file", ode_path, "reaction network (.crn)")->required();

  GenConfig gen_config;
  CLI::App* gen = app.add_subcommand("gen", "Generate a random network deterministically");
  gen->add_option("--seed", gen_config.seed, "RNG seed")->capture_default_str();
  gen->add_option("--species", gen_config.species_count, "species count")
      ->check(CLI::Range(1, 100000))
      ->capture_default_str();
  gen->add_option("--reactions", gen_config.reaction_count, "reaction count")
      ->check(CLI::Range(1, 100000))
      ->capture_default_str();
  gen->add_option("--max-stoich", gen_config.max_stoich, "largest stoichiometric coefficient")
      ->check(CLI::Range(1, 1000))
      ->capture_default_str();
  gen->add_option("--max-species-per-complex", gen_config.max_species_per_complex,
                  "largest number of distinct species per complex")
      ->check(CLI::Range(1, 1000))
      ->capture_default_str();
  gen->add_option("--reversible-fraction", gen_config.reversible_fraction,
                  "probability that a reaction is reversible")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();

  BenchArgs bench_args;
  bench_args.config.species_count = 52;
  bench_args.config.reaction_count = 86;
  bench_args.config.max_stoich = 1;
  bench_args.config.max_species_per_complex = 3;
  bench_args.config.reversible_fraction = 1.0;
  CLI::App* bench = app.add_subcommand("bench", "Time the pipeline over seeded networks");
  bench->add_option("--species", bench_args.config.species_count, "species count")
      ->check(CLI::Range(1, 100000))
      ->capture_default_str();
  bench->add_option("--reactions", bench_args.config.reaction_count, "reaction count")
      ->check(CLI::Range(1, 100000))
      ->capture_default_str();
  bench->add_option("--max-stoich", bench_args.config.max_stoich,
                    "largest stoichiometric coefficient")
      ->check(CLI::Range(1, 1000))
      ->capture_default_str();
  bench->add_option("--max-species-per-complex", bench_args.config.max_species_per_complex,
                    "largest number of distinct species per complex")
      ->check(CLI::Range(1, 1000))
      ->capture_default_str();
  bench->add_option("--reversible-fraction", bench_args.config.reversible_fraction,
                    "probability that a reaction is reversible")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  bench->add_option("--seeds", bench_args.seeds, "number of seeds (run as 1..N)")
      ->check(CLI::Range(1, 10000))
      ->capture_default_str();
  bench->add_flag("--verify-groebner", bench_args.verify_groebner,
                  "cross-check each verdict with the oracle (small sizes only)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : crnbinom::kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(check_args);
    if (ode->parsed()) return cmd_ode(ode_path);
    if (gen->parsed()) return cmd_gen(gen_config);
    if (bench->parsed()) return cmd_bench(bench_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return crnbinom::kExitUsage;
}
