// bioclass: correlation-based similarity experiments from the command line.
//
//   bioclass figure 1|2|3      preset error sweeps (CSV + gnuplot table)
//   bioclass sweep             custom sweep over W, M or L
//   bioclass matrices          C, Omega and Eps for one realization
//   bioclass opinions          linear opinion model, empirical vs predicted error
//   bioclass gen-refs          the eight reference sequences as FASTA
//
// Exit status: 0 success, 1 invalid arguments or domain error, 2 I/O error.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bioclass/bioclass.hpp"
#include "bioclass/config_file.hpp"

namespace {

using namespace bioclass;

constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::uint64_t seed = 42;
  std::string out;
  std::string config;
  unsigned threads = 0;
};

const std::set<std::string> kConfigKeys = {"N", "M", "L", "W", "realizations", "grid", "var", "seed", "lambda",
                                           "component_range", "k_policy"};

KeyValueConfig load_config(const Globals& g) {
  if (g.config.empty()) return {};
  std::ifstream in(g.config);
  if (!in) throw IoError("cannot read config file '" + g.config + "'");
  return KeyValueConfig::parse(in, kConfigKeys);
}

std::uint64_t effective_seed(const Globals& g, const KeyValueConfig& cfg, bool seed_flag_given) {
  std::uint64_t seed = g.seed;
  if (!seed_flag_given) cfg.apply("seed", seed);
  return seed;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw IoError("cannot write '" + path + "'");
  return os;
}

void finish(std::ofstream& os, const std::string& path) {
  os.flush();
  if (!os) throw IoError("error writing '" + path + "'");
}

// Writes to `path`, or stdout when empty.
template <typename Emit>
void emit(const std::string& path, Emit&& body) {
  if (path.empty()) {
    body(std::cout);
    std::cout.flush();
    return;
  }
  auto os = open_output(path);
  body(os);
  finish(os, path);
}

void apply_experiment_keys(const KeyValueConfig& cfg, SweepConfig& sweep) {
  cfg.apply("N", sweep.fixed.samples);
  cfg.apply("M", sweep.fixed.probes);
  cfg.apply("L", sweep.fixed.probe_length);
  cfg.apply("W", sweep.fixed.width);
  cfg.apply("realizations", sweep.realizations);
  cfg.apply_list("grid", sweep.grid);
  if (cfg.has("var")) {
    const auto v = parse_sweep_var(cfg.raw("var"));
    if (!v) throw ConfigError("invalid value '" + cfg.raw("var") + "' for 'var' (expected W, M or L)");
    sweep.var = *v;
  }
}

std::string plot_data_path(const std::string& csv) {
  std::filesystem::path p(csv);
  if (p.extension() == ".csv") return p.replace_extension(".dat").string();
  return csv + ".dat";
}

void write_sweep_outputs(const SweepResult& result, const std::string& out) {
  auto csv = open_output(out);
  const std::string dat_path = plot_data_path(out);
  auto dat = open_output(dat_path);
  write_sweep_csv(csv, result);
  write_sweep_plot_data(dat, result);
  finish(csv, out);
  finish(dat, dat_path);
  std::cerr << "wrote " << out << " and " << dat_path << " (" << result.rows.size() << " rows)\n";
}

int cmd_figure(int which, const Globals& g, bool seed_given) {
  const auto cfg = load_config(g);
  SweepConfig sweep = figure_preset(static_cast<Figure>(which));
  apply_experiment_keys(cfg, sweep);
  sweep.base_seed = effective_seed(g, cfg, seed_given);
  sweep.validate();
  const std::string out = g.out.empty() ? "figure" + std::to_string(which) + ".csv" : g.out;
  // Fail on an unwritable destination before spending minutes on the sweep.
  open_output(out);
  write_sweep_outputs(run_sweep(sweep, g.threads), out);
  return 0;
}

struct SweepArgs {
  std::string var;
  std::vector<std::size_t> grid;
  std::string fixed;
  std::size_t realizations = 0;
};

int cmd_sweep(const SweepArgs& args, const Globals& g, bool seed_given) {
  const auto cfg = load_config(g);
  SweepConfig sweep;
  sweep.fixed = {10, 500, 30, 200};
  sweep.realizations = 40;
  apply_experiment_keys(cfg, sweep);
  if (!args.var.empty()) {
    const auto v = parse_sweep_var(args.var);
    if (!v) throw ConfigError("--var must be W, M or L");
    sweep.var = *v;
  }
  if (!args.grid.empty()) sweep.grid = args.grid;
  if (args.realizations > 0) sweep.realizations = args.realizations;
  if (!args.fixed.empty()) {
    std::istringstream fixed_lines;
    std::string text = args.fixed;
    std::replace(text.begin(), text.end(), ',', '\n');
    fixed_lines.str(text);
    const auto fixed = KeyValueConfig::parse(fixed_lines, {"N", "M", "L", "W"});
    fixed.apply("N", sweep.fixed.samples);
    fixed.apply("M", sweep.fixed.probes);
    fixed.apply("L", sweep.fixed.probe_length);
    fixed.apply("W", sweep.fixed.width);
  }
  sweep.base_seed = effective_seed(g, cfg, seed_given);
  sweep.validate();
  const std::string out = g.out.empty() ? "sweep.csv" : g.out;
  open_output(out);
  write_sweep_outputs(run_sweep(sweep, g.threads), out);
  return 0;
}

int cmd_matrices(std::size_t w, std::size_t l, std::size_t m, const Globals& g, bool seed_given) {
  const auto cfg = load_config(g);
  ExperimentParams params{10, m, l, w};
  cfg.apply("W", params.width);
  cfg.apply("L", params.probe_length);
  cfg.apply("M", params.probes);
  params.validate();
  const auto report = run_realization(params, effective_seed(g, cfg, seed_given));

  const std::pair<const char*, const Eigen::MatrixXd*> blocks[] = {
      {"C", &report.correlation}, {"Omega", &report.overlap}, {"Eps", &report.error}};
  if (g.out.empty()) {
    for (std::size_t b = 0; b < 3; ++b) {
      if (b > 0) std::cout << '\n';
      std::cout << "# " << blocks[b].first << '\n';
      write_matrix_csv(std::cout, *blocks[b].second);
    }
    return 0;
  }
  for (const auto& [name, mat] : blocks) {
    const std::string path = g.out + "_" + name + ".csv";
    emit(path, [&](std::ostream& os) { write_matrix_csv(os, *mat); });
  }
  if (!report.zero_variance_samples.empty()) {
    std::cerr << "warning: " << report.zero_variance_samples.size() << " sample(s) with constant match vector\n";
  }
  return 0;
}

int cmd_opinions(long long m, long long n, long long l, const std::string& policy_name, const Globals& g,
                 bool seed_given) {
  const auto cfg = load_config(g);
  cfg.apply("M", m);
  cfg.apply("N", n);
  cfg.apply("L", l);
  if (m < 1 || n < 1 || l < 1) throw ConfigError("M, N and L must all be >= 1");
  auto model = linear::ModelConfig::uniform(m, n, l, effective_seed(g, cfg, seed_given));
  cfg.apply("lambda", model.lambda);
  cfg.apply("component_range", model.component_range);
  std::string policy_text = policy_name;
  if (cfg.has("k_policy")) policy_text = cfg.raw("k_policy");
  linear::KPolicy policy;
  if (policy_text == "L") {
    policy = linear::KPolicy::dimensions;
  } else if (policy_text == "range") {
    policy = linear::KPolicy::range_calibrated;
  } else {
    throw ConfigError("k policy must be 'L' or 'range'");
  }
  model.validate();
  const auto ex = linear::run_experiment(model, policy);
  const auto th = m >= 2 ? std::optional(linear::mz_thresholds(m, l)) : std::nullopt;

  emit(g.out, [&](std::ostream& os) {
    os << "M = " << m << "\nN = " << n << "\nL = " << l << "\nseed = " << model.base_seed << '\n'
       << "lambda = " << format_real(model.lambda) << "\nk = " << format_real(ex.k) << '\n'
       << "gamma = " << format_real(linear::gamma(model)) << '\n'
       << "empirical_error = " << format_real(ex.empirical) << '\n'
       << "theoretical_error = " << format_real(ex.theoretical) << '\n'
       << "ratio = " << format_real(ex.ratio()) << '\n';
    if (th) os << "p1 = " << format_real(th->percolation) << "\np2 = " << format_real(th->rigidity) << '\n';
    if (ex.correlation.degenerate()) os << "zero_variance_rows = " << ex.correlation.zero_variance_rows.size() << '\n';
  });
  return 0;
}

int cmd_gen_refs(std::size_t w, const Globals& g, bool seed_given) {
  const auto cfg = load_config(g);
  cfg.apply("W", w);
  if (w < 6) throw DomainError("gen-refs: W must be >= 6");
  RandomStream rng(derive_seed(effective_seed(g, cfg, seed_given), kFamilyTag));
  const auto family = reference_family(w, rng);
  std::vector<FastaRecord> records;
  for (std::size_t i = 0; i < ReferenceFamily::kSize; ++i) records.push_back({"seq" + std::to_string(i), family[i]});
  emit(g.out, [&](std::ostream& os) { write_fasta(os, records); });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Correlation-based similarity experiments on random probe arrays"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  auto* seed_opt = app.add_option("--seed", g.seed, "Base seed (64-bit)")->default_val(42);
  app.add_option("--out", g.out, "Output path (prefix for `matrices`)");
  app.add_option("--config", g.config, "File of `key = value` overrides");
  app.add_option("--threads", g.threads, "Worker threads for sweeps (0 = all cores)")->default_val(0);

  int figure = 0;
  auto* fig = app.add_subcommand("figure", "Reproduce an error sweep preset");
  fig->add_option("which", figure, "1: error vs W, 2: error vs M, 3: error vs L")
      ->required()
      ->check(CLI::IsMember({1, 2, 3}));

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Custom sweep over one parameter");
  sweep->add_option("--var", sweep_args.var, "Swept variable: W, M or L");
  sweep->add_option("--grid", sweep_args.grid, "Comma-separated grid values")->delimiter(',');
  sweep->add_option("--fixed", sweep_args.fixed, "Fixed parameters, e.g. L=30,M=500,W=200");
  sweep->add_option("--realizations", sweep_args.realizations, "Realizations per grid value");

  std::size_t mw = 200, ml = 30, mm = 500;
  auto* matrices = app.add_subcommand("matrices", "Dump C, Omega and Eps for one realization");
  matrices->add_option("-W,--width", mw, "Sample length W")->default_val(200);
  matrices->add_option("-L,--probe-length", ml, "Probe length L")->default_val(30);
  matrices->add_option("-M,--probes", mm, "Number of probes M")->default_val(500);

  long long om = 200, on = 200, ol = 2;
  std::string k_policy = "L";
  auto* opinions = app.add_subcommand("opinions", "Linear opinion model prediction error");
  opinions->add_option("-M,--individuals", om, "Individuals M")->default_val(200);
  opinions->add_option("-N,--products", on, "Products N")->default_val(200);
  opinions->add_option("-L,--dimensions", ol, "Hidden dimensions L")->default_val(2);
  opinions->add_option("--k-policy", k_policy, "k = L ('L') or range-calibrated ('range')")->default_val("L");

  std::size_t rw = 200;
  auto* refs = app.add_subcommand("gen-refs", "Write the eight reference sequences as FASTA");
  refs->add_option("-W,--width", rw, "Sequence length W")->default_val(200);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const bool seed_given = seed_opt->count() > 0;
  try {
    if (*fig) return cmd_figure(figure, g, seed_given);
    if (*sweep) return cmd_sweep(sweep_args, g, seed_given);
    if (*matrices) return cmd_matrices(mw, ml, mm, g, seed_given);
    if (*opinions) return cmd_opinions(om, on, ol, k_policy, g, seed_given);
    if (*refs) return cmd_gen_refs(rw, g, seed_given);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
