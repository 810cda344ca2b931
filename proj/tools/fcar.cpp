// Command-line front end.
//
// Subcommands: lattice (JSON export + summary line), score (per-concept
// index CSV), eval (split/correlate/time harness, three CSVs), gen
// (seeded coin-toss context). Exit codes: 0 success, 1 input error,
// 2 resource cap exceeded, 3 configuration error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "fcar/context_io.hpp"
#include "fcar/eval.hpp"
#include "fcar/generate.hpp"
#include "fcar/lattice.hpp"
#include "fcar/relevance.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_input_error = 1;
constexpr int exit_resource_cap = 2;
constexpr int exit_config_error = 3;

std::optional<fcar::ContextFormat> parse_format(const std::string& format) {
  if (format.empty()) return std::nullopt;
  if (format == "cxt") return fcar::ContextFormat::cxt;
  if (format == "csv") return fcar::ContextFormat::csv;
  throw fcar::ConfigError("unknown format '" + format + "' (expected cxt or csv)");
}

struct CommonOptions {
  std::string input;
  std::string format;
  std::string output;
  std::string index = "cr";
  std::string activation = "arithmetic";
  std::string stability_method;
  double ratio = 0.5;
  std::uint64_t seed = 42;
  std::size_t max_concepts = 5'000'000;
  std::size_t max_stability_extent = fcar::default_stability_extent_cap;
  unsigned threads = 1;
};

void add_input_flags(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("input", opt.input, "context file (.cxt or .csv)")->required();
  cmd->add_option("--format", opt.format, "input format: cxt or csv (default: by extension)");
}

void add_lattice_flags(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--max-concepts", opt.max_concepts,
                  "abort when the lattice exceeds this many concepts");
  cmd->add_option("--threads", opt.threads, "worker threads (default 1)");
}

int run_lattice(const CommonOptions& opt) {
  const fcar::FormalContext ctx = fcar::load_context(opt.input, parse_format(opt.format));
  const fcar::ConceptLattice lat =
      fcar::build_lattice(ctx, {opt.max_concepts, 10'000, opt.threads});
  const std::string path = opt.output.empty() ? "lattice.json" : opt.output;
  fcar::save_text_file(path, fcar::lattice_to_json(lat));
  std::cout << ctx.object_count() << ' ' << ctx.attribute_count() << ' ' << lat.size() << '\n';
  return exit_ok;
}

int run_score(const CommonOptions& opt) {
  // Validated even though the full table is always emitted, so a typo
  // fails loudly instead of silently scoring something else.
  (void)fcar::index_from_name(opt.index);
  const fcar::Activation activation = fcar::activation_from_name(opt.activation);
  const fcar::StabilityMethod method =
      fcar::stability_method_from_name(opt.stability_method.empty() ? "dp" : opt.stability_method);

  const fcar::FormalContext ctx = fcar::load_context(opt.input, parse_format(opt.format));
  const fcar::ConceptLattice lat =
      fcar::build_lattice(ctx, {opt.max_concepts, 10'000, opt.threads});
  const auto rows = fcar::score_all_concepts(ctx, lat, activation, method,
                                             opt.max_stability_extent, opt.threads);

  const std::string path = opt.output.empty() ? "scores.csv" : opt.output;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  fcar::write_score_csv(rows, out);
  std::cout << "wrote " << rows.size() << " rows to " << path << '\n';
  return exit_ok;
}

int run_eval(const CommonOptions& opt) {
  fcar::ExperimentConfig config;
  config.index = fcar::index_from_name(opt.index);
  config.activation = fcar::activation_from_name(opt.activation);
  config.stability_method = fcar::stability_method_from_name(
      opt.stability_method.empty() ? "brute" : opt.stability_method);
  config.ratio = opt.ratio;
  config.seed = opt.seed;
  config.max_concepts = opt.max_concepts;
  config.max_stability_extent = opt.max_stability_extent;
  config.threads = opt.threads;

  const fcar::FormalContext ctx = fcar::load_context(opt.input, parse_format(opt.format));
  const fcar::EvalReport report = fcar::run_experiment(ctx, config);

  const std::string prefix = opt.output.empty() ? "eval" : opt.output;
  auto write = [&](const std::string& suffix, auto writer) {
    const std::string path = prefix + suffix;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    writer(report, out);
  };
  write("_scores.csv", fcar::write_eval_scores_csv);
  write("_summary.csv", fcar::write_eval_summary_csv);
  write("_timings.csv", fcar::write_eval_timings_csv);

  if (report.n_dropped > 0)
    std::cerr << report.n_dropped
              << " shared concept(s) dropped: extent above the brute-force stability cap\n";

  std::cout << to_string(report.index) << ' ' << report.score_rows.size() << ' ';
  if (report.xi)
    std::cout << *report.xi;
  else
    std::cout << "undefined";
  std::cout << ' ';
  if (report.tau)
    std::cout << *report.tau;
  else
    std::cout << "undefined";
  std::cout << '\n';
  return exit_ok;
}

struct GenOptions {
  std::size_t objects = 0;
  std::size_t attrs = 0;
  double density = 0.5;
  std::uint64_t seed = 42;
  std::string output;
};

int run_gen(const GenOptions& opt) {
  const fcar::FormalContext ctx =
      fcar::cointoss_context(opt.objects, opt.attrs, opt.density, opt.seed);
  const std::string path = opt.output.empty() ? "context.cxt" : opt.output;
  fcar::save_text_file(path, fcar::write_cxt(ctx));
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"formal concept analysis toolkit: lattices, relevance and stability indices"};
  app.require_subcommand(1);

  CommonOptions opt;
  GenOptions gen_opt;

  CLI::App* lattice = app.add_subcommand("lattice", "build the concept lattice, write JSON");
  add_input_flags(lattice, opt);
  add_lattice_flags(lattice, opt);
  lattice->add_option("--output", opt.output, "output path (default lattice.json)");

  CLI::App* score = app.add_subcommand("score", "score every concept, write CSV");
  add_input_flags(score, opt);
  add_lattice_flags(score, opt);
  score->add_option("--index", opt.index, "cr or stability (validated; both are emitted)");
  score->add_option("--activation", opt.activation,
                    "arithmetic, geometric, harmonic, product, min or max");
  score->add_option("--stability-method", opt.stability_method,
                    "brute or dp (default dp; brute leaves over-cap cells empty)");
  score->add_option("--max-stability-extent", opt.max_stability_extent,
                    "brute-force stability extent cap (default 24)");
  score->add_option("--output", opt.output, "output path (default scores.csv)");

  CLI::App* eval = app.add_subcommand("eval", "split, score both halves, correlate and time");
  add_input_flags(eval, opt);
  add_lattice_flags(eval, opt);
  eval->add_option("--index", opt.index, "cr or stability (default cr)");
  eval->add_option("--activation", opt.activation, "activation for cr (default arithmetic)");
  eval->add_option("--stability-method", opt.stability_method,
                   "brute or dp for the stability index (default brute)");
  eval->add_option("--max-stability-extent", opt.max_stability_extent,
                   "brute-force stability extent cap (default 24)");
  eval->add_option("--ratio", opt.ratio, "reference share of objects, in (0,1) (default 0.5)");
  eval->add_option("--seed", opt.seed, "split shuffle seed (default 42)");
  eval->add_option("--output", opt.output,
                   "output prefix (default eval): <prefix>_scores.csv, _summary.csv, _timings.csv");

  CLI::App* gen = app.add_subcommand("gen", "generate a seeded coin-toss context");
  gen->add_option("--objects", gen_opt.objects, "object count")->required();
  gen->add_option("--attrs", gen_opt.attrs, "attribute count")->required();
  gen->add_option("--density", gen_opt.density, "incidence probability in [0,1] (default 0.5)");
  gen->add_option("--seed", gen_opt.seed, "generator seed (default 42)");
  gen->add_option("--output", gen_opt.output, "output path (default context.cxt)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_input_error;
  }

  try {
    if (lattice->parsed()) return run_lattice(opt);
    if (score->parsed()) return run_score(opt);
    if (eval->parsed()) return run_eval(opt);
    return run_gen(gen_opt);
  } catch (const fcar::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_config_error;
  } catch (const fcar::ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_resource_cap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_input_error;
  }
}
