#include "cli.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "majority/blok.hpp"
#include "majority/evaluation.hpp"
#include "majority/evolution.hpp"
#include "majority/landscape.hpp"
#include "majority/manifest.hpp"
#include "majority/symmetry.hpp"

namespace majority::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kInvalid = 2, kIo = 3, kMismatch = 4 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Files produced by a subcommand. Files marked `to_stdout` are printed when
/// no output directory is given.
struct Output {
  struct File {
    std::string name;
    std::string content;
    bool to_stdout = true;
  };
  std::vector<File> files;
  json parameters = json::object();
  json results = json::object();
  std::uint64_t seed = 0;
};

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Rule rule_arg(const std::string& text) {
  try {
    return parse_rule(text);
  } catch (const ParseError& e) {
    throw InputError("malformed rule '" + text + "': " + e.what());
  }
}

OlympusTemplate template_file(const std::string& path) {
  const std::string text = read_text(path);
  try {
    return OlympusTemplate::parse(text);
  } catch (const ParseError& e) {
    throw InputError("malformed template in '" + path + "': " + e.what());
  }
}

struct NamedInputRule {
  std::string name;
  Rule rule;
};

/// One rule per line, optionally preceded by a name; '#' starts a comment.
std::vector<NamedInputRule> rules_file(const std::string& path) {
  std::istringstream in(read_text(path));
  std::vector<NamedInputRule> rules;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens.size() > 2) throw InputError("too many fields on a line of '" + path + "'");
    const std::string name = tokens.size() == 2 ? tokens[0] : "rule" + std::to_string(rules.size());
    rules.push_back({name, rule_arg(tokens.back())});
  }
  return rules;
}

std::string csv(std::initializer_list<std::string> fields) {
  std::string line;
  for (const auto& f : fields) {
    if (!line.empty()) line += ',';
    line += f;
  }
  return line + '\n';
}

std::string num(double v) { return format_number(v); }
std::string num(std::uint64_t v) { return std::to_string(v); }

std::string walk_csv(const WalkRecord& walk) {
  std::string s = csv({"step", "hex", "fitness", "distance", "neutral_degree"});
  for (std::size_t i = 0; i < walk.rules.size(); ++i) {
    s += csv({num(std::uint64_t{i}), format_rule_hex(walk.rules[i]), num(walk.fitnesses[i].value()),
              num(std::uint64_t{walk.distances[i]}),
              i < walk.degrees.size() ? std::to_string(walk.degrees[i]) : std::string{}});
  }
  return s;
}

/// Neutral-degree column of a walk CSV.
std::vector<double> read_degree_series(const std::string& path) {
  std::istringstream in(read_text(path));
  std::string line;
  if (!std::getline(in, line)) throw InputError("'" + path + "' is empty");
  std::vector<std::string> header;
  {
    std::istringstream h(line);
    for (std::string f; std::getline(h, f, ',');) header.push_back(f);
  }
  const auto col = std::find(header.begin(), header.end(), "neutral_degree");
  if (col == header.end()) throw InputError("'" + path + "' has no neutral_degree column");
  const auto index = static_cast<std::size_t>(col - header.begin());
  std::vector<double> series;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::istringstream row(line);
    for (std::string f; std::getline(row, f, ',');) fields.push_back(f);
    if (index >= fields.size() || fields[index].empty()) {
      throw InputError("'" + path + "' has a row without a neutral degree");
    }
    series.push_back(std::stod(fields[index]));
  }
  return series;
}

std::string histogram_csv(const Histogram& h) {
  std::string s = csv({"bin_low", "bin_high", "count"});
  for (std::size_t b = 0; b < h.counts.size(); ++b) {
    s += csv({num(h.edges[b]), num(h.edges[b + 1]), num(h.counts[b])});
  }
  return s;
}

json histogram_summary(const Histogram& h) {
  return {{"sampler", h.sampler},
          {"total", h.total},
          {"zero_count", h.zero_count},
          {"zero_fraction", h.zero_fraction()},
          {"max_fitness", h.max_value()},
          {"count_045_055", h.count_between(0.45, 0.55)},
          {"acceptance_rate", h.acceptance_rate}};
}

json derivation_report(const std::vector<NamedInputRule>& inputs, const OlympusDerivation& d) {
  json rules = json::array();
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    rules.push_back({{"name", inputs[i].name},
                     {"hex", format_rule_hex(inputs[i].rule)},
                     {"variants", symmetric_variants(inputs[i].rule).size()},
                     {"chosen", symmetry_name(d.chosen[i].symmetry)},
                     {"chosen_hex", format_rule_hex(d.chosen[i].rule)}});
  }
  json optimal = json::array();
  for (const auto& set : d.optimal_sets) {
    json labels = json::array();
    for (auto s : set) labels.push_back(symmetry_name(s));
    optimal.push_back(labels);
  }
  const auto reference = OlympusTemplate::parse(kPublishedOlympusTemplate);
  json diff = json::array();
  for (std::size_t k = 0; k < kTableSize; ++k) {
    if (d.tmpl.symbol(k) != reference.symbol(k)) {
      diff.push_back({{"position", k},
                      {"derived", std::string(1, d.tmpl.symbol(k))},
                      {"reference", std::string(1, reference.symbol(k))}});
    }
  }
  return {{"rules", rules},
          {"combinations", d.combinations},
          {"joint_bits", d.joint_bits},
          {"free_positions", d.tmpl.free_positions().size()},
          {"template", d.tmpl.format()},
          {"optimal_sets", optimal},
          {"reference_template", reference.format()},
          {"reference_fixed", reference.fixed_count()},
          {"reference_mismatches", diff}};
}

EvalParams eval_params(int lattice, int max_steps) {
  if (lattice < 1 || lattice % 2 == 0) throw InputError("--lattice must be odd and positive");
  if (max_steps < 1) throw InputError("--max-steps must be >= 1");
  return {lattice, max_steps};
}

void write_outputs(const fs::path& dir, const std::string& subcommand,
                   const std::vector<std::string>& replay_args, const Output& output,
                   const std::string& started) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory '" + dir.string() + "': " + ec.message());
  RunManifest manifest;
  manifest.subcommand = subcommand;
  manifest.parameters = output.parameters;
  manifest.argv = replay_args;
  manifest.seed = output.seed;
  manifest.results = output.results;
  manifest.started = started;
  for (const auto& f : output.files) {
    std::ofstream out(dir / f.name, std::ios::binary);
    if (!out) throw IoError("cannot write '" + (dir / f.name).string() + "'");
    out << f.content;
    out.close();
    manifest.record_output(dir, f.name);
  }
  manifest.finished = utc_timestamp();
  manifest.write(dir / "manifest.json");
}

/// Drops `--out DIR` / `--out=DIR` so the remaining arguments replay the run.
std::vector<std::string> strip_out(const std::vector<std::string>& args) {
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--out") {
      ++i;
      continue;
    }
    if (args[i].rfind("--out=", 0) == 0) continue;
    kept.push_back(args[i]);
  }
  return kept;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cellular-automata majority landscape toolkit"};
  app.name("majority");
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kToolVersion);

  int threads = 0;
  std::string out_dir;
  app.add_option("--threads", threads, "Cap on worker threads (results do not depend on it)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--out", out_dir, "Write data files and manifest.json to this directory");

  int lattice = kDefaultLattice;
  int max_steps = kDefaultMaxSteps;
  auto add_eval_flags = [&](CLI::App* sub) {
    sub->add_option("--lattice", lattice, "Lattice size (odd)")->capture_default_str();
    sub->add_option("--max-steps", max_steps, "Relaxation budget in time steps")->capture_default_str();
  };

  Output output;
  std::function<void()> action;

  // eval
  auto* eval = app.add_subcommand("eval", "Standard performance of one rule");
  std::string eval_rule;
  std::uint64_t eval_n = kStandardSampleSize;
  std::uint64_t eval_seed = 0;
  eval->add_option("--rule", eval_rule, "Rule as 32 hex or 128 binary characters")->required();
  eval->add_option("--n", eval_n, "Number of ICs")->capture_default_str()->check(CLI::PositiveNumber);
  eval->add_option("--seed", eval_seed, "IC sample seed")->required();
  add_eval_flags(eval);
  eval->callback([&] {
    action = [&] {
      const Rule rule = rule_arg(eval_rule);
      const auto f = standard_performance(rule, eval_n, eval_seed, eval_params(lattice, max_steps));
      output.seed = eval_seed;
      output.parameters = {{"rule", format_rule_hex(rule)}, {"n", eval_n}, {"seed", eval_seed},
                           {"lattice", lattice}, {"max_steps", max_steps}};
      output.results = {{"performance", f.value()}, {"correct", f.correct}};
      output.files.push_back({"eval.csv", csv({"hex", "n", "seed", "performance"}) +
                                              csv({format_rule_hex(rule), num(eval_n), num(eval_seed), num(f.value())})});
    };
  });

  // levels
  auto* levels = app.add_subcommand("levels", "Number of statistically distinguishable fitness levels");
  std::vector<std::uint64_t> levels_n;
  bool levels_values = false;
  levels->add_option("--n", levels_n, "Sample size(s)")->required()->check(CLI::PositiveNumber);
  levels->add_flag("--values", levels_values, "List the chain of level values instead of counts");
  levels->callback([&] {
    action = [&] {
      std::string s = levels_values ? csv({"n", "index", "value"}) : csv({"n", "levels"});
      json counts = json::object();
      for (auto n : levels_n) {
        const auto lv = distinguishable_levels(n);
        counts[std::to_string(n)] = lv.count;
        if (levels_values) {
          for (std::size_t i = 0; i < lv.values.size(); ++i) s += csv({num(n), num(std::uint64_t{i}), num(lv.values[i])});
        } else {
          s += csv({num(n), num(std::uint64_t{lv.count})});
        }
      }
      output.parameters = {{"n", levels_n}, {"values", levels_values}};
      output.results = {{"levels", counts}};
      output.files.push_back({"levels.csv", s});
    };
  });

  // ndeg
  auto* ndeg = app.add_subcommand("ndeg", "Neutral degree of one rule");
  std::string ndeg_rule;
  std::uint64_t ndeg_n = 1000;
  std::uint64_t ndeg_seed = 0;
  ndeg->add_option("--rule", ndeg_rule, "Rule")->required();
  ndeg->add_option("--n", ndeg_n, "Number of ICs")->capture_default_str()->check(CLI::PositiveNumber);
  ndeg->add_option("--seed", ndeg_seed, "IC sample seed")->required();
  add_eval_flags(ndeg);
  ndeg->callback([&] {
    action = [&] {
      const Rule rule = rule_arg(ndeg_rule);
      FitnessCache cache(ndeg_n, ndeg_seed, eval_params(lattice, max_steps));
      const int degree = neutral_degree(rule, cache);
      const auto f = cache.evaluate(rule);
      output.seed = ndeg_seed;
      output.parameters = {{"rule", format_rule_hex(rule)}, {"n", ndeg_n}, {"seed", ndeg_seed},
                           {"lattice", lattice}, {"max_steps", max_steps}};
      output.results = {{"fitness", f.value()}, {"neutral_degree", degree}};
      output.files.push_back({"ndeg.csv", csv({"hex", "n", "seed", "fitness", "neutral_degree"}) +
                                              csv({format_rule_hex(rule), num(ndeg_n), num(ndeg_seed),
                                                   num(f.value()), std::to_string(degree)})});
    };
  });

  // nwalk
  auto* nwalk = app.add_subcommand("nwalk", "Neutral walk (expanding or random)");
  std::string walk_mode = "random";
  std::string walk_start;
  std::uint64_t walk_n = 1000;
  std::size_t walk_steps = 20;
  std::uint64_t walk_seed = 0;
  std::optional<std::uint64_t> walk_rng_seed;
  bool walk_degrees = false;
  bool walk_current_only = false;
  nwalk->add_option("--mode", walk_mode, "expand or random")
      ->check(CLI::IsMember({"expand", "random"}))
      ->capture_default_str();
  nwalk->add_option("--start", walk_start, "Starting rule")->required();
  nwalk->add_option("--n", walk_n, "Number of ICs")->capture_default_str()->check(CLI::PositiveNumber);
  nwalk->add_option("--steps", walk_steps, "Steps of a random walk")->capture_default_str()->check(CLI::PositiveNumber);
  nwalk->add_option("--seed", walk_seed, "IC sample seed")->required();
  nwalk->add_option("--walk-seed", walk_rng_seed, "Seed of the walk's own choices (default: derived from --seed)");
  nwalk->add_flag("--degrees", walk_degrees, "Also measure neutral degrees on an expanding walk");
  nwalk->add_flag("--current-only", walk_current_only,
                  "Require neutrality to the current rule only instead of every visited rule");
  add_eval_flags(nwalk);
  nwalk->callback([&] {
    action = [&] {
      const Rule start = rule_arg(walk_start);
      FitnessCache cache(walk_n, walk_seed, eval_params(lattice, max_steps));
      const std::uint64_t rng_seed = walk_rng_seed.value_or(derive_seed(walk_seed, {1}));
      Rng rng(rng_seed);
      WalkOptions options;
      options.check = walk_current_only ? NeutralityCheck::CurrentOnly : NeutralityCheck::AllVisited;
      options.record_degrees = walk_degrees;
      const WalkRecord walk = walk_mode == "expand" ? expanding_neutral_walk(start, cache, rng, options)
                                                    : random_neutral_walk(start, walk_steps, cache, rng, options);
      output.seed = walk_seed;
      output.parameters = {{"mode", walk_mode},      {"start", format_rule_hex(start)},
                           {"n", walk_n},            {"steps", walk_steps},
                           {"seed", walk_seed},      {"walk_seed", rng_seed},
                           {"degrees", walk_degrees}, {"current_only", walk_current_only},
                           {"lattice", lattice},     {"max_steps", max_steps}};
      json results = {{"length", walk.length()}};
      if (!walk.degrees.empty()) {
        double mean = 0.0;
        for (int d : walk.degrees) mean += d;
        results["mean_neutral_degree"] = mean / static_cast<double>(walk.degrees.size());
      }
      output.results = results;
      output.files.push_back({"walk.csv", walk_csv(walk)});
    };
  });

  // acf
  auto* acf = app.add_subcommand("acf", "Autocorrelation of neutral degree along walks");
  std::vector<std::string> acf_inputs;
  std::size_t acf_lag = 10;
  acf->add_option("--input", acf_inputs, "Walk CSV file(s); estimates are averaged")->required();
  acf->add_option("--max-lag", acf_lag, "Largest lag")->capture_default_str();
  acf->callback([&] {
    action = [&] {
      std::vector<std::vector<double>> series;
      for (const auto& path : acf_inputs) series.push_back(read_degree_series(path));
      std::vector<double> r;
      try {
        r = mean_autocorrelation(series, acf_lag);
      } catch (const std::exception& e) {
        throw InputError(e.what());
      }
      std::string s = csv({"lag", "r"});
      for (std::size_t k = 0; k < r.size(); ++k) s += csv({num(std::uint64_t{k}), num(r[k])});
      std::vector<std::string> digests;
      for (const auto& p : acf_inputs) digests.push_back(sha256_file(p));
      output.parameters = {{"inputs", acf_inputs}, {"input_sha256", digests}, {"max_lag", acf_lag}};
      output.results = {{"r1", r.size() > 1 ? r[1] : 1.0}};
      output.files.push_back({"acf.csv", s});
    };
  });

  // dos
  auto* dos = app.add_subcommand("dos", "Density of states (fitness histogram)");
  std::string dos_sampler = "uniform";
  std::uint64_t dos_samples = 4000;
  std::uint64_t dos_n = 1000;
  std::uint64_t dos_seed = 0;
  MetropolisParams mh;
  std::size_t dos_bins = kDefaultBins;
  std::string dos_subspace;
  dos->add_option("--sampler", dos_sampler, "uniform or mh")
      ->check(CLI::IsMember({"uniform", "mh"}))
      ->capture_default_str();
  dos->add_option("--samples", dos_samples, "Recorded samples")->capture_default_str()->check(CLI::PositiveNumber);
  dos->add_option("--n", dos_n, "ICs per evaluation")->capture_default_str()->check(CLI::PositiveNumber);
  dos->add_option("--seed", dos_seed, "Seed")->required();
  dos->add_option("--temperature", mh.temperature, "Metropolis temperature")->capture_default_str();
  dos->add_option("--burn-in", mh.burn_in, "Metropolis burn-in iterations")->capture_default_str();
  dos->add_option("--thinning", mh.thinning, "Record every k-th Metropolis state")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  dos->add_option("--bins", dos_bins, "Histogram bins over [0,1]")->capture_default_str()->check(CLI::PositiveNumber);
  dos->add_option("--subspace", dos_subspace, "Template file restricting the sampled space");
  add_eval_flags(dos);
  dos->callback([&] {
    action = [&] {
      DosOptions options;
      options.bins = dos_bins;
      options.params = eval_params(lattice, max_steps);
      if (!dos_subspace.empty()) options.subspace = template_file(dos_subspace);
      if (dos_sampler == "mh" && !(mh.temperature > 0.0)) throw InputError("--temperature must be > 0");
      const Histogram h = dos_sampler == "uniform" ? dos_uniform(dos_samples, dos_n, dos_seed, options)
                                                   : dos_metropolis(dos_samples, dos_n, mh, dos_seed, options);
      output.seed = dos_seed;
      output.parameters = {{"sampler", dos_sampler}, {"samples", dos_samples}, {"n", dos_n},
                           {"seed", dos_seed},       {"bins", dos_bins},       {"lattice", lattice},
                           {"max_steps", max_steps}};
      if (dos_sampler == "mh") {
        output.parameters["temperature"] = mh.temperature;
        output.parameters["burn_in"] = mh.burn_in;
        output.parameters["thinning"] = mh.thinning;
      }
      if (options.subspace) output.parameters["subspace"] = options.subspace->format();
      output.results = histogram_summary(h);
      err << "zero_fraction=" << format_number(h.zero_fraction())
          << " max_fitness=" << format_number(h.max_value()) << '\n';
      output.files.push_back({"dos.csv", histogram_csv(h)});
    };
  });

  // olympus
  auto* olympus = app.add_subcommand("olympus", "Symmetry-based subspace of the best known rules");
  olympus->require_subcommand(1);
  auto* derive = olympus->add_subcommand("derive", "Search symmetric variants for the most joint bits");
  std::string derive_rules;
  derive->add_option("--rules", derive_rules, "File with one rule per line (optionally 'name hex')")->required();
  derive->callback([&] {
    action = [&] {
      const auto inputs = rules_file(derive_rules);
      if (inputs.empty()) throw InputError("'" + derive_rules + "' contains no rules");
      std::vector<Rule> rules;
      for (const auto& r : inputs) rules.push_back(r.rule);
      const OlympusDerivation d = derive_olympus(rules);
      const json report = derivation_report(inputs, d);
      output.parameters = {{"rules", report["rules"]}};
      output.results = {{"joint_bits", d.joint_bits}, {"free_positions", d.tmpl.free_positions().size()},
                        {"reference_mismatches", report["reference_mismatches"].size()}};
      output.files.push_back({"olympus.json", report.dump(2) + "\n"});
      output.files.push_back({"template.txt", d.tmpl.format() + "\n", false});
    };
  });
  auto* check = olympus->add_subcommand("check", "Test whether a rule lies in a template's subspace");
  std::string check_rule;
  std::string check_template;
  check->add_option("--rule", check_rule, "Rule")->required();
  check->add_option("--template", check_template, "Template file")->required();
  check->callback([&] {
    action = [&] {
      const Rule rule = rule_arg(check_rule);
      const OlympusTemplate tmpl = template_file(check_template);
      std::string violation;
      try {
        project(rule, tmpl);
      } catch (const std::invalid_argument& e) {
        violation = e.what();
      }
      const bool member = violation.empty();
      output.parameters = {{"rule", format_rule_hex(rule)}, {"template", tmpl.format()}};
      output.results = {{"member", member}};
      std::string first;
      if (!member) {
        for (std::size_t k = 0; k < kTableSize; ++k) {
          if (!tmpl.is_free(k) && (tmpl.symbol(k) == '1') != rule[k]) {
            first = std::to_string(k);
            break;
          }
        }
      }
      output.files.push_back({"check.csv", csv({"hex", "member", "first_violation"}) +
                                               csv({format_rule_hex(rule), member ? "true" : "false", first})});
    };
  });

  // ga
  auto* ga = app.add_subcommand("ga", "Neutrality-aware genetic algorithm inside a template subspace");
  std::string ga_template;
  GAConfig ga_cfg;
  std::optional<double> ga_mutation;
  ga->add_option("--template", ga_template, "Template file")->required();
  ga->add_option("--pop", ga_cfg.population, "Population size")->capture_default_str();
  ga->add_option("--gens", ga_cfg.generations, "Generations")->capture_default_str();
  ga->add_option("--n-gen", ga_cfg.n_gen, "ICs per generation")->capture_default_str();
  ga->add_option("--n-final", ga_cfg.n_final, "ICs for the final ranking")->capture_default_str();
  ga->add_option("--mutation", ga_mutation, "Per-bit mutation probability (default 2/free bits)");
  ga->add_option("--crossover", ga_cfg.crossover, "Uniform crossover probability")->capture_default_str();
  ga->add_option("--elitism", ga_cfg.elitism, "Individuals copied unchanged")->capture_default_str();
  ga->add_option("--seed", ga_cfg.seed, "Seed")->required();
  add_eval_flags(ga);
  ga->callback([&] {
    action = [&] {
      if (out_dir.empty()) throw InputError("ga requires --out DIR");
      ga_cfg.tmpl = template_file(ga_template);
      ga_cfg.mutation = ga_mutation;
      ga_cfg.params = eval_params(lattice, max_steps);
      try {
        ga_cfg.validate();
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
      }
      const GAResult result = run_ga(ga_cfg);
      std::string trace = csv({"generation", "best", "mean"});
      std::string champions = csv({"generation", "hex", "best", "best_so_far"});
      for (std::size_t g = 0; g < result.trace.size(); ++g) {
        trace += csv({num(std::uint64_t{g}), num(result.trace[g].best), num(result.trace[g].mean)});
        champions += csv({num(std::uint64_t{g}), format_rule_hex(result.trace[g].best_rule),
                          num(result.trace[g].best), num(result.best_so_far[g])});
      }
      output.seed = ga_cfg.seed;
      output.parameters = {{"template", ga_cfg.tmpl.format()},
                           {"population", ga_cfg.population},
                           {"generations", ga_cfg.generations},
                           {"n_gen", ga_cfg.n_gen},
                           {"n_final", ga_cfg.n_final},
                           {"mutation", ga_cfg.mutation_rate()},
                           {"crossover", ga_cfg.crossover},
                           {"elitism", ga_cfg.elitism},
                           {"tournament_size", 2},
                           {"seed", ga_cfg.seed},
                           {"lattice", lattice},
                           {"max_steps", max_steps}};
      output.results = {{"best", format_rule_hex(result.best_rule)},
                        {"best_performance", result.best_final.value()},
                        {"best_n", result.best_final.n}};
      output.files.push_back({"trace.csv", trace});
      output.files.push_back({"best.txt", format_rule_hex(result.best_rule) + "\n"});
      output.files.push_back({"champions.csv", champions});
    };
  });

  // rerun
  auto* rerun = app.add_subcommand("rerun", "Replay a manifest and compare output digests");
  std::string rerun_manifest;
  rerun->add_option("--manifest", rerun_manifest, "manifest.json of an earlier run")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (threads > 0) omp_set_num_threads(threads);

  try {
    if (rerun->parsed()) {
      if (out_dir.empty()) throw InputError("rerun requires --out DIR");
      const RunManifest manifest = RunManifest::read(rerun_manifest);
      std::vector<std::string> replay = manifest.argv;
      replay.push_back("--out");
      replay.push_back(out_dir);
      std::ostringstream sink;
      const int code = dispatch(replay, sink, err);
      if (code != kOk) return code;
      const RunManifest again = RunManifest::read(fs::path(out_dir) / "manifest.json");
      bool same = manifest.outputs.size() == again.outputs.size();
      out << csv({"file", "expected", "actual", "match"});
      for (const auto& [name, digest] : manifest.outputs) {
        const auto it = again.outputs.find(name);
        const std::string actual = it == again.outputs.end() ? "" : it->second;
        same = same && actual == digest;
        out << csv({name, digest, actual, actual == digest ? "true" : "false"});
      }
      return same ? kOk : kMismatch;
    }

    const std::string started = utc_timestamp();
    if (!action) {
      err << "error: no subcommand given\n";
      return kUsage;
    }
    action();
    std::string subcommand = app.get_subcommands().front()->get_name();
    if (olympus->parsed()) subcommand += " " + olympus->get_subcommands().front()->get_name();
    if (!out_dir.empty()) {
      write_outputs(out_dir, subcommand, strip_out(args), output, started);
    } else {
      for (const auto& f : output.files) {
        if (f.to_stdout) out << f.content;
      }
    }
    return kOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  }
}

}  // namespace majority::cli
