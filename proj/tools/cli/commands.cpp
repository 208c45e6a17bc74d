// Copyright 2026 The tnps Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "tnps/counting.hpp"
#include "tnps/error.hpp"
#include "tnps/model.hpp"
#include "tnps/model_io.hpp"
#include "tnps/search.hpp"
#include "tnps/search_io.hpp"
#include "tnps/templates.hpp"
#include "tnps/tensor_io.hpp"

namespace tnps::cli {

namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kSynthStream = 0x73796e74;  // "synt"

Json number_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

Json big_to_json(const BigInt& x) {
  if (x <= std::numeric_limits<std::uint64_t>::max()) return Json(static_cast<std::uint64_t>(x));
  return Json(x.str());
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

std::shared_ptr<const TemplateGraph> graph_for(const std::string& spec, std::size_t order) {
  return std::make_shared<const TemplateGraph>(templates::from_spec(spec, order));
}

struct SearchRun {
  SearchResult result;
  std::optional<double> eff;
};

// Runs one search from a merged search config (c2 already resolved).
SearchRun run_search(const Json& cfg, std::ostream& err) {
  const fs::path input = cfg.at("input").get<std::string>();
  if (input.empty()) throw InvalidArgument("search: --input is required");
  const DenseTensor x = load_tensor(input);
  const auto graph = graph_for(cfg.at("template").get<std::string>(), x.order());

  std::optional<DenseTensor> mask;
  if (const auto m = cfg.at("mask").get<std::string>(); !m.empty()) mask = load_tensor(m);
  std::optional<TnStructure> truth;
  if (const auto t = cfg.at("truth").get<std::string>(); !t.empty()) truth = load_structure(t);

  const std::string algo = cfg.at("algo").get<std::string>();
  SearchRun run;
  if (algo == "tnls") {
    run.result = tnls(x, graph, search_config_from(cfg), mask ? &*mask : nullptr);
  } else if (algo == "ga") {
    run.result = tnga_plus(x, graph, ga_config_from(cfg), mask ? &*mask : nullptr);
  } else {
    throw InvalidArgument("search: unknown algo '" + algo + "' (expected tnls or ga)");
  }
  if (truth) run.eff = efficiency(run.result.best, *truth, x.shape());

  err << algo << ": loss " << fmt(run.result.loss) << ", rse " << fmt(run.result.rse)
      << ", evaluations " << run.result.evaluations << " (best at "
      << run.result.evaluations_to_best << ")";
  if (run.eff) err << ", eff " << fmt(*run.eff);
  err << "\n";
  return run;
}

// Resolves order-dependent defaults in place.
void resolve_search(Json& cfg, std::size_t order) {
  if (cfg.at("c2").is_null()) cfg["c2"] = default_c2(order);
}

// Formats with a natural size (ht, mera, peps) keep it when n is unset;
// trees default to 7 vertices and chains or rings to order 4.
std::optional<std::size_t> synth_order(const Json& cfg) {
  if (!cfg.at("n").is_null()) return cfg.at("n").get<std::size_t>();
  std::string name = cfg.at("format").get<std::string>();
  if (name.find_first_of(": ") != std::string::npos) return std::nullopt;
  std::transform(name.begin(), name.end(), name.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (name == "ht" || name == "mera" || name == "peps" || name == "lattice") return std::nullopt;
  if (name == "tree" || name == "ttree") return 7;
  return 4;
}

std::size_t tensor_order(const Json& cfg) {
  const fs::path input = cfg.at("input").get<std::string>();
  if (input.empty()) throw InvalidArgument("search: --input is required");
  return load_tensor(input).order();
}

double median(std::vector<double> v) {
  if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(v.begin(), v.end());
  const std::size_t h = v.size() / 2;
  return v.size() % 2 ? v[h] : 0.5 * (v[h - 1] + v[h]);
}

}  // namespace

int cmd_search(Json cfg, std::ostream& out, std::ostream& err) {
  resolve_search(cfg, tensor_order(cfg));
  const fs::path dir = cfg.at("out").get<std::string>();
  if (!dir.empty()) write_text_file(dir / "config.json", cfg.dump(2) + "\n");
  const SearchRun run = run_search(cfg, err);
  const std::uint64_t seed = cfg.at("seed").get<std::uint64_t>();
  if (!dir.empty()) save_search(dir, run.result, seed, run.eff);
  out << result_to_json(run.result, seed, run.eff);
  if (!std::isfinite(run.result.loss)) {
    err << "search failed: every fit diverged\n";
    return kSearchFailed;
  }
  return kOk;
}

int cmd_count(const Json& cfg, std::ostream& out, std::ostream&) {
  std::optional<std::size_t> n;
  if (!cfg.at("n").is_null()) n = cfg.at("n").get<std::size_t>();
  const TemplateGraph g = templates::from_spec(cfg.at("template").get<std::string>(), n);
  const SpaceCount c = count_space(g, cfg.at("rank_max").get<std::size_t>(),
                                   cfg.at("aut_limit").get<std::size_t>());
  Json j;
  j["template"] = templates::spec_of(g);
  j["n"] = g.num_vertices();
  j["edges"] = g.num_edges();
  j["rank_max"] = cfg.at("rank_max");
  j["exact"] = big_to_json(c.exact);
  j["aut_size"] = big_to_json(c.aut_size);
  j["class_size"] = big_to_json(c.class_size);
  j["lower"] = c.lower ? number_or_null(*c.lower) : Json(nullptr);
  j["upper"] = c.upper ? number_or_null(*c.upper) : Json(nullptr);
  j["log_lower"] = c.log_bounds ? Json(c.log_bounds->log_lower) : Json(nullptr);
  j["log_upper"] = c.log_bounds ? Json(c.log_bounds->log_upper) : Json(nullptr);
  out << j.dump(2) << "\n";
  return c.log_bounds ? kOk : kInvalid;
}

int cmd_synth(const Json& cfg, std::ostream& out, std::ostream& err) {
  const auto graph = std::make_shared<const TemplateGraph>(
      templates::from_spec(cfg.at("format").get<std::string>(), synth_order(cfg)));
  const auto ranks = cfg.at("ranks").get<std::vector<int>>();
  Rng rng(derive_seed({cfg.at("seed").get<std::uint64_t>(), kSynthStream}));
  const GroundTruth gt = generate_synthetic(graph, cfg.at("dim").get<std::size_t>(), ranks, rng,
                                            cfg.at("core_std").get<double>());
  const fs::path dir = cfg.at("out").get<std::string>();
  if (dir.empty()) throw InvalidArgument("synth: --out is required");
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  save_tensor(dir / "tensor.tnsb", gt.tensor);
  save_structure(dir / "truth.json", gt.structure);
  save_model(dir / "truth_model", gt.model());
  Json j{{"tensor", (dir / "tensor.tnsb").string()},
         {"truth", (dir / "truth.json").string()},
         {"shape", gt.tensor.shape()},
         {"param_count", gt.param_count}};
  out << j.dump(2) << "\n";
  err << "synth: " << templates::spec_of(*graph) << " tensor of shape "
      << shape_to_string(gt.tensor.shape()) << " written to " << dir.string() << "\n";
  return kOk;
}

int cmd_fit(const Json& cfg, std::ostream& out, std::ostream& err) {
  const fs::path input = cfg.at("input").get<std::string>();
  const fs::path structure = cfg.at("structure").get<std::string>();
  if (input.empty() || structure.empty())
    throw InvalidArgument("fit: --input and --structure are required");
  const DenseTensor x = load_tensor(input);
  const TnStructure s = load_structure(structure);
  std::optional<DenseTensor> mask;
  if (const auto m = cfg.at("mask").get<std::string>(); !m.empty()) mask = load_tensor(m);

  FitConfig fc = fit_config_from(cfg.at("fit"));
  fc.seed = cfg.at("seed").get<std::uint64_t>();
  const FitResult r = fit(x, s, fc, mask ? &*mask : nullptr);

  Json j;
  j["rse"] = number_or_null(r.rse);
  if (mask) {
    DenseTensor held = *mask;
    bool any = false;
    for (double& v : held.values()) {
      v = v == 0 ? 1.0 : 0.0;
      any = any || v != 0;
    }
    if (any) j["heldout_rse"] = number_or_null(masked_rse(x, contract_network(r.model), held));
  }
  j["steps_used"] = r.steps_used;
  j["restart_index"] = r.restart_index;
  j["total_steps"] = r.total_steps;
  out << j.dump(2) << "\n";

  if (const fs::path dir = cfg.at("out").get<std::string>(); !dir.empty()) save_model(dir, r.model);
  err << "fit: rse " << fmt(r.rse) << " after " << r.total_steps << " steps\n";
  if (!std::isfinite(r.rse)) {
    err << "fit diverged in every restart\n";
    return kSearchFailed;
  }
  return kOk;
}

int cmd_bench(const Json& cfg, bool dry_run, std::ostream& out, std::ostream& err) {
  auto orders = cfg.at("orders").get<std::vector<std::size_t>>();
  if (cfg.at("large").get<bool>() && std::find(orders.begin(), orders.end(), 8) == orders.end())
    orders.push_back(8);
  const auto trials = cfg.at("trials").get<std::size_t>();
  const auto seeds = cfg.at("seeds").get<std::size_t>();
  const auto algos = cfg.at("algos").get<std::vector<std::string>>();
  for (const auto& a : algos)
    if (a != "tnls" && a != "ga") throw InvalidArgument("bench: unknown algo '" + a + "'");
  const std::uint64_t base_seed = cfg.at("seed").get<std::uint64_t>();
  const fs::path dir = cfg.at("out").get<std::string>();
  const std::string format = cfg.at("format").get<std::string>();
  const double threshold = cfg.at("rse_threshold").get<double>();

  struct Row {
    std::size_t trial, order, seed;
    std::string algo, data, run;
  };
  std::vector<Row> plan;
  for (std::size_t order : orders)
    for (std::size_t t = 0; t < trials; ++t)
      for (const auto& algo : algos)
        for (std::size_t s = 0; s < seeds; ++s) {
          const std::string data = "o" + std::to_string(order) + "_t" + std::to_string(t);
          plan.push_back({t, order, s, algo, (dir / "data" / data).string(),
                          (dir / "runs" / (data + "_" + algo + "_s" + std::to_string(s))).string()});
        }

  if (dry_run) {
    out << "trial,order,algo,seed,run_dir\n";
    for (const auto& r : plan)
      out << r.trial << "," << r.order << "," << r.algo << "," << r.seed << "," << r.run << "\n";
    return kOk;
  }

  std::string csv = "trial,order,algo,seed,eff,evaluations,rse,seconds\n";
  std::map<std::size_t, std::vector<double>> mandatory_rse;
  std::string generated;
  for (const auto& row : plan) {
    if (row.data != generated) {
      const auto graph = graph_for(format, row.order);
      Rng rng(derive_seed({base_seed, row.order, row.trial}));
      const GroundTruth gt = generate_synthetic(graph, cfg.at("dim").get<std::size_t>(),
                                                cfg.at("ranks").get<std::vector<int>>(), rng);
      std::error_code ec;
      fs::create_directories(row.data, ec);
      if (ec) throw IoError("cannot create " + row.data + ": " + ec.message());
      save_tensor(fs::path(row.data) / "tensor.tnsb", gt.tensor);
      save_structure(fs::path(row.data) / "truth.json", gt.structure);
      generated = row.data;
    }
    Json sc = default_search_config();
    overlay(sc, cfg.at("search"));
    sc["algo"] = row.algo;
    sc["input"] = (fs::path(row.data) / "tensor.tnsb").string();
    sc["template"] = format;
    sc["truth"] = (fs::path(row.data) / "truth.json").string();
    sc["seed"] = row.seed;
    sc["jobs"] = cfg.at("jobs");
    sc["out"] = row.run;
    resolve_search(sc, row.order);
    write_text_file(fs::path(row.run) / "config.json", sc.dump(2) + "\n");

    err << "bench: order " << row.order << " trial " << row.trial << " " << row.algo << " seed "
        << row.seed << ": ";
    const auto t0 = std::chrono::steady_clock::now();
    const SearchRun run = run_search(sc, err);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    save_search(row.run, run.result, row.seed, run.eff);

    csv += std::to_string(row.trial) + "," + std::to_string(row.order) + "," + row.algo + "," +
           std::to_string(row.seed) + "," + fmt(run.eff.value_or(0.0)) + "," +
           std::to_string(run.result.evaluations_to_best) + "," + fmt(run.result.rse) + "," +
           fmt(seconds) + "\n";
    const bool mandatory = row.algo == "tnls" ||
                           std::find(algos.begin(), algos.end(), "tnls") == algos.end();
    if (mandatory) mandatory_rse[row.order].push_back(run.result.rse);
  }
  write_text_file(dir / "bench.csv", csv);
  out << csv;

  int code = kOk;
  for (const auto& [order, values] : mandatory_rse) {
    const double m = median(values);
    if (!(m <= threshold)) {
      err << "bench: order " << order << " median RSE " << fmt(m) << " exceeds "
          << fmt(threshold) << "\n";
      code = kSearchFailed;
    }
  }
  return code;
}

namespace {

enum class Kind { kInt, kUInt, kReal, kText, kIntList, kTextList };

struct Flag {
  const char* name;
  const char* pointer;
  Kind kind;
  const char* help;
};

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) parts.push_back(item);
  return parts;
}

Json convert(const Flag& f, const std::string& raw) {
  try {
    std::size_t used = 0;
    switch (f.kind) {
      case Kind::kInt: {
        const long long v = std::stoll(raw, &used);
        if (used != raw.size()) break;
        return Json(v);
      }
      case Kind::kUInt: {
        if (raw.find('-') != std::string::npos) break;
        const unsigned long long v = std::stoull(raw, &used);
        if (used != raw.size()) break;
        return Json(static_cast<std::uint64_t>(v));
      }
      case Kind::kReal: {
        const double v = std::stod(raw, &used);
        if (used != raw.size()) break;
        return Json(v);
      }
      case Kind::kText:
        return Json(raw);
      case Kind::kIntList: {
        Json a = Json::array();
        for (const auto& p : split(raw)) {
          const long long v = std::stoll(p, &used);
          if (used != p.size()) throw std::invalid_argument(p);
          a.push_back(v);
        }
        return a;
      }
      case Kind::kTextList: {
        Json a = Json::array();
        for (const auto& p : split(raw)) a.push_back(p);
        return a;
      }
    }
  } catch (const std::exception&) {
  }
  throw InvalidArgument(std::string("invalid value '") + raw + "' for " + f.name);
}

const std::vector<Flag> kFitFlags = {
    {"--lr", "/fit/learning_rate", Kind::kReal, "Adam learning rate"},
    {"--max-steps", "/fit/max_steps", Kind::kUInt, "Adam steps per restart"},
    {"--restarts", "/fit/restarts", Kind::kUInt, "random restarts per fit"},
    {"--init-std", "/fit/init_std", Kind::kReal, "std of initial core entries"},
    {"--tolerance", "/fit/tolerance", Kind::kReal, "stop a restart below this RSE"},
    {"--stall-window", "/fit/stall_window", Kind::kUInt, "steps per stall check (0 disables)"},
    {"--stall-improvement", "/fit/stall_improvement", Kind::kReal,
     "minimum relative RSE gain per stall window"},
};

const std::vector<Flag> kSearchFlags = {
    {"--input", "/input", Kind::kText, "tensor file (.tnsb or .tns)"},
    {"--template", "/template", Kind::kText, "template name or .graph file"},
    {"--algo", "/algo", Kind::kText, "tnls or ga"},
    {"--rank-max", "/rank_max", Kind::kInt, "rank cap R"},
    {"--iters", "/iters", Kind::kUInt, "TNLS iterations"},
    {"--samples", "/samples", Kind::kUInt, "TNLS samples per iteration"},
    {"--c1", "/c1", Kind::kReal, "rank variance decay"},
    {"--c2", "/c2", Kind::kReal, "swap probability decay (default by order)"},
    {"--lambda", "/lambda", Kind::kReal, "weight of the RSE term"},
    {"--target-loss", "/target_loss", Kind::kReal, "stop once a loss <= this is seen"},
    {"--population", "/ga/population", Kind::kUInt, "GA population"},
    {"--generations", "/ga/generations", Kind::kUInt, "GA generations"},
    {"--elimination-rate", "/ga/elimination_rate", Kind::kReal, "GA elimination rate"},
    {"--reproduction", "/ga/reproduction", Kind::kUInt, "GA elites per generation"},
    {"--alpha", "/ga/alpha", Kind::kReal, "GA selection alpha"},
    {"--beta", "/ga/beta", Kind::kReal, "GA selection beta"},
    {"--mutation-rate", "/ga/mutation_rate", Kind::kReal, "GA per-gene mutation rate"},
    {"--mask", "/mask", Kind::kText, "observation mask tensor (nonzero = observed)"},
    {"--truth", "/truth", Kind::kText, "generating structure JSON; adds eff to the result"},
    {"--seed", "/seed", Kind::kUInt, "random seed (default $TNPS_SEED or 0)"},
    {"--jobs", "/jobs", Kind::kUInt, "worker threads for candidate fits (0 = all cores)"},
    {"--out", "/out", Kind::kText, "output directory"},
};

const std::vector<Flag> kCountFlags = {
    {"--template", "/template", Kind::kText, "template name or .graph file"},
    {"--n", "/n", Kind::kUInt, "template size"},
    {"--rank-max", "/rank_max", Kind::kUInt, "rank cap R"},
    {"--aut-limit", "/aut_limit", Kind::kUInt, "largest graph for automorphism search"},
};

const std::vector<Flag> kSynthFlags = {
    {"--format", "/format", Kind::kText, "template name (tr, tt, ttree, peps, ht, mera, ...)"},
    {"--n", "/n", Kind::kUInt, "tensor order"},
    {"--dim", "/dim", Kind::kUInt, "dimension of every mode"},
    {"--ranks", "/ranks", Kind::kIntList, "rank choices, e.g. 1,2,3,4"},
    {"--core-std", "/core_std", Kind::kReal, "std of core entries"},
    {"--seed", "/seed", Kind::kUInt, "random seed (default $TNPS_SEED or 0)"},
    {"--out", "/out", Kind::kText, "output directory"},
};

const std::vector<Flag> kFitCmdFlags = {
    {"--input", "/input", Kind::kText, "tensor file"},
    {"--structure", "/structure", Kind::kText, "structure JSON"},
    {"--mask", "/mask", Kind::kText, "observation mask tensor (nonzero = observed)"},
    {"--seed", "/seed", Kind::kUInt, "random seed (default $TNPS_SEED or 0)"},
    {"--out", "/out", Kind::kText, "model output directory"},
};

const std::vector<Flag> kBenchFlags = {
    {"--format", "/format", Kind::kText, "template name"},
    {"--orders", "/orders", Kind::kIntList, "tensor orders, e.g. 4,6"},
    {"--trials", "/trials", Kind::kUInt, "synthetic tensors per order"},
    {"--seeds", "/seeds", Kind::kUInt, "search seeds per tensor"},
    {"--algos", "/algos", Kind::kTextList, "tnls,ga"},
    {"--dim", "/dim", Kind::kUInt, "mode dimension"},
    {"--ranks", "/ranks", Kind::kIntList, "rank choices"},
    {"--seed", "/seed", Kind::kUInt, "data seed (default $TNPS_SEED or 0)"},
    {"--rse-threshold", "/rse_threshold", Kind::kReal, "required median TNLS RSE"},
    {"--jobs", "/jobs", Kind::kUInt, "worker threads per search"},
    {"--out", "/out", Kind::kText, "output directory"},
    {"--rank-max", "/search/rank_max", Kind::kInt, "rank cap R"},
    {"--iters", "/search/iters", Kind::kUInt, "TNLS iterations"},
    {"--samples", "/search/samples", Kind::kUInt, "TNLS samples per iteration"},
    {"--c1", "/search/c1", Kind::kReal, "rank variance decay"},
    {"--c2", "/search/c2", Kind::kReal, "swap probability decay (default by order)"},
    {"--lambda", "/search/lambda", Kind::kReal, "weight of the RSE term"},
    {"--population", "/search/ga/population", Kind::kUInt, "GA population"},
    {"--generations", "/search/ga/generations", Kind::kUInt, "GA generations"},
};

struct Bound {
  const Flag* flag;
  CLI::Option* option;
  std::string value;
};

// Registers flags on a subcommand; values are kept as text until merge().
class FlagSet {
 public:
  FlagSet(CLI::App* app, const std::vector<Flag>& flags, const char* prefix = "") {
    bound_.reserve(flags.size());
    for (const auto& f : flags) {
      bound_.push_back({&f, nullptr, {}});
      std::string p = f.pointer;
      if (*prefix) p = std::string(prefix) + p;
      pointers_.push_back(p);
      bound_.back().option = app->add_option(f.name, bound_.back().value, f.help);
    }
  }

  Json overrides() const {
    Json j = Json::object();
    for (std::size_t i = 0; i < bound_.size(); ++i)
      if (bound_[i].option->count() > 0)
        j[Json::json_pointer(pointers_[i])] = convert(*bound_[i].flag, bound_[i].value);
    return j;
  }

 private:
  std::vector<Bound> bound_;
  std::vector<std::string> pointers_;
};

Json merged(Json defaults, const std::string& config_path, const std::vector<const FlagSet*>& sets) {
  if (!config_path.empty()) overlay(defaults, read_json_file(config_path));
  for (const auto* s : sets) overlay(defaults, s->overrides());
  return defaults;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tensor-network permutation search"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "tnps 0.1.0");

  std::string search_cfg, count_cfg, synth_cfg, fit_cfg, bench_cfg;
  bool dry_run = false, large = false;

  auto* search = app.add_subcommand("search", "search a permutation and ranks for a tensor");
  search->add_option("--config", search_cfg, "JSON config (flags override it)");
  FlagSet search_flags(search, kSearchFlags);
  FlagSet search_fit(search, kFitFlags);

  auto* count = app.add_subcommand("count", "size of the search space of a template");
  count->add_option("--config", count_cfg, "JSON config (flags override it)");
  FlagSet count_flags(count, kCountFlags);

  auto* synth = app.add_subcommand("synth", "generate a synthetic tensor with a known structure");
  synth->add_option("--config", synth_cfg, "JSON config (flags override it)");
  FlagSet synth_flags(synth, kSynthFlags);

  auto* fitc = app.add_subcommand("fit", "fit cores for a fixed structure");
  fitc->add_option("--config", fit_cfg, "JSON config (flags override it)");
  FlagSet fit_flags(fitc, kFitCmdFlags);
  FlagSet fit_fit(fitc, kFitFlags);

  auto* bench = app.add_subcommand("bench", "run the seeded synthetic benchmark suite");
  bench->add_option("--config", bench_cfg, "JSON config (flags override it)");
  bench->add_flag("--dry-run", dry_run, "print the run matrix and exit");
  bench->add_flag("--large", large, "also run order 8");
  FlagSet bench_flags(bench, kBenchFlags);
  FlagSet bench_fit(bench, kFitFlags, "/search");

  try {
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*search)
      return cmd_search(merged(default_search_config(), search_cfg, {&search_flags, &search_fit}),
                        out, err);
    if (*count) return cmd_count(merged(default_count_config(), count_cfg, {&count_flags}), out, err);
    if (*synth) return cmd_synth(merged(default_synth_config(), synth_cfg, {&synth_flags}), out, err);
    if (*fitc)
      return cmd_fit(merged(default_fit_config(), fit_cfg, {&fit_flags, &fit_fit}), out, err);
    if (*bench) {
      Json cfg = merged(default_bench_config(), bench_cfg, {&bench_flags, &bench_fit});
      if (large) cfg["large"] = true;
      return cmd_bench(cfg, dry_run, out, err);
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const LimitExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const nlohmann::json::exception& e) {
    err << "error: bad config value: " << e.what() << "\n";
    return kInvalid;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << "\n";
    return kSearchFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUnexpected;
  }
  return kUnexpected;
}

}  // namespace tnps::cli
