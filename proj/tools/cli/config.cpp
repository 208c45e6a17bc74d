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

#include "config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "tnps/error.hpp"

namespace tnps::cli {

std::uint64_t default_seed() {
  const char* env = std::getenv("TNPS_SEED");
  if (!env || !*env) return 0;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw InvalidArgument(std::string("TNPS_SEED is not an unsigned integer: ") + env);
  }
}

Json fit_config_to(const FitConfig& c) {
  return Json{{"learning_rate", c.learning_rate},
              {"max_steps", c.max_steps},
              {"restarts", c.restarts},
              {"init_std", c.init_std},
              {"tolerance", c.tolerance},
              {"beta1", c.beta1},
              {"beta2", c.beta2},
              {"epsilon", c.epsilon},
              {"stall_window", c.stall_window},
              {"stall_improvement", c.stall_improvement}};
}

FitConfig fit_config_from(const Json& j) {
  FitConfig c;
  c.learning_rate = j.at("learning_rate").get<double>();
  c.max_steps = j.at("max_steps").get<std::size_t>();
  c.restarts = j.at("restarts").get<std::size_t>();
  c.init_std = j.at("init_std").get<double>();
  c.tolerance = j.at("tolerance").get<double>();
  c.beta1 = j.at("beta1").get<double>();
  c.beta2 = j.at("beta2").get<double>();
  c.epsilon = j.at("epsilon").get<double>();
  c.stall_window = j.at("stall_window").get<std::size_t>();
  c.stall_improvement = j.at("stall_improvement").get<double>();
  c.validate();
  return c;
}

namespace {

Json default_ga() {
  const GaConfig g;
  return Json{{"population", g.population},
              {"generations", g.generations},
              {"elimination_rate", g.elimination_rate},
              {"reproduction", g.reproduction},
              {"alpha", g.alpha},
              {"beta", g.beta},
              {"mutation_rate", g.mutation_rate}};
}

// Search parameters shared by "search" and the bench "search" section.
Json default_search_params() {
  const SearchConfig s;
  return Json{{"algo", "tnls"},
              {"rank_max", s.rank_max},
              {"iters", s.iters},
              {"samples", s.samples},
              {"c1", s.c1},
              {"c2", nullptr},
              {"lambda", s.lambda},
              {"fit", fit_config_to(s.fit)},
              {"ga", default_ga()}};
}

bool is_number(const Json& j) { return j.is_number(); }

}  // namespace

double default_c2(std::size_t order) {
  if (order <= 4) return 0.9;
  if (order <= 6) return 0.94;
  return 0.98;
}

Json default_search_config() {
  Json j{{"input", ""}, {"template", "cycle"}};
  const Json params = default_search_params();
  for (const auto& [k, v] : params.items()) j[k] = v;
  j["target_loss"] = nullptr;
  j["mask"] = "";
  j["truth"] = "";
  j["seed"] = default_seed();
  j["jobs"] = 1;
  j["out"] = "";
  return j;
}

Json default_count_config() {
  return Json{{"template", "cycle"}, {"n", nullptr}, {"rank_max", 7}, {"aut_limit", kDefaultAutomorphismLimit}};
}

Json default_synth_config() {
  return Json{{"format", "tr"},  {"n", nullptr},
              {"dim", 3},        {"ranks", {1, 2, 3, 4}},
              {"core_std", 1.0}, {"seed", default_seed()},
              {"out", "synth"}};
}

Json default_fit_config() {
  return Json{{"input", ""},
              {"structure", ""},
              {"mask", ""},
              {"seed", default_seed()},
              {"fit", fit_config_to(FitConfig{})},
              {"out", ""}};
}

Json default_bench_config() {
  return Json{{"format", "tr"},
              {"orders", {4}},
              {"large", false},
              {"trials", 5},
              {"seeds", 5},
              {"algos", {"tnls"}},
              {"dim", 3},
              {"ranks", {1, 2, 3, 4}},
              {"seed", default_seed()},
              {"rse_threshold", 1e-4},
              {"jobs", 1},
              {"out", "bench"},
              {"search", default_search_params()}};
}

void overlay(Json& base, const Json& patch, const std::string& where) {
  if (!patch.is_object()) throw InvalidArgument("config" + where + " must be a JSON object");
  for (auto it = patch.begin(); it != patch.end(); ++it) {
    const std::string path = where + "/" + it.key();
    auto found = base.find(it.key());
    if (found == base.end()) throw InvalidArgument("unknown config key " + path);
    Json& slot = *found;
    const Json& value = it.value();
    if (slot.is_object()) {
      overlay(slot, value, path);
      continue;
    }
    const bool ok = (slot.is_null() && (value.is_null() || is_number(value))) ||
                    (slot.is_number_float() && (is_number(value) || value.is_null())) ||
                    (slot.is_number_unsigned() && value.is_number_unsigned()) ||
                    (slot.is_number_integer() && !slot.is_number_unsigned() &&
                     value.is_number_integer()) ||
                    (slot.is_string() && value.is_string()) ||
                    (slot.is_boolean() && value.is_boolean()) ||
                    (slot.is_array() && value.is_array());
    if (!ok) throw InvalidArgument("config key " + path + " has the wrong type");
    if (slot.is_number_float() && value.is_number())
      slot = value.get<double>();
    else
      slot = value;
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidArgument(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw IoError("cannot create " + path.parent_path().string() + ": " + ec.message());
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw IoError("failed writing " + path.string());
}

GaConfig ga_config_from(const Json& search) {
  const Json& g = search.at("ga");
  GaConfig c;
  c.rank_max = search.at("rank_max").get<int>();
  c.population = g.at("population").get<std::size_t>();
  c.generations = g.at("generations").get<std::size_t>();
  c.elimination_rate = g.at("elimination_rate").get<double>();
  c.reproduction = g.at("reproduction").get<std::size_t>();
  c.alpha = g.at("alpha").get<double>();
  c.beta = g.at("beta").get<double>();
  c.mutation_rate = g.at("mutation_rate").get<double>();
  c.lambda = search.at("lambda").get<double>();
  c.fit = fit_config_from(search.at("fit"));
  c.seed = search.at("seed").get<std::uint64_t>();
  c.jobs = search.at("jobs").get<std::size_t>();
  if (!search.at("target_loss").is_null()) c.target_loss = search.at("target_loss").get<double>();
  c.validate();
  return c;
}

SearchConfig search_config_from(const Json& search) {
  SearchConfig c;
  c.rank_max = search.at("rank_max").get<int>();
  c.iters = search.at("iters").get<std::size_t>();
  c.samples = search.at("samples").get<std::size_t>();
  c.c1 = search.at("c1").get<double>();
  c.c2 = search.at("c2").get<double>();
  c.lambda = search.at("lambda").get<double>();
  c.fit = fit_config_from(search.at("fit"));
  c.seed = search.at("seed").get<std::uint64_t>();
  c.jobs = search.at("jobs").get<std::size_t>();
  if (!search.at("target_loss").is_null()) c.target_loss = search.at("target_loss").get<double>();
  c.validate();
  return c;
}

}  // namespace tnps::cli
