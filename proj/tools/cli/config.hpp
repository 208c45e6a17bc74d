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

#ifndef TNPS_CLI_CONFIG_HPP_
#define TNPS_CLI_CONFIG_HPP_

#include <cstdint>
#include <filesystem>
#include <string>

#include "json.hpp"
#include "tnps/fit.hpp"
#include "tnps/search.hpp"

namespace tnps::cli {

using Json = nlohmann::ordered_json;

// Default run configurations. The "seed" entries fall back to TNPS_SEED.
Json default_search_config();
Json default_count_config();
Json default_synth_config();
Json default_fit_config();
Json default_bench_config();

std::uint64_t default_seed();

// Overlays `patch` onto `base`. Keys must already exist in base and keep
// its type (null in base accepts a number; integers are accepted where base
// holds a float). Violations throw InvalidArgument.
void overlay(Json& base, const Json& patch, const std::string& where = "");

Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

// Conversions from the "fit", "ga" and search sections.
FitConfig fit_config_from(const Json& j);
Json fit_config_to(const FitConfig& c);
GaConfig ga_config_from(const Json& search);
SearchConfig search_config_from(const Json& search);

// Order-dependent c2: 0.9 up to order 4, 0.94 up to 6, 0.98 beyond.
double default_c2(std::size_t order);

}  // namespace tnps::cli

#endif  // TNPS_CLI_CONFIG_HPP_
