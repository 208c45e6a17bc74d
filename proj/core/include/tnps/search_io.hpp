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

#ifndef TNPS_SEARCH_IO_HPP_
#define TNPS_SEARCH_IO_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "tnps/search.hpp"

namespace tnps {

// {"structure", "loss", "rse", "phi", "param_count", "evaluations",
//  "evaluations_to_best"[, "evaluations_to_target"], "fits", "seed"[, "eff"]}
// Non-finite numbers are written as null.
std::string result_to_json(const SearchResult& r, std::uint64_t seed,
                           std::optional<double> eff = {});

// Header "iteration,evaluations,best_loss,best_rse,best_phi", one row per record.
std::string trace_to_csv(const SearchTrace& trace);

// Writes result.json and trace.csv into dir (created if missing).
void save_search(const std::filesystem::path& dir, const SearchResult& r, std::uint64_t seed,
                 std::optional<double> eff = {});

}  // namespace tnps

#endif  // TNPS_SEARCH_IO_HPP_
