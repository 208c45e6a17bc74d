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

#ifndef TNPS_MODEL_IO_HPP_
#define TNPS_MODEL_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "tnps/model.hpp"
#include "tnps/structure.hpp"

namespace tnps {

// {"template": spec, "permutation": [1-based modes per external slot],
//  "ranks": [[i, j, r], ...]} with 1-based template vertices i < j.
std::string structure_to_json(const TnStructure& s);
TnStructure structure_from_json(std::string_view text);

void save_structure(const std::filesystem::path& path, const TnStructure& s);
TnStructure load_structure(const std::filesystem::path& path);

// A directory holding model.json (structure plus "dims") and one
// core_<v>.tnsb per template vertex v (1-based, vertex order).
void save_model(const std::filesystem::path& dir, const TnModel& m);
TnModel load_model(const std::filesystem::path& dir);

}  // namespace tnps

#endif  // TNPS_MODEL_IO_HPP_
