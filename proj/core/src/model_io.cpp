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

#include "tnps/model_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "tnps/error.hpp"
#include "tnps/templates.hpp"
#include "tnps/tensor_io.hpp"

namespace tnps {

namespace {

using json = nlohmann::ordered_json;

json structure_json(const TnStructure& s) {
  json ranks = json::array();
  const auto& edges = s.graph->edges();
  for (std::size_t e = 0; e < edges.size(); ++e)
    ranks.push_back({edges[e].u + 1, edges[e].v + 1, s.ranks[e]});
  return json{{"template", templates::spec_of(*s.graph)},
              {"permutation", s.perm.one_based()},
              {"ranks", std::move(ranks)}};
}

TnStructure structure_from(const json& j) {
  try {
    const auto perm_one = j.at("permutation").get<std::vector<int>>();
    auto graph = std::make_shared<const TemplateGraph>(
        templates::from_spec(j.at("template").get<std::string>(), perm_one.size()));
    std::vector<int> ranks(graph->num_edges(), 0);
    for (const auto& item : j.at("ranks")) {
      const auto triple = item.get<std::vector<int>>();
      if (triple.size() != 3) throw InvalidArgument("rank entries must be [i, j, r]");
      const int e = graph->edge_index(triple[0] - 1, triple[1] - 1);
      if (e < 0)
        throw InvalidArgument("rank given for non-edge (" + std::to_string(triple[0]) + ", " +
                              std::to_string(triple[1]) + ")");
      if (ranks[static_cast<std::size_t>(e)] != 0) throw InvalidArgument("edge ranked twice");
      ranks[static_cast<std::size_t>(e)] = triple[2];
    }
    TnStructure s{graph, Permutation::from_one_based(perm_one), std::move(ranks)};
    s.validate();
    return s;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("structure JSON: ") + e.what());
  }
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw IoError(std::string("malformed JSON: ") + e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open " + path.string());
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream os(path);
  if (!os) throw IoError("cannot open " + path.string() + " for writing");
  os << text;
  if (!os) throw IoError("write failed for " + path.string());
}

}  // namespace

std::string structure_to_json(const TnStructure& s) { return structure_json(s).dump(2) + "\n"; }

TnStructure structure_from_json(std::string_view text) { return structure_from(parse(text)); }

void save_structure(const std::filesystem::path& path, const TnStructure& s) {
  write_file(path, structure_to_json(s));
}

TnStructure load_structure(const std::filesystem::path& path) {
  return structure_from_json(read_file(path));
}

void save_model(const std::filesystem::path& dir, const TnModel& m) {
  m.validate();
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  json j = structure_json(m.structure);
  j["dims"] = m.dims;
  write_file(dir / "model.json", j.dump(2) + "\n");
  for (std::size_t v = 0; v < m.cores.size(); ++v)
    save_tensor(dir / ("core_" + std::to_string(v + 1) + ".tnsb"), m.cores[v]);
}

TnModel load_model(const std::filesystem::path& dir) {
  const json j = parse(read_file(dir / "model.json"));
  TnModel m;
  m.structure = structure_from(j);
  try {
    m.dims = j.at("dims").get<Shape>();
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("model.json: ") + e.what());
  }
  for (std::size_t v = 0; v < m.structure.graph->num_vertices(); ++v)
    m.cores.push_back(load_tensor(dir / ("core_" + std::to_string(v + 1) + ".tnsb")));
  m.validate();
  return m;
}

}  // namespace tnps
