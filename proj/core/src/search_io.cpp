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

#include "tnps/search_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "tnps/error.hpp"
#include "tnps/model_io.hpp"

namespace tnps {

namespace {

using nlohmann::ordered_json;

ordered_json number(double x) { return std::isfinite(x) ? ordered_json(x) : ordered_json(nullptr); }

std::string csv_number(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace

std::string result_to_json(const SearchResult& r, std::uint64_t seed, std::optional<double> eff) {
  ordered_json j;
  j["structure"] = ordered_json::parse(structure_to_json(r.best));
  j["loss"] = number(r.loss);
  j["rse"] = number(r.rse);
  j["phi"] = number(r.phi);
  j["param_count"] = r.param_count;
  j["evaluations"] = r.evaluations;
  j["evaluations_to_best"] = r.evaluations_to_best;
  if (r.evaluations_to_target) j["evaluations_to_target"] = *r.evaluations_to_target;
  j["fits"] = r.fits;
  j["seed"] = seed;
  if (eff) j["eff"] = number(*eff);
  return j.dump(2) + "\n";
}

std::string trace_to_csv(const SearchTrace& trace) {
  std::string out = "iteration,evaluations,best_loss,best_rse,best_phi\n";
  for (const auto& rec : trace.records)
    out += std::to_string(rec.iteration) + "," + std::to_string(rec.evaluations) + "," +
           csv_number(rec.best_loss) + "," + csv_number(rec.best_rse) + "," +
           csv_number(rec.best_phi) + "\n";
  return out;
}

void save_search(const std::filesystem::path& dir, const SearchResult& r, std::uint64_t seed,
                 std::optional<double> eff) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  write_file(dir / "result.json", result_to_json(r, seed, eff));
  write_file(dir / "trace.csv", trace_to_csv(r.trace));
}

}  // namespace tnps
