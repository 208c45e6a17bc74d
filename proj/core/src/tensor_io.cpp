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

#include "tnps/tensor_io.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>

#include "tnps/error.hpp"

namespace tnps {

namespace {

constexpr std::array<char, 4> kMagic = {'T', 'N', 'S', 'B'};
constexpr std::uint8_t kVersion = 1;

void put_u64(std::ostream& os, std::uint64_t v) {
  std::array<char, 8> bytes{};
  for (std::size_t i = 0; i < 8; ++i) bytes[i] = static_cast<char>((v >> (8 * i)) & 0xffu);
  os.write(bytes.data(), bytes.size());
}

std::uint64_t get_u64(std::istream& is) {
  std::array<unsigned char, 8> bytes{};
  if (!is.read(reinterpret_cast<char*>(bytes.data()), bytes.size()))
    throw IoError("tnsb: truncated header");
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(bytes[i]) << (8 * i);
  return v;
}

}  // namespace

void write_tnsb(std::ostream& os, const DenseTensor& x) {
  os.write(kMagic.data(), kMagic.size());
  os.put(static_cast<char>(kVersion));
  put_u64(os, x.order());
  for (std::size_t d : x.shape()) put_u64(os, d);
  for (double v : x.values()) put_u64(os, std::bit_cast<std::uint64_t>(v));
  if (!os) throw IoError("tnsb: write failed");
}

DenseTensor read_tnsb(std::istream& is) {
  std::array<char, 4> magic{};
  if (!is.read(magic.data(), magic.size()) || magic != kMagic)
    throw IoError("tnsb: bad magic bytes");
  const int version = is.get();
  if (version != kVersion)
    throw IoError("tnsb: unsupported version " + std::to_string(version));
  const std::uint64_t order = get_u64(is);
  if (order == 0 || order > 64) throw IoError("tnsb: unreasonable order " + std::to_string(order));
  Shape shape(order);
  std::uint64_t count = 1;
  for (auto& d : shape) {
    d = get_u64(is);
    if (d == 0) throw IoError("tnsb: zero dimension");
    if (count > std::numeric_limits<std::uint32_t>::max()) throw IoError("tnsb: tensor too large");
    count *= d;
  }
  std::vector<double> values(count);
  for (auto& v : values) {
    try {
      v = std::bit_cast<double>(get_u64(is));
    } catch (const IoError&) {
      throw IoError("tnsb: truncated value block");
    }
  }
  return DenseTensor(std::move(shape), std::move(values));
}

void write_tns(std::ostream& os, const DenseTensor& x) {
  os << x.order() << '\n';
  for (std::size_t k = 0; k < x.order(); ++k) os << (k ? " " : "") << x.dim(k);
  os << '\n' << std::setprecision(17);
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? " " : "") << x[i];
  os << '\n';
  if (!os) throw IoError("tns: write failed");
}

DenseTensor read_tns(std::istream& is) {
  std::size_t order = 0;
  if (!(is >> order) || order == 0) throw IoError("tns: missing or zero order");
  Shape shape(order);
  for (auto& d : shape)
    if (!(is >> d) || d == 0) throw IoError("tns: bad dimension line");
  std::vector<double> values(shape_size(shape));
  for (auto& v : values)
    if (!(is >> v)) throw IoError("tns: expected " + std::to_string(values.size()) + " values");
  return DenseTensor(std::move(shape), std::move(values));
}

void save_tensor(const std::filesystem::path& path, const DenseTensor& x) {
  const bool text = path.extension() == ".tns";
  std::ofstream os(path, text ? std::ios::out : std::ios::out | std::ios::binary);
  if (!os) throw IoError("cannot open " + path.string() + " for writing");
  if (text)
    write_tns(os, x);
  else
    write_tnsb(os, x);
}

DenseTensor load_tensor(const std::filesystem::path& path) {
  const bool text = path.extension() == ".tns";
  std::ifstream is(path, text ? std::ios::in : std::ios::in | std::ios::binary);
  if (!is) throw IoError("cannot open " + path.string());
  return text ? read_tns(is) : read_tnsb(is);
}

}  // namespace tnps
