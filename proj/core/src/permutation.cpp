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

#include "tnps/permutation.hpp"

#include <numeric>
#include <sstream>

#include "tnps/error.hpp"

namespace tnps {

bool is_bijection(std::span<const int> images) {
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    if (v < 0 || static_cast<std::size_t>(v) >= images.size() ||
        seen[static_cast<std::size_t>(v)])
      return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

Permutation::Permutation(std::vector<int> images) : map_(std::move(images)) {
  if (!is_bijection(map_))
    throw InvalidArgument("not a permutation: " + to_string());
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> m(n);
  std::iota(m.begin(), m.end(), 0);
  return Permutation(std::move(m));
}

Permutation Permutation::transposition(std::size_t n, int i, int j) {
  std::vector<int> m(n);
  std::iota(m.begin(), m.end(), 0);
  if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= n ||
      static_cast<std::size_t>(j) >= n)
    throw InvalidArgument("transposition index out of range");
  std::swap(m[static_cast<std::size_t>(i)], m[static_cast<std::size_t>(j)]);
  return Permutation(std::move(m));
}

Permutation Permutation::from_one_based(std::span<const int> images) {
  std::vector<int> m(images.begin(), images.end());
  for (int& v : m) --v;
  return Permutation(std::move(m));
}

std::vector<int> Permutation::one_based() const {
  std::vector<int> out(map_);
  for (int& v : out) ++v;
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i)
    inv[static_cast<std::size_t>(map_[i])] = static_cast<int>(i);
  Permutation p;
  p.map_ = std::move(inv);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < map_.size(); ++i)
    if (map_[i] != static_cast<int>(i)) return false;
  return true;
}

std::int64_t Permutation::inversions() const {
  // n stays small (<= a few dozen) everywhere this is used.
  std::int64_t count = 0;
  for (std::size_t i = 0; i < map_.size(); ++i)
    for (std::size_t j = i + 1; j < map_.size(); ++j)
      if (map_[i] > map_[j]) ++count;
  return count;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < map_.size(); ++i) os << (i ? " " : "") << map_[i] + 1;
  os << ']';
  return os.str();
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size())
    throw InvalidArgument("composing permutations of different sizes");
  std::vector<int> m(p.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = p(q(static_cast<int>(i)));
  return Permutation(std::move(m));
}

std::int64_t word_metric(const Permutation& p1, const Permutation& p2) {
  if (p1.size() != p2.size())
    throw InvalidArgument("word_metric: permutation sizes differ");
  return (p1.inverse() * p2).inversions();
}

}  // namespace tnps
