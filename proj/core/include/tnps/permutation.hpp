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

#ifndef TNPS_PERMUTATION_HPP_
#define TNPS_PERMUTATION_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace tnps {

// A bijection on {0, ..., n-1}. Text and file formats use 1-based images;
// the in-memory representation is 0-based.
class Permutation {
 public:
  Permutation() = default;
  // Throws InvalidArgument unless `images` is a bijection on [0, n).
  explicit Permutation(std::vector<int> images);

  static Permutation identity(std::size_t n);
  static Permutation transposition(std::size_t n, int i, int j);
  static Permutation from_one_based(std::span<const int> images);

  std::size_t size() const { return map_.size(); }
  int operator()(int i) const { return map_[static_cast<std::size_t>(i)]; }
  std::span<const int> images() const { return map_; }
  std::vector<int> one_based() const;

  Permutation inverse() const;
  bool is_identity() const;

  // Number of pairs i < j with p(i) > p(j).
  std::int64_t inversions() const;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> map_;
};

// Composition (p * q)(i) = p(q(i)).
Permutation operator*(const Permutation& p, const Permutation& q);

bool is_bijection(std::span<const int> images);

// Word metric on S_n generated by adjacent transpositions: the inversion
// count of p1^-1 * p2. Symmetric and left-invariant.
std::int64_t word_metric(const Permutation& p1, const Permutation& p2);

}  // namespace tnps

#endif  // TNPS_PERMUTATION_HPP_
