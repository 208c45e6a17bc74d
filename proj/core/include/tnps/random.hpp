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

#ifndef TNPS_RANDOM_HPP_
#define TNPS_RANDOM_HPP_

#include <cstdint>
#include <initializer_list>
#include <random>
#include <utility>
#include <string_view>

namespace tnps {

// Every stochastic routine takes an explicit stream; there is no global RNG.
using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x);

// Order-sensitive mix of several values into one seed, so that independent
// tasks (restart k, candidate (m, k), ...) get reproducible private streams.
std::uint64_t derive_seed(std::initializer_list<std::uint64_t> parts);

// FNV-1a, used to turn structure keys into seeds.
std::uint64_t hash_string(std::string_view s);

// Uniform pair i != j from [0, n); n >= 2.
std::pair<int, int> draw_distinct_pair(int n, Rng& rng);

}  // namespace tnps

#endif  // TNPS_RANDOM_HPP_
