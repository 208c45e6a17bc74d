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

#ifndef TNPS_PARALLEL_HPP_
#define TNPS_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace tnps {

// 0 means one worker per hardware thread.
std::size_t resolve_jobs(std::size_t jobs);

// Calls fn(i) for every i in [0, count) on up to `jobs` threads. Tasks must
// write only to their own slots. If tasks throw, the exception of the lowest
// failing index is rethrown after all workers have joined.
void parallel_for(std::size_t count, std::size_t jobs,
                  const std::function<void(std::size_t)>& fn);

}  // namespace tnps

#endif  // TNPS_PARALLEL_HPP_
