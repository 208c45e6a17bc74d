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

#ifndef TNPS_ERROR_HPP_
#define TNPS_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace tnps {

// Malformed arguments: shape mismatches, invalid graphs, bad configs.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// File-system or format errors while reading and writing artifacts.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numerical failure that cannot be recovered from (e.g. every fit diverged).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Requested an exhaustive computation beyond its configured size limit.
class LimitExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace tnps

#endif  // TNPS_ERROR_HPP_
