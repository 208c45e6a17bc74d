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

#ifndef TNPS_TENSOR_IO_HPP_
#define TNPS_TENSOR_IO_HPP_

#include <filesystem>
#include <iosfwd>

#include "tnps/tensor.hpp"

namespace tnps {

// Binary ".tnsb": "TNSB", u8 version (1), u64 order N, N x u64 dims, then
// the row-major float64 values. All integers and floats little-endian.
void write_tnsb(std::ostream& os, const DenseTensor& x);
DenseTensor read_tnsb(std::istream& is);

// Text ".tns": order on line 1, dims on line 2, then values row-major.
void write_tns(std::ostream& os, const DenseTensor& x);
DenseTensor read_tns(std::istream& is);

// Dispatch on the file extension (".tns" is text, anything else binary).
void save_tensor(const std::filesystem::path& path, const DenseTensor& x);
DenseTensor load_tensor(const std::filesystem::path& path);

}  // namespace tnps

#endif  // TNPS_TENSOR_IO_HPP_
