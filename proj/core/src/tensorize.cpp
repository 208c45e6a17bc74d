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

#include <string>

#include "tnps/error.hpp"
#include "tnps/tensor.hpp"

namespace tnps {

namespace {

// Number of levels k with block^k == side, or 0 if side is not a power.
std::size_t levels_for(std::size_t side, std::size_t block) {
  std::size_t levels = 0;
  std::size_t s = 1;
  while (s < side) {
    s *= block;
    ++levels;
  }
  return s == side ? levels : 0;
}

// Maps pixel (row, col) to the flat index of the multi-scale tensor.
std::size_t vdt_index(std::size_t row, std::size_t col, std::size_t side,
                      std::size_t block) {
  std::size_t flat = 0;
  for (std::size_t scale = side / block; scale >= 1; scale /= block) {
    const std::size_t r = (row / scale) % block;
    const std::size_t c = (col / scale) % block;
    flat = flat * block * block + r * block + c;
    if (scale == 1) break;
  }
  return flat;
}

}  // namespace

DenseTensor tensorize_vdt(const DenseTensor& image, std::size_t block) {
  if (block < 2) throw InvalidArgument("tensorize_vdt: block must be >= 2");
  if (image.order() != 2 || image.dim(0) != image.dim(1))
    throw InvalidArgument("tensorize_vdt: expected a square 2-D image, got " +
                          shape_to_string(image.shape()));
  const std::size_t side = image.dim(0);
  const std::size_t levels = levels_for(side, block);
  if (levels == 0)
    throw InvalidArgument("tensorize_vdt: side " + std::to_string(side) +
                          " is not a power of " + std::to_string(block));
  DenseTensor out(Shape(levels, block * block));
  for (std::size_t r = 0; r < side; ++r)
    for (std::size_t c = 0; c < side; ++c)
      out[vdt_index(r, c, side, block)] = image[r * side + c];
  return out;
}

DenseTensor inverse_vdt(const DenseTensor& tensor, std::size_t block) {
  if (block < 2) throw InvalidArgument("inverse_vdt: block must be >= 2");
  for (std::size_t d : tensor.shape())
    if (d != block * block)
      throw InvalidArgument("inverse_vdt: every mode must have dim block^2");
  std::size_t side = 1;
  for (std::size_t k = 0; k < tensor.order(); ++k) side *= block;
  DenseTensor image(Shape{side, side});
  for (std::size_t r = 0; r < side; ++r)
    for (std::size_t c = 0; c < side; ++c)
      image[r * side + c] = tensor[vdt_index(r, c, side, block)];
  return image;
}

}  // namespace tnps
