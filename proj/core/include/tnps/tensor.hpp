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

#ifndef TNPS_TENSOR_HPP_
#define TNPS_TENSOR_HPP_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace tnps {

class Permutation;

using Shape = std::vector<std::size_t>;

std::size_t shape_size(std::span<const std::size_t> shape);
std::string shape_to_string(std::span<const std::size_t> shape);

// Row-major strides (last index fastest).
std::vector<std::size_t> row_major_strides(std::span<const std::size_t> shape);

// Dense real tensor stored row-major with the last index varying fastest.
//
// An order-0 tensor (empty shape, one value) is allowed as the result of a
// full contraction; every other tensor has dimensions >= 1.
class DenseTensor {
 public:
  DenseTensor() : values_(1, 0.0) {}
  explicit DenseTensor(Shape shape);
  DenseTensor(Shape shape, std::vector<double> values);

  static DenseTensor zeros(Shape shape) { return DenseTensor(std::move(shape)); }
  static DenseTensor scalar(double v) { return DenseTensor(Shape{}, {v}); }

  std::size_t order() const { return shape_.size(); }
  std::size_t size() const { return values_.size(); }
  const Shape& shape() const { return shape_; }
  std::size_t dim(std::size_t mode) const { return shape_.at(mode); }

  std::span<double> values() { return values_; }
  std::span<const double> values() const { return values_; }
  std::vector<double>& storage() { return values_; }

  double& operator[](std::size_t flat) { return values_[flat]; }
  double operator[](std::size_t flat) const { return values_[flat]; }

  double& at(std::span<const std::size_t> index);
  double at(std::span<const std::size_t> index) const;
  double at(std::initializer_list<std::size_t> index) const {
    return at(std::span<const std::size_t>(index.begin(), index.size()));
  }

  std::size_t flat_index(std::span<const std::size_t> index) const;

  DenseTensor& operator+=(const DenseTensor& other);
  DenseTensor& operator-=(const DenseTensor& other);
  DenseTensor& operator*=(double alpha);

  friend bool operator==(const DenseTensor&, const DenseTensor&) = default;

 private:
  Shape shape_;
  std::vector<double> values_;
};

DenseTensor operator+(DenseTensor a, const DenseTensor& b);
DenseTensor operator-(DenseTensor a, const DenseTensor& b);
DenseTensor operator*(double alpha, DenseTensor a);

// Elementwise (Hadamard) product.
DenseTensor hadamard(const DenseTensor& a, const DenseTensor& b);

double frobenius_norm(const DenseTensor& x);
double inner_product(const DenseTensor& a, const DenseTensor& b);

// Reorders modes: source mode n lands at destination position p(n), so the
// output has shape[p(n)] = x.shape[n] and Y[j] = X[i] whenever j[p(n)] = i[n]
// for every n.
DenseTensor permute_modes(const DenseTensor& x, const Permutation& p);

// Copies `src` (with `shape`) into `dst` so that destination axis k is
// source axis order[k].
void transpose_into(std::span<const double> src, std::span<const std::size_t> shape,
                    std::span<const std::size_t> order, std::span<double> dst);

// Row-major reinterpretation of the same values under a new shape.
DenseTensor tensorize_reshape(const DenseTensor& data, Shape target_shape);

// Visual-data tensorization of a square image whose side is block^k. Mode l
// of the order-k output indexes the block coordinate at resolution level l
// (coarsest first): index_l = block * row_digit_l + col_digit_l where
// row_digit_l and col_digit_l are the base-`block` digits of the pixel row
// and column, most significant first. Every output mode has dim block^2.
DenseTensor tensorize_vdt(const DenseTensor& image, std::size_t block = 2);
DenseTensor inverse_vdt(const DenseTensor& tensor, std::size_t block = 2);

}  // namespace tnps

#endif  // TNPS_TENSOR_HPP_
