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

#include "tnps/tensor.hpp"

#include <cmath>
#include <sstream>

#include "tnps/error.hpp"
#include "tnps/permutation.hpp"

namespace tnps {

std::size_t shape_size(std::span<const std::size_t> shape) {
  std::size_t n = 1;
  for (std::size_t d : shape) n *= d;
  return n;
}

std::string shape_to_string(std::span<const std::size_t> shape) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < shape.size(); ++i) os << (i ? "x" : "") << shape[i];
  os << ')';
  return os.str();
}

std::vector<std::size_t> row_major_strides(std::span<const std::size_t> shape) {
  std::vector<std::size_t> strides(shape.size(), 1);
  for (std::size_t k = shape.size(); k-- > 1;) strides[k - 1] = strides[k] * shape[k];
  return strides;
}

namespace {

void check_dims(const Shape& shape) {
  for (std::size_t d : shape)
    if (d == 0) throw InvalidArgument("tensor dimensions must be >= 1, got " +
                                      shape_to_string(shape));
}

void check_same_shape(const DenseTensor& a, const DenseTensor& b, const char* what) {
  if (a.shape() != b.shape())
    throw InvalidArgument(std::string(what) + ": shape mismatch " +
                          shape_to_string(a.shape()) + " vs " +
                          shape_to_string(b.shape()));
}

}  // namespace

DenseTensor::DenseTensor(Shape shape) : shape_(std::move(shape)) {
  check_dims(shape_);
  values_.assign(shape_size(shape_), 0.0);
}

DenseTensor::DenseTensor(Shape shape, std::vector<double> values)
    : shape_(std::move(shape)), values_(std::move(values)) {
  check_dims(shape_);
  if (values_.size() != shape_size(shape_))
    throw InvalidArgument("tensor value count " + std::to_string(values_.size()) +
                          " does not match shape " + shape_to_string(shape_));
}

std::size_t DenseTensor::flat_index(std::span<const std::size_t> index) const {
  if (index.size() != shape_.size())
    throw InvalidArgument("index order does not match tensor order");
  std::size_t flat = 0;
  for (std::size_t k = 0; k < index.size(); ++k) {
    if (index[k] >= shape_[k]) throw InvalidArgument("index out of range");
    flat = flat * shape_[k] + index[k];
  }
  return flat;
}

double& DenseTensor::at(std::span<const std::size_t> index) {
  return values_[flat_index(index)];
}

double DenseTensor::at(std::span<const std::size_t> index) const {
  return values_[flat_index(index)];
}

DenseTensor& DenseTensor::operator+=(const DenseTensor& other) {
  check_same_shape(*this, other, "operator+=");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

DenseTensor& DenseTensor::operator-=(const DenseTensor& other) {
  check_same_shape(*this, other, "operator-=");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

DenseTensor& DenseTensor::operator*=(double alpha) {
  for (double& v : values_) v *= alpha;
  return *this;
}

DenseTensor operator+(DenseTensor a, const DenseTensor& b) { return a += b; }
DenseTensor operator-(DenseTensor a, const DenseTensor& b) { return a -= b; }
DenseTensor operator*(double alpha, DenseTensor a) { return a *= alpha; }

DenseTensor hadamard(const DenseTensor& a, const DenseTensor& b) {
  check_same_shape(a, b, "hadamard");
  DenseTensor out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= b[i];
  return out;
}

double frobenius_norm(const DenseTensor& x) {
  double s = 0.0;
  for (double v : x.values()) s += v * v;
  return std::sqrt(s);
}

double inner_product(const DenseTensor& a, const DenseTensor& b) {
  check_same_shape(a, b, "inner_product");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void transpose_into(std::span<const double> src, std::span<const std::size_t> shape,
                    std::span<const std::size_t> order, std::span<double> dst) {
  const std::size_t n = shape.size();
  const auto src_strides = row_major_strides(shape);
  std::vector<std::size_t> dims(n), strides(n), idx(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    dims[k] = shape[order[k]];
    strides[k] = src_strides[order[k]];
  }
  const std::size_t total = dst.size();
  if (n == 0) {
    if (total) dst[0] = src[0];
    return;
  }
  // Odometer over destination indices; the innermost axis is unrolled.
  const std::size_t inner_dim = dims[n - 1];
  const std::size_t inner_stride = strides[n - 1];
  std::size_t offset = 0;
  for (std::size_t out = 0; out < total; out += inner_dim) {
    for (std::size_t i = 0; i < inner_dim; ++i) dst[out + i] = src[offset + i * inner_stride];
    for (std::size_t k = n - 1; k-- > 0;) {
      if (++idx[k] < dims[k]) {
        offset += strides[k];
        break;
      }
      offset -= (dims[k] - 1) * strides[k];
      idx[k] = 0;
    }
  }
}

DenseTensor permute_modes(const DenseTensor& x, const Permutation& p) {
  if (p.size() != x.order())
    throw InvalidArgument("permute_modes: permutation size " + std::to_string(p.size()) +
                          " does not match tensor order " + std::to_string(x.order()));
  // Destination axis k holds source axis p^-1(k).
  const Permutation inv = p.inverse();
  std::vector<std::size_t> order(x.order());
  Shape shape(x.order());
  for (std::size_t k = 0; k < order.size(); ++k) {
    order[k] = static_cast<std::size_t>(inv(static_cast<int>(k)));
    shape[k] = x.dim(order[k]);
  }
  DenseTensor y(std::move(shape));
  transpose_into(x.values(), x.shape(), order, y.values());
  return y;
}

DenseTensor tensorize_reshape(const DenseTensor& data, Shape target_shape) {
  if (shape_size(target_shape) != data.size())
    throw InvalidArgument("tensorize_reshape: element count mismatch, " +
                          shape_to_string(data.shape()) + " -> " +
                          shape_to_string(target_shape));
  return DenseTensor(std::move(target_shape),
                     std::vector<double>(data.values().begin(), data.values().end()));
}

}  // namespace tnps
