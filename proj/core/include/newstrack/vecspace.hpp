// Copyright 2026 The newstrack Authors
//
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

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace newstrack {

/// Fixed-length real vector. Arithmetic is done in double precision even when
/// the source model stores floats or integers.
class DenseVector {
 public:
  DenseVector() = default;
  explicit DenseVector(std::size_t dim) : values_(dim, 0.0) {}
  explicit DenseVector(std::vector<double> values) : values_(std::move(values)) {}
  DenseVector(std::initializer_list<double> values) : values_(values) {}

  std::size_t dim() const { return values_.size(); }
  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  double& operator[](std::size_t i) { return values_[i]; }

  template <typename T>
  DenseVector& add(std::span<const T> row) {
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += static_cast<double>(row[i]);
    return *this;
  }
  DenseVector& operator+=(const DenseVector& other);

  double norm() const;
  bool all_finite() const;

  friend bool operator==(const DenseVector&, const DenseVector&) = default;

 private:
  std::vector<double> values_;
};

/// Sparse vector whose nonzero entries are +1 or -1.
class TernarySparseVector {
 public:
  struct Entry {
    std::uint32_t index;
    std::int8_t sign;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  TernarySparseVector() = default;
  /// Throws std::invalid_argument unless indices are strictly increasing,
  /// below `dim`, and signs are +1/-1.
  TernarySparseVector(std::size_t dim, std::vector<Entry> entries);

  std::size_t dim() const { return dim_; }
  std::span<const Entry> entries() const { return entries_; }
  std::size_t nonzeros() const { return entries_.size(); }

  /// target += scale * this
  template <typename T>
  void add_to(std::span<T> target, T scale = T{1}) const {
    for (const auto& e : entries_) target[e.index] += scale * static_cast<T>(e.sign);
  }

  DenseVector to_dense() const;

  friend bool operator==(const TernarySparseVector&, const TernarySparseVector&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Entry> entries_;
};

/// Term -> weight bag, used for bag-of-words comparisons.
using SparseBag = std::map<std::string, double>;

/// Binary bag of the given tokens.
SparseBag binary_bag(std::span<const std::string> tokens);

double dot(std::span<const double> a, std::span<const double> b);

/// dot(a, b) / (|a| |b|), clamped to [-1, 1]. Zero-norm inputs give 0.
/// Throws std::invalid_argument on a dimension mismatch.
double cosine(std::span<const double> a, std::span<const double> b);
double cosine(const DenseVector& a, const DenseVector& b);
double cosine(const TernarySparseVector& a, const TernarySparseVector& b);
double cosine(const SparseBag& a, const SparseBag& b);

/// Element-wise sum. Throws std::invalid_argument on an empty list or
/// mismatched dimensions.
DenseVector compose(std::span<const DenseVector> vectors);

}  // namespace newstrack
