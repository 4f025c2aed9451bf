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

#include "newstrack/vecspace.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace newstrack {
namespace {

double finish_cosine(double dot_ab, double norm2_a, double norm2_b) {
  if (norm2_a == 0.0 || norm2_b == 0.0) return 0.0;
  // sqrt(x*x) == |x| exactly, so cosine(v, v) is exactly 1.
  return std::clamp(dot_ab / std::sqrt(norm2_a * norm2_b), -1.0, 1.0);
}

}  // namespace

DenseVector& DenseVector::operator+=(const DenseVector& other) {
  if (other.dim() != dim()) throw std::invalid_argument("dimension mismatch in vector sum");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

double DenseVector::norm() const { return std::sqrt(dot(values_, values_)); }

bool DenseVector::all_finite() const {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
}

TernarySparseVector::TernarySparseVector(std::size_t dim, std::vector<Entry> entries)
    : dim_(dim), entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].index >= dim_) throw std::invalid_argument("ternary index out of range");
    if (entries_[i].sign != 1 && entries_[i].sign != -1) {
      throw std::invalid_argument("ternary sign must be +1 or -1");
    }
    if (i > 0 && entries_[i - 1].index >= entries_[i].index) {
      throw std::invalid_argument("ternary indices must be strictly increasing");
    }
  }
}

DenseVector TernarySparseVector::to_dense() const {
  DenseVector out(dim_);
  add_to<double>(out.values());
  return out;
}

SparseBag binary_bag(std::span<const std::string> tokens) {
  SparseBag bag;
  for (const auto& t : tokens) bag[t] = 1.0;
  return bag;
}

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch in dot product");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

double cosine(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch in cosine");
  double ab = 0.0;
  double aa = 0.0;
  double bb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ab += a[i] * b[i];
    aa += a[i] * a[i];
    bb += b[i] * b[i];
  }
  return finish_cosine(ab, aa, bb);
}

double cosine(const DenseVector& a, const DenseVector& b) { return cosine(a.values(), b.values()); }

double cosine(const TernarySparseVector& a, const TernarySparseVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch in cosine");
  const auto ea = a.entries();
  const auto eb = b.entries();
  double ab = 0.0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < ea.size() && j < eb.size()) {
    if (ea[i].index < eb[j].index) {
      ++i;
    } else if (eb[j].index < ea[i].index) {
      ++j;
    } else {
      ab += static_cast<double>(ea[i].sign * eb[j].sign);
      ++i;
      ++j;
    }
  }
  return finish_cosine(ab, static_cast<double>(ea.size()), static_cast<double>(eb.size()));
}

double cosine(const SparseBag& a, const SparseBag& b) {
  double ab = 0.0;
  double aa = 0.0;
  double bb = 0.0;
  for (const auto& [term, w] : a) {
    aa += w * w;
    if (const auto it = b.find(term); it != b.end()) ab += w * it->second;
  }
  for (const auto& [term, w] : b) bb += w * w;
  return finish_cosine(ab, aa, bb);
}

DenseVector compose(std::span<const DenseVector> vectors) {
  if (vectors.empty()) throw std::invalid_argument("compose of an empty vector list");
  DenseVector sum = vectors.front();
  for (std::size_t i = 1; i < vectors.size(); ++i) sum += vectors[i];
  return sum;
}

}  // namespace newstrack
