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

#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "newstrack/bm25.hpp"
#include "newstrack/preprocess.hpp"
#include "newstrack/randindex.hpp"
#include "newstrack/sgns.hpp"
#include "newstrack/time.hpp"
#include "newstrack/tweet.hpp"

namespace newstrack {

enum class ModelKind { Bm25, Sgns, RiTtri, RiTrri };

/// "bm25", "sgns", "ri-ttri", "ri-trri".
std::string_view to_string(ModelKind kind);
/// Throws ConfigError for unknown names.
ModelKind parse_model_kind(std::string_view name);
bool is_distributional(ModelKind kind);

/// Training parameters for every model family; only the chosen one is used.
struct ModelConfig {
  SgnsConfig sgns;
  RiConfig ri;
  Bm25Params bm25;
  PhraseOptions phrases;
};

struct Bm25Model {
  Bm25Stats stats;
  Bm25Params params;
};

/// One trained representation plus the phrase table applied before it.
/// Immutable; share through std::shared_ptr<const RepresentationModel>.
class RepresentationModel {
 public:
  using Variant = std::variant<Bm25Model, SgnsModel, RiModel>;

  RepresentationModel(Variant impl, PhraseTable phrases = {});

  ModelKind kind() const;
  Instant trained_at() const;
  const Variant& impl() const { return impl_; }
  const PhraseTable& phrases() const { return phrases_; }

  /// Applies the phrase table.
  TokenSequence prepare(const TokenSequence& tokens) const { return phrases_.apply(tokens); }

  /// Composed tweet vector for distributional models; absent when no token is
  /// in the vocabulary. Throws std::logic_error for BM25.
  std::optional<DenseVector> tweet_vector(const TokenSequence& tokens) const;

 private:
  Variant impl_;
  PhraseTable phrases_;
};

/// Trains `kind` on the snapshot documents. Throws TrainingError.
RepresentationModel train_model(ModelKind kind, std::span<const TokenSequence> docs,
                                const ModelConfig& config, Instant trained_at);

struct Similarity {
  /// Cosine for distributional models, normalized score in [0, 1] for BM25.
  double value = 0.0;
  /// Cosine again, or the raw BM25 score.
  double raw = 0.0;
};

/// A fixed query bound to one model; the query representation is computed
/// once per model.
class QueryScorer {
 public:
  QueryScorer(std::shared_ptr<const RepresentationModel> model, const TokenSequence& query);

  /// Absent when the tweet (or the query) has no representation under the model.
  std::optional<Similarity> score(const TokenSequence& tweet) const;

  bool query_representable() const;
  const RepresentationModel& model() const { return *model_; }
  std::shared_ptr<const RepresentationModel> model_ptr() const { return model_; }

 private:
  std::shared_ptr<const RepresentationModel> model_;
  TokenSequence query_;
  std::vector<std::string> query_terms_;
  std::optional<DenseVector> query_vector_;
  std::pair<double, double> bm25_bounds_{0.0, 0.0};
};

/// Publication point for an immutable value: readers take a reference-counted
/// handle and keep using it even if a newer value is published meanwhile.
template <typename T>
class ModelSlot {
 public:
  void publish(std::shared_ptr<const T> value) {
    std::lock_guard lock(mutex_);
    value_ = std::move(value);
  }

  std::shared_ptr<const T> acquire() const {
    std::lock_guard lock(mutex_);
    return value_;
  }

 private:
  mutable std::mutex mutex_;
  std::shared_ptr<const T> value_;
};

}  // namespace newstrack
