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

#include "newstrack/model.hpp"

#include <stdexcept>

#include "newstrack/error.hpp"

namespace newstrack {

std::string_view to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::Bm25:
      return "bm25";
    case ModelKind::Sgns:
      return "sgns";
    case ModelKind::RiTtri:
      return "ri-ttri";
    case ModelKind::RiTrri:
      return "ri-trri";
  }
  return "unknown";
}

ModelKind parse_model_kind(std::string_view name) {
  for (const auto kind : {ModelKind::Bm25, ModelKind::Sgns, ModelKind::RiTtri, ModelKind::RiTrri}) {
    if (name == to_string(kind)) return kind;
  }
  throw ConfigError("unknown model kind '" + std::string(name) + "'");
}

bool is_distributional(ModelKind kind) { return kind != ModelKind::Bm25; }

RepresentationModel::RepresentationModel(Variant impl, PhraseTable phrases)
    : impl_(std::move(impl)), phrases_(std::move(phrases)) {}

ModelKind RepresentationModel::kind() const {
  if (std::holds_alternative<Bm25Model>(impl_)) return ModelKind::Bm25;
  if (std::holds_alternative<SgnsModel>(impl_)) return ModelKind::Sgns;
  return std::get<RiModel>(impl_).variant() == RiVariant::Ttri ? ModelKind::RiTtri
                                                              : ModelKind::RiTrri;
}

Instant RepresentationModel::trained_at() const {
  return std::visit(
      [](const auto& m) {
        if constexpr (std::is_same_v<std::decay_t<decltype(m)>, Bm25Model>) {
          return m.stats.built_at();
        } else {
          return m.trained_at();
        }
      },
      impl_);
}

std::optional<DenseVector> RepresentationModel::tweet_vector(const TokenSequence& tokens) const {
  if (const auto* sgns = std::get_if<SgnsModel>(&impl_)) return sgns->tweet_vector(tokens);
  if (const auto* ri = std::get_if<RiModel>(&impl_)) return ri->tweet_vector(tokens);
  throw std::logic_error("BM25 has no tweet vectors");
}

RepresentationModel train_model(ModelKind kind, std::span<const TokenSequence> docs,
                                const ModelConfig& config, Instant trained_at) {
  PhraseTable phrases;
  std::vector<TokenSequence> joined;
  if (config.phrases.enabled) {
    phrases = PhraseTable::learn(docs, config.phrases.min_count, config.phrases.threshold);
    joined.reserve(docs.size());
    for (const auto& doc : docs) joined.push_back(phrases.apply(doc));
    docs = joined;
  }
  switch (kind) {
    case ModelKind::Bm25: {
      config.bm25.validate();
      return RepresentationModel(Bm25Model{build_bm25_stats(docs, trained_at), config.bm25},
                                 std::move(phrases));
    }
    case ModelKind::Sgns:
      return RepresentationModel(train_sgns(docs, config.sgns, trained_at), std::move(phrases));
    case ModelKind::RiTtri:
    case ModelKind::RiTrri: {
      RiConfig ri = config.ri;
      ri.variant = kind == ModelKind::RiTtri ? RiVariant::Ttri : RiVariant::Trri;
      return RepresentationModel(train_ri(docs, ri, trained_at), std::move(phrases));
    }
  }
  throw std::logic_error("unhandled model kind");
}

QueryScorer::QueryScorer(std::shared_ptr<const RepresentationModel> model,
                         const TokenSequence& query)
    : model_(std::move(model)) {
  if (!model_) throw std::invalid_argument("QueryScorer needs a model");
  query_ = model_->prepare(query);
  for (const auto& t : query_.tokens) {
    if (!is_placeholder(t)) query_terms_.push_back(t);
  }
  if (const auto* bm25 = std::get_if<Bm25Model>(&model_->impl())) {
    bm25_bounds_ = bm25_score_bounds(bm25->stats, bm25->params, query_terms_);
  } else {
    query_vector_ = model_->tweet_vector(query_);
  }
}

bool QueryScorer::query_representable() const {
  if (std::holds_alternative<Bm25Model>(model_->impl())) return !query_terms_.empty();
  return query_vector_.has_value();
}

std::optional<Similarity> QueryScorer::score(const TokenSequence& tweet) const {
  const TokenSequence prepared = model_->prepare(tweet);
  if (const auto* bm25 = std::get_if<Bm25Model>(&model_->impl())) {
    if (query_terms_.empty()) return std::nullopt;
    const double raw = bm25_score(bm25->stats, bm25->params, query_terms_, prepared);
    return Similarity{normalize_bm25(raw, bm25_bounds_), raw};
  }
  if (!query_vector_) return std::nullopt;
  const auto vec = model_->tweet_vector(prepared);
  if (!vec) return std::nullopt;
  const double c = cosine(*query_vector_, *vec);
  return Similarity{c, c};
}

}  // namespace newstrack
