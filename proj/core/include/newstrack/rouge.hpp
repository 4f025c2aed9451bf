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
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace newstrack {

/// A summary as a list of tweets, each a token list. N-grams and skip-bigrams
/// never cross tweet boundaries.
using Sentences = std::vector<std::vector<std::string>>;

struct EvalConfig {
  std::vector<int> rouge_n{1, 2};
  int su_skip_distance = 4;
  bool su_include_unigrams = true;
  bool stemming = true;
  bool stopword_removal = false;

  void validate() const;
};

struct Prf {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  static Prf from_counts(double matches, double system_total, double reference_total);
  static Prf make(double precision, double recall);
};

/// Recall pools clipped matches over all references; precision divides the
/// same matches by the system count once per reference.
Prf rouge_n(std::span<const Sentences> references, const Sentences& system, int n);
Prf rouge_n(std::span<const std::vector<std::string>> references,
            const std::vector<std::string>& system, int n);

/// LCS over the concatenated token streams.
Prf rouge_l(const Sentences& reference, const Sentences& system);
Prf rouge_l(const std::vector<std::string>& reference, const std::vector<std::string>& system);

/// Ordered pairs (i, j) within one tweet with 0 < j - i <= skip_distance + 1.
std::vector<std::pair<std::string, std::string>> skip_bigrams(
    const std::vector<std::string>& tokens, int skip_distance);

Prf rouge_su(const Sentences& reference, const Sentences& system, int skip_distance,
             bool include_unigrams = true);
Prf rouge_su(const std::vector<std::string>& reference, const std::vector<std::string>& system,
             int skip_distance, bool include_unigrams = true);

/// Mean pairwise binary-bag cosine of the references (averaged over
/// references) divided by the same quantity for the system.
double diversity_ratio(const Sentences& system, std::span<const Sentences> references);

/// Tokenize, optionally drop stopwords, and stem plain words. Mentions and
/// hashtags are left as they are.
std::vector<std::string> eval_tokens(std::string_view text, const EvalConfig& config);

struct VariantScore {
  std::string name;
  Prf score;
  std::vector<Prf> per_reference;
};

struct RougeReport {
  std::vector<VariantScore> variants;
  std::size_t reference_count = 0;
  std::size_t system_tokens = 0;
  std::vector<std::size_t> reference_tokens;
  std::optional<double> diversity;

  const VariantScore* find(std::string_view name) const;
};

RougeReport evaluate(const std::vector<std::string>& system_texts,
                     const std::vector<std::vector<std::string>>& reference_texts,
                     const EvalConfig& config);

nlohmann::ordered_json report_to_json(const RougeReport& report, const std::string& event_id);
std::string format_report_table(const RougeReport& report, const std::string& event_id);

}  // namespace newstrack
