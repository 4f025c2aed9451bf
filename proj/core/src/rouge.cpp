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

#include "newstrack/rouge.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include <fmt/format.h>

#include "newstrack/error.hpp"
#include "newstrack/preprocess.hpp"
#include "newstrack/stemmer.hpp"
#include "newstrack/vecspace.hpp"

namespace newstrack {
namespace {

using Counts = std::map<std::vector<std::string>, std::size_t>;

std::size_t total(const Counts& c) {
  std::size_t t = 0;
  for (const auto& [k, v] : c) t += v;
  return t;
}

std::size_t clipped_matches(const Counts& ref, const Counts& sys) {
  std::size_t m = 0;
  for (const auto& [gram, count] : ref) {
    const auto it = sys.find(gram);
    if (it != sys.end()) m += std::min(count, it->second);
  }
  return m;
}

Counts ngram_counts(const Sentences& s, int n) {
  Counts c;
  const auto len = static_cast<std::size_t>(n);
  for (const auto& sentence : s) {
    for (std::size_t i = 0; i + len <= sentence.size(); ++i) {
      ++c[std::vector<std::string>(sentence.begin() + static_cast<std::ptrdiff_t>(i),
                                   sentence.begin() + static_cast<std::ptrdiff_t>(i + len))];
    }
  }
  return c;
}

Counts su_counts(const Sentences& s, int skip, bool unigrams) {
  Counts c;
  for (const auto& sentence : s) {
    for (auto& [a, b] : skip_bigrams(sentence, skip)) ++c[{std::move(a), std::move(b)}];
    if (unigrams) {
      for (const auto& t : sentence) ++c[{t}];
    }
  }
  return c;
}

std::vector<std::string> flatten(const Sentences& s) {
  std::vector<std::string> out;
  for (const auto& sentence : s) out.insert(out.end(), sentence.begin(), sentence.end());
  return out;
}

std::size_t lcs_length(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::size_t> prev(b.size() + 1, 0);
  std::vector<std::size_t> cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

double mean_pairwise_cosine(const Sentences& s) {
  if (s.size() < 2) throw DataError("diversity needs at least two tweets per timeline");
  std::vector<SparseBag> bags;
  bags.reserve(s.size());
  for (const auto& t : s) bags.push_back(binary_bag(t));
  double sum = 0.0;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < bags.size(); ++i) {
    for (std::size_t j = i + 1; j < bags.size(); ++j) {
      sum += cosine(bags[i], bags[j]);
      ++pairs;
    }
  }
  return sum / static_cast<double>(pairs);
}

Sentences wrap(const std::vector<std::string>& tokens) { return Sentences{tokens}; }

void require_references(std::size_t n) {
  if (n == 0) throw DataError("ROUGE needs at least one reference");
}

Prf best_of(std::span<const Prf> scores) {
  return *std::max_element(scores.begin(), scores.end(),
                           [](const Prf& a, const Prf& b) { return a.f1 < b.f1; });
}

}  // namespace

void EvalConfig::validate() const {
  if (su_skip_distance < 0) throw ConfigError("skip distance must be non-negative");
  for (const int n : rouge_n) {
    if (n < 1) throw ConfigError("ROUGE-N order must be at least 1");
  }
}

Prf Prf::make(double precision, double recall) {
  Prf p{precision, recall, 0.0};
  if (precision + recall > 0.0) p.f1 = 2.0 * precision * recall / (precision + recall);
  return p;
}

Prf Prf::from_counts(double matches, double system_total, double reference_total) {
  return make(system_total > 0.0 ? matches / system_total : 0.0,
              reference_total > 0.0 ? matches / reference_total : 0.0);
}

Prf rouge_n(std::span<const Sentences> references, const Sentences& system, int n) {
  require_references(references.size());
  if (n < 1) throw ConfigError("ROUGE-N order must be at least 1");
  const Counts sys = ngram_counts(system, n);
  const auto sys_total = static_cast<double>(total(sys));
  if (sys_total == 0.0) return {};
  double matches = 0.0;
  double ref_total = 0.0;
  for (const auto& ref : references) {
    const Counts rc = ngram_counts(ref, n);
    matches += static_cast<double>(clipped_matches(rc, sys));
    ref_total += static_cast<double>(total(rc));
  }
  return Prf::from_counts(matches, sys_total * static_cast<double>(references.size()), ref_total);
}

Prf rouge_n(std::span<const std::vector<std::string>> references,
            const std::vector<std::string>& system, int n) {
  std::vector<Sentences> refs;
  refs.reserve(references.size());
  for (const auto& r : references) refs.push_back(wrap(r));
  return rouge_n(refs, wrap(system), n);
}

Prf rouge_l(const std::vector<std::string>& reference, const std::vector<std::string>& system) {
  if (system.empty()) return {};
  const auto lcs = static_cast<double>(lcs_length(reference, system));
  return Prf::from_counts(lcs, static_cast<double>(system.size()),
                          static_cast<double>(reference.size()));
}

Prf rouge_l(const Sentences& reference, const Sentences& system) {
  return rouge_l(flatten(reference), flatten(system));
}

std::vector<std::pair<std::string, std::string>> skip_bigrams(
    const std::vector<std::string>& tokens, int skip_distance) {
  if (skip_distance < 0) throw ConfigError("skip distance must be non-negative");
  const auto reach = static_cast<std::size_t>(skip_distance) + 1;
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    for (std::size_t j = i + 1; j < tokens.size() && j - i <= reach; ++j) {
      out.emplace_back(tokens[i], tokens[j]);
    }
  }
  return out;
}

Prf rouge_su(const Sentences& reference, const Sentences& system, int skip_distance,
             bool include_unigrams) {
  if (skip_distance < 0) throw ConfigError("skip distance must be non-negative");
  const Counts sys = su_counts(system, skip_distance, include_unigrams);
  const auto sys_total = static_cast<double>(total(sys));
  if (sys_total == 0.0) return {};
  const Counts ref = su_counts(reference, skip_distance, include_unigrams);
  return Prf::from_counts(static_cast<double>(clipped_matches(ref, sys)), sys_total,
                          static_cast<double>(total(ref)));
}

Prf rouge_su(const std::vector<std::string>& reference, const std::vector<std::string>& system,
             int skip_distance, bool include_unigrams) {
  return rouge_su(wrap(reference), wrap(system), skip_distance, include_unigrams);
}

double diversity_ratio(const Sentences& system, std::span<const Sentences> references) {
  require_references(references.size());
  const double sys = mean_pairwise_cosine(system);
  double ref = 0.0;
  for (const auto& r : references) ref += mean_pairwise_cosine(r);
  ref /= static_cast<double>(references.size());
  if (sys == 0.0) return ref == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
  return ref / sys;
}

std::vector<std::string> eval_tokens(std::string_view text, const EvalConfig& config) {
  static const Stoplist english = Stoplist::default_english();
  std::vector<std::string> out;
  for (auto& t : tokenize(text)) {
    if (t == kPlaceholder) continue;
    if (config.stopword_removal && english.contains(t)) continue;
    const bool entity = t.front() == '@' || t.front() == '#';
    out.push_back(config.stemming && !entity ? porter_stem(t) : std::move(t));
  }
  return out;
}

const VariantScore* RougeReport::find(std::string_view name) const {
  for (const auto& v : variants) {
    if (v.name == name) return &v;
  }
  return nullptr;
}

RougeReport evaluate(const std::vector<std::string>& system_texts,
                     const std::vector<std::vector<std::string>>& reference_texts,
                     const EvalConfig& config) {
  config.validate();
  require_references(reference_texts.size());
  const auto to_sentences = [&](const std::vector<std::string>& texts) {
    Sentences s;
    s.reserve(texts.size());
    for (const auto& t : texts) s.push_back(eval_tokens(t, config));
    return s;
  };
  const Sentences system = to_sentences(system_texts);
  std::vector<Sentences> refs;
  for (const auto& r : reference_texts) refs.push_back(to_sentences(r));

  RougeReport report;
  report.reference_count = refs.size();
  report.system_tokens = flatten(system).size();
  for (const auto& r : refs) report.reference_tokens.push_back(flatten(r).size());

  for (const int n : config.rouge_n) {
    VariantScore v{fmt::format("ROUGE-{}", n), rouge_n(refs, system, n), {}};
    for (const auto& r : refs) v.per_reference.push_back(rouge_n(std::span(&r, 1), system, n));
    report.variants.push_back(std::move(v));
  }

  VariantScore l{"ROUGE-L", {}, {}};
  for (const auto& r : refs) l.per_reference.push_back(rouge_l(r, system));
  l.score = best_of(l.per_reference);
  report.variants.push_back(std::move(l));

  VariantScore su{fmt::format("ROUGE-SU{}", config.su_skip_distance), {}, {}};
  if (!config.su_include_unigrams) su.name = fmt::format("ROUGE-S{}", config.su_skip_distance);
  for (const auto& r : refs) {
    su.per_reference.push_back(
        rouge_su(r, system, config.su_skip_distance, config.su_include_unigrams));
  }
  su.score = best_of(su.per_reference);
  report.variants.push_back(std::move(su));

  const bool diversity_defined =
      system.size() >= 2 &&
      std::all_of(refs.begin(), refs.end(), [](const Sentences& r) { return r.size() >= 2; });
  if (diversity_defined) report.diversity = diversity_ratio(system, refs);
  return report;
}

nlohmann::ordered_json report_to_json(const RougeReport& report, const std::string& event_id) {
  nlohmann::ordered_json j;
  j["event"] = event_id;
  j["references"] = report.reference_count;
  j["system_tokens"] = report.system_tokens;
  j["reference_tokens"] = report.reference_tokens;
  auto& variants = j["variants"] = nlohmann::ordered_json::array();
  for (const auto& v : report.variants) {
    nlohmann::ordered_json row;
    row["name"] = v.name;
    row["precision"] = v.score.precision;
    row["recall"] = v.score.recall;
    row["f1"] = v.score.f1;
    auto& per = row["per_reference"] = nlohmann::ordered_json::array();
    for (const auto& p : v.per_reference) {
      per.push_back({{"precision", p.precision}, {"recall", p.recall}, {"f1", p.f1}});
    }
    variants.push_back(std::move(row));
  }
  if (report.diversity) {
    // JSON has no infinity.
    j["diversity"] = std::isfinite(*report.diversity) ? nlohmann::ordered_json(*report.diversity)
                                                      : nlohmann::ordered_json("inf");
  } else {
    j["diversity"] = nullptr;
  }
  return j;
}

std::string format_report_table(const RougeReport& report, const std::string& event_id) {
  std::string out = fmt::format("event: {}  references: {}  system tokens: {}\n", event_id,
                                report.reference_count, report.system_tokens);
  out += fmt::format("{:<12} {:>9} {:>9} {:>9}\n", "variant", "P", "R", "F1");
  for (const auto& v : report.variants) {
    out += fmt::format("{:<12} {:>9.4f} {:>9.4f} {:>9.4f}\n", v.name, v.score.precision,
                       v.score.recall, v.score.f1);
  }
  if (report.diversity) {
    out += fmt::format("{:<12} {:>9.4f}\n", "diversity", *report.diversity);
  } else {
    out += fmt::format("{:<12} {:>9}\n", "diversity", "n/a");
  }
  return out;
}

}  // namespace newstrack
