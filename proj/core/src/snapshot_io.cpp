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

#include "newstrack/snapshot_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <set>
#include <ostream>
#include <sstream>
#include <vector>

#include <fmt/format.h>

#include "newstrack/error.hpp"

namespace newstrack {
namespace {

constexpr std::string_view kMagic = "newstrack-snapshot 1";

template <typename T>
T parse_number(std::string_view text, std::string_view what) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw DataError(fmt::format("snapshot: bad {} '{}'", what, text));
  }
  return value;
}

template <typename T>
void write_row(std::ostream& out, const std::string& term, std::span<const T> row) {
  out << term << '\t';
  for (std::size_t d = 0; d < row.size(); ++d) {
    if (d) out << ' ';
    out << fmt::format("{}", row[d]);
  }
  out << '\n';
}

template <typename T>
void parse_row(std::string_view line, std::size_t dim, std::vector<std::string>& terms,
               std::vector<T>& values) {
  const auto tab = line.find('\t');
  if (tab == std::string_view::npos || tab == 0) throw DataError("snapshot: row without term");
  terms.emplace_back(line.substr(0, tab));
  std::string_view rest = line.substr(tab + 1);
  std::size_t count = 0;
  while (!rest.empty()) {
    const auto space = rest.find(' ');
    values.push_back(parse_number<T>(rest.substr(0, space), "vector value"));
    ++count;
    if (space == std::string_view::npos) break;
    rest.remove_prefix(space + 1);
  }
  if (count != dim) {
    throw DataError(fmt::format("snapshot: row '{}' has {} values, expected {}", terms.back(),
                                count, dim));
  }
}

void write_phrases(std::ostream& out, const RepresentationModel& model) {
  for (const auto& [a, b] : model.phrases().pairs()) out << "phrase " << a << ' ' << b << '\n';
}

}  // namespace

void save_model(const RepresentationModel& model, std::ostream& out) {
  out << kMagic << '\n';
  out << "kind " << to_string(model.kind()) << '\n';
  out << "trained_at " << format_instant(model.trained_at()) << '\n';
  write_phrases(out, model);

  if (const auto* sgns = std::get_if<SgnsModel>(&model.impl())) {
    out << "dim " << sgns->dim() << '\n' << "vocab " << sgns->vocab().size() << '\n' << "[rows]\n";
    for (std::size_t i = 0; i < sgns->vocab().size(); ++i) {
      write_row(out, sgns->vocab()[i].term, sgns->input_row(i));
    }
  } else if (const auto* ri = std::get_if<RiModel>(&model.impl())) {
    const auto& c = ri->config();
    out << "dim " << c.dim << '\n'
        << "nonzeros " << c.nonzeros << '\n'
        << "context_radius " << c.context_radius << '\n'
        << "min_count " << c.min_count << '\n'
        << "seed " << c.seed << '\n'
        << "vocab " << ri->vocab().size() << '\n'
        << "[rows]\n";
    for (std::size_t i = 0; i < ri->vocab().size(); ++i) {
      write_row(out, ri->vocab()[i].term, ri->context_row(i));
    }
  } else {
    const auto& bm25 = std::get<Bm25Model>(model.impl());
    std::map<std::string, std::uint32_t> sorted(bm25.stats.doc_freqs().begin(),
                                               bm25.stats.doc_freqs().end());
    out << "docs " << bm25.stats.doc_count() << '\n'
        << "avgdl " << fmt::format("{}", bm25.stats.avgdl()) << '\n'
        << "k1 " << fmt::format("{}", bm25.params.k1) << '\n'
        << "b " << fmt::format("{}", bm25.params.b) << '\n'
        << "floor_idf " << (bm25.params.floor_idf ? 1 : 0) << '\n'
        << "vocab " << sorted.size() << '\n'
        << "[rows]\n";
    for (const auto& [term, df] : sorted) out << term << '\t' << df << '\n';
  }
  if (!out) throw IoError("failed writing model snapshot");
}

void save_model(const RepresentationModel& model, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  save_model(model, out);
}

RepresentationModel load_model(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kMagic) throw DataError("not a newstrack snapshot");

  std::map<std::string, std::string> header;
  std::set<std::pair<std::string, std::string>> phrases;
  bool rows = false;
  while (std::getline(in, line)) {
    if (line == "[rows]") {
      rows = true;
      break;
    }
    const auto space = line.find(' ');
    if (space == std::string::npos) throw DataError("snapshot: bad header line '" + line + "'");
    if (line.compare(0, space, "phrase") == 0) {
      const auto second = line.find(' ', space + 1);
      if (second == std::string::npos) throw DataError("snapshot: bad phrase line");
      phrases.emplace(line.substr(space + 1, second - space - 1), line.substr(second + 1));
      continue;
    }
    header[line.substr(0, space)] = line.substr(space + 1);
  }
  if (!rows) throw DataError("snapshot: missing [rows] section");

  auto field = [&](const std::string& key) -> const std::string& {
    const auto it = header.find(key);
    if (it == header.end()) throw DataError("snapshot: missing header field " + key);
    return it->second;
  };
  const ModelKind kind = [&] {
    try {
      return parse_model_kind(field("kind"));
    } catch (const ConfigError& e) {
      throw DataError(std::string("snapshot: ") + e.what());
    }
  }();
  const Instant trained_at = parse_instant(field("trained_at"));
  const auto vocab_size = parse_number<std::size_t>(field("vocab"), "vocab");

  std::vector<std::string> terms;
  terms.reserve(vocab_size);
  if (kind == ModelKind::Bm25) {
    std::unordered_map<std::string, std::uint32_t> df;
    while (std::getline(in, line)) {
      const auto tab = line.find('\t');
      if (tab == std::string::npos) throw DataError("snapshot: bad df row");
      df.emplace(line.substr(0, tab), parse_number<std::uint32_t>(
                                          std::string_view(line).substr(tab + 1), "df"));
    }
    if (df.size() != vocab_size) throw DataError("snapshot: vocabulary size mismatch");
    Bm25Params params;
    params.k1 = parse_number<double>(field("k1"), "k1");
    params.b = parse_number<double>(field("b"), "b");
    params.floor_idf = field("floor_idf") == "1";
    Bm25Stats stats(parse_number<std::size_t>(field("docs"), "docs"), std::move(df),
                    parse_number<double>(field("avgdl"), "avgdl"), trained_at);
    return RepresentationModel(Bm25Model{std::move(stats), params},
                               PhraseTable::from_pairs(std::move(phrases)));
  }

  const auto dim = parse_number<std::size_t>(field("dim"), "dim");
  if (dim == 0) throw DataError("snapshot: zero dimension");
  if (kind == ModelKind::Sgns) {
    std::vector<float> input;
    input.reserve(vocab_size * dim);
    while (std::getline(in, line)) parse_row(line, dim, terms, input);
    if (terms.size() != vocab_size) throw DataError("snapshot: vocabulary size mismatch");
    return RepresentationModel(
        SgnsModel(Vocabulary::from_terms(std::move(terms)), dim, std::move(input), {}, trained_at),
        PhraseTable::from_pairs(std::move(phrases)));
  }

  RiConfig config;
  config.dim = dim;
  config.nonzeros = parse_number<std::size_t>(field("nonzeros"), "nonzeros");
  config.context_radius = parse_number<std::size_t>(field("context_radius"), "context_radius");
  config.min_count = parse_number<std::size_t>(field("min_count"), "min_count");
  config.seed = parse_number<std::uint64_t>(field("seed"), "seed");
  config.variant = kind == ModelKind::RiTtri ? RiVariant::Ttri : RiVariant::Trri;
  std::vector<std::int32_t> context;
  context.reserve(vocab_size * dim);
  while (std::getline(in, line)) parse_row(line, dim, terms, context);
  if (terms.size() != vocab_size) throw DataError("snapshot: vocabulary size mismatch");
  try {
    return RepresentationModel(
        RiModel(Vocabulary::from_terms(std::move(terms)), config, std::move(context), trained_at),
        PhraseTable::from_pairs(std::move(phrases)));
  } catch (const ConfigError& e) {
    throw DataError(std::string("snapshot: ") + e.what());
  }
}

RepresentationModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open model snapshot " + path.string());
  return load_model(in);
}

}  // namespace newstrack
