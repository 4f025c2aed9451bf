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

#include "cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "newstrack/error.hpp"
#include "newstrack/hash.hpp"
#include "newstrack/preprocess.hpp"
#include "newstrack/snapshot_io.hpp"
#include "newstrack/stream.hpp"
#include "newstrack/timeline_io.hpp"
#include "newstrack/version.hpp"

namespace newstrack::cli {
namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

constexpr ModelKind kAllModels[] = {ModelKind::Bm25, ModelKind::Sgns, ModelKind::RiTtri,
                                    ModelKind::RiTrri};
constexpr TrackingMode kAllModes[] = {TrackingMode::Adaptive, TrackingMode::Static};

json models_json(const ModelConfig& m) {
  json j;
  j["sgns"] = {{"dim", m.sgns.dim},
               {"max_context", m.sgns.max_context},
               {"epochs", m.sgns.epochs},
               {"learning_rate", m.sgns.learning_rate},
               {"min_count", m.sgns.min_count},
               {"seed", m.sgns.seed}};
  j["ri"] = {{"dim", m.ri.dim},
             {"nonzeros", m.ri.nonzeros},
             {"context_radius", m.ri.context_radius},
             {"min_count", m.ri.min_count},
             {"seed", m.ri.seed}};
  j["bm25"] = {{"k1", m.bm25.k1}, {"b", m.bm25.b}, {"floor_idf", m.bm25.floor_idf}};
  j["phrases"] = {{"enabled", m.phrases.enabled},
                  {"min_count", m.phrases.min_count},
                  {"threshold", m.phrases.threshold}};
  return j;
}

json tracker_json(const TrackerSpec& t) {
  json j;
  j["model"] = to_string(t.model);
  j["mode"] = to_string(t.mode);
  j["threshold"] = t.threshold;
  j["window_ms"] = t.window_length.count();
  j["refresh_ms"] = t.refresh_rate.count();
  j["static_train_ms"] = t.train_span().count();
  j["refresh_enabled"] = t.refresh_enabled;
  j["reorder_slack_ms"] = t.reorder_slack.count();
  return j;
}

json event_json(const EventSpec& e) {
  return json{{"id", e.id},
              {"query", e.query},
              {"start", format_instant(e.start)},
              {"end", format_instant(e.end)}};
}

json config_json(const RunConfig& c, const EventFile& e, std::size_t summary_length) {
  json j;
  j["event"] = event_json(e.event);
  j["tracker"] = tracker_json(c.tracker);
  j["models"] = models_json(c.models);
  j["languages"] = c.languages;
  j["summary"] = {{"target_length", summary_length},
                  {"dup_threshold", c.summary.dup_threshold},
                  {"keep_rejected", c.keep_rejected}};
  j["eval"] = {{"rouge_n", c.eval.rouge_n},
               {"su_skip_distance", c.eval.su_skip_distance},
               {"su_include_unigrams", c.eval.su_include_unigrams},
               {"stemming", c.eval.stemming},
               {"stopword_removal", c.eval.stopword_removal}};
  return j;
}

std::uint64_t hash_json(const json& j) { return fnv1a64(j.dump()); }

std::uint64_t hash_string_file(const fs::path& p) { return hash_file(p); }

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError(fmt::format("cannot create directory {}: {}", dir.string(), ec.message()));
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("write failed for " + path.string());
}

std::vector<Tweet> load_stream(const fs::path& path, IngestCounters& counters) {
  if (!fs::exists(path)) throw IoError("stream not found: " + path.string());
  auto tweets = read_stream(path, &counters);
  if (counters.malformed > 0) {
    spdlog::warn("{}: skipped {} malformed line(s)", path.string(), counters.malformed);
  }
  return tweets;
}

TrackerOptions tracker_options(const RunConfig& c) {
  TrackerOptions opts;
  opts.spec = c.tracker;
  opts.models = c.models;
  opts.languages = c.languages;
  return opts;
}

std::size_t resolve_summary_length(const RunConfig& c, const EventFile& e) {
  if (c.summary_length_explicit) return c.summary.target_length;
  if (e.summary_length) return *e.summary_length;
  if (!e.references.empty()) {
    std::vector<std::size_t> lengths;
    for (const auto& r : e.references) lengths.push_back(read_timeline(r).entries.size());
    return target_length_from_references(lengths);
  }
  return c.summary.target_length;
}

std::vector<std::string> texts_of(const std::vector<TimelineEntry>& entries,
                                  bool selected_only) {
  std::vector<std::string> out;
  for (const auto& e : entries) {
    if (!selected_only || e.selected) out.push_back(e.tweet.text);
  }
  return out;
}

RougeReport evaluate_against(const std::vector<std::string>& system,
                             const std::vector<fs::path>& references, const EvalConfig& config) {
  std::vector<std::vector<std::string>> refs;
  for (const auto& r : references) {
    auto file = read_timeline(r);
    if (file.entries.empty()) throw DataError("reference timeline is empty: " + r.string());
    refs.push_back(texts_of(file.entries, true));
  }
  return evaluate(system, refs, config);
}

// Caches trained snapshots on disk, keyed by model kind, window end and a
// hash of everything that determines the window contents and training.
class CachingFactory {
 public:
  CachingFactory(fs::path dir, std::uint64_t key_hash) : dir_(std::move(dir)), key_(key_hash) {}

  ModelFactory factory() {
    return [this](ModelKind kind, const WindowSnapshot& snapshot, const ModelConfig& config) {
      const fs::path file = dir_ / fmt::format("{}-{}-{}.snapshot", to_string(kind),
                                               to_epoch_ms(snapshot.taken_at()), hex64(key_));
      if (fs::exists(file)) {
        ++hits_;
        return std::make_shared<const RepresentationModel>(load_model(file));
      }
      ++misses_;
      auto model = default_model_factory()(kind, snapshot, config);
      save_model(*model, file);
      return model;
    };
  }

  std::size_t hits() const { return hits_; }
  std::size_t misses() const { return misses_; }

 private:
  fs::path dir_;
  std::uint64_t key_;
  std::size_t hits_ = 0;
  std::size_t misses_ = 0;
};

json stats_json(const TrackStats& s) {
  json j;
  j["seen"] = s.seen;
  j["filtered_lang"] = s.filtered_lang;
  j["dropped_late"] = s.dropped_late;
  j["in_period"] = s.in_period;
  j["scored"] = s.scored;
  j["unrepresentable"] = s.unrepresentable;
  j["no_model"] = s.no_model;
  j["included"] = s.included;
  j["refresh_failures"] = s.refresh_failures;
  j["containment_violations"] = s.containment_violations;
  j["staleness_violations"] = s.staleness_violations;
  j["max_staleness_ms"] = s.max_staleness.count();
  return j;
}

json refreshes_json(const TrackStats& s) {
  json arr = json::array();
  for (const auto& r : s.refreshes) {
    json j{{"at", format_instant(r.at)}, {"docs", r.docs}, {"ok", r.ok}, {"contained", r.contained}};
    if (!r.note.empty()) j["note"] = r.note;
    arr.push_back(std::move(j));
  }
  return arr;
}

std::string timeline_text(const Timeline& t, const TimelineWriteOptions& opts) {
  std::ostringstream os;
  write_timeline(os, t, opts);
  return os.str();
}

}  // namespace

void RunConfig::set_dim(std::size_t dim) {
  models.sgns.dim = dim;
  models.ri.dim = dim;
}

void RunConfig::set_seed(std::uint64_t seed) {
  models.sgns.seed = seed;
  models.ri.seed = seed;
}

void RunConfig::validate() const {
  tracker.validate();
  models.sgns.validate();
  models.ri.validate();
  summary.validate();
  eval.validate();
}

std::string hex64(std::uint64_t value) { return fmt::format("{:016x}", value); }

std::uint64_t hash_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::uint64_t h = fnv1a64("");
  char buf[1 << 16];
  while (in.read(buf, sizeof buf) || in.gcount() > 0) {
    h = fnv1a64(std::string_view(buf, static_cast<std::size_t>(in.gcount())), h);
  }
  return h;
}

std::vector<EventFile> load_events(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read event file " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw DataError(fmt::format("{}: {}", path.string(), e.what()));
  }
  const fs::path base = path.parent_path();
  auto parse_one = [&](const json& j) {
    try {
      EventFile e;
      e.event.id = j.at("id").get<std::string>();
      e.event.query = j.at("query").get<std::string>();
      e.event.start = parse_instant(j.at("start").get<std::string>());
      e.event.end = parse_instant(j.at("end").get<std::string>());
      if (e.event.end < e.event.start) throw DataError("event ends before it starts");
      if (const auto it = j.find("references"); it != j.end()) {
        for (const auto& r : *it) e.references.push_back(base / r.get<std::string>());
      }
      if (const auto it = j.find("summary_length"); it != j.end()) {
        e.summary_length = it->get<std::size_t>();
      }
      if (const auto it = j.find("thresholds"); it != j.end()) {
        for (const auto& [k, v] : it->items()) {
          parse_model_kind(k);
          e.thresholds[k] = v.get<double>();
        }
      }
      return e;
    } catch (const json::exception& ex) {
      throw DataError(fmt::format("{}: {}", path.string(), ex.what()));
    }
  };
  std::vector<EventFile> events;
  if (doc.is_array()) {
    for (const auto& j : doc) events.push_back(parse_one(j));
  } else {
    events.push_back(parse_one(doc));
  }
  if (events.empty()) throw DataError(path.string() + ": no events");
  return events;
}

json ValidateReport::to_json() const {
  json j;
  j["lines"] = lines;
  j["records"] = records;
  j["malformed"] = malformed;
  j["blank"] = blank;
  j["order_violations"] = order_violations;
  auto instant = [](const std::optional<Instant>& t) {
    return t ? json(format_instant(*t)) : json(nullptr);
  };
  j["first"] = instant(first);
  j["last"] = instant(last);
  j["earliest"] = instant(earliest);
  j["latest"] = instant(latest);
  return j;
}

ValidateReport cmd_validate(const fs::path& stream) {
  if (!fs::exists(stream)) throw IoError("stream not found: " + stream.string());
  TweetReader reader(stream);
  ValidateReport report;
  std::optional<Instant> prev;
  while (auto tweet = reader.next()) {
    const Instant t = tweet->timestamp;
    if (prev && t < *prev) ++report.order_violations;
    prev = t;
    if (!report.first) report.first = t;
    report.last = t;
    report.earliest = report.earliest ? std::min(*report.earliest, t) : t;
    report.latest = report.latest ? std::max(*report.latest, t) : t;
  }
  const auto& c = reader.counters();
  report.lines = c.lines;
  report.records = c.records;
  report.malformed = c.malformed;
  report.blank = c.blank;
  return report;
}

void cmd_train(const RunConfig& config, std::optional<Instant> window_end,
               const fs::path& snapshot_out) {
  config.validate();
  IngestCounters counters;
  const auto tweets = load_stream(config.stream, counters);
  if (tweets.empty()) throw DataError("stream has no records");
  Instant end = tweets.front().timestamp;
  for (const auto& t : tweets) end = std::max(end, t.timestamp);
  if (window_end) end = *window_end;

  const Preprocessor pre;
  std::vector<TokenSequence> docs;
  for (const auto& t : tweets) {
    if (!config.languages.empty() && !lang_filter(t, config.languages)) continue;
    if (t.timestamp > end - config.tracker.window_length && t.timestamp <= end) {
      docs.push_back(pre(t));
    }
  }
  if (docs.empty()) throw DataError("no tweets in the training window ending " + format_instant(end));
  const auto model = train_model(config.tracker.model, docs, config.models, end);
  if (snapshot_out.has_parent_path()) ensure_dir(snapshot_out.parent_path());
  save_model(model, snapshot_out);
}

TrackOutputs cmd_track(const RunConfig& base, const EventFile& event, const fs::path* pretrained) {
  RunConfig config = base;
  if (!config.threshold_explicit) {
    const auto it = event.thresholds.find(std::string(to_string(config.tracker.model)));
    if (it != event.thresholds.end()) config.tracker.threshold = it->second;
  }
  config.validate();
  IngestCounters counters;
  const auto tweets = load_stream(config.stream, counters);
  const std::uint64_t stream_hash = hash_string_file(config.stream);
  const std::size_t summary_length = resolve_summary_length(config, event);

  const json cfg = config_json(config, event, summary_length);
  json cache_key = {{"stream", hex64(stream_hash)},
                    {"mode", to_string(config.tracker.mode)},
                    {"window_ms", config.tracker.window_length.count()},
                    {"static_train_ms", config.tracker.train_span().count()},
                    {"reorder_slack_ms", config.tracker.reorder_slack.count()},
                    {"languages", config.languages},
                    {"models", models_json(config.models)}};

  std::shared_ptr<const RepresentationModel> initial;
  if (pretrained) {
    initial = std::make_shared<const RepresentationModel>(load_model(*pretrained));
    if (initial->kind() != config.tracker.model) {
      throw ConfigError(fmt::format("snapshot holds a {} model but --model is {}",
                                    to_string(initial->kind()), to_string(config.tracker.model)));
    }
  }

  std::optional<CachingFactory> cache;
  if (config.cache_dir) {
    ensure_dir(*config.cache_dir);
    cache.emplace(*config.cache_dir, hash_json(cache_key));
  }
  const auto result = track(tweets, event.event, tracker_options(config), initial,
                            cache ? cache->factory() : default_model_factory());

  SummaryConfig summary_config = config.summary;
  summary_config.target_length = summary_length;
  const auto summarized = summarize(result.timeline.entries, summary_config, Preprocessor());

  TrackOutputs out;
  out.timeline = result.timeline;
  out.stats = result.stats;
  out.summary = summarized;
  if (!event.references.empty()) {
    out.report = evaluate_against(texts_of(summarized, true), event.references, config.eval);
  }

  ensure_dir(config.out);
  const std::string timeline_file = timeline_text(result.timeline, {});
  Timeline summary_timeline = result.timeline;
  summary_timeline.entries = summarized;
  const std::string summary_file =
      timeline_text(summary_timeline, TimelineWriteOptions{config.keep_rejected});
  write_text(config.out / "timeline.jsonl", timeline_file);
  write_text(config.out / "summary.jsonl", summary_file);

  json m;
  m["tool"] = "newstrack";
  m["version"] = kVersion;
  m["config"] = cfg;
  m["config_hash"] = hex64(hash_json(cfg));
  m["stream"] = {{"file", config.stream.filename().string()},
                 {"hash", hex64(stream_hash)},
                 {"lines", counters.lines},
                 {"records", counters.records},
                 {"malformed", counters.malformed}};
  m["pretrained"] = pretrained ? json(pretrained->filename().string()) : json(nullptr);
  m["models"] = refreshes_json(result.stats);
  if (cache) m["cache"] = {{"hits", cache->hits()}, {"misses", cache->misses()}};
  m["counts"] = stats_json(result.stats);
  std::size_t selected = 0;
  for (const auto& e : summarized) selected += e.selected ? 1 : 0;
  m["outputs"] = {
      {"timeline", {{"file", "timeline.jsonl"}, {"entries", result.timeline.entries.size()},
                    {"hash", hex64(fnv1a64(timeline_file))}}},
      {"summary", {{"file", "summary.jsonl"}, {"entries", selected},
                   {"hash", hex64(fnv1a64(summary_file))}}}};
  if (out.report) {
    const json report = report_to_json(*out.report, event.event.id);
    write_text(config.out / "report.json", report.dump(2) + "\n");
    m["outputs"]["report"] = {{"file", "report.json"}, {"hash", hex64(hash_json(report))}};
  }
  // Cache traffic differs between cold and warm runs, so it stays out of the hash.
  json hashed = m;
  hashed.erase("cache");
  m["manifest_hash"] = hex64(hash_json(hashed));
  write_text(config.out / "manifest.json", m.dump(2) + "\n");
  out.manifest = std::move(m);
  return out;
}

std::vector<TimelineEntry> cmd_summarize(const fs::path& timeline, const fs::path& out,
                                         const SummaryConfig& config,
                                         const std::vector<fs::path>& references,
                                         bool summary_length_explicit, bool keep_rejected) {
  auto file = read_timeline(timeline);
  std::vector<TimelineEntry> entries;
  for (auto& e : file.entries) {
    if (e.selected) entries.push_back(std::move(e));
  }
  SummaryConfig cfg = config;
  if (!summary_length_explicit && !references.empty()) {
    std::vector<std::size_t> lengths;
    for (const auto& r : references) lengths.push_back(read_timeline(r).entries.size());
    cfg.target_length = target_length_from_references(lengths);
  }
  auto summarized = summarize(entries, cfg, Preprocessor());

  Timeline t;
  t.entries = summarized;
  std::ostringstream os;
  if (!file.model.empty()) t.model = parse_model_kind(file.model);
  if (!file.mode.empty()) t.mode = parse_tracking_mode(file.mode);
  write_timeline(os, t, TimelineWriteOptions{keep_rejected});
  if (out.has_parent_path()) ensure_dir(out.parent_path());
  write_text(out, os.str());
  return summarized;
}

RougeReport cmd_eval(const fs::path& system, const std::vector<fs::path>& references,
                     const EvalConfig& config) {
  if (references.empty()) throw DataError("at least one reference timeline is required");
  const auto file = read_timeline(system);
  return evaluate_against(texts_of(file.entries, true), references, config);
}

std::string cmd_replay_all(const RunConfig& config) {
  const auto events = load_events(config.event);
  std::string table = fmt::format("{:<16} {:<8} {:<9} {:>8} {:>8} {:>8} {:>8} {:>8} {:>8} {:>9}\n",
                                  "event", "model", "mode", "included", "summary", "R1-F1",
                                  "R2-F1", "RL-F1", "SU4-F1", "diversity");
  for (const auto& ev : events) {
    for (const ModelKind kind : kAllModels) {
      for (const TrackingMode mode : kAllModes) {
        RunConfig run = config;
        run.tracker.model = kind;
        run.tracker.mode = mode;
        run.out = config.out / ev.event.id / fmt::format("{}-{}", to_string(kind), to_string(mode));
        TrackOutputs res;
        try {
          res = cmd_track(run, ev);
        } catch (const TrainingError& e) {
          spdlog::warn("{} {} {}: {}", ev.event.id, to_string(kind), to_string(mode), e.what());
          table += fmt::format("{:<16} {:<8} {:<9} {:>8}\n", ev.event.id, to_string(kind),
                               to_string(mode), "failed");
          continue;
        }
        std::size_t selected = 0;
        for (const auto& e : res.summary) selected += e.selected ? 1 : 0;
        auto f1 = [&](std::string_view name) {
          if (!res.report) return std::string("-");
          const auto* v = res.report->find(name);
          return v ? fmt::format("{:.4f}", v->score.f1) : std::string("-");
        };
        std::string diversity = "-";
        if (res.report && res.report->diversity) {
          diversity = fmt::format("{:.4f}", *res.report->diversity);
        }
        table += fmt::format("{:<16} {:<8} {:<9} {:>8} {:>8} {:>8} {:>8} {:>8} {:>8} {:>9}\n",
                             ev.event.id, to_string(kind), to_string(mode),
                             res.timeline.entries.size(), selected, f1("ROUGE-1"), f1("ROUGE-2"),
                             f1("ROUGE-L"),
                             f1(fmt::format("ROUGE-SU{}", config.eval.su_skip_distance)),
                             diversity);
      }
    }
  }
  ensure_dir(config.out);
  write_text(config.out / "replay_summary.txt", table);
  return table;
}

}  // namespace newstrack::cli
