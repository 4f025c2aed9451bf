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

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "cli/commands.hpp"
#include "newstrack/error.hpp"
#include "newstrack/snapshot_io.hpp"
#include "newstrack/version.hpp"

namespace newstrack::cli {
namespace fs = std::filesystem;

namespace {

struct Flags {
  std::string stream;
  std::string event;
  std::string out;
  std::string model = "sgns";
  std::string mode = "adaptive";
  std::optional<double> threshold;
  double window_hours = 24.0;
  double refresh_minutes = 15.0;
  std::optional<double> static_train_hours;
  double reorder_slack_seconds = 60.0;
  bool no_refresh = false;
  std::optional<std::size_t> dim;
  std::uint64_t seed = 1;
  std::size_t epochs = SgnsConfig{}.epochs;
  std::size_t context = SgnsConfig{}.max_context;
  std::size_t min_count = SgnsConfig{}.min_count;
  double learning_rate = SgnsConfig{}.learning_rate;
  std::size_t nonzeros = RiConfig{}.nonzeros;
  double k1 = Bm25Params{}.k1;
  double b = Bm25Params{}.b;
  bool floor_idf = false;
  bool phrases = false;
  std::string languages = "en";
  std::optional<std::size_t> summary_length;
  double dup_threshold = SummaryConfig{}.dup_threshold;
  bool keep_rejected = false;
  std::string cache_dir;
  std::string snapshot;
  std::vector<int> rouge_n{1, 2};
  int skip_distance = 4;
  bool no_su_unigrams = false;
  bool no_stem = false;
  bool remove_stopwords = false;
};

Duration from_hours(double h, const char* flag) {
  if (!(h > 0.0) || !std::isfinite(h)) throw ConfigError(fmt::format("{} must be positive", flag));
  return Duration(static_cast<Duration::rep>(std::llround(h * 3600000.0)));
}

std::set<std::string> split_languages(const std::string& s) {
  std::set<std::string> out;
  if (s == "any" || s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.insert(item);
  }
  return out;
}

void add_stream(CLI::App* app, Flags& f, bool required = true) {
  auto* o = app->add_option("--stream", f.stream, "Tweet stream, one JSON record per line");
  if (required) o->required();
}

void add_tracker(CLI::App* app, Flags& f) {
  app->add_option("--model", f.model, "Representation model")
      ->check(CLI::IsMember({"bm25", "sgns", "ri-ttri", "ri-trri"}))
      ->capture_default_str();
  app->add_option("--mode", f.mode, "Tracking mode")
      ->check(CLI::IsMember({"adaptive", "static"}))
      ->capture_default_str();
  app->add_option("--threshold", f.threshold,
                  "Inclusion threshold on similarity (default: the event's value for the model, "
                  "else 0.5)");
  app->add_option("--window-hours", f.window_hours, "Sliding window length")->capture_default_str();
  app->add_option("--refresh-minutes", f.refresh_minutes, "Model refresh interval")
      ->capture_default_str();
  app->add_option("--static-train-hours", f.static_train_hours,
                  "Static mode training span before the event (default: window length)");
  app->add_option("--reorder-slack-seconds", f.reorder_slack_seconds,
                  "Tolerance for out-of-order tweets")
      ->capture_default_str();
  app->add_flag("--no-refresh", f.no_refresh, "Adaptive mode keeps its first model");
  app->add_option("--languages", f.languages, "Comma-separated language filter, or 'any'")
      ->capture_default_str();
}

void add_models(CLI::App* app, Flags& f) {
  app->add_option("--dim", f.dim, "Vector dimension (skip-gram default 200, RI default 2500)");
  app->add_option("--seed", f.seed, "Training seed")->capture_default_str();
  app->add_option("--epochs", f.epochs, "Skip-gram epochs")->capture_default_str();
  app->add_option("--context", f.context, "Maximum context radius")->capture_default_str();
  app->add_option("--min-count", f.min_count, "Minimum term frequency")->capture_default_str();
  app->add_option("--learning-rate", f.learning_rate, "Skip-gram initial learning rate")
      ->capture_default_str();
  app->add_option("--nonzeros", f.nonzeros, "Nonzero entries per RI index vector")
      ->capture_default_str();
  app->add_option("--k1", f.k1, "BM25 k1")->capture_default_str();
  app->add_option("--b", f.b, "BM25 b")->capture_default_str();
  app->add_flag("--floor-idf", f.floor_idf, "Clamp negative BM25 IDF to 0");
  app->add_flag("--phrases", f.phrases, "Join frequent bigrams before training");
}

void add_summary(CLI::App* app, Flags& f) {
  app->add_option("--summary-length", f.summary_length,
                  "Summary size in tweets (default: mean reference length, else 10)");
  app->add_option("--dup-threshold", f.dup_threshold, "Near-duplicate cosine threshold")
      ->capture_default_str();
  app->add_flag("--keep-rejected", f.keep_rejected,
                "Write every entry with a selected flag instead of dropping");
}

void add_eval(CLI::App* app, Flags& f) {
  app->add_option("--rouge-n", f.rouge_n, "ROUGE-N orders")->capture_default_str();
  app->add_option("--skip-distance", f.skip_distance, "ROUGE-SU maximum skip")
      ->capture_default_str();
  app->add_flag("--no-su-unigrams", f.no_su_unigrams, "Skip-bigrams only in ROUGE-SU");
  app->add_flag("--no-stem", f.no_stem, "Disable Porter stemming");
  app->add_flag("--remove-stopwords", f.remove_stopwords, "Drop English stopwords");
}

RunConfig to_config(const Flags& f) {
  RunConfig c;
  c.stream = f.stream;
  c.event = f.event;
  c.out = f.out;
  c.tracker.model = parse_model_kind(f.model);
  c.tracker.mode = parse_tracking_mode(f.mode);
  if (f.threshold) {
    c.tracker.threshold = *f.threshold;
    c.threshold_explicit = true;
  }
  c.tracker.window_length = from_hours(f.window_hours, "--window-hours");
  c.tracker.refresh_rate = from_hours(f.refresh_minutes / 60.0, "--refresh-minutes");
  if (f.static_train_hours) {
    c.tracker.static_train_span = from_hours(*f.static_train_hours, "--static-train-hours");
  }
  if (f.reorder_slack_seconds < 0.0) throw ConfigError("--reorder-slack-seconds must be >= 0");
  c.tracker.reorder_slack =
      Duration(static_cast<Duration::rep>(std::llround(f.reorder_slack_seconds * 1000.0)));
  c.tracker.refresh_enabled = !f.no_refresh;
  if (f.dim) c.set_dim(*f.dim);
  c.set_seed(f.seed);
  c.models.sgns.epochs = f.epochs;
  c.models.sgns.max_context = f.context;
  c.models.ri.context_radius = f.context;
  c.models.sgns.min_count = f.min_count;
  c.models.ri.min_count = f.min_count;
  c.models.sgns.learning_rate = f.learning_rate;
  c.models.ri.nonzeros = f.nonzeros;
  c.models.bm25 = Bm25Params{f.k1, f.b, f.floor_idf};
  c.models.phrases.enabled = f.phrases;
  c.languages = split_languages(f.languages);
  if (f.summary_length) {
    c.summary.target_length = *f.summary_length;
    c.summary_length_explicit = true;
  }
  c.summary.dup_threshold = f.dup_threshold;
  c.keep_rejected = f.keep_rejected;
  if (!f.cache_dir.empty()) c.cache_dir = fs::path(f.cache_dir);
  c.eval.rouge_n = f.rouge_n;
  c.eval.su_skip_distance = f.skip_distance;
  c.eval.su_include_unigrams = !f.no_su_unigrams;
  c.eval.stemming = !f.no_stem;
  c.eval.stopword_removal = f.remove_stopwords;
  c.validate();
  return c;
}

std::vector<fs::path> to_paths(const std::vector<std::string>& v) {
  return {v.begin(), v.end()};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Replay a tweet stream and track news events with adaptive term models",
               "newstrack"};
  app.set_version_flag("--version", std::string(kVersion));
  app.set_config("--config", "", "INI file; [subcommand] sections set flags, flags win");
  app.require_subcommand(1);
  std::string log_level = "warn";
  app.add_option("--log-level", log_level, "trace, debug, info, warn, error or off")
      ->capture_default_str();

  Flags f;
  bool strict = false;
  std::string window_end;
  std::string timeline;
  std::string system;
  std::vector<std::string> references;

  auto* validate = app.add_subcommand("validate", "Scan a stream and report record statistics");
  add_stream(validate, f);
  validate->add_flag("--strict", strict, "Exit with a data error when any line is malformed");

  auto* train = app.add_subcommand("train", "Train one model snapshot on a window of the stream");
  add_stream(train, f);
  add_tracker(train, f);
  add_models(train, f);
  train->add_option("--window-end", window_end, "Window end (default: last tweet)");
  train->add_option("--out", f.out, "Snapshot file")->required();

  auto* track_cmd = app.add_subcommand("track", "Replay the stream for one event");
  add_stream(track_cmd, f);
  track_cmd->add_option("--event", f.event, "Event JSON file")->required();
  track_cmd->add_option("--out", f.out, "Output directory")->required();
  add_tracker(track_cmd, f);
  add_models(track_cmd, f);
  add_summary(track_cmd, f);
  add_eval(track_cmd, f);
  track_cmd->add_option("--cache-dir", f.cache_dir, "Directory for cached model snapshots");
  track_cmd->add_option("--snapshot", f.snapshot, "Pretrained snapshot to start from");

  auto* summarize_cmd = app.add_subcommand("summarize", "Deduplicate and summarize a timeline");
  summarize_cmd->add_option("--timeline", timeline, "Timeline file")->required();
  summarize_cmd->add_option("--out", f.out, "Summary file")->required();
  summarize_cmd->add_option("--references", references, "Reference timelines for the length");
  add_summary(summarize_cmd, f);

  auto* evaluate_cmd = app.add_subcommand("evaluate", "Score a timeline against references");
  evaluate_cmd->add_option("--system", system, "System timeline")->required();
  evaluate_cmd->add_option("--reference", references, "Reference timeline (repeatable)")
      ->required();
  evaluate_cmd->add_option("--out", f.out, "Also write the report as JSON");
  evaluate_cmd->add_option("--event-id", f.event, "Label for the report");
  add_eval(evaluate_cmd, f);

  auto* replay = app.add_subcommand("replay-all", "Every model and mode for every event");
  add_stream(replay, f);
  replay->add_option("--event", f.event, "Event JSON file (object or array)")->required();
  replay->add_option("--out", f.out, "Output directory")->required();
  add_tracker(replay, f);
  add_models(replay, f);
  add_summary(replay, f);
  add_eval(replay, f);
  replay->add_option("--cache-dir", f.cache_dir, "Directory for cached model snapshots");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    spdlog::set_level(spdlog::level::from_str(log_level));
    if (validate->parsed()) {
      const auto report = cmd_validate(f.stream);
      out << report.to_json().dump(2) << "\n";
      return strict && report.malformed > 0 ? kDataError : kOk;
    }
    if (train->parsed()) {
      const RunConfig cfg = to_config(f);
      std::optional<Instant> end;
      if (!window_end.empty()) end = parse_instant(window_end);
      cmd_train(cfg, end, f.out);
      out << "wrote " << f.out << "\n";
      return kOk;
    }
    if (track_cmd->parsed()) {
      const RunConfig cfg = to_config(f);
      const auto events = load_events(cfg.event);
      if (events.size() != 1) throw ConfigError("track takes a single event; use replay-all");
      const fs::path snapshot(f.snapshot);
      const auto res = cmd_track(cfg, events.front(), f.snapshot.empty() ? nullptr : &snapshot);
      out << fmt::format("{}: {} timeline entries, {} refreshes, output in {}\n",
                         events.front().event.id, res.timeline.entries.size(),
                         res.stats.refreshes.size(), cfg.out.string());
      if (res.report) out << format_report_table(*res.report, events.front().event.id);
      return kOk;
    }
    if (summarize_cmd->parsed()) {
      SummaryConfig sc;
      sc.dup_threshold = f.dup_threshold;
      if (f.summary_length) sc.target_length = *f.summary_length;
      sc.validate();
      const auto entries = cmd_summarize(timeline, f.out, sc, to_paths(references),
                                         f.summary_length.has_value(), f.keep_rejected);
      std::size_t selected = 0;
      for (const auto& e : entries) selected += e.selected ? 1 : 0;
      out << fmt::format("{} of {} entries selected\n", selected, entries.size());
      return kOk;
    }
    if (evaluate_cmd->parsed()) {
      const RunConfig cfg = to_config(f);
      const auto report = cmd_eval(system, to_paths(references), cfg.eval);
      const std::string id = f.event.empty() ? fs::path(system).stem().string() : f.event;
      out << format_report_table(report, id);
      if (!f.out.empty()) {
        std::ofstream file(f.out);
        if (!file) throw IoError("cannot write " + f.out);
        file << report_to_json(report, id).dump(2) << "\n";
      }
      return kOk;
    }
    if (replay->parsed()) {
      out << cmd_replay_all(to_config(f));
      return kOk;
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDataError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

}  // namespace newstrack::cli
