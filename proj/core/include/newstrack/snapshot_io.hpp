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

#include <filesystem>
#include <iosfwd>

#include "newstrack/model.hpp"

namespace newstrack {

/// Model snapshot file, format version 1 (UTF-8 text):
///
///   newstrack-snapshot 1
///   kind <bm25|sgns|ri-ttri|ri-trri>
///   trained_at <RFC 3339>
///   <key> <value>            kind-specific header fields
///   [rows]
///   <term>\t<v1> <v2> ... <vD>   sgns (shortest round-trip floats) and RI (integers)
///   <term>\t<df>                 bm25
///
/// Header keys: sgns has dim and vocab; RI adds nonzeros, context_radius,
/// min_count and seed so index vectors can be regenerated; bm25 has docs,
/// avgdl, k1, b, floor_idf and vocab. Rows keep the model's vocabulary order.
/// Skip-gram snapshots hold input embeddings only; a loaded model scores
/// tweets but carries no output layer. Phrase tables are written as
/// "phrase <a> <b>" header lines.
void save_model(const RepresentationModel& model, std::ostream& out);
void save_model(const RepresentationModel& model, const std::filesystem::path& path);

/// Throws DataError on malformed input and IoError if the file is unreadable.
RepresentationModel load_model(std::istream& in);
RepresentationModel load_model(const std::filesystem::path& path);

}  // namespace newstrack
