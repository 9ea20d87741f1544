// Copyright 2026 The MorphAlign Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Subcommand implementations behind the morphalign binary. Each command
// reads files, writes files, and reports what it touched so the caller can
// write the run manifest.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "morphalign/synthlang.hpp"

namespace morphalign::cli {

namespace fs = std::filesystem;

struct CommandResult {
  std::vector<fs::path> inputs;
  std::vector<fs::path> outputs;
  std::optional<std::uint64_t> seed;
  /// Where the manifest goes: next to the output file, or inside the
  /// output directory.
  fs::path manifest;
};

struct TrainOptions {
  std::vector<std::string> corpus;
  int vocab_size = 8000;
  std::string marker = "▁";
  std::vector<std::string> specials = {"<unk>", "<s>", "</s>", "<pad>"};
  std::string out;
};

struct TokenizeOptions {
  std::string model;
  std::string merges;
  std::string input;
  std::string out;
  bool ids = false;
};

struct MorphScoreOptions {
  std::string model;
  std::string merges;
  std::string dataset;
  std::string out;
  std::string profile;
  std::string compare_out;
};

struct BuildDatasetOptions {
  std::string lang;
  std::vector<std::string> conllu;
  std::vector<std::string> unimorph;
  std::uint64_t seed = 0;
  std::string out;
};

struct MetricsOptions {
  std::vector<std::string> models;
  std::string merges;
  /// "lang=path" pairs.
  std::vector<std::string> corpus;
  double alpha = 2.5;
  std::string out;
};

struct BytePremiumOptions {
  std::vector<std::string> corpus;
  std::string pivot = "eng_latn";
  std::string out;
};

struct ScaleOptions {
  std::string input;
  std::int64_t budget_bytes = 0;
  double premium = 1.0;
  std::uint64_t seed = 0;
  bool shuffle = false;
  std::string out;
};

struct SynthOptions {
  synth::SynthSpec spec;
  std::string typology = "agglutinative";
  std::size_t n_words = 2000;
  std::string out_dir;
};

struct AnalyzeOptions {
  std::string data;
  std::string formula;
  std::vector<std::string> drop;
  std::string ttest;
  std::string group = "morph_type";
  bool pooled = false;
  std::string pearson;
  std::string out;
};

struct ReportOptions {
  std::vector<std::string> inputs;
  std::string group = "morph_type";
  std::string out_dir;
};

CommandResult train_tokenizer(const TrainOptions& o);
CommandResult tokenize(const TokenizeOptions& o);
CommandResult morphscore(const MorphScoreOptions& o);
CommandResult build_dataset(const BuildDatasetOptions& o);
CommandResult metrics(const MetricsOptions& o);
CommandResult byte_premium(const BytePremiumOptions& o);
CommandResult scale_corpus(const ScaleOptions& o);
CommandResult synth(const SynthOptions& o);
CommandResult analyze(const AnalyzeOptions& o);
CommandResult report(const ReportOptions& o);

/// Writes <result.manifest> as JSON: subcommand, config hash, input and
/// output digests, seed, version, sampler and a UTC timestamp.
void write_manifest(const CommandResult& result, const std::string& subcommand,
                    const std::string& config_hash);

}  // namespace morphalign::cli
