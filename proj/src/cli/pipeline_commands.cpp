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


#include <fstream>
#include <map>
#include <sstream>

#include "commands.hpp"
#include "json.hpp"
#include "morphalign/byte_premium.hpp"
#include "morphalign/dataset.hpp"
#include "morphalign/errors.hpp"
#include "morphalign/metrics.hpp"
#include "morphalign/morphscore.hpp"
#include "morphalign/textio.hpp"
#include "morphalign/tokenizer.hpp"

namespace morphalign::cli {
namespace {

fs::path manifest_for(const fs::path& out) {
  return fs::path(out.string() + ".manifest.json");
}

void ensure_parent(const fs::path& out) {
  if (out.has_parent_path()) fs::create_directories(out.parent_path());
}

tok::TokenizerModel load_any_model(const std::string& path, const std::string& merges) {
  if (fs::path(path).extension() == ".json") {
    if (!merges.empty()) throw ConfigError("--merges only applies to plain-text vocab files");
    return tok::load_model(path);
  }
  return tok::import_text_model(path, merges.empty() ? std::nullopt
                                                      : std::optional<fs::path>(merges));
}

// "lang=path" -> (lang, path).
std::pair<std::string, fs::path> lang_path(const std::string& arg) {
  const auto eq = arg.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == arg.size()) {
    throw ConfigError("expected LANG=PATH, got '" + arg + "'");
  }
  return {arg.substr(0, eq), arg.substr(eq + 1)};
}

void write_text(const fs::path& out, const std::string& body) {
  ensure_parent(out);
  textio::write_file(out, body);
}

}  // namespace

CommandResult train_tokenizer(const TrainOptions& o) {
  CommandResult r;
  std::vector<std::string> lines;
  for (const auto& path : o.corpus) {
    auto more = textio::read_lines(path);
    lines.insert(lines.end(), std::make_move_iterator(more.begin()),
                 std::make_move_iterator(more.end()));
    r.inputs.emplace_back(path);
  }
  const auto model = tok::train_bpe(lines, o.vocab_size, o.marker, o.specials);
  write_text(o.out, tok::to_json(model));
  r.outputs.emplace_back(o.out);
  r.manifest = manifest_for(o.out);
  return r;
}

CommandResult tokenize(const TokenizeOptions& o) {
  CommandResult r;
  const auto model = load_any_model(o.model, o.merges);
  const auto lines = textio::read_lines(o.input);
  const auto encoded = tok::encode_corpus(model, lines);
  std::string body;
  for (const auto& words : encoded) {
    bool first = true;
    for (const auto& seg : words) {
      for (std::size_t k = 0; k < seg.pieces.size(); ++k) {
        if (!first) body += ' ';
        first = false;
        body += o.ids ? std::to_string(seg.ids[k]) : seg.pieces[k];
      }
    }
    body += '\n';
  }
  write_text(o.out, body);
  r.inputs = {o.model, o.input};
  if (!o.merges.empty()) r.inputs.emplace_back(o.merges);
  r.outputs.emplace_back(o.out);
  r.manifest = manifest_for(o.out);
  return r;
}

CommandResult morphscore(const MorphScoreOptions& o) {
  CommandResult r;
  const auto model = load_any_model(o.model, o.merges);
  const auto items = read_dataset_tsv(o.dataset);
  if (items.empty()) throw InputError(o.dataset + ": no items");
  std::vector<morph::MorphScoreReport> reports;
  for (const auto& group : morph::group_by_lang(items)) {
    reports.push_back(morph::morphscore(model, group));
  }
  std::ostringstream csv;
  morph::write_reports_csv(csv, reports);
  write_text(o.out, csv.str());
  r.inputs = {o.model, o.dataset};
  if (!o.merges.empty()) r.inputs.emplace_back(o.merges);
  r.outputs.emplace_back(o.out);

  if (!o.profile.empty()) {
    if (o.compare_out.empty()) throw ConfigError("--profile needs --compare-out");
    const auto table = textio::read_csv(o.profile);
    const auto lang_col = table.column("lang");
    const auto type_col = table.column("morph_type");
    if (!lang_col || !type_col) {
      throw FormatError(o.profile + ": needs columns lang and morph_type");
    }
    std::map<std::string, std::string> profile;
    for (const auto& row : table.rows) profile[row[*lang_col]] = row[*type_col];
    const auto c = morph::compare_groups(reports, profile);
    nlohmann::ordered_json j;
    j["group_a"] = c.group_a;
    j["group_b"] = c.group_b;
    j["langs_a"] = c.langs_a;
    j["langs_b"] = c.langs_b;
    j["mean_a"] = c.test.mean_a;
    j["mean_b"] = c.test.mean_b;
    j["t"] = c.test.t;
    j["df"] = c.test.df;
    j["p"] = c.test.p;
    j["test"] = "welch";
    write_text(o.compare_out, j.dump(2) + "\n");
    r.inputs.emplace_back(o.profile);
    r.outputs.emplace_back(o.compare_out);
  } else if (!o.compare_out.empty()) {
    throw ConfigError("--compare-out needs --profile");
  }
  r.manifest = manifest_for(o.out);
  return r;
}

CommandResult build_dataset(const BuildDatasetOptions& o) {
  if (o.conllu.empty() && o.unimorph.empty()) {
    throw ConfigError("build-dataset needs at least one --conllu or --unimorph file");
  }
  CommandResult r;
  std::vector<MorphItem> items;
  for (const auto& path : o.conllu) {
    const auto tokens = data::parse_conllu(path);
    const auto derived = data::derive_items(tokens, o.lang);
    items.insert(items.end(), derived.begin(), derived.end());
    r.inputs.emplace_back(path);
  }
  for (const auto& path : o.unimorph) {
    const auto parsed = data::parse_unimorph(fs::path(path), o.lang);
    items.insert(items.end(), parsed.begin(), parsed.end());
    r.inputs.emplace_back(path);
  }
  const auto final_items = data::finalize_dataset(std::move(items), o.seed);
  ensure_parent(o.out);
  write_dataset_tsv(fs::path(o.out), final_items);
  r.outputs.emplace_back(o.out);
  r.seed = o.seed;
  r.manifest = manifest_for(o.out);
  return r;
}

CommandResult metrics(const MetricsOptions& o) {
  if (o.corpus.empty()) throw ConfigError("metrics needs at least one --corpus LANG=PATH");
  if (o.models.size() > 1 && !o.merges.empty()) {
    throw ConfigError("--merges applies to a single --model");
  }
  CommandResult r;
  std::vector<std::pair<std::string, std::vector<std::string>>> corpora;
  for (const auto& arg : o.corpus) {
    auto [lang, path] = lang_path(arg);
    corpora.emplace_back(lang, textio::read_lines(path));
    r.inputs.push_back(path);
  }
  std::string body = metrics::metrics_csv_header();
  for (const auto& model_path : o.models) {
    const auto model = load_any_model(model_path, o.merges);
    r.inputs.emplace_back(model_path);
    const std::string name = fs::path(model_path).filename().string();
    for (const auto& [lang, lines] : corpora) {
      body += metrics::metrics_csv_row(metrics::compute_metrics(model, lines, lang, o.alpha), name);
    }
  }
  if (!o.merges.empty()) r.inputs.emplace_back(o.merges);
  write_text(o.out, body);
  r.outputs.emplace_back(o.out);
  r.manifest = manifest_for(o.out);
  return r;
}

CommandResult byte_premium(const BytePremiumOptions& o) {
  CommandResult r;
  std::vector<std::pair<std::string, fs::path>> files;
  for (const auto& arg : o.corpus) {
    files.push_back(lang_path(arg));
    r.inputs.push_back(files.back().second);
  }
  const auto corpus = data::read_parallel(files);
  std::string body = "lang,ratio,bytes\n";
  for (const auto& lang : corpus.langs) {
    const auto bp = bp::compute_byte_premium(corpus, lang, o.pivot);
    const std::vector<std::string> fields = {lang, textio::format_double(bp.ratio),
                                             std::to_string(bp.lang_bytes)};
    body += textio::csv_row(fields);
  }
  write_text(o.out, body);
  r.outputs.emplace_back(o.out);
  r.manifest = manifest_for(o.out);
  return r;
}

CommandResult scale_corpus(const ScaleOptions& o) {
  CommandResult r;
  const auto lines = textio::read_lines(o.input);
  const auto scaled = bp::scale_corpus(lines, o.premium, o.budget_bytes, o.seed, o.shuffle);
  ensure_parent(o.out);
  textio::write_lines(o.out, scaled);
  r.inputs.emplace_back(o.input);
  r.outputs.emplace_back(o.out);
  if (o.shuffle) r.seed = o.seed;
  r.manifest = manifest_for(o.out);
  return r;
}

CommandResult synth(const SynthOptions& o) {
  CommandResult r;
  synth::SynthSpec spec = o.spec;
  spec.typology = synth::parse_typology(o.typology);
  const auto corpus = synth::generate(spec, o.n_words);
  const fs::path dir(o.out_dir);
  fs::create_directories(dir);
  textio::write_lines(dir / "corpus.txt", corpus.lines);
  write_dataset_tsv(dir / "gold.tsv", corpus.gold);
  textio::write_file(dir / "spec.json", synth::spec_to_json(spec));
  r.outputs = {dir / "corpus.txt", dir / "gold.tsv", dir / "spec.json"};
  r.seed = spec.seed;
  r.manifest = dir / "manifest.json";
  return r;
}

}  // namespace morphalign::cli
