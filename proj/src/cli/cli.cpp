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


#include "morphalign/cli.hpp"

#include <algorithm>
#include <ostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "morphalign/errors.hpp"
#include "morphalign/parallel.hpp"
#include "morphalign/textio.hpp"

namespace morphalign::cli {
namespace {

// Every option value that shapes the output, sorted, hashed. Output paths
// and the thread count are left out so equal configurations hash equally.
std::string config_hash(const CLI::App& sub) {
  std::vector<std::string> entries;
  for (const CLI::Option* opt : sub.get_options()) {
    const std::string name = opt->get_name(false, true);
    if (name.empty() || name == "--help" || name == "--out" || name == "--out-dir" ||
        name == "--compare-out") {
      continue;
    }
    std::string value;
    if (opt->count() > 0) {
      for (const auto& v : opt->results()) value += v + "\x1f";
    } else {
      value = opt->get_default_str();
    }
    entries.push_back(name + "=" + value);
  }
  std::sort(entries.begin(), entries.end());
  std::string joined;
  for (const auto& e : entries) joined += e + "\n";
  return textio::fnv1a64_hex(joined);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  for (auto& part : textio::split(s, ',')) {
    if (!part.empty()) out.push_back(part);
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"MorphAlign: tokenizer evaluation, MorphScore, byte premiums and group statistics",
               "morphalign"};
  app.set_version_flag("--version", std::string(MORPHALIGN_VERSION));
  app.set_config("--config", "", "key=value config file; command-line flags take precedence");
  app.require_subcommand(1);
  app.fallthrough();
  int threads = 0;
  app.add_option("--threads", threads, "Worker threads (0 = all; MORPHALIGN_THREADS caps it)")
      ->check(CLI::NonNegativeNumber);

  TrainOptions train;
  auto* c_train = app.add_subcommand("train-tokenizer", "Train a BPE tokenizer");
  c_train->add_option("--corpus", train.corpus, "Training text, one line per sentence")
      ->required()->check(CLI::ExistingFile);
  c_train->add_option("--vocab-size", train.vocab_size, "Target size, specials included")
      ->capture_default_str();
  c_train->add_option("--marker", train.marker, "Word-initial marker")->capture_default_str();
  std::string specials = "<unk>,<s>,</s>,<pad>";
  c_train->add_option("--specials", specials, "Comma-separated special tokens")
      ->capture_default_str();
  c_train->add_option("--out", train.out, "Model JSON")->required();

  TokenizeOptions tokn;
  auto* c_tok = app.add_subcommand("tokenize", "Tokenize a text file");
  c_tok->add_option("--model", tokn.model, "Model JSON or vocab text file")
      ->required()->check(CLI::ExistingFile);
  c_tok->add_option("--merges", tokn.merges, "BPE merges for a vocab text file")
      ->check(CLI::ExistingFile);
  c_tok->add_option("--input", tokn.input, "Text file")->required()->check(CLI::ExistingFile);
  c_tok->add_flag("--ids", tokn.ids, "Write ids instead of pieces");
  c_tok->add_option("--out", tokn.out, "Output file")->required();

  MorphScoreOptions ms;
  auto* c_ms = app.add_subcommand("morphscore", "Score a tokenizer against a MorphScore dataset");
  c_ms->add_option("--model", ms.model, "Model JSON or vocab text file")
      ->required()->check(CLI::ExistingFile);
  c_ms->add_option("--merges", ms.merges, "BPE merges for a vocab text file")
      ->check(CLI::ExistingFile);
  c_ms->add_option("--dataset", ms.dataset, "Dataset TSV (word, boundary, lang, source)")
      ->required()->check(CLI::ExistingFile);
  c_ms->add_option("--profile", ms.profile, "CSV with lang,morph_type for a group t-test")
      ->check(CLI::ExistingFile);
  c_ms->add_option("--compare-out", ms.compare_out, "JSON output of the group t-test");
  c_ms->add_option("--out", ms.out, "Report CSV, one row per language")->required();

  BuildDatasetOptions bd;
  auto* c_bd = app.add_subcommand("build-dataset", "Build a MorphScore dataset");
  c_bd->add_option("--lang", bd.lang, "Language code, e.g. tur_latn")->required();
  c_bd->add_option("--conllu", bd.conllu, "CoNLL-U treebank file")->check(CLI::ExistingFile);
  c_bd->add_option("--unimorph", bd.unimorph, "UniMorph TSV file")->check(CLI::ExistingFile);
  c_bd->add_option("--seed", bd.seed, "Sampling seed")->capture_default_str();
  c_bd->add_option("--out", bd.out, "Dataset TSV")->required();

  MetricsOptions mt;
  auto* c_mt = app.add_subcommand("metrics", "CTC, fertility, token length and Renyi entropy");
  c_mt->add_option("--model", mt.models, "Model JSON or vocab text file (repeatable)")
      ->required()->check(CLI::ExistingFile);
  c_mt->add_option("--merges", mt.merges, "BPE merges for a vocab text file")
      ->check(CLI::ExistingFile);
  c_mt->add_option("--corpus", mt.corpus, "LANG=PATH (repeatable)")->required();
  c_mt->add_option("--alpha", mt.alpha, "Renyi order")->capture_default_str()
      ->check(CLI::PositiveNumber);
  c_mt->add_option("--out", mt.out, "Metrics CSV")->required();

  BytePremiumOptions bp;
  auto* c_bp = app.add_subcommand("byte-premium", "Byte premiums from a parallel corpus");
  c_bp->add_option("--corpus", bp.corpus, "LANG=PATH, line-aligned (repeatable)")->required();
  c_bp->add_option("--pivot", bp.pivot, "Pivot language")->capture_default_str();
  c_bp->add_option("--out", bp.out, "CSV (lang, ratio, bytes)")->required();

  ScaleOptions sc;
  auto* c_sc = app.add_subcommand("scale-corpus", "Take a byte-premium-scaled prefix of a corpus");
  c_sc->add_option("--input", sc.input, "Text file")->required()->check(CLI::ExistingFile);
  c_sc->add_option("--budget-bytes", sc.budget_bytes, "Base byte budget")->required();
  c_sc->add_option("--premium", sc.premium, "Byte premium ratio")->capture_default_str();
  c_sc->add_option("--seed", sc.seed, "Shuffle seed")->capture_default_str();
  c_sc->add_flag("--shuffle", sc.shuffle, "Shuffle lines before taking the prefix");
  c_sc->add_option("--out", sc.out, "Output text file")->required();

  SynthOptions sy;
  std::pair<std::size_t, std::size_t> root_len{sy.spec.root_len.min, sy.spec.root_len.max};
  std::pair<std::size_t, std::size_t> affix_len{sy.spec.affix_len.min, sy.spec.affix_len.max};
  std::string alphabet;
  for (const auto& a : sy.spec.alphabet) alphabet += (alphabet.empty() ? "" : ",") + a;
  auto* c_sy = app.add_subcommand("synth", "Generate a synthetic corpus with gold boundaries");
  c_sy->add_option("--typology", sy.typology, "agglutinative or fusional")->capture_default_str();
  c_sy->add_option("--seed", sy.spec.seed, "Seed")->capture_default_str();
  c_sy->add_option("--n-words", sy.n_words, "Words to generate")->capture_default_str();
  c_sy->add_option("--n-roots", sy.spec.n_roots, "Distinct roots")->capture_default_str();
  c_sy->add_option("--root-len", root_len, "Root length range MIN MAX")->capture_default_str();
  c_sy->add_option("--n-slots", sy.spec.n_slots, "Affix slots (agglutinative)")
      ->capture_default_str();
  c_sy->add_option("--n-affixes", sy.spec.n_affixes_per_slot, "Affixes per slot")
      ->capture_default_str();
  c_sy->add_option("--paradigm-size", sy.spec.paradigm_size, "Portmanteau affixes (fusional)")
      ->capture_default_str();
  c_sy->add_option("--affix-len", affix_len, "Affix length range MIN MAX")->capture_default_str();
  c_sy->add_option("--alphabet", alphabet, "Comma-separated symbols")->capture_default_str();
  c_sy->add_option("--zipf-s", sy.spec.zipf_s, "Root frequency skew")->capture_default_str();
  c_sy->add_option("--words-per-line", sy.spec.words_per_line, "Words per corpus line")
      ->capture_default_str();
  c_sy->add_option("--lang", sy.spec.lang, "Language code for gold items");
  c_sy->add_option("--out-dir", sy.out_dir, "Writes corpus.txt, gold.tsv, spec.json")
      ->required();

  AnalyzeOptions an;
  auto* c_an = app.add_subcommand("analyze", "Regression, nested F, t-test or Pearson on a CSV");
  c_an->add_option("--data", an.data, "LangRecord CSV")->required()->check(CLI::ExistingFile);
  c_an->add_option("--formula", an.formula, "'y ~ a + C(b)'; C() forces a factor");
  c_an->add_option("--drop", an.drop, "Term removed for the nested F test (repeatable)");
  c_an->add_option("--ttest", an.ttest, "Metric column for a two-group t-test");
  c_an->add_option("--group", an.group, "Grouping column")->capture_default_str();
  c_an->add_flag("--pooled", an.pooled, "Pooled-variance t-test instead of Welch");
  c_an->add_option("--pearson", an.pearson, "X:Y columns for a Pearson correlation");
  c_an->add_option("--out", an.out, "Results JSON")->required();

  ReportOptions rp;
  auto* c_rp = app.add_subcommand("report", "Group summary JSON and SVG bar charts");
  c_rp->add_option("--input", rp.inputs, "Metric CSV (repeatable)")
      ->required()->check(CLI::ExistingFile);
  c_rp->add_option("--group", rp.group, "Grouping column")->capture_default_str();
  c_rp->add_option("--out-dir", rp.out_dir, "Output directory")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << MORPHALIGN_VERSION << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const CLI::App* sub = nullptr;
    for (const auto* s : app.get_subcommands()) sub = s;
    err << (sub ? sub->help() : app.help());
    return kExitUsage;
  }

  struct ThreadLimit {
    explicit ThreadLimit(int n) { parallel::set_thread_limit(n); }
    ~ThreadLimit() { parallel::set_thread_limit(0); }
  } limit(threads);
  const CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  try {
    CommandResult result;
    if (sub == c_train) {
      train.specials = split_list(specials);
      result = train_tokenizer(train);
    } else if (sub == c_tok) {
      result = tokenize(tokn);
    } else if (sub == c_ms) {
      result = morphscore(ms);
    } else if (sub == c_bd) {
      result = build_dataset(bd);
    } else if (sub == c_mt) {
      result = metrics(mt);
    } else if (sub == c_bp) {
      result = byte_premium(bp);
    } else if (sub == c_sc) {
      result = scale_corpus(sc);
    } else if (sub == c_sy) {
      sy.spec.root_len = {root_len.first, root_len.second};
      sy.spec.affix_len = {affix_len.first, affix_len.second};
      sy.spec.alphabet = split_list(alphabet);
      result = synth(sy);
    } else if (sub == c_an) {
      result = analyze(an);
    } else {
      result = report(rp);
    }
    write_manifest(result, name, config_hash(*sub));
    return kExitOk;
  } catch (const DatasetTooSmall& e) {
    err << name << ": " << e.what() << "\n";
    return kExitInput;
  } catch (const InputError& e) {
    err << name << ": input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const FormatError& e) {
    err << name << ": format error: " << e.what() << "\n";
    return kExitInput;
  } catch (const StatError& e) {
    err << name << ": statistics error: " << e.what() << "\n";
    return kExitStat;
  } catch (const ConfigError& e) {
    err << name << ": configuration error: " << e.what() << "\n";
    return kExitStat;
  } catch (const std::exception& e) {
    err << name << ": internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace morphalign::cli
