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


// Parallel kernels against their serial references on a synthetic corpus.
// Run with --benchmark_filter=... to pick a kernel.

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "morphalign/metrics.hpp"
#include "morphalign/morphscore.hpp"
#include "morphalign/synthlang.hpp"
#include "morphalign/tokenizer.hpp"

namespace {

namespace ma = morphalign;

struct Workload {
  ma::synth::SynthCorpus corpus;
  ma::tok::TokenizerModel model;
  std::vector<ma::MorphItem> items;
};

const Workload& workload() {
  static const Workload w = [] {
    ma::synth::SynthSpec spec;
    spec.seed = 11;
    auto corpus = ma::synth::generate(spec, 200000);
    auto model = ma::tok::train_bpe(corpus.lines, 4000);
    auto items = corpus.gold;
    return Workload{std::move(corpus), std::move(model), std::move(items)};
  }();
  return w;
}

ma::morph::Segmenter segmenter(const ma::tok::TokenizerModel& model) {
  return [&model](std::string_view w) { return ma::tok::encode_word(model, w); };
}

void BM_EncodeCorpus(benchmark::State& state) {
  const auto& w = workload();
  for (auto _ : state) benchmark::DoNotOptimize(ma::tok::encode_corpus(w.model, w.corpus.lines));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(w.corpus.lines.size()));
}

void BM_EncodeCorpusSerial(benchmark::State& state) {
  const auto& w = workload();
  for (auto _ : state) {
    benchmark::DoNotOptimize(ma::tok::encode_corpus_serial(w.model, w.corpus.lines));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(w.corpus.lines.size()));
}

void BM_TallyCorpus(benchmark::State& state) {
  const auto& w = workload();
  for (auto _ : state) benchmark::DoNotOptimize(ma::metrics::tally_corpus(w.model, w.corpus.lines));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(w.corpus.lines.size()));
}

void BM_TallyCorpusSerial(benchmark::State& state) {
  const auto& w = workload();
  for (auto _ : state) {
    benchmark::DoNotOptimize(ma::metrics::tally_corpus_serial(w.model, w.corpus.lines));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(w.corpus.lines.size()));
}

void BM_MorphScore(benchmark::State& state) {
  const auto& w = workload();
  const auto seg = segmenter(w.model);
  for (auto _ : state) benchmark::DoNotOptimize(ma::morph::morphscore(seg, w.items));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(w.items.size()));
}

void BM_MorphScoreSerial(benchmark::State& state) {
  const auto& w = workload();
  const auto seg = segmenter(w.model);
  for (auto _ : state) benchmark::DoNotOptimize(ma::morph::morphscore_serial(seg, w.items));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(w.items.size()));
}

}  // namespace

BENCHMARK(BM_EncodeCorpus)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EncodeCorpusSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_TallyCorpus)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_TallyCorpusSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MorphScore)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MorphScoreSerial)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
