// Copyright 2026 The reqlint Authors.
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


// Serial reference kernels against their parallel counterparts.

#include <benchmark/benchmark.h>

#include <map>

#include "generators.h"
#include "reqlint/batch.h"
#include "reqlint/config.h"
#include "reqlint/duplicates.h"
#include "reqlint/text.h"

using namespace reqlint;

namespace {

const Corpus& CorpusOf(std::size_t size) {
  static std::map<std::size_t, Corpus> cache;
  auto it = cache.find(size);
  if (it == cache.end()) it = cache.emplace(size, testgen::SyntheticCorpus(size, 7)).first;
  return it->second;
}

const text::Wordlist& Words() {
  static const text::Wordlist w = LoadWordlist(Config{});
  return w;
}

Execution ModeOf(const benchmark::State& state) {
  return state.range(1) ? Execution::kParallel : Execution::kSerial;
}

void SetLabel(benchmark::State& state) {
  state.SetLabel(state.range(1) ? "parallel" : "serial");
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Analyze(benchmark::State& state) {
  const Corpus& corpus = CorpusOf(static_cast<std::size_t>(state.range(0)));
  const ChecklistSet checklists = BuildChecklists();
  const AnalyzerConfig config;
  for (auto _ : state) {
    benchmark::DoNotOptimize(AnalyzeCorpus(corpus, checklists, config, &Words(), ModeOf(state)));
  }
  SetLabel(state);
}

void BM_Score(benchmark::State& state) {
  const Corpus& corpus = CorpusOf(static_cast<std::size_t>(state.range(0)));
  const ChecklistSet checklists = BuildChecklists();
  testgen::Rng rng(11);
  std::vector<AnswerSheet> sheets;
  for (const auto& r : corpus.requirements) {
    sheets.push_back(testgen::RandomSheet(checklists.For(r.kind), r.id, rng, 0.1));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(ScoreCorpus(corpus, sheets, checklists, {}, ModeOf(state)));
  }
  SetLabel(state);
}

void BM_Duplicates(benchmark::State& state) {
  const Corpus& corpus = CorpusOf(static_cast<std::size_t>(state.range(0)));
  std::vector<std::vector<std::string>> sets;
  for (const auto& r : corpus.requirements) sets.push_back(text::ContentStemSet(r.summary));
  const Rational threshold(4, 5);
  for (auto _ : state) {
    if (state.range(1)) {
      benchmark::DoNotOptimize(NearDuplicatePairs(sets, threshold));
    } else {
      benchmark::DoNotOptimize(NearDuplicatePairsReference(sets, threshold));
    }
  }
  SetLabel(state);
}

}  // namespace

BENCHMARK(BM_Analyze)->ArgsProduct({{1000, 10000}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Score)->ArgsProduct({{1000, 10000}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Duplicates)->ArgsProduct({{1000, 10000}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
