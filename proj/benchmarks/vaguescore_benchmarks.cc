// Copyright 2026 The vaguescore Authors.
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

#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "vaguescore/analyzer.h"
#include "vaguescore/classify.h"
#include "vaguescore/corpus.h"
#include "vaguescore/segmenter.h"
#include "vaguescore/stats.h"
#include "vaguescore/synthetic.h"

namespace vaguescore {
namespace {

const Analyzer& english() {
  static const Analyzer a = make_bundled_analyzer("en");
  return a;
}

std::vector<CorpusDocument> corpus(std::size_t documents) {
  const auto vocab =
      SyntheticVocabulary::build(english().lexicon(), english().rules());
  SyntheticConfig config;
  config.documents = documents;
  return corpus_documents(generate_corpus(vocab, config));
}

void BM_Segment(benchmark::State& state) {
  const auto docs = corpus(1);
  const auto& text = docs[0].text;
  for (auto _ : state) benchmark::DoNotOptimize(split_sentences(text));
  state.SetBytesProcessed(state.iterations() *
                          static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_Segment);

void BM_AnalyzeDocument(benchmark::State& state) {
  const auto docs = corpus(1);
  const auto& text = docs[0].text;
  for (auto _ : state) benchmark::DoNotOptimize(english().analyze("d", text));
  state.SetBytesProcessed(state.iterations() *
                          static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_AnalyzeDocument);

void BM_AnalyzeCorpus(benchmark::State& state) {
  const auto docs = corpus(200);
  const auto threads = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(analyze_corpus(docs, english(), nullptr, threads));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(docs.size()));
}
BENCHMARK(BM_AnalyzeCorpus)->Arg(1)->Arg(4)->UseRealTime();

void BM_WelchTest(benchmark::State& state) {
  Random rng(1);
  std::vector<double> a(300), b(300);
  for (auto& x : a) x = rng.uniform();
  for (auto& x : b) x = rng.uniform() + 0.1;
  for (auto _ : state) benchmark::DoNotOptimize(stats::welch_t_test(a, b));
}
BENCHMARK(BM_WelchTest);

void BM_TrainClassifier(benchmark::State& state) {
  const auto reports = analyze_corpus(corpus(400), english());
  std::vector<FeatureVector> features;
  for (const auto& r : reports) features.push_back(extract_features(r));
  for (auto _ : state) benchmark::DoNotOptimize(train(features));
}
BENCHMARK(BM_TrainClassifier)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace vaguescore

BENCHMARK_MAIN();
