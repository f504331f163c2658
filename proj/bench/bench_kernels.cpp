// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Chronoterm Contributors

// Serial reference vs OpenMP kernels on a synthetic sample.

#include <benchmark/benchmark.h>

#include <omp.h>

#include "../tests/support/synthetic.hpp"
#include "chronoterm/drift.hpp"
#include "chronoterm/indexer.hpp"
#include "chronoterm/kernels.hpp"

namespace {

using namespace chronoterm;

struct Fixture {
  textprep::StopwordSet stopwords{std::span<const std::string>(synthetic::default_stopwords())};
  vocab::Vocabulary old_vocab;
  vocab::Vocabulary new_vocab;
  std::vector<textprep::Document> docs;
  std::vector<drift::ExclusiveHit> exclusive;

  Fixture(vocab::Vocabulary o, vocab::Vocabulary n) : old_vocab(std::move(o)), new_vocab(std::move(n)) {}
};

const Fixture& fixture() {
  static const Fixture f = [] {
    synthetic::Rng rng(7);
    auto pool = synthetic::word_pool(600, rng);
    auto old_c = synthetic::make_concepts(pool, 800, rng, "h");
    std::vector<vocab::Concept> new_c(old_c.begin(), old_c.begin() + 400);
    Fixture fx(vocab::Vocabulary("old", old_c), vocab::Vocabulary("new", new_c));
    for (int i = 0; i < 96; ++i) {
      std::string text = synthetic::make_text(pool, 3000, rng);
      for (int k = 0; k < 20; ++k) text += " " + old_c[synthetic::below(rng, old_c.size())].pref_label + ".";
      fx.docs.push_back(textprep::make_document("d" + std::to_string(i), std::move(text)));
    }
    indexer::MatchIndex oi(fx.old_vocab, fx.stopwords), ni(fx.new_vocab, fx.stopwords);
    auto old_r = kernels::index_documents_serial(fx.docs, oi, fx.stopwords, 10);
    auto new_r = kernels::index_documents_serial(fx.docs, ni, fx.stopwords, 10);
    fx.exclusive = drift::exclusive_terms(old_r, new_r);
    // Fuzzy counterpart lookup dominates assessment; replicate to get a
    // measurable batch.
    auto base = fx.exclusive;
    for (int r = 0; r < 20; ++r) fx.exclusive.insert(fx.exclusive.end(), base.begin(), base.end());
    return fx;
  }();
  return f;
}

void BM_IndexSerial(benchmark::State& state) {
  const auto& f = fixture();
  indexer::MatchIndex index(f.old_vocab, f.stopwords);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::index_documents_serial(f.docs, index, f.stopwords, 10));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.docs.size()));
}

void BM_IndexParallel(benchmark::State& state) {
  const auto& f = fixture();
  indexer::MatchIndex index(f.old_vocab, f.stopwords);
  const int workers = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::index_documents(f.docs, index, f.stopwords, 10, workers));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.docs.size()));
}

void BM_AssessSerial(benchmark::State& state) {
  const auto& f = fixture();
  drift::ExclusionSet none;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::assess_serial(f.exclusive, f.new_vocab, none, {}));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.exclusive.size()));
}

void BM_AssessParallel(benchmark::State& state) {
  const auto& f = fixture();
  drift::ExclusionSet none;
  const int workers = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::assess_all(f.exclusive, f.new_vocab, none, {}, workers));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.exclusive.size()));
}

void worker_counts(benchmark::internal::Benchmark* b) {
  for (int w = 1; w <= omp_get_max_threads(); w *= 2) b->Arg(w);
}

}  // namespace

BENCHMARK(BM_IndexSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_IndexParallel)->Apply(worker_counts)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_AssessSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_AssessParallel)->Apply(worker_counts)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
