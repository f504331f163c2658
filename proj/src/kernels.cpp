// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Chronoterm Contributors

#include "chronoterm/kernels.hpp"

#include <charconv>
#include <cstdlib>
#include <exception>
#include <stdexcept>
#include <string>

#include <omp.h>

#include "chronoterm/error.hpp"

namespace chronoterm::kernels {

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("CHRONOTERM_WORKERS"); env && *env) {
    std::string_view s(env);
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || value < 1) {
      throw ValidationError("CHRONOTERM_WORKERS", "CHRONOTERM_WORKERS must be a positive integer, got '" +
                                                      std::string(s) + "'");
    }
    return value;
  }
  return std::max(1, omp_get_max_threads());
}

namespace {

// Runs body(i) for i in [0, n) on `workers` threads. The first exception (by
// index) is rethrown after the loop.
template <class Body>
void parallel_for(std::size_t n, int workers, Body&& body) {
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, workers))
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

void check_cap(std::size_t recall_cap) {
  if (recall_cap < 1) throw std::invalid_argument("recall cap must be at least 1");
}

}  // namespace

std::vector<indexer::IndexingResult> index_documents_serial(
    std::span<const textprep::Document> docs, const indexer::MatchIndex& index,
    const textprep::StopwordSet& stopwords, std::size_t recall_cap) {
  check_cap(recall_cap);
  std::vector<indexer::IndexingResult> out;
  out.reserve(docs.size());
  for (const auto& d : docs) out.push_back(indexer::index_document(d, index, stopwords, recall_cap));
  return out;
}

std::vector<indexer::IndexingResult> index_documents(
    std::span<const textprep::Document> docs, const indexer::MatchIndex& index,
    const textprep::StopwordSet& stopwords, std::size_t recall_cap, int workers) {
  check_cap(recall_cap);
  std::vector<indexer::IndexingResult> out(docs.size());
  parallel_for(docs.size(), workers, [&](std::size_t i) {
    out[i] = indexer::index_document(docs[i], index, stopwords, recall_cap);
  });
  return out;
}

std::vector<indexer::IndexingResult> index_entities_serial(
    std::span<const textprep::EntityDocument> docs, const indexer::MatchIndex& index,
    const textprep::StopwordSet& stopwords, std::size_t recall_cap) {
  check_cap(recall_cap);
  std::vector<indexer::IndexingResult> out;
  out.reserve(docs.size());
  for (const auto& d : docs) out.push_back(indexer::index_entities(d, index, stopwords, recall_cap));
  return out;
}

std::vector<indexer::IndexingResult> index_entities(
    std::span<const textprep::EntityDocument> docs, const indexer::MatchIndex& index,
    const textprep::StopwordSet& stopwords, std::size_t recall_cap, int workers) {
  check_cap(recall_cap);
  std::vector<indexer::IndexingResult> out(docs.size());
  parallel_for(docs.size(), workers, [&](std::size_t i) {
    out[i] = indexer::index_entities(docs[i], index, stopwords, recall_cap);
  });
  return out;
}

std::vector<drift::DriftRecord> assess_serial(std::span<const drift::ExclusiveHit> hits,
                                              const vocab::Vocabulary& new_vocab,
                                              const drift::ExclusionSet& exclusions,
                                              const drift::ClassifyOptions& options) {
  std::vector<drift::DriftRecord> out;
  out.reserve(hits.size());
  for (const auto& h : hits) out.push_back(drift::assess(h, new_vocab, exclusions, options));
  return out;
}

std::vector<drift::DriftRecord> assess_all(std::span<const drift::ExclusiveHit> hits,
                                           const vocab::Vocabulary& new_vocab,
                                           const drift::ExclusionSet& exclusions,
                                           const drift::ClassifyOptions& options, int workers) {
  std::vector<drift::DriftRecord> out(hits.size());
  parallel_for(hits.size(), workers, [&](std::size_t i) {
    out[i] = drift::assess(hits[i], new_vocab, exclusions, options);
  });
  return out;
}

}  // namespace chronoterm::kernels
