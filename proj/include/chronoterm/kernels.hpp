// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Chronoterm Contributors

#pragma once

// Data-parallel batch kernels. Each OpenMP kernel has a serial reference
// twin with the same signature minus `workers`; tests require identical
// output from both, and bench/ compares their throughput. Results are always
// written by input position, so the worker count never affects output order.

#include <cstddef>
#include <span>
#include <vector>

#include "chronoterm/drift.hpp"
#include "chronoterm/indexer.hpp"
#include "chronoterm/textprep.hpp"

namespace chronoterm::kernels {

/// `requested` > 0 is used as is; otherwise CHRONOTERM_WORKERS if set, else
/// the OpenMP default. Throws ValidationError on a malformed variable.
int resolve_workers(int requested = 0);

std::vector<indexer::IndexingResult> index_documents_serial(
    std::span<const textprep::Document> docs, const indexer::MatchIndex& index,
    const textprep::StopwordSet& stopwords, std::size_t recall_cap);

std::vector<indexer::IndexingResult> index_documents(
    std::span<const textprep::Document> docs, const indexer::MatchIndex& index,
    const textprep::StopwordSet& stopwords, std::size_t recall_cap, int workers);

std::vector<indexer::IndexingResult> index_entities_serial(
    std::span<const textprep::EntityDocument> docs, const indexer::MatchIndex& index,
    const textprep::StopwordSet& stopwords, std::size_t recall_cap);

std::vector<indexer::IndexingResult> index_entities(
    std::span<const textprep::EntityDocument> docs, const indexer::MatchIndex& index,
    const textprep::StopwordSet& stopwords, std::size_t recall_cap, int workers);

std::vector<drift::DriftRecord> assess_serial(std::span<const drift::ExclusiveHit> hits,
                                              const vocab::Vocabulary& new_vocab,
                                              const drift::ExclusionSet& exclusions,
                                              const drift::ClassifyOptions& options);

std::vector<drift::DriftRecord> assess_all(std::span<const drift::ExclusiveHit> hits,
                                           const vocab::Vocabulary& new_vocab,
                                           const drift::ExclusionSet& exclusions,
                                           const drift::ClassifyOptions& options, int workers);

}  // namespace chronoterm::kernels
