// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Chronoterm Contributors

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chronoterm/drift.hpp"
#include "chronoterm/report.hpp"
#include "chronoterm/serialize.hpp"
#include "chronoterm/textprep.hpp"

namespace chronoterm::pipeline {

namespace fs = std::filesystem;

struct PipelineConfig {
  fs::path vocab_old;
  fs::path vocab_new;
  std::optional<fs::path> vocab_new_full;
  fs::path corpus_manifest;
  std::optional<fs::path> entities_dir;
  fs::path stopwords;
  std::optional<fs::path> exclusions;

  /// Version tags; empty means the vocabulary file's stem.
  std::string old_tag;
  std::string new_tag;

  std::int64_t recall_cap = static_cast<std::int64_t>(indexer::kDefaultRecallCap);
  std::vector<std::int64_t> strata{40, 40, 10};
  std::uint64_t seed = 0;
  std::int64_t max_distance = static_cast<std::int64_t>(drift::kDefaultMaxDistance);
  drift::ExistencePolicy policy = drift::ExistencePolicy::AuthorizedOnly;

  fs::path out_dir;
  report::Format format = report::Format::Tsv;

  /// 0 = CHRONOTERM_WORKERS or the OpenMP default. Never affects output.
  int workers = 0;
};

enum class Stage { Run, Index, Diff, Stats };

std::string_view to_string(Stage s);

/// Throws ValidationError naming the offending flag. `stage` decides which
/// inputs are required.
void validate(const PipelineConfig& config, Stage stage = Stage::Run);

textprep::StrataSizes strata_sizes(const PipelineConfig& config);
std::string old_tag(const PipelineConfig& config);
std::string new_tag(const PipelineConfig& config);

struct IndexOutputs {
  serialize::HitsFile hits;
  std::vector<std::string> warnings;
  std::vector<std::string> sample_ids;  // sampled doc ids in sample order
  std::size_t corpus_size = 0;
};

struct DiffOutputs {
  serialize::DriftFile drift;
  std::vector<std::string> warnings;
};

struct PipelineOutputs {
  IndexOutputs index;
  DiffOutputs diff;
  drift::StatsReport stats;
};

/// load -> sample -> index under both vocabularies.
IndexOutputs run_index(const PipelineConfig& config);

/// exclusive terms -> classify -> counterparts.
DiffOutputs run_diff(const PipelineConfig& config, const serialize::HitsFile& hits);

drift::StatsReport run_stats(const serialize::HitsFile& hits, const serialize::DriftFile& drift);

/// All stages in memory.
PipelineOutputs execute(const PipelineConfig& config);

/// Output file name -> bytes.
using OutputSet = std::vector<std::pair<std::string, std::string>>;

OutputSet render_run(const PipelineConfig& config, const PipelineOutputs& out);

/// Writes every file to a temporary name in `dir`, then renames them into
/// place. On failure no temporary or partial file is left behind.
void write_outputs(const fs::path& dir, const OutputSet& files);

/// The `run.json` document.
std::string run_manifest(const PipelineConfig& config, Stage stage,
                         const std::vector<std::pair<std::string, std::string>>& vocabularies,
                         const std::vector<std::string>& sample_ids, std::size_t corpus_size,
                         const std::vector<std::string>& warnings);

/// Full pipeline: execute, render and write. Returns the written file names.
std::vector<std::string> run_pipeline(const PipelineConfig& config);

}  // namespace chronoterm::pipeline
