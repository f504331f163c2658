// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Chronoterm Contributors

#pragma once

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "chronoterm/drift.hpp"
#include "chronoterm/indexer.hpp"
#include "chronoterm/textprep.hpp"

namespace chronoterm::serialize {

using StratumMap = std::map<std::string, textprep::Stratum, std::less<>>;

/// Everything the `diff` and `stats` stages need from an indexing run.
struct HitsFile {
  std::string old_vocabulary;
  std::string new_vocabulary;
  std::vector<indexer::IndexingResult> old_results;
  std::vector<indexer::IndexingResult> new_results;
  StratumMap strata;  // every sampled doc_id

  friend bool operator==(const HitsFile&, const HitsFile&) = default;
};

/// Everything the `stats` stage needs from a diff run.
struct DriftFile {
  std::string old_vocabulary;
  std::string new_vocabulary;
  bool facet_filter = false;
  std::vector<drift::DriftRecord> records;

  friend bool operator==(const DriftFile&, const DriftFile&) = default;
};

nlohmann::json to_json(const indexer::Hit& h, std::size_t rank);
nlohmann::json to_json(const HitsFile& f);
nlohmann::json to_json(const drift::DriftRecord& r);
nlohmann::json to_json(const DriftFile& f);

HitsFile hits_from_json(const nlohmann::json& j);
DriftFile drift_from_json(const nlohmann::json& j);

HitsFile read_hits_file(const std::filesystem::path& path);
DriftFile read_drift_file(const std::filesystem::path& path);

}  // namespace chronoterm::serialize
