// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Chronoterm Contributors

#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chronoterm/indexer.hpp"
#include "chronoterm/textprep.hpp"
#include "chronoterm/vocab.hpp"

namespace chronoterm::drift {

using indexer::Approach;
using textprep::Stratum;
using vocab::LabelKind;

enum class Classification { PresentInNew, Drift, FacetExclusion, DataError };
enum class CounterpartStatus { Verified, Probable };

/// What counts as a term "existing" in a contemporary vocabulary.
///  - AuthorizedOnly: only an authorized (preferred) label match counts; a
///    term that survives only as a variant label has drifted.
///  - AnyLabel: an authorized or a variant label match counts.
enum class ExistencePolicy { AuthorizedOnly, AnyLabel };

inline constexpr std::size_t kDefaultMaxDistance = 2;

std::string_view to_string(Classification c);
std::string_view to_string(CounterpartStatus s);
std::string_view to_string(ExistencePolicy p);
Classification parse_classification(std::string_view text);
CounterpartStatus parse_counterpart_status(std::string_view text);
ExistencePolicy parse_existence_policy(std::string_view text);

// ---------------------------------------------------------------------------
// Outer merge
// ---------------------------------------------------------------------------

struct ExclusiveHit {
  std::string doc_id;
  Approach approach = Approach::FullText;
  indexer::Hit hit;
};

/// Old-vocabulary hits whose normalized matched label equals no heading
/// (authorized label) reported for the same document and approach under the
/// new vocabulary. Both lists must cover the same (doc_id, approach) pairs;
/// otherwise DataError lists the asymmetric difference. Output follows
/// old_results order, then hit order.
std::vector<ExclusiveHit> exclusive_terms(std::span<const indexer::IndexingResult> old_results,
                                          std::span<const indexer::IndexingResult> new_results);

// ---------------------------------------------------------------------------
// Classification and counterparts
// ---------------------------------------------------------------------------

struct Counterpart {
  std::string concept_id;
  std::string heading;  // the counterpart's authorized label
  CounterpartStatus status = CounterpartStatus::Verified;
  std::size_t distance = 0;

  friend bool operator==(const Counterpart&, const Counterpart&) = default;
};

struct DriftRecord {
  std::string term;             // matched label from the historical result
  std::string concept_id;       // historical concept
  std::string authorized_form;  // historical concept's authorized label
  LabelKind label_kind = LabelKind::Authorized;
  std::string doc_id;
  Approach approach = Approach::FullText;
  Classification classification = Classification::Drift;
  std::optional<Counterpart> counterpart;  // only when classification == Drift

  friend bool operator==(const DriftRecord&, const DriftRecord&) = default;
};

DriftRecord make_record(const ExclusiveHit& hit);

/// Normalized terms known to be conversion errors.
class ExclusionSet {
 public:
  ExclusionSet() = default;
  explicit ExclusionSet(std::span<const std::string> terms);

  bool contains(std::string_view term) const;
  std::size_t size() const noexcept { return terms_.size(); }

 private:
  std::set<std::string, std::less<>> terms_;
};

/// One term per line, '#' comment lines, blank lines ignored.
ExclusionSet load_exclusions(std::istream& in);
ExclusionSet load_exclusions_file(const std::filesystem::path& path);

struct ClassifyOptions {
  const vocab::Vocabulary* new_full_vocab = nullptr;  // facet filter; optional
  ExistencePolicy policy = ExistencePolicy::AuthorizedOnly;
  std::size_t max_distance = kDefaultMaxDistance;
};

/// Priority: excluded -> DataError; exists in new -> PresentInNew; exists in
/// the full contemporary vocabulary -> FacetExclusion; else Drift. For a
/// variant term the historical authorized form is checked alongside it, so a
/// variant only drifts when neither form exists.
Classification classify(const DriftRecord& record, const vocab::Vocabulary& new_vocab,
                        const ExclusionSet& exclusions, const ClassifyOptions& options = {});

/// Verified when the normalized term is a label of a contemporary concept
/// (in practice a variant label); otherwise the closest label by Levenshtein
/// distance within `max_distance`, flagged probable. Ties: smaller distance,
/// authorized before variant, label, concept id.
std::optional<Counterpart> resolve_counterpart(std::string_view term,
                                               const vocab::Vocabulary& new_vocab,
                                               std::size_t max_distance = kDefaultMaxDistance);

/// Classifies one exclusive hit and attaches a counterpart when it drifted.
DriftRecord assess(const ExclusiveHit& hit, const vocab::Vocabulary& new_vocab,
                   const ExclusionSet& exclusions, const ClassifyOptions& options = {});

/// Edit distance over code points.
std::size_t levenshtein(std::u32string_view a, std::u32string_view b);

/// levenshtein(a, b) when it is <= bound, otherwise bound + 1.
std::size_t levenshtein_bounded(std::u32string_view a, std::u32string_view b, std::size_t bound);

// ---------------------------------------------------------------------------
// Statistics
// ---------------------------------------------------------------------------

struct Tally {
  std::size_t documents = 0;
  std::size_t terms = 0;
  std::size_t exclusive = 0;
  std::size_t present_in_new = 0;
  std::size_t drift_authorized = 0;
  std::size_t drift_variant = 0;
  std::size_t facet_exclusions = 0;
  std::size_t data_errors = 0;

  std::size_t drift() const noexcept { return drift_authorized + drift_variant; }
  /// Denominator once data errors and facet exclusions are removed.
  std::size_t terms_adjusted() const noexcept { return terms - data_errors - facet_exclusions; }

  Tally& operator+=(const Tally& o);
  friend bool operator==(const Tally&, const Tally&) = default;
};

inline constexpr std::array<Approach, 2> kApproaches = {Approach::FullText, Approach::NER};
inline constexpr std::array<Stratum, 3> kStrata = {Stratum::Short, Stratum::Medium, Stratum::Long};

struct StatsReport {
  std::string old_vocabulary;
  std::string new_vocabulary;
  bool facet_filter = false;

  /// cells[approach][stratum], approach in kApproaches order, stratum in
  /// kStrata order.
  std::array<std::array<Tally, 3>, 2> cells{};

  Tally total() const;
  Tally by_approach(Approach a) const;
  Tally by_stratum(Stratum s) const;
  const Tally& cell(Approach a, Stratum s) const;
};

/// Tallies records and results into per-approach/per-stratum cells. Every
/// result's doc_id must appear in `docs` (DataError otherwise).
StatsReport compute_statistics(std::span<const DriftRecord> records,
                               std::span<const indexer::IndexingResult> old_results,
                               std::span<const textprep::Document> docs);

/// Same, with strata given directly by doc_id.
StatsReport compute_statistics(std::span<const DriftRecord> records,
                               std::span<const indexer::IndexingResult> old_results,
                               const std::map<std::string, Stratum, std::less<>>& strata);

}  // namespace chronoterm::drift
