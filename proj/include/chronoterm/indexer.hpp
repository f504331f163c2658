// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Chronoterm Contributors

#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chronoterm/rake.hpp"
#include "chronoterm/score.hpp"
#include "chronoterm/textprep.hpp"
#include "chronoterm/vocab.hpp"

namespace chronoterm::indexer {

inline constexpr std::size_t kDefaultRecallCap = 10;
/// Shortest stem that may act as a truncation wildcard.
inline constexpr std::size_t kMinPrefixChars = 4;

enum class Approach { FullText, NER };
enum class MatchKind { Exact, Prefix };

std::string_view to_string(Approach a);
std::string_view to_string(MatchKind k);
Approach parse_approach(std::string_view text);
MatchKind parse_match_kind(std::string_view text);

using StemKey = std::vector<std::string>;

struct MatchTarget {
  std::string concept_id;
  std::string pref_label;
  vocab::LabelKind label_kind = vocab::LabelKind::Authorized;
  std::string label;
};

/// Stemmed, stopword-free label keys of one vocabulary.
class MatchIndex {
 public:
  MatchIndex() = default;
  MatchIndex(const vocab::Vocabulary& vocab, const textprep::StopwordSet& stopwords);

  const std::string& version_tag() const noexcept { return version_tag_; }
  const std::map<StemKey, std::vector<MatchTarget>>& keys() const noexcept { return keys_; }
  /// Labels dropped because every token was a stopword.
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  /// Number of (key, target) entries, i.e. labels that were indexed.
  std::size_t entry_count() const noexcept { return entry_count_; }

 private:
  std::string version_tag_;
  std::map<StemKey, std::vector<MatchTarget>> keys_;
  std::vector<std::string> warnings_;
  std::size_t entry_count_ = 0;
};

inline MatchIndex build_match_index(const vocab::Vocabulary& vocab,
                                    const textprep::StopwordSet& stopwords) {
  return MatchIndex(vocab, stopwords);
}

/// Content-token stems of a label or surface string.
StemKey stem_key(std::string_view text, const textprep::StopwordSet& stopwords);

struct PhraseMatch {
  std::string concept_id;
  std::string pref_label;
  std::string matched_label;
  vocab::LabelKind label_kind = vocab::LabelKind::Authorized;
  MatchKind match_kind = MatchKind::Exact;
};

/// One match per concept, ordered by concept id. Exact: stem lists equal.
/// Prefix: equal except the phrase's last stem (>= 4 chars) is a proper
/// prefix of the key's last stem. An exact match to a concept suppresses any
/// prefix match to it.
std::vector<PhraseMatch> match_stems(const MatchIndex& index, std::span<const std::string> stems);

inline std::vector<PhraseMatch> match_phrase(const MatchIndex& index,
                                             const rake::CandidatePhrase& phrase) {
  return match_stems(index, phrase.words);
}

struct Hit {
  std::string concept_id;
  std::string pref_label;
  std::string matched_label;
  vocab::LabelKind label_kind = vocab::LabelKind::Authorized;
  MatchKind match_kind = MatchKind::Exact;
  Score score = 0;

  friend bool operator==(const Hit&, const Hit&) = default;
};

struct IndexingResult {
  std::string doc_id;
  std::string vocabulary;  // version tag
  Approach approach = Approach::FullText;
  std::vector<Hit> hits;

  friend bool operator==(const IndexingResult&, const IndexingResult&) = default;
};

/// Strict hit order: score desc, pref_label asc, concept id asc.
bool hit_before(const Hit& a, const Hit& b);

/// Matches scored candidates, keeps each concept's best evidence (max
/// score), and returns the top `recall_cap` concepts.
IndexingResult rank_candidates(std::string doc_id, Approach approach,
                               std::span<const rake::CandidatePhrase> scored,
                               const MatchIndex& index, std::size_t recall_cap);

IndexingResult index_document(const textprep::Document& doc, const MatchIndex& index,
                              const textprep::StopwordSet& stopwords,
                              std::size_t recall_cap = kDefaultRecallCap);

/// Candidates are the distinct (normalized) entity surfaces, each scored by
/// its number of occurrences in the document.
std::vector<rake::CandidatePhrase> entity_candidates(const textprep::EntityDocument& ed,
                                                     const textprep::StopwordSet& stopwords);

IndexingResult index_entities(const textprep::EntityDocument& ed, const MatchIndex& index,
                              const textprep::StopwordSet& stopwords,
                              std::size_t recall_cap = kDefaultRecallCap);

}  // namespace chronoterm::indexer
