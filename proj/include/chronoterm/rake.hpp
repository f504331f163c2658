// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Chronoterm Contributors

#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chronoterm/score.hpp"
#include "chronoterm/textprep.hpp"

namespace chronoterm::rake {

struct CandidatePhrase {
  std::string text;                // surface tokens joined by single spaces
  std::vector<std::string> words;  // stems, one per surface token
  Score score = 0;

  friend bool operator==(const CandidatePhrase&, const CandidatePhrase&) = default;
};

/// True for the characters that end a candidate: . ! ? ; : , ( ) [ ] " and
/// line breaks.
bool is_phrase_delimiter(char c);

/// Splits text at phrase delimiters and stopwords. Each maximal run of
/// non-stopword tokens becomes one unscored candidate, in document order.
std::vector<CandidatePhrase> extract_candidates(std::string_view text,
                                                const textprep::StopwordSet& stopwords);

struct WordStats {
  std::size_t degree = 0;
  std::size_t frequency = 0;

  friend bool operator==(const WordStats&, const WordStats&) = default;
};

/// deg/freq per stem over a document's candidates (multiplicity preserved).
std::map<std::string, WordStats> word_stats(std::span<const CandidatePhrase> candidates);

/// word_score(w) = deg(w) / freq(w); candidate score = sum over its words.
std::vector<CandidatePhrase> score_candidates(std::vector<CandidatePhrase> candidates);

/// Deduplicates by normalized text (keeping the highest score, first
/// occurrence on ties), orders by (score desc, normalized text asc) and keeps
/// at most `limit`.
std::vector<CandidatePhrase> top_candidates(std::span<const CandidatePhrase> scored,
                                            std::size_t limit);

/// extract + score + top_candidates(all) for one document.
std::vector<CandidatePhrase> keywords(std::string_view text, const textprep::StopwordSet& stopwords);

}  // namespace chronoterm::rake
