// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Chronoterm Contributors

#include "chronoterm/rake.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "chronoterm/unicode.hpp"

namespace chronoterm::rake {

bool is_phrase_delimiter(char c) {
  switch (c) {
    case '.': case '!': case '?': case ';': case ':': case ',':
    case '(': case ')': case '[': case ']': case '"':
    case '\n': case '\r':
      return true;
    default:
      return false;
  }
}

std::vector<CandidatePhrase> extract_candidates(std::string_view text,
                                                const textprep::StopwordSet& stopwords) {
  std::vector<CandidatePhrase> out;
  CandidatePhrase current;
  auto flush = [&] {
    if (!current.words.empty()) out.push_back(std::move(current));
    current = CandidatePhrase{};
  };

  // All delimiters are ASCII, so splitting bytes never cuts a UTF-8 sequence.
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = start;
    while (end < text.size() && !is_phrase_delimiter(text[end])) ++end;
    for (auto& token : textprep::tokenize(text.substr(start, end - start))) {
      if (stopwords.contains(token)) {
        flush();
        continue;
      }
      if (!current.text.empty()) current.text += ' ';
      current.text += token;
      current.words.push_back(textprep::stem(token));
    }
    flush();
    start = end + 1;
  }
  return out;
}

std::map<std::string, WordStats> word_stats(std::span<const CandidatePhrase> candidates) {
  std::map<std::string, WordStats> stats;
  for (const auto& c : candidates) {
    for (const auto& w : c.words) {
      auto& s = stats[w];
      s.frequency += 1;
      s.degree += c.words.size();
    }
  }
  return stats;
}

std::vector<CandidatePhrase> score_candidates(std::vector<CandidatePhrase> candidates) {
  std::unordered_map<std::string, Score> word_score;
  for (const auto& [w, s] : word_stats(candidates)) {
    word_score.emplace(w, Score(s.degree, s.frequency));
  }
  for (auto& c : candidates) {
    Score total = 0;
    for (const auto& w : c.words) total += word_score.at(w);
    c.score = std::move(total);
  }
  return candidates;
}

std::vector<CandidatePhrase> top_candidates(std::span<const CandidatePhrase> scored,
                                            std::size_t limit) {
  struct Entry {
    std::string key;
    const CandidatePhrase* best;
    double approx = 0;
  };
  std::unordered_map<std::string, std::size_t> slot;
  std::vector<Entry> entries;
  for (const auto& c : scored) {
    std::string key = unicode::normalize_label(c.text);
    auto [it, inserted] = slot.try_emplace(key, entries.size());
    if (inserted) {
      entries.push_back({std::move(key), &c});
    } else if (c.score > entries[it->second].best->score) {
      entries[it->second].best = &c;
    }
  }
  for (auto& e : entries) e.approx = e.best->score.convert_to<double>();
  // Doubles decide clearly separated scores; near-ties use exact comparison.
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    double gap = a.approx - b.approx;
    double scale = std::max(std::fabs(a.approx), std::fabs(b.approx));
    if (std::fabs(gap) > 1e-9 * scale) return gap > 0;
    if (a.best->score != b.best->score) return a.best->score > b.best->score;
    return a.key < b.key;
  });
  if (entries.size() > limit) entries.resize(limit);

  std::vector<CandidatePhrase> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(*e.best);
  return out;
}

std::vector<CandidatePhrase> keywords(std::string_view text, const textprep::StopwordSet& stopwords) {
  auto scored = score_candidates(extract_candidates(text, stopwords));
  return top_candidates(scored, std::numeric_limits<std::size_t>::max());
}

}  // namespace chronoterm::rake
