// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Chronoterm Contributors

#include "chronoterm/indexer.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "chronoterm/error.hpp"
#include "chronoterm/unicode.hpp"

namespace chronoterm::indexer {

using vocab::LabelKind;

std::string_view to_string(Approach a) { return a == Approach::FullText ? "FullText" : "NER"; }

std::string_view to_string(MatchKind k) { return k == MatchKind::Exact ? "exact" : "prefix"; }

Approach parse_approach(std::string_view text) {
  if (text == "FullText") return Approach::FullText;
  if (text == "NER") return Approach::NER;
  throw DataError("unknown approach '" + std::string(text) + "'");
}

MatchKind parse_match_kind(std::string_view text) {
  if (text == "exact") return MatchKind::Exact;
  if (text == "prefix") return MatchKind::Prefix;
  throw DataError("unknown match kind '" + std::string(text) + "'");
}

StemKey stem_key(std::string_view text, const textprep::StopwordSet& stopwords) {
  StemKey key;
  for (const auto& token : textprep::tokenize(text)) {
    if (!stopwords.contains(token)) key.push_back(textprep::stem(token));
  }
  return key;
}

MatchIndex::MatchIndex(const vocab::Vocabulary& vocab, const textprep::StopwordSet& stopwords)
    : version_tag_(vocab.version_tag()) {
  auto add = [&](const vocab::Concept& c, const std::string& label, LabelKind kind) {
    StemKey key = stem_key(label, stopwords);
    if (key.empty()) {
      warnings_.push_back("concept '" + c.id + "': label '" + label +
                          "' has no content tokens; not indexed");
      return;
    }
    keys_[std::move(key)].push_back({c.id, c.pref_label, kind, label});
    ++entry_count_;
  };
  for (const auto& c : vocab.concepts()) {
    add(c, c.pref_label, LabelKind::Authorized);
    for (const auto& v : c.variant_labels) add(c, v, LabelKind::Variant);
  }
}

namespace {

// Preference between two pieces of evidence for the same concept.
bool stronger_match(MatchKind ak, LabelKind al, const std::string& alabel, MatchKind bk, LabelKind bl,
                    const std::string& blabel) {
  if (ak != bk) return ak == MatchKind::Exact;
  if (al != bl) return al == LabelKind::Authorized;
  return alabel < blabel;
}

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.size() >= prefix.size() && s.compare(0, prefix.size(), prefix) == 0;
}

}  // namespace

std::vector<PhraseMatch> match_stems(const MatchIndex& index, std::span<const std::string> stems) {
  if (stems.empty()) return {};
  std::map<std::string, PhraseMatch> best;
  auto consider = [&](const MatchTarget& t, MatchKind kind) {
    PhraseMatch m{t.concept_id, t.pref_label, t.label, t.label_kind, kind};
    auto it = best.find(t.concept_id);
    if (it == best.end()) {
      best.emplace(t.concept_id, std::move(m));
    } else if (stronger_match(m.match_kind, m.label_kind, m.matched_label, it->second.match_kind,
                              it->second.label_kind, it->second.matched_label)) {
      it->second = std::move(m);
    }
  };

  const auto& keys = index.keys();
  StemKey probe(stems.begin(), stems.end());
  if (auto it = keys.find(probe); it != keys.end()) {
    for (const auto& t : it->second) consider(t, MatchKind::Exact);
  }

  const std::string& last = stems.back();
  const std::size_t n = stems.size();
  if (unicode::code_point_count(last) >= kMinPrefixChars) {
    // Keys sharing the leading stems and whose final stem extends `last` are
    // contiguous in lexicographic order, starting at `probe`.
    for (auto it = keys.lower_bound(probe); it != keys.end(); ++it) {
      const StemKey& key = it->first;
      if (key.size() < n || !std::equal(stems.begin(), stems.end() - 1, key.begin()) ||
          !starts_with(key[n - 1], last)) {
        break;
      }
      if (key.size() == n && key[n - 1].size() > last.size()) {
        for (const auto& t : it->second) consider(t, MatchKind::Prefix);
      }
    }
  }

  std::vector<PhraseMatch> out;
  out.reserve(best.size());
  for (auto& [id, m] : best) out.push_back(std::move(m));
  return out;
}

bool hit_before(const Hit& a, const Hit& b) {
  if (a.score != b.score) return a.score > b.score;
  if (a.pref_label != b.pref_label) return a.pref_label < b.pref_label;
  return a.concept_id < b.concept_id;
}

IndexingResult rank_candidates(std::string doc_id, Approach approach,
                               std::span<const rake::CandidatePhrase> scored,
                               const MatchIndex& index, std::size_t recall_cap) {
  if (recall_cap < 1) throw std::invalid_argument("recall cap must be at least 1");

  std::unordered_map<std::string, Hit> best;
  for (const auto& cand : scored) {
    for (auto& m : match_phrase(index, cand)) {
      auto it = best.find(m.concept_id);
      if (it != best.end()) {
        const Hit& cur = it->second;
        bool replace = cand.score > cur.score ||
                       (cand.score == cur.score &&
                        stronger_match(m.match_kind, m.label_kind, m.matched_label, cur.match_kind,
                                       cur.label_kind, cur.matched_label));
        if (!replace) continue;
      }
      Hit h{m.concept_id, m.pref_label, m.matched_label, m.label_kind, m.match_kind, cand.score};
      best.insert_or_assign(m.concept_id, std::move(h));
    }
  }

  IndexingResult result;
  result.doc_id = std::move(doc_id);
  result.vocabulary = index.version_tag();
  result.approach = approach;
  result.hits.reserve(best.size());
  for (auto& [id, h] : best) result.hits.push_back(std::move(h));
  std::sort(result.hits.begin(), result.hits.end(), hit_before);
  if (result.hits.size() > recall_cap) result.hits.resize(recall_cap);
  return result;
}

IndexingResult index_document(const textprep::Document& doc, const MatchIndex& index,
                              const textprep::StopwordSet& stopwords, std::size_t recall_cap) {
  auto candidates = rake::keywords(doc.text, stopwords);
  return rank_candidates(doc.doc_id, Approach::FullText, candidates, index, recall_cap);
}

std::vector<rake::CandidatePhrase> entity_candidates(const textprep::EntityDocument& ed,
                                                     const textprep::StopwordSet& stopwords) {
  std::vector<rake::CandidatePhrase> out;
  std::unordered_map<std::string, std::size_t> slot;
  std::vector<std::size_t> counts;
  for (const auto& e : ed.entities) {
    auto [it, inserted] = slot.try_emplace(unicode::normalize_label(e.surface), out.size());
    if (inserted) {
      rake::CandidatePhrase c;
      // Whitespace-collapsed surface, original casing.
      bool gap = false;
      for (char ch : e.surface) {
        if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') {
          gap = !c.text.empty();
          continue;
        }
        if (gap) c.text += ' ';
        gap = false;
        c.text += ch;
      }
      c.words = stem_key(e.surface, stopwords);
      out.push_back(std::move(c));
      counts.push_back(0);
    }
    ++counts[it->second];
  }
  std::vector<rake::CandidatePhrase> kept;
  kept.reserve(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].words.empty()) continue;
    out[i].score = Score(counts[i]);
    kept.push_back(std::move(out[i]));
  }
  return kept;
}

IndexingResult index_entities(const textprep::EntityDocument& ed, const MatchIndex& index,
                              const textprep::StopwordSet& stopwords, std::size_t recall_cap) {
  auto candidates = entity_candidates(ed, stopwords);
  return rank_candidates(ed.doc_id, Approach::NER, candidates, index, recall_cap);
}

}  // namespace chronoterm::indexer
