// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Chronoterm Contributors

#pragma once

// Hand-rolled generators for synthetic vocabularies, texts and corpora.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "chronoterm/textprep.hpp"
#include "chronoterm/vocab.hpp"

namespace chronoterm::synthetic {

using Rng = std::mt19937_64;

inline std::size_t below(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

inline const std::vector<std::string>& default_stopwords() {
  static const std::vector<std::string> words{"the", "of", "and", "a", "in", "to", "is", "was",
                                              "for", "on", "by", "with", "as", "at", "from"};
  return words;
}

/// `n` distinct lowercase pseudo-words built from syllables.
inline std::vector<std::string> word_pool(std::size_t n, Rng& rng) {
  static const char* onsets[] = {"b", "c", "d", "g", "k", "l", "m", "n", "p", "r", "s", "t", "v", "z", "br", "st"};
  static const char* nuclei[] = {"a", "e", "i", "o", "u", "ai", "ou"};
  static const char* codas[] = {"", "n", "r", "s", "m", "l", "x"};
  std::set<std::string> seen(default_stopwords().begin(), default_stopwords().end());
  std::vector<std::string> out;
  while (out.size() < n) {
    std::string w;
    std::size_t syllables = 2 + below(rng, 2);
    for (std::size_t i = 0; i < syllables; ++i) {
      w += onsets[below(rng, std::size(onsets))];
      w += nuclei[below(rng, std::size(nuclei))];
    }
    w += codas[below(rng, std::size(codas))];
    if (seen.insert(w).second) out.push_back(w);
  }
  return out;
}

inline std::string capitalize(std::string w) {
  if (!w.empty() && w[0] >= 'a' && w[0] <= 'z') w[0] = static_cast<char>(w[0] - 'a' + 'A');
  return w;
}

/// Label of 1..max_words pool words.
inline std::string make_label(const std::vector<std::string>& pool, Rng& rng, std::size_t max_words = 3) {
  std::size_t n = 1 + below(rng, max_words);
  std::string label;
  for (std::size_t i = 0; i < n; ++i) {
    if (i) label += ' ';
    label += i == 0 ? capitalize(pool[below(rng, pool.size())]) : pool[below(rng, pool.size())];
  }
  return label;
}

/// Concepts with globally unique normalized labels.
inline std::vector<vocab::Concept> make_concepts(const std::vector<std::string>& pool, std::size_t n,
                                                 Rng& rng, const std::string& id_prefix = "c",
                                                 std::size_t max_variants = 2) {
  std::set<std::string> used;
  auto fresh = [&]() {
    for (int attempt = 0; attempt < 1000; ++attempt) {
      std::string l = make_label(pool, rng);
      if (used.insert(vocab::normalize_label(l)).second) return l;
    }
    throw std::runtime_error("label space exhausted");
  };
  std::vector<vocab::Concept> out;
  for (std::size_t i = 0; i < n; ++i) {
    vocab::Concept c;
    c.id = id_prefix + std::to_string(1000 + i);
    c.pref_label = fresh();
    std::size_t nv = below(rng, max_variants + 1);
    for (std::size_t v = 0; v < nv; ++v) c.variant_labels.push_back(fresh());
    out.push_back(std::move(c));
  }
  return out;
}

/// Text of `n_words` tokens mixing pool words, stopwords and punctuation.
inline std::string make_text(const std::vector<std::string>& pool, std::size_t n_words, Rng& rng) {
  static const char* puncts[] = {".", ",", ";", ":", "!", "?"};
  const auto& stops = default_stopwords();
  std::string text;
  for (std::size_t i = 0; i < n_words; ++i) {
    if (i) text += ' ';
    if (coin(rng, 0.3)) {
      text += stops[below(rng, stops.size())];
    } else {
      std::string w = pool[below(rng, pool.size())];
      text += coin(rng, 0.2) ? capitalize(w) : w;
    }
    if (coin(rng, 0.08)) text += puncts[below(rng, std::size(puncts))];
  }
  return text + ".";
}

inline void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

inline void write_vocabulary_file(const std::filesystem::path& path, const std::vector<vocab::Concept>& concepts) {
  std::ofstream out(path, std::ios::binary);
  for (const auto& c : concepts) {
    nlohmann::json j{{"id", c.id}, {"prefLabel", c.pref_label}, {"altLabels", c.variant_labels}};
    out << j.dump() << '\n';
  }
}

struct CorpusSpec {
  std::size_t short_docs = 60;
  std::size_t medium_docs = 45;
  std::size_t long_docs = 12;
  std::size_t medium_words = 2200;
  std::size_t long_words = 100005;
  std::size_t vocab_concepts = 150;
  bool entities = true;
};

struct CorpusPaths {
  std::filesystem::path vocab_old, vocab_new, vocab_new_full, manifest, entities, stopwords, exclusions;
};

/// A complete on-disk fixture: two vocabulary versions sharing roughly half
/// their labels, a manifest and texts across all three strata, entity files,
/// a stopword list and an exclusion list.
inline CorpusPaths write_corpus(const std::filesystem::path& dir, const CorpusSpec& spec, std::uint64_t seed) {
  namespace fs = std::filesystem;
  Rng rng(seed);
  fs::create_directories(dir / "texts");
  fs::create_directories(dir / "entities");
  auto pool = word_pool(400, rng);

  auto old_concepts = make_concepts(pool, spec.vocab_concepts, rng, "h");
  std::vector<vocab::Concept> new_concepts;
  std::set<std::string> used;
  for (const auto& c : old_concepts) {
    if (coin(rng, 0.5)) {
      vocab::Concept n = c;
      n.id = "n" + c.id.substr(1);
      if (coin(rng, 0.3) && !n.variant_labels.empty()) std::swap(n.pref_label, n.variant_labels.front());
      new_concepts.push_back(n);
      used.insert(vocab::normalize_label(n.pref_label));
      for (const auto& v : n.variant_labels) used.insert(vocab::normalize_label(v));
    }
  }
  for (auto& c : make_concepts(pool, spec.vocab_concepts / 3, rng, "x")) {
    bool clash = used.count(vocab::normalize_label(c.pref_label)) > 0;
    for (const auto& v : c.variant_labels) clash = clash || used.count(vocab::normalize_label(v)) > 0;
    if (clash) continue;
    used.insert(vocab::normalize_label(c.pref_label));
    for (const auto& v : c.variant_labels) used.insert(vocab::normalize_label(v));
    new_concepts.push_back(std::move(c));
  }
  // The full version adds back some historical concepts outside the facet.
  std::vector<vocab::Concept> full_concepts = new_concepts;
  for (const auto& c : old_concepts) {
    bool clash = used.count(vocab::normalize_label(c.pref_label)) > 0;
    for (const auto& v : c.variant_labels) clash = clash || used.count(vocab::normalize_label(v)) > 0;
    if (clash || !coin(rng, 0.2)) continue;
    vocab::Concept f = c;
    f.id = "f" + c.id.substr(1);
    used.insert(vocab::normalize_label(f.pref_label));
    for (const auto& v : f.variant_labels) used.insert(vocab::normalize_label(v));
    full_concepts.push_back(std::move(f));
  }

  CorpusPaths p;
  p.vocab_old = dir / "vocab-old.jsonl";
  p.vocab_new = dir / "vocab-new.jsonl";
  p.vocab_new_full = dir / "vocab-new-full.jsonl";
  p.manifest = dir / "manifest.tsv";
  p.entities = dir / "entities";
  p.stopwords = dir / "stopwords.txt";
  p.exclusions = dir / "exclusions.txt";
  write_vocabulary_file(p.vocab_old, old_concepts);
  write_vocabulary_file(p.vocab_new, new_concepts);
  write_vocabulary_file(p.vocab_new_full, full_concepts);
  {
    std::ofstream out(p.stopwords);
    for (const auto& w : default_stopwords()) out << w << '\n';
  }
  {
    std::ofstream out(p.exclusions);
    out << "# known conversion errors\n" << old_concepts.front().pref_label << '\n';
  }

  // Documents weave labels from the historical vocabulary into filler text.
  auto doc_text = [&](std::size_t words) {
    std::string text = make_text(pool, words, rng);
    std::size_t n_labels = 3 + below(rng, 8);
    for (std::size_t i = 0; i < n_labels; ++i) {
      const auto& c = old_concepts[below(rng, old_concepts.size())];
      const std::string& l = c.variant_labels.empty() || coin(rng) ? c.pref_label
                                                                   : c.variant_labels[below(rng, c.variant_labels.size())];
      text += " " + l + ".";
    }
    return text;
  };

  std::ofstream manifest(p.manifest);
  std::ofstream entities(p.entities / "part-0.jsonl");
  manifest << "doc_id\tpath\tedition\n";
  std::size_t next = 0;
  auto emit = [&](std::size_t count, std::size_t lo, std::size_t hi) {
    for (std::size_t i = 0; i < count; ++i) {
      std::string id = "doc" + std::to_string(100000 + next++);
      std::size_t words = lo + below(rng, hi - lo + 1);
      write_text(dir / "texts" / (id + ".txt"), doc_text(words));
      manifest << id << "\ttexts/" << id << ".txt\t" << (coin(rng) ? "9th" : "") << '\n';
      nlohmann::json ents = nlohmann::json::array();
      std::size_t n_ents = below(rng, 12);
      for (std::size_t e = 0; e < n_ents; ++e) {
        const auto& c = old_concepts[below(rng, old_concepts.size())];
        std::string surface = coin(rng, 0.7) ? c.pref_label : make_label(pool, rng, 2);
        ents.push_back({{"text", surface}, {"type", coin(rng) ? "NORP" : "ORG"}});
      }
      if (spec.entities) entities << nlohmann::json{{"doc_id", id}, {"entities", ents}}.dump() << '\n';
    }
  };
  emit(spec.short_docs, 120, 1900);
  emit(spec.medium_docs, spec.medium_words, spec.medium_words + 600);
  emit(spec.long_docs, spec.long_words, spec.long_words + 50);
  // Below the corpus minimum: skipped with a warning.
  {
    std::string id = "doc-tiny";
    write_text(dir / "texts" / (id + ".txt"), "Too short to index.");
    manifest << id << "\ttexts/" << id << ".txt\t\n";
  }
  return p;
}

}  // namespace chronoterm::synthetic
