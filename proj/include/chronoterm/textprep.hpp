// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Chronoterm Contributors

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace chronoterm::textprep {

// ---------------------------------------------------------------------------
// Tokens and stems
// ---------------------------------------------------------------------------

/// Maximal runs of alphanumerics, allowing single hyphens/apostrophes between
/// two alphanumerics. Everything else separates. Casing is preserved.
std::vector<std::string> tokenize(std::string_view text);

/// Number of tokens tokenize() would return, without materializing them.
std::size_t count_words(std::string_view text);

/// Lowercased Porter stem of one token.
std::string stem(std::string_view token);

/// Porter's algorithm on an already-lowercased word (reference C program
/// variant, including the "bli" and "logi" rules). Words of length <= 2 are
/// returned unchanged.
std::string porter_stem(std::string word);

// ---------------------------------------------------------------------------
// Stopwords
// ---------------------------------------------------------------------------

class StopwordSet {
 public:
  StopwordSet() = default;
  explicit StopwordSet(std::span<const std::string> words);
  StopwordSet(std::initializer_list<std::string_view> words);

  /// Case-insensitive membership.
  bool contains(std::string_view token) const;
  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }
  const std::set<std::string, std::less<>>& words() const noexcept { return words_; }

 private:
  std::set<std::string, std::less<>> words_;
};

/// One word per line; '#' starts a comment line; blank lines ignored.
StopwordSet load_stopwords(std::istream& in);
StopwordSet load_stopwords_file(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Documents and strata
// ---------------------------------------------------------------------------

enum class Stratum { Short, Medium, Long };

inline constexpr std::int64_t kCorpusMinimumWords = 100;
inline constexpr std::int64_t kShortMaxWords = 2000;
inline constexpr std::int64_t kMediumMaxWords = 99999;

std::string_view to_string(Stratum s);
Stratum parse_stratum(std::string_view text);

/// 100..2000 Short, 2001..99999 Medium, >= 100000 Long.
/// Throws DataError below the corpus minimum.
Stratum classify_stratum(std::int64_t word_count);

struct Document {
  std::string doc_id;
  std::string text;
  std::int64_t word_count = 0;
  std::optional<std::string> edition;
  Stratum stratum = Stratum::Short;
};

/// Builds a Document, counting words with tokenize(). Throws DataError when
/// the count is below the corpus minimum.
Document make_document(std::string doc_id, std::string text,
                       std::optional<std::string> edition = std::nullopt);

struct CorpusWarning {
  std::string doc_id;
  std::string message;
};

struct Corpus {
  std::vector<Document> documents;  // manifest order
  std::vector<CorpusWarning> warnings;
};

/// Reads a TSV manifest (header `doc_id\tpath\tedition`) and the referenced
/// UTF-8 text files; relative paths resolve against `base_dir`. Entries below
/// the corpus minimum are skipped with a warning. Files are read with up to
/// `workers` threads; output order is always manifest order.
Corpus load_corpus(std::istream& manifest, const std::filesystem::path& base_dir, int workers = 1);
Corpus load_corpus_file(const std::filesystem::path& manifest_path, int workers = 1);

struct StrataSizes {
  std::size_t short_count = 40;
  std::size_t medium_count = 40;
  std::size_t long_count = 10;

  friend bool operator==(const StrataSizes&, const StrataSizes&) = default;
};

/// Uniform sampling without replacement inside each stratum, driven by a
/// single mt19937_64 stream seeded with `seed` (Short, then Medium, then
/// Long). Output is grouped Short/Medium/Long and sorted by doc_id within a
/// group. Throws DataError on stratum underflow.
std::vector<Document> stratified_sample(std::span<const Document> corpus, StrataSizes sizes,
                                        std::uint64_t seed);

// ---------------------------------------------------------------------------
// Entity documents
// ---------------------------------------------------------------------------

enum class EntityType { NORP, PERSON, DATE, LANGUAGE, WORK_OF_ART, EVENT, LAW, PRODUCT, ORG, FAC };

std::string_view to_string(EntityType t);
std::optional<EntityType> parse_entity_type(std::string_view tag);

struct Entity {
  std::string surface;
  EntityType type = EntityType::NORP;
};

struct EntityDocument {
  std::string doc_id;
  std::vector<Entity> entities;  // file order, duplicates kept
};

/// Parses one JSON line `{"doc_id":..., "entities":[{"text":...,"type":...}]}`.
EntityDocument load_entity_document(std::string_view line);
/// All non-blank, non-comment lines of a JSON-Lines stream.
std::vector<EntityDocument> load_entity_documents(std::istream& in);
/// Every *.jsonl file in `dir`, in file-name order. Duplicate doc ids are an
/// error.
std::vector<EntityDocument> load_entity_directory(const std::filesystem::path& dir);

}  // namespace chronoterm::textprep
