// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Chronoterm Contributors

#include "chronoterm/textprep.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <iterator>
#include <random>
#include <unordered_set>

#include <json.hpp>
#include <unicode/utf8.h>

#include "chronoterm/error.hpp"
#include "chronoterm/unicode.hpp"

namespace chronoterm::textprep {

namespace {

struct Decoded {
  char32_t cp;
  std::size_t next;  // byte offset just past this code point
};

Decoded decode_at(std::string_view s, std::size_t pos) {
  const auto* p = reinterpret_cast<const uint8_t*>(s.data());
  auto i = static_cast<int32_t>(pos);
  UChar32 c;
  U8_NEXT(p, i, static_cast<int32_t>(s.size()), c);
  return {c < 0 ? U'\uFFFD' : static_cast<char32_t>(c), static_cast<std::size_t>(i)};
}

bool is_joiner(char32_t c) {
  return c == U'-' || c == U'\'' || c == U'\u2019' || c == U'\u2010' || c == U'\u2011';
}

// Calls emit(std::string_view token) for every token of `text`.
template <class Emit>
void scan_tokens(std::string_view text, Emit&& emit) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    Decoded d = decode_at(text, pos);
    if (!unicode::is_alnum(d.cp)) {
      pos = d.next;
      continue;
    }
    std::size_t start = pos;
    std::size_t end = d.next;
    while (end < text.size()) {
      Decoded nx = decode_at(text, end);
      if (unicode::is_alnum(nx.cp)) {
        end = nx.next;
        continue;
      }
      if (is_joiner(nx.cp) && nx.next < text.size()) {
        Decoded after = decode_at(text, nx.next);
        if (unicode::is_alnum(after.cp)) {
          end = after.next;
          continue;
        }
      }
      break;
    }
    emit(text.substr(start, end - start));
    pos = end;
  }
}

std::string_view trim(std::string_view s) {
  auto ws = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && ws(s.front())) s.remove_prefix(1);
  while (!s.empty() && ws(s.back())) s.remove_suffix(1);
  return s;
}

std::string_view strip_cr(std::string_view s) {
  if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    out.push_back(line.substr(start, tab == std::string_view::npos ? tab : tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return out;
}

// Unbiased integer in [0, n) from a 64-bit engine. std::uniform_int_distribution
// is implementation-defined, which would make samples differ across standard
// libraries.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  std::uint64_t threshold = (0 - n) % n;
  while (true) {
    std::uint64_t r = rng();
    if (r >= threshold) return r % n;
  }
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  scan_tokens(text, [&](std::string_view tok) { out.emplace_back(tok); });
  return out;
}

std::size_t count_words(std::string_view text) {
  std::size_t n = 0;
  scan_tokens(text, [&](std::string_view) { ++n; });
  return n;
}

std::string stem(std::string_view token) { return porter_stem(unicode::to_lower(token)); }

// --- stopwords -------------------------------------------------------------

StopwordSet::StopwordSet(std::span<const std::string> words) {
  for (const auto& w : words) {
    if (!w.empty()) words_.insert(unicode::to_lower(w));
  }
}

StopwordSet::StopwordSet(std::initializer_list<std::string_view> words) {
  for (auto w : words) {
    if (!w.empty()) words_.insert(unicode::to_lower(w));
  }
}

bool StopwordSet::contains(std::string_view token) const {
  return words_.find(unicode::to_lower(token)) != words_.end();
}

StopwordSet load_stopwords(std::istream& in) {
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view w = trim(line);
    if (w.empty() || w.front() == '#') continue;
    words.emplace_back(w);
  }
  return StopwordSet(words);
}

StopwordSet load_stopwords_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open stopword file '" + path.string() + "'");
  return load_stopwords(in);
}

// --- strata ----------------------------------------------------------------

std::string_view to_string(Stratum s) {
  switch (s) {
    case Stratum::Short: return "Short";
    case Stratum::Medium: return "Medium";
    case Stratum::Long: return "Long";
  }
  return "?";
}

Stratum parse_stratum(std::string_view text) {
  if (text == "Short") return Stratum::Short;
  if (text == "Medium") return Stratum::Medium;
  if (text == "Long") return Stratum::Long;
  throw DataError("unknown stratum '" + std::string(text) + "'");
}

Stratum classify_stratum(std::int64_t word_count) {
  if (word_count < kCorpusMinimumWords) {
    throw DataError("word count " + std::to_string(word_count) + " is below the corpus minimum of " +
                    std::to_string(kCorpusMinimumWords));
  }
  if (word_count <= kShortMaxWords) return Stratum::Short;
  if (word_count <= kMediumMaxWords) return Stratum::Medium;
  return Stratum::Long;
}

Document make_document(std::string doc_id, std::string text, std::optional<std::string> edition) {
  Document d;
  d.doc_id = std::move(doc_id);
  d.word_count = static_cast<std::int64_t>(count_words(text));
  d.stratum = classify_stratum(d.word_count);
  d.text = std::move(text);
  d.edition = std::move(edition);
  return d;
}

// --- corpus ----------------------------------------------------------------

namespace {

struct ManifestRow {
  std::string doc_id;
  std::filesystem::path path;
  std::optional<std::string> edition;
};

std::vector<ManifestRow> parse_manifest(std::istream& manifest, const std::filesystem::path& base_dir) {
  std::vector<ManifestRow> rows;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(manifest, line)) {
    ++line_no;
    std::string_view body = strip_cr(line);
    if (trim(body).empty()) continue;
    auto fields = split_tabs(body);
    if (!header_seen) {
      if (fields.size() != 3 || fields[0] != "doc_id" || fields[1] != "path" || fields[2] != "edition") {
        throw DataError("manifest line " + std::to_string(line_no) +
                        ": expected header 'doc_id\\tpath\\tedition'");
      }
      header_seen = true;
      continue;
    }
    if (fields.size() < 2 || fields.size() > 3) {
      throw DataError("manifest line " + std::to_string(line_no) + ": expected 2 or 3 tab-separated fields");
    }
    ManifestRow row;
    row.doc_id = std::string(fields[0]);
    if (row.doc_id.empty() || fields[1].empty()) {
      throw DataError("manifest line " + std::to_string(line_no) + ": empty doc_id or path");
    }
    if (!seen.insert(row.doc_id).second) {
      throw DataError("manifest line " + std::to_string(line_no) + ": duplicate doc_id '" + row.doc_id + "'");
    }
    std::filesystem::path p{std::string(fields[1])};
    row.path = p.is_absolute() ? p : base_dir / p;
    if (fields.size() == 3 && !fields[2].empty()) row.edition = std::string(fields[2]);
    rows.push_back(std::move(row));
  }
  if (manifest.bad()) throw DataError("manifest read failure");
  if (!header_seen && line_no > 0) throw DataError("manifest has no header row");
  return rows;
}

struct LoadedText {
  std::string text;
  std::string error;
};

LoadedText read_text(const ManifestRow& row) {
  LoadedText out;
  std::error_code ec;
  if (!std::filesystem::exists(row.path, ec)) {
    out.error = "missing file '" + row.path.string() + "' for doc_id '" + row.doc_id + "'";
    return out;
  }
  std::ifstream in(row.path, std::ios::binary);
  if (!in) {
    out.error = "unreadable text '" + row.path.string() + "' for doc_id '" + row.doc_id + "'";
    return out;
  }
  out.text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  if (in.bad() || !unicode::is_valid_utf8(out.text)) {
    out.error = "unreadable text '" + row.path.string() + "' for doc_id '" + row.doc_id +
                "' (not valid UTF-8)";
  }
  return out;
}

}  // namespace

Corpus load_corpus(std::istream& manifest, const std::filesystem::path& base_dir, int workers) {
  std::vector<ManifestRow> rows = parse_manifest(manifest, base_dir);
  std::vector<LoadedText> texts(rows.size());
  std::vector<std::int64_t> counts(rows.size(), 0);

  const auto n = static_cast<std::int64_t>(rows.size());
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, workers))
  for (std::int64_t i = 0; i < n; ++i) {
    texts[i] = read_text(rows[i]);
    if (texts[i].error.empty()) counts[i] = static_cast<std::int64_t>(count_words(texts[i].text));
  }

  Corpus corpus;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!texts[i].error.empty()) throw DataError(texts[i].error);
    if (counts[i] < kCorpusMinimumWords) {
      corpus.warnings.push_back({rows[i].doc_id, "skipped: " + std::to_string(counts[i]) +
                                                     " words is below the corpus minimum"});
      continue;
    }
    Document d;
    d.doc_id = rows[i].doc_id;
    d.text = std::move(texts[i].text);
    d.word_count = counts[i];
    d.edition = rows[i].edition;
    d.stratum = classify_stratum(counts[i]);
    corpus.documents.push_back(std::move(d));
  }
  return corpus;
}

Corpus load_corpus_file(const std::filesystem::path& manifest_path, int workers) {
  std::ifstream in(manifest_path, std::ios::binary);
  if (!in) throw DataError("cannot open corpus manifest '" + manifest_path.string() + "'");
  return load_corpus(in, manifest_path.parent_path(), workers);
}

// --- sampling --------------------------------------------------------------

std::vector<Document> stratified_sample(std::span<const Document> corpus, StrataSizes sizes,
                                        std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Document> out;
  out.reserve(sizes.short_count + sizes.medium_count + sizes.long_count);

  const std::pair<Stratum, std::size_t> plan[] = {
      {Stratum::Short, sizes.short_count},
      {Stratum::Medium, sizes.medium_count},
      {Stratum::Long, sizes.long_count},
  };
  for (auto [stratum, want] : plan) {
    std::vector<const Document*> pool;
    for (const Document& d : corpus) {
      if (d.stratum == stratum) pool.push_back(&d);
    }
    if (pool.size() < want) {
      throw DataError("stratum " + std::string(to_string(stratum)) + " underflow: requested " +
                      std::to_string(want) + ", available " + std::to_string(pool.size()));
    }
    std::sort(pool.begin(), pool.end(),
              [](const Document* a, const Document* b) { return a->doc_id < b->doc_id; });
    for (std::size_t i = 0; i < want; ++i) {
      std::size_t j = i + static_cast<std::size_t>(uniform_below(rng, pool.size() - i));
      std::swap(pool[i], pool[j]);
    }
    pool.resize(want);
    std::sort(pool.begin(), pool.end(),
              [](const Document* a, const Document* b) { return a->doc_id < b->doc_id; });
    for (const Document* d : pool) out.push_back(*d);
  }
  return out;
}

// --- entities --------------------------------------------------------------

namespace {

constexpr std::pair<EntityType, std::string_view> kEntityTags[] = {
    {EntityType::NORP, "NORP"},       {EntityType::PERSON, "PERSON"},
    {EntityType::DATE, "DATE"},       {EntityType::LANGUAGE, "LANGUAGE"},
    {EntityType::WORK_OF_ART, "WORK_OF_ART"}, {EntityType::EVENT, "EVENT"},
    {EntityType::LAW, "LAW"},         {EntityType::PRODUCT, "PRODUCT"},
    {EntityType::ORG, "ORG"},         {EntityType::FAC, "FAC"},
};

}  // namespace

std::string_view to_string(EntityType t) {
  for (auto [type, tag] : kEntityTags) {
    if (type == t) return tag;
  }
  return "?";
}

std::optional<EntityType> parse_entity_type(std::string_view tag) {
  for (auto [type, name] : kEntityTags) {
    if (name == tag) return type;
  }
  return std::nullopt;
}

EntityDocument load_entity_document(std::string_view line) {
  using nlohmann::json;
  json j = json::parse(line.begin(), line.end(), nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw DataError("malformed entity JSON line");

  auto id = j.find("doc_id");
  if (id == j.end() || !id->is_string() || id->get_ref<const std::string&>().empty()) {
    throw DataError("entity line missing \"doc_id\"");
  }
  EntityDocument doc;
  doc.doc_id = id->get<std::string>();

  auto ents = j.find("entities");
  if (ents == j.end() || !ents->is_array()) {
    throw DataError("entity line for '" + doc.doc_id + "' missing \"entities\" array");
  }
  for (const auto& e : *ents) {
    if (!e.is_object()) throw DataError("entity entry for '" + doc.doc_id + "' is not an object");
    auto text = e.find("text");
    auto type = e.find("type");
    if (text == e.end() || !text->is_string() || text->get_ref<const std::string&>().empty()) {
      throw DataError("entity entry for '" + doc.doc_id + "' has no surface text");
    }
    if (type == e.end() || !type->is_string()) {
      throw DataError("entity entry for '" + doc.doc_id + "' has no type tag");
    }
    auto parsed = parse_entity_type(type->get_ref<const std::string&>());
    if (!parsed) {
      throw DataError("unknown entity type '" + type->get<std::string>() + "' in '" + doc.doc_id + "'");
    }
    doc.entities.push_back({text->get<std::string>(), *parsed});
  }
  return doc;
}

std::vector<EntityDocument> load_entity_documents(std::istream& in) {
  std::vector<EntityDocument> docs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    try {
      docs.push_back(load_entity_document(body));
    } catch (const DataError& e) {
      throw DataError("entity line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return docs;
}

std::vector<EntityDocument> load_entity_directory(const std::filesystem::path& dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    throw DataError("entity directory '" + dir.string() + "' does not exist");
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".jsonl") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  std::vector<EntityDocument> docs;
  std::unordered_set<std::string> seen;
  for (const auto& f : files) {
    std::ifstream in(f, std::ios::binary);
    if (!in) throw DataError("cannot open entity file '" + f.string() + "'");
    std::vector<EntityDocument> batch;
    try {
      batch = load_entity_documents(in);
    } catch (const DataError& e) {
      throw DataError(f.string() + ": " + e.what());
    }
    for (auto& d : batch) {
      if (!seen.insert(d.doc_id).second) {
        throw DataError("duplicate entity doc_id '" + d.doc_id + "' in '" + f.string() + "'");
      }
      docs.push_back(std::move(d));
    }
  }
  return docs;
}

}  // namespace chronoterm::textprep
