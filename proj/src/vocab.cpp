// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Chronoterm Contributors

#include "chronoterm/vocab.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "chronoterm/error.hpp"
#include "chronoterm/unicode.hpp"

namespace chronoterm::vocab {

using nlohmann::json;

std::string_view to_string(LabelKind kind) {
  return kind == LabelKind::Authorized ? "authorized" : "variant";
}

LabelKind parse_label_kind(std::string_view text) {
  if (text == "authorized") return LabelKind::Authorized;
  if (text == "variant") return LabelKind::Variant;
  throw DataError("unknown label kind '" + std::string(text) + "'");
}

std::string normalize_label(std::string_view raw) { return unicode::normalize_label(raw); }

Vocabulary::Vocabulary(std::string version_tag, std::vector<Concept> concepts)
    : version_tag_(std::move(version_tag)), concepts_(std::move(concepts)) {
  std::sort(concepts_.begin(), concepts_.end(),
            [](const Concept& a, const Concept& b) { return a.id < b.id; });

  for (std::size_t i = 0; i < concepts_.size(); ++i) {
    const Concept& c = concepts_[i];
    if (c.id.empty()) throw DataError("concept with empty id");
    if (i > 0 && concepts_[i - 1].id == c.id) {
      throw DataError("duplicate concept id '" + c.id + "'");
    }
  }

  auto add = [this](const Concept& c, const std::string& label, LabelKind kind) {
    std::string key = normalize_label(label);
    if (key.empty()) {
      throw DataError("concept '" + c.id + "' has an empty " + std::string(to_string(kind)) +
                      " label");
    }
    auto [it, inserted] = label_index_.try_emplace(std::move(key), LabelRef{c.id, kind, label});
    if (!inserted) {
      throw DataError("label '" + it->first + "' collides: concepts '" + it->second.concept_id +
                      "' and '" + c.id + "'");
    }
  };
  for (const Concept& c : concepts_) {
    add(c, c.pref_label, LabelKind::Authorized);
    for (const auto& v : c.variant_labels) add(c, v, LabelKind::Variant);
  }
}

const Concept* Vocabulary::find(std::string_view id) const {
  auto it = std::lower_bound(concepts_.begin(), concepts_.end(), id,
                             [](const Concept& c, std::string_view key) { return c.id < key; });
  if (it == concepts_.end() || it->id != id) return nullptr;
  return &*it;
}

LookupResult Vocabulary::lookup_exact(std::string_view label) const {
  auto it = label_index_.find(normalize_label(label));
  if (it == label_index_.end()) return {};
  LookupResult r;
  r.kind = it->second.kind == LabelKind::Authorized ? LookupResult::Kind::Authorized
                                                    : LookupResult::Kind::Variant;
  r.owner = find(it->second.concept_id);
  r.matched_label = it->second.label;
  return r;
}

namespace {

std::string_view trim(std::string_view s) {
  auto ws = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && ws(s.front())) s.remove_prefix(1);
  while (!s.empty() && ws(s.back())) s.remove_suffix(1);
  return s;
}

std::string line_error(std::size_t line_no, const std::string& what) {
  return "vocabulary line " + std::to_string(line_no) + ": " + what;
}

Concept parse_concept(std::string_view line, std::size_t line_no) {
  json j = json::parse(line.begin(), line.end(), nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object()) {
    throw DataError(line_error(line_no, "malformed JSON object"));
  }
  auto required_string = [&](const char* key) {
    auto it = j.find(key);
    if (it == j.end() || !it->is_string() || it->get_ref<const std::string&>().empty()) {
      throw DataError(line_error(line_no, std::string("missing or empty \"") + key + "\""));
    }
    return it->get<std::string>();
  };

  Concept c;
  c.id = required_string("id");
  c.pref_label = required_string("prefLabel");
  if (auto it = j.find("altLabels"); it != j.end() && !it->is_null()) {
    if (!it->is_array()) throw DataError(line_error(line_no, "\"altLabels\" is not an array"));
    for (const auto& v : *it) {
      if (!v.is_string()) throw DataError(line_error(line_no, "non-string entry in \"altLabels\""));
      c.variant_labels.push_back(v.get<std::string>());
    }
  }
  if (auto it = j.find("scopeNote"); it != j.end() && !it->is_null()) {
    if (!it->is_string()) throw DataError(line_error(line_no, "\"scopeNote\" is not a string"));
    c.scope_note = it->get<std::string>();
  }
  return c;
}

}  // namespace

Vocabulary load_vocabulary(std::istream& source, std::string version_tag) {
  std::vector<Concept> concepts;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(source, line)) {
    ++line_no;
    std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    concepts.push_back(parse_concept(body, line_no));
  }
  if (source.bad()) throw DataError("vocabulary stream read failure");
  return Vocabulary(std::move(version_tag), std::move(concepts));
}

Vocabulary load_vocabulary_file(const std::filesystem::path& path, std::string version_tag) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open vocabulary '" + path.string() + "'");
  try {
    return load_vocabulary(in, std::move(version_tag));
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

void write_vocabulary(std::ostream& out, const Vocabulary& vocab) {
  for (const Concept& c : vocab.concepts()) {
    json j;
    j["id"] = c.id;
    j["prefLabel"] = c.pref_label;
    j["altLabels"] = c.variant_labels;
    if (c.scope_note) j["scopeNote"] = *c.scope_note;
    out << j.dump() << '\n';
  }
}

}  // namespace chronoterm::vocab
