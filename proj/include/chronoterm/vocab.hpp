// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Chronoterm Contributors

#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace chronoterm::vocab {

enum class LabelKind { Authorized, Variant };

std::string_view to_string(LabelKind kind);
/// Accepts "authorized" / "variant"; throws DataError otherwise.
LabelKind parse_label_kind(std::string_view text);

/// Case-insensitive, NFC, whitespace-collapsed form used for every
/// "exact match" comparison in the library. Punctuation is significant.
std::string normalize_label(std::string_view raw);

struct Concept {
  std::string id;
  std::string pref_label;
  std::vector<std::string> variant_labels;
  std::optional<std::string> scope_note;

  friend bool operator==(const Concept&, const Concept&) = default;
};

/// One label_index entry: which concept owns a normalized label, and how.
struct LabelRef {
  std::string concept_id;
  LabelKind kind = LabelKind::Authorized;
  std::string label;  // as written in the source file

  friend bool operator==(const LabelRef&, const LabelRef&) = default;
};

struct LookupResult {
  enum class Kind { None, Authorized, Variant };

  Kind kind = Kind::None;
  const Concept* owner = nullptr;
  std::string matched_label;

  bool found() const noexcept { return kind != Kind::None; }
  bool authorized() const noexcept { return kind == Kind::Authorized; }
};

/// A version-tagged, immutable set of concepts. Concepts are held sorted by
/// id, so two vocabularies built from the same lines in any order compare
/// equal.
class Vocabulary {
 public:
  Vocabulary() = default;

  /// Throws DataError on empty/duplicate ids, empty labels, or any
  /// normalized-label collision (within or across concepts).
  Vocabulary(std::string version_tag, std::vector<Concept> concepts);

  const std::string& version_tag() const noexcept { return version_tag_; }
  std::span<const Concept> concepts() const noexcept { return concepts_; }
  std::size_t size() const noexcept { return concepts_.size(); }
  bool empty() const noexcept { return concepts_.empty(); }

  const Concept* find(std::string_view id) const;

  const std::map<std::string, LabelRef, std::less<>>& label_index() const noexcept {
    return label_index_;
  }

  LookupResult lookup_exact(std::string_view label) const;

  friend bool operator==(const Vocabulary& a, const Vocabulary& b) {
    return a.version_tag_ == b.version_tag_ && a.concepts_ == b.concepts_ &&
           a.label_index_ == b.label_index_;
  }

 private:
  std::string version_tag_;
  std::vector<Concept> concepts_;
  std::map<std::string, LabelRef, std::less<>> label_index_;
};

/// Parses JSON-Lines: {"id","prefLabel","altLabels"?,"scopeNote"?} per line.
/// Blank lines and lines starting with '#' are skipped. Errors carry the
/// 1-based line number.
Vocabulary load_vocabulary(std::istream& source, std::string version_tag);
Vocabulary load_vocabulary_file(const std::filesystem::path& path, std::string version_tag);

/// Canonical JSON-Lines, one concept per line in id order.
void write_vocabulary(std::ostream& out, const Vocabulary& vocab);

inline LookupResult lookup_exact(const Vocabulary& vocab, std::string_view label) {
  return vocab.lookup_exact(label);
}

}  // namespace chronoterm::vocab
