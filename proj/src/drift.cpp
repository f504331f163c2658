// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Chronoterm Contributors

#include "chronoterm/drift.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <tuple>
#include <unordered_set>

#include "chronoterm/error.hpp"
#include "chronoterm/unicode.hpp"

namespace chronoterm::drift {

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::PresentInNew: return "PresentInNew";
    case Classification::Drift: return "Drift";
    case Classification::FacetExclusion: return "FacetExclusion";
    case Classification::DataError: return "DataError";
  }
  return "?";
}

std::string_view to_string(CounterpartStatus s) {
  return s == CounterpartStatus::Verified ? "verified" : "probable";
}

std::string_view to_string(ExistencePolicy p) {
  return p == ExistencePolicy::AuthorizedOnly ? "authorized" : "any";
}

Classification parse_classification(std::string_view text) {
  for (auto c : {Classification::PresentInNew, Classification::Drift, Classification::FacetExclusion,
                 Classification::DataError}) {
    if (to_string(c) == text) return c;
  }
  throw DataError("unknown classification '" + std::string(text) + "'");
}

CounterpartStatus parse_counterpart_status(std::string_view text) {
  if (text == "verified") return CounterpartStatus::Verified;
  if (text == "probable") return CounterpartStatus::Probable;
  throw DataError("unknown counterpart status '" + std::string(text) + "'");
}

ExistencePolicy parse_existence_policy(std::string_view text) {
  if (text == "authorized") return ExistencePolicy::AuthorizedOnly;
  if (text == "any") return ExistencePolicy::AnyLabel;
  throw DataError("unknown existence policy '" + std::string(text) + "'");
}

// --- outer merge -------------------------------------------------------------

namespace {

using ResultKey = std::pair<std::string, Approach>;

std::string describe(const ResultKey& k) {
  return k.first + "/" + std::string(indexer::to_string(k.second));
}

}  // namespace

std::vector<ExclusiveHit> exclusive_terms(std::span<const indexer::IndexingResult> old_results,
                                          std::span<const indexer::IndexingResult> new_results) {
  std::map<ResultKey, std::unordered_set<std::string>> new_headings;
  for (const auto& r : new_results) {
    auto [it, inserted] = new_headings.try_emplace(ResultKey{r.doc_id, r.approach});
    if (!inserted) throw DataError("duplicate new-vocabulary result for " + describe(it->first));
    for (const auto& h : r.hits) it->second.insert(vocab::normalize_label(h.pref_label));
  }

  std::set<ResultKey> old_keys;
  for (const auto& r : old_results) {
    if (!old_keys.insert({r.doc_id, r.approach}).second) {
      throw DataError("duplicate old-vocabulary result for " + describe({r.doc_id, r.approach}));
    }
  }

  std::vector<std::string> only_old;
  std::vector<std::string> only_new;
  for (const auto& k : old_keys) {
    if (!new_headings.count(k)) only_old.push_back(describe(k));
  }
  for (const auto& [k, _] : new_headings) {
    if (!old_keys.count(k)) only_new.push_back(describe(k));
  }
  if (!only_old.empty() || !only_new.empty()) {
    std::string msg = "old and new results cover different documents;";
    auto list = [&msg](const char* label, const std::vector<std::string>& items) {
      if (items.empty()) return;
      msg += std::string(" ") + label + ":";
      for (const auto& s : items) msg += " " + s;
      msg += ";";
    };
    list("only in old", only_old);
    list("only in new", only_new);
    msg.pop_back();
    throw DataError(msg);
  }

  std::vector<ExclusiveHit> out;
  for (const auto& r : old_results) {
    const auto& headings = new_headings.at({r.doc_id, r.approach});
    for (const auto& h : r.hits) {
      if (!headings.count(vocab::normalize_label(h.matched_label))) {
        out.push_back({r.doc_id, r.approach, h});
      }
    }
  }
  return out;
}

// --- classification ------------------------------------------------------------

DriftRecord make_record(const ExclusiveHit& hit) {
  DriftRecord r;
  r.term = hit.hit.matched_label;
  r.concept_id = hit.hit.concept_id;
  r.authorized_form = hit.hit.pref_label;
  r.label_kind = hit.hit.label_kind;
  r.doc_id = hit.doc_id;
  r.approach = hit.approach;
  return r;
}

ExclusionSet::ExclusionSet(std::span<const std::string> terms) {
  for (const auto& t : terms) {
    std::string n = vocab::normalize_label(t);
    if (!n.empty()) terms_.insert(std::move(n));
  }
}

bool ExclusionSet::contains(std::string_view term) const {
  return terms_.find(vocab::normalize_label(term)) != terms_.end();
}

ExclusionSet load_exclusions(std::istream& in) {
  std::vector<std::string> terms;
  std::string line;
  while (std::getline(in, line)) {
    std::string n = vocab::normalize_label(line);
    if (n.empty() || n.front() == '#') continue;
    terms.push_back(std::move(line));
  }
  return ExclusionSet(terms);
}

ExclusionSet load_exclusions_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open exclusion file '" + path.string() + "'");
  return load_exclusions(in);
}

namespace {

bool exists(const vocab::Vocabulary& v, std::string_view term, ExistencePolicy policy) {
  auto r = v.lookup_exact(term);
  return policy == ExistencePolicy::AnyLabel ? r.found() : r.authorized();
}

bool record_exists(const DriftRecord& rec, const vocab::Vocabulary& v, ExistencePolicy policy) {
  if (exists(v, rec.term, policy)) return true;
  return rec.label_kind == LabelKind::Variant && !rec.authorized_form.empty() &&
         exists(v, rec.authorized_form, policy);
}

}  // namespace

Classification classify(const DriftRecord& record, const vocab::Vocabulary& new_vocab,
                        const ExclusionSet& exclusions, const ClassifyOptions& options) {
  if (exclusions.contains(record.term)) return Classification::DataError;
  if (record_exists(record, new_vocab, options.policy)) return Classification::PresentInNew;
  if (options.new_full_vocab && record_exists(record, *options.new_full_vocab, options.policy)) {
    return Classification::FacetExclusion;
  }
  return Classification::Drift;
}

std::size_t levenshtein(std::u32string_view a, std::u32string_view b) {
  std::vector<std::size_t> prev(b.size() + 1);
  std::vector<std::size_t> cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

std::size_t levenshtein_bounded(std::u32string_view a, std::u32string_view b, std::size_t bound) {
  std::size_t diff = a.size() > b.size() ? a.size() - b.size() : b.size() - a.size();
  if (diff > bound) return bound + 1;
  std::vector<std::size_t> prev(b.size() + 1);
  std::vector<std::size_t> cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    std::size_t row_min = cur[0];
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
      row_min = std::min(row_min, cur[j]);
    }
    if (row_min > bound) return bound + 1;
    std::swap(prev, cur);
  }
  return std::min(prev[b.size()], bound + 1);
}

std::optional<Counterpart> resolve_counterpart(std::string_view term,
                                               const vocab::Vocabulary& new_vocab,
                                               std::size_t max_distance) {
  std::string norm = vocab::normalize_label(term);
  if (auto hit = new_vocab.lookup_exact(norm); hit.found()) {
    return Counterpart{hit.owner->id, hit.owner->pref_label, CounterpartStatus::Verified, 0};
  }
  if (max_distance == 0) return std::nullopt;

  const std::vector<char32_t> cps = unicode::code_points(norm);
  const std::u32string_view target(cps.data(), cps.size());
  const std::size_t target_len = cps.size();

  // (distance, variant?, normalized label); smaller is better, labels are unique.
  std::optional<std::tuple<std::size_t, bool, const std::string*, const vocab::LabelRef*>> best;
  for (const auto& [key, ref] : new_vocab.label_index()) {
    std::size_t len = unicode::code_point_count(key);
    std::size_t diff = len > target_len ? len - target_len : target_len - len;
    if (diff > max_distance) continue;
    const std::vector<char32_t> kc = unicode::code_points(key);
    std::size_t d = levenshtein_bounded(target, std::u32string_view(kc.data(), kc.size()), max_distance);
    if (d > max_distance) continue;
    bool variant = ref.kind == LabelKind::Variant;
    if (!best || std::tie(d, variant, key) < std::tie(std::get<0>(*best), std::get<1>(*best),
                                                       *std::get<2>(*best))) {
      best.emplace(d, variant, &key, &ref);
    }
  }
  if (!best) return std::nullopt;
  const vocab::Concept* owner = new_vocab.find(std::get<3>(*best)->concept_id);
  return Counterpart{owner->id, owner->pref_label, CounterpartStatus::Probable, std::get<0>(*best)};
}

DriftRecord assess(const ExclusiveHit& hit, const vocab::Vocabulary& new_vocab,
                   const ExclusionSet& exclusions, const ClassifyOptions& options) {
  DriftRecord rec = make_record(hit);
  rec.classification = classify(rec, new_vocab, exclusions, options);
  if (rec.classification == Classification::Drift) {
    rec.counterpart = resolve_counterpart(rec.term, new_vocab, options.max_distance);
  }
  return rec;
}

// --- statistics --------------------------------------------------------------

Tally& Tally::operator+=(const Tally& o) {
  documents += o.documents;
  terms += o.terms;
  exclusive += o.exclusive;
  present_in_new += o.present_in_new;
  drift_authorized += o.drift_authorized;
  drift_variant += o.drift_variant;
  facet_exclusions += o.facet_exclusions;
  data_errors += o.data_errors;
  return *this;
}

namespace {

std::size_t approach_index(Approach a) { return a == Approach::FullText ? 0 : 1; }

std::size_t stratum_index(Stratum s) {
  switch (s) {
    case Stratum::Short: return 0;
    case Stratum::Medium: return 1;
    case Stratum::Long: return 2;
  }
  return 0;
}

}  // namespace

Tally StatsReport::total() const {
  Tally t;
  for (const auto& row : cells) {
    for (const auto& c : row) t += c;
  }
  return t;
}

Tally StatsReport::by_approach(Approach a) const {
  Tally t;
  for (const auto& c : cells[approach_index(a)]) t += c;
  return t;
}

Tally StatsReport::by_stratum(Stratum s) const {
  Tally t;
  for (const auto& row : cells) t += row[stratum_index(s)];
  return t;
}

const Tally& StatsReport::cell(Approach a, Stratum s) const {
  return cells[approach_index(a)][stratum_index(s)];
}

StatsReport compute_statistics(std::span<const DriftRecord> records,
                               std::span<const indexer::IndexingResult> old_results,
                               const std::map<std::string, Stratum, std::less<>>& strata) {
  auto stratum_of = [&strata](const std::string& doc_id) {
    auto it = strata.find(doc_id);
    if (it == strata.end()) throw DataError("no document record for doc_id '" + doc_id + "'");
    return it->second;
  };

  StatsReport report;
  if (!old_results.empty()) report.old_vocabulary = old_results.front().vocabulary;
  for (const auto& r : old_results) {
    Tally& t = report.cells[approach_index(r.approach)][stratum_index(stratum_of(r.doc_id))];
    t.documents += 1;
    t.terms += r.hits.size();
  }
  for (const auto& rec : records) {
    Tally& t = report.cells[approach_index(rec.approach)][stratum_index(stratum_of(rec.doc_id))];
    t.exclusive += 1;
    switch (rec.classification) {
      case Classification::PresentInNew: t.present_in_new += 1; break;
      case Classification::FacetExclusion: t.facet_exclusions += 1; break;
      case Classification::DataError: t.data_errors += 1; break;
      case Classification::Drift:
        (rec.label_kind == LabelKind::Authorized ? t.drift_authorized : t.drift_variant) += 1;
        break;
    }
  }
  return report;
}

StatsReport compute_statistics(std::span<const DriftRecord> records,
                               std::span<const indexer::IndexingResult> old_results,
                               std::span<const textprep::Document> docs) {
  std::map<std::string, Stratum, std::less<>> strata;
  for (const auto& d : docs) strata.emplace(d.doc_id, d.stratum);
  return compute_statistics(records, old_results, strata);
}

}  // namespace chronoterm::drift
