// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Chronoterm Contributors

#include "chronoterm/serialize.hpp"

#include <fstream>
#include <sstream>

#include "chronoterm/error.hpp"
#include "chronoterm/score.hpp"

namespace chronoterm::serialize {

using nlohmann::json;

json to_json(const indexer::Hit& h, std::size_t rank) {
  return json{{"rank", rank},
              {"concept_id", h.concept_id},
              {"heading", h.pref_label},
              {"matched_label", h.matched_label},
              {"label_kind", vocab::to_string(h.label_kind)},
              {"match_kind", indexer::to_string(h.match_kind)},
              {"score", to_string(h.score)}};
}

namespace {

json result_json(const indexer::IndexingResult& r, std::string_view role, const StratumMap& strata) {
  json hits = json::array();
  for (std::size_t i = 0; i < r.hits.size(); ++i) hits.push_back(to_json(r.hits[i], i + 1));
  json out{{"role", role},
           {"vocabulary", r.vocabulary},
           {"doc_id", r.doc_id},
           {"approach", indexer::to_string(r.approach)},
           {"hits", std::move(hits)}};
  if (auto it = strata.find(r.doc_id); it != strata.end()) out["stratum"] = textprep::to_string(it->second);
  return out;
}

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw DataError(std::string("missing field '") + key + "'");
  return *it;
}

std::string text_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string()) throw DataError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

indexer::Hit hit_from_json(const json& j) {
  indexer::Hit h;
  h.concept_id = text_field(j, "concept_id");
  h.pref_label = text_field(j, "heading");
  h.matched_label = text_field(j, "matched_label");
  h.label_kind = vocab::parse_label_kind(text_field(j, "label_kind"));
  h.match_kind = indexer::parse_match_kind(text_field(j, "match_kind"));
  h.score = parse_score(text_field(j, "score"));
  return h;
}

json parse_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError(path.string() + ": cannot open");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

}  // namespace

json to_json(const HitsFile& f) {
  json results = json::array();
  for (const auto& r : f.old_results) results.push_back(result_json(r, "old", f.strata));
  for (const auto& r : f.new_results) results.push_back(result_json(r, "new", f.strata));
  json strata = json::object();
  for (const auto& [id, s] : f.strata) strata[id] = textprep::to_string(s);
  return json{{"old_vocabulary", f.old_vocabulary},
              {"new_vocabulary", f.new_vocabulary},
              {"strata", std::move(strata)},
              {"results", std::move(results)}};
}

json to_json(const drift::DriftRecord& r) {
  json out{{"doc_id", r.doc_id},
           {"approach", indexer::to_string(r.approach)},
           {"term", r.term},
           {"concept_id", r.concept_id},
           {"authorized_form", r.authorized_form},
           {"label_kind", vocab::to_string(r.label_kind)},
           {"classification", drift::to_string(r.classification)},
           {"counterpart", nullptr}};
  if (r.counterpart) {
    out["counterpart"] = json{{"concept_id", r.counterpart->concept_id},
                              {"heading", r.counterpart->heading},
                              {"status", drift::to_string(r.counterpart->status)},
                              {"distance", r.counterpart->distance}};
  }
  return out;
}

json to_json(const DriftFile& f) {
  json records = json::array();
  for (const auto& r : f.records) records.push_back(to_json(r));
  return json{{"old_vocabulary", f.old_vocabulary},
              {"new_vocabulary", f.new_vocabulary},
              {"facet_filter", f.facet_filter},
              {"records", std::move(records)}};
}

HitsFile hits_from_json(const json& j) {
  try {
    HitsFile f;
    f.old_vocabulary = text_field(j, "old_vocabulary");
    f.new_vocabulary = text_field(j, "new_vocabulary");
    for (const auto& [id, s] : field(j, "strata").items()) {
      f.strata.emplace(id, textprep::parse_stratum(s.get<std::string>()));
    }
    for (const auto& rj : field(j, "results")) {
      indexer::IndexingResult r;
      r.doc_id = text_field(rj, "doc_id");
      r.vocabulary = text_field(rj, "vocabulary");
      r.approach = indexer::parse_approach(text_field(rj, "approach"));
      for (const auto& hj : field(rj, "hits")) r.hits.push_back(hit_from_json(hj));
      std::string role = text_field(rj, "role");
      if (role == "old") {
        f.old_results.push_back(std::move(r));
      } else if (role == "new") {
        f.new_results.push_back(std::move(r));
      } else {
        throw DataError("unknown result role '" + role + "'");
      }
    }
    return f;
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed hits document: ") + e.what());
  }
}

DriftFile drift_from_json(const json& j) {
  try {
    DriftFile f;
    f.old_vocabulary = text_field(j, "old_vocabulary");
    f.new_vocabulary = text_field(j, "new_vocabulary");
    f.facet_filter = field(j, "facet_filter").get<bool>();
    for (const auto& rj : field(j, "records")) {
      drift::DriftRecord r;
      r.doc_id = text_field(rj, "doc_id");
      r.approach = indexer::parse_approach(text_field(rj, "approach"));
      r.term = text_field(rj, "term");
      r.concept_id = text_field(rj, "concept_id");
      r.authorized_form = text_field(rj, "authorized_form");
      r.label_kind = vocab::parse_label_kind(text_field(rj, "label_kind"));
      r.classification = drift::parse_classification(text_field(rj, "classification"));
      if (const json& cj = field(rj, "counterpart"); !cj.is_null()) {
        drift::Counterpart c;
        c.concept_id = text_field(cj, "concept_id");
        c.heading = text_field(cj, "heading");
        c.status = drift::parse_counterpart_status(text_field(cj, "status"));
        c.distance = field(cj, "distance").get<std::size_t>();
        r.counterpart = std::move(c);
      }
      f.records.push_back(std::move(r));
    }
    return f;
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed drift document: ") + e.what());
  }
}

HitsFile read_hits_file(const std::filesystem::path& path) {
  try {
    return hits_from_json(parse_file(path));
  } catch (const DataError& e) {
    std::string msg = e.what();
    if (msg.rfind(path.string(), 0) == 0) throw;
    throw DataError(path.string() + ": " + msg);
  }
}

DriftFile read_drift_file(const std::filesystem::path& path) {
  try {
    return drift_from_json(parse_file(path));
  } catch (const DataError& e) {
    std::string msg = e.what();
    if (msg.rfind(path.string(), 0) == 0) throw;
    throw DataError(path.string() + ": " + msg);
  }
}

}  // namespace chronoterm::serialize
