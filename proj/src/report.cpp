// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Chronoterm Contributors

#include "chronoterm/report.hpp"

#include <array>
#include <functional>
#include <vector>

#include <json.hpp>

#include "chronoterm/error.hpp"
#include "chronoterm/score.hpp"

namespace chronoterm::report {

using drift::kApproaches;
using drift::kStrata;
using drift::Tally;
using nlohmann::json;

std::string_view to_string(Format f) {
  switch (f) {
    case Format::Tsv: return "tsv";
    case Format::Json: return "json";
    case Format::Md: return "md";
  }
  return "tsv";
}

std::string_view extension(Format f) { return to_string(f); }

Format parse_format(std::string_view text) {
  if (text == "tsv") return Format::Tsv;
  if (text == "json") return Format::Json;
  if (text == "md") return Format::Md;
  throw ValidationError("--format", "unknown format '" + std::string(text) + "' (expected tsv, json or md)");
}

std::string format_percent(std::size_t count, std::size_t denom) {
  // Hundredths of a percent, half up: floor((2 * 10000 * c + d) / (2 * d)).
  unsigned __int128 num = static_cast<unsigned __int128>(count) * 20000u + denom;
  auto hundredths = static_cast<std::uint64_t>(num / (static_cast<unsigned __int128>(denom) * 2u));
  std::string frac = std::to_string(hundredths % 100);
  if (frac.size() < 2) frac.insert(0, 1, '0');
  return std::to_string(hundredths / 100) + "." + frac + "%";
}

std::string format_fraction(std::size_t count, std::size_t denom) {
  if (denom == 0) return std::to_string(count) + "/0 (—)";
  return std::to_string(count) + "/" + std::to_string(denom) + " (" + format_percent(count, denom) + ")";
}

namespace {

std::string approach_label(drift::Approach a) { return a == drift::Approach::FullText ? "Full Text" : "NER"; }

std::string escape_tsv(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      default: out += c;
    }
  }
  return out;
}

std::string escape_md(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '|') {
      out += "\\|";
    } else if (c == '\n' || c == '\r' || c == '\t') {
      out += ' ';
    } else {
      out += c;
    }
  }
  return out;
}

void tsv_row(std::string& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += '\t';
    out += escape_tsv(cells[i]);
  }
  out += '\n';
}

void md_row(std::string& out, const std::vector<std::string>& cells) {
  out += '|';
  for (const auto& c : cells) {
    out += ' ';
    out += escape_md(c);
    out += " |";
  }
  out += '\n';
}

void md_header(std::string& out, const std::vector<std::string>& cells) {
  md_row(out, cells);
  out += '|';
  for (std::size_t i = 0; i < cells.size(); ++i) out += "---|";
  out += '\n';
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Statistics
// ---------------------------------------------------------------------------

json tally_json(const Tally& t) {
  return json{
      {"documents", t.documents},
      {"terms", t.terms},
      {"exclusive", t.exclusive},
      {"present_in_new", t.present_in_new},
      {"drift", t.drift()},
      {"drift_authorized", t.drift_authorized},
      {"drift_variant", t.drift_variant},
      {"facet_exclusions", t.facet_exclusions},
      {"data_errors", t.data_errors},
      {"terms_adjusted", t.terms_adjusted()},
      {"exclusive_fraction", format_fraction(t.exclusive, t.terms)},
      {"drift_fraction", format_fraction(t.drift(), t.terms)},
      {"drift_fraction_adjusted", format_fraction(t.drift(), t.terms_adjusted())},
      {"drift_authorized_share", format_fraction(t.drift_authorized, t.drift())},
      {"drift_variant_share", format_fraction(t.drift_variant, t.drift())},
  };
}

std::vector<std::string> tally_cells(const Tally& t) {
  return {std::to_string(t.documents),
          std::to_string(t.terms),
          std::to_string(t.exclusive),
          std::to_string(t.present_in_new),
          std::to_string(t.drift_authorized),
          std::to_string(t.drift_variant),
          std::to_string(t.drift()),
          std::to_string(t.facet_exclusions),
          std::to_string(t.data_errors),
          format_fraction(t.exclusive, t.terms),
          format_fraction(t.drift(), t.terms),
          format_fraction(t.drift(), t.terms_adjusted()),
          format_fraction(t.drift_authorized, t.drift()),
          format_fraction(t.drift_variant, t.drift())};
}

std::string stats_json(const drift::StatsReport& r) {
  json by_approach = json::object();
  for (auto a : kApproaches) by_approach[std::string(indexer::to_string(a))] = tally_json(r.by_approach(a));
  json by_stratum = json::object();
  for (auto s : kStrata) by_stratum[std::string(textprep::to_string(s))] = tally_json(r.by_stratum(s));
  json cells = json::array();
  for (auto a : kApproaches) {
    for (auto s : kStrata) {
      json c = tally_json(r.cell(a, s));
      c["approach"] = indexer::to_string(a);
      c["stratum"] = textprep::to_string(s);
      cells.push_back(std::move(c));
    }
  }
  return dump(json{{"old_vocabulary", r.old_vocabulary},
                   {"new_vocabulary", r.new_vocabulary},
                   {"facet_filter", r.facet_filter},
                   {"total", tally_json(r.total())},
                   {"by_approach", std::move(by_approach)},
                   {"by_stratum", std::move(by_stratum)},
                   {"cells", std::move(cells)}});
}

std::string stats_tsv(const drift::StatsReport& r) {
  std::string out;
  tsv_row(out, {"slice", "approach", "stratum", "documents", "terms", "exclusive", "present_in_new",
                "drift_authorized", "drift_variant", "drift", "facet_exclusions", "data_errors",
                "exclusive_fraction", "drift_fraction", "drift_fraction_adjusted",
                "drift_authorized_share", "drift_variant_share"});
  auto row = [&](std::string slice, std::string approach, std::string stratum, const Tally& t) {
    std::vector<std::string> cells{std::move(slice), std::move(approach), std::move(stratum)};
    auto rest = tally_cells(t);
    cells.insert(cells.end(), rest.begin(), rest.end());
    tsv_row(out, cells);
  };
  for (auto a : kApproaches) {
    for (auto s : kStrata) {
      row("cell", std::string(indexer::to_string(a)), std::string(textprep::to_string(s)), r.cell(a, s));
    }
  }
  for (auto a : kApproaches) row("approach", std::string(indexer::to_string(a)), "All", r.by_approach(a));
  for (auto s : kStrata) row("stratum", "All", std::string(textprep::to_string(s)), r.by_stratum(s));
  row("total", "All", "All", r.total());
  return out;
}

std::string stats_md(const drift::StatsReport& r) {
  const std::string old_tag = r.old_vocabulary;
  const Tally total = r.total();
  std::string out;
  out += "# Temporal drift report: " + escape_md(r.old_vocabulary) + " vs " + escape_md(r.new_vocabulary) + "\n\n";
  if (!r.facet_filter) {
    out += "> No full contemporary vocabulary was supplied, so facet exclusions are not detected.\n\n";
  }

  out += "## Table 1. Exclusive and drifted terms\n\n";
  md_header(out, {"Measure", "Value"});
  md_row(out, {"Total Documents", std::to_string(total.documents)});
  md_row(out, {"Total " + old_tag + " Indexing Terms", std::to_string(total.terms)});
  md_row(out, {"Terms Exclusive to " + old_tag + " Output", format_fraction(total.exclusive, total.terms)});
  md_row(out, {"Terms Demonstrating Temporal Drift", format_fraction(total.drift(), total.terms)});
  md_row(out, {"Terms Demonstrating Temporal Drift (data errors and facet exclusions removed)",
               format_fraction(total.drift(), total.terms_adjusted())});
  out += '\n';

  out += "## Table 2. Results by indexing approach\n\n";
  {
    std::vector<Tally> cols;
    std::vector<std::string> header{"Indexing Approach"};
    for (auto a : kApproaches) {
      header.push_back(approach_label(a));
      cols.push_back(r.by_approach(a));
    }
    header.push_back("Both");
    cols.push_back(total);
    md_header(out, header);
    auto line = [&](std::string label, const std::function<std::string(const Tally&)>& f) {
      std::vector<std::string> cells{std::move(label)};
      for (const auto& t : cols) cells.push_back(f(t));
      md_row(out, cells);
    };
    line("Number of Documents", [](const Tally& t) { return std::to_string(t.documents); });
    line("Total " + old_tag + " Indexing Terms", [](const Tally& t) { return std::to_string(t.terms); });
    line("Terms Exclusive to " + old_tag + " Output",
         [](const Tally& t) { return format_fraction(t.exclusive, t.terms); });
    line("Terms Demonstrating Temporal Drift",
         [](const Tally& t) { return format_fraction(t.drift(), t.terms); });
  }
  out += '\n';

  out += "## Table 3. Results by entry length\n\n";
  {
    std::vector<Tally> cols;
    std::vector<std::string> header{"Entry Length"};
    for (auto s : kStrata) {
      header.emplace_back(textprep::to_string(s));
      cols.push_back(r.by_stratum(s));
    }
    header.push_back("All");
    cols.push_back(total);
    md_header(out, header);
    auto line = [&](std::string label, const std::function<std::string(const Tally&)>& f) {
      std::vector<std::string> cells{std::move(label)};
      for (const auto& t : cols) cells.push_back(f(t));
      md_row(out, cells);
    };
    line("Number of Documents", [](const Tally& t) { return std::to_string(t.documents); });
    line("Total " + old_tag + " Indexing Terms", [](const Tally& t) { return std::to_string(t.terms); });
    line("Terms Exclusive to " + old_tag + " Output", [](const Tally& t) { return std::to_string(t.exclusive); });
    line("Terms Demonstrating Temporal Drift",
         [](const Tally& t) { return format_fraction(t.drift(), t.terms); });
  }
  out += '\n';

  out += "## Table 4. Drifted terms by heading kind\n\n";
  md_header(out, {"Heading Kind", "Drift Terms"});
  md_row(out, {"Authorized Term Results", format_fraction(total.drift_authorized, total.drift())});
  md_row(out, {"Variant Term Results", format_fraction(total.drift_variant, total.drift())});
  out += '\n';

  out += "## Table 5. Full results\n\n";
  {
    std::vector<Tally> cols;
    std::vector<std::string> sample{"Sample"}, length{"Entry Length"}, approach{"Indexing Approach"};
    for (auto a : kApproaches) {
      for (std::size_t i = 0; i < kStrata.size(); ++i) {
        sample.push_back(std::to_string(i + 1));
        length.emplace_back(textprep::to_string(kStrata[i]));
        approach.push_back(approach_label(a));
        cols.push_back(r.cell(a, kStrata[i]));
      }
    }
    sample.push_back("Total Across Samples");
    length.push_back("N/A");
    approach.push_back("N/A");
    cols.push_back(total);
    md_header(out, sample);
    md_row(out, length);
    md_row(out, approach);
    auto line = [&](std::string label, const std::function<std::string(const Tally&)>& f) {
      std::vector<std::string> cells{std::move(label)};
      for (const auto& t : cols) cells.push_back(f(t));
      md_row(out, cells);
    };
    line("Number of Documents", [](const Tally& t) { return std::to_string(t.documents); });
    line("Total " + old_tag + " Indexing Terms", [](const Tally& t) { return std::to_string(t.terms); });
    line("Terms Exclusive to " + old_tag + " Results",
         [](const Tally& t) { return format_fraction(t.exclusive, t.terms); });
    line("Authorized Terms Demonstrating Temporal Drift",
         [](const Tally& t) { return std::to_string(t.drift_authorized); });
    line("Variant Terms Demonstrating Temporal Drift",
         [](const Tally& t) { return std::to_string(t.drift_variant); });
    line("Total Terms Demonstrating Temporal Drift",
         [](const Tally& t) { return format_fraction(t.drift(), t.terms); });
    line("Facet Exclusions", [](const Tally& t) { return std::to_string(t.facet_exclusions); });
    line("Data Errors", [](const Tally& t) { return std::to_string(t.data_errors); });
  }
  return out;
}

// ---------------------------------------------------------------------------
// Drift records
// ---------------------------------------------------------------------------

std::vector<std::string> drift_cells(const drift::DriftRecord& r) {
  std::vector<std::string> cells{r.doc_id,
                                 std::string(indexer::to_string(r.approach)),
                                 r.term,
                                 std::string(vocab::to_string(r.label_kind)),
                                 r.concept_id,
                                 r.authorized_form,
                                 std::string(drift::to_string(r.classification))};
  if (r.counterpart) {
    cells.push_back(r.counterpart->concept_id);
    cells.push_back(r.counterpart->heading);
    cells.emplace_back(drift::to_string(r.counterpart->status));
    cells.push_back(std::to_string(r.counterpart->distance));
  } else {
    cells.insert(cells.end(), 4, "");
  }
  return cells;
}

const std::vector<std::string> kDriftColumns{
    "doc_id",       "approach",       "term",         "label_kind",
    "concept_id",   "authorized_form", "classification", "counterpart_id",
    "counterpart_heading", "counterpart_status", "counterpart_distance"};

// ---------------------------------------------------------------------------
// Hits
// ---------------------------------------------------------------------------

void hit_rows(const serialize::HitsFile& f, const std::function<void(std::vector<std::string>)>& emit) {
  auto rows = [&](std::span<const indexer::IndexingResult> results, const char* role) {
    for (const auto& r : results) {
      std::string stratum;
      if (auto it = f.strata.find(r.doc_id); it != f.strata.end()) stratum = textprep::to_string(it->second);
      for (std::size_t i = 0; i < r.hits.size(); ++i) {
        const auto& h = r.hits[i];
        emit({role, r.vocabulary, r.doc_id, std::string(indexer::to_string(r.approach)), stratum,
              std::to_string(i + 1), h.concept_id, h.pref_label, h.matched_label,
              std::string(vocab::to_string(h.label_kind)), std::string(indexer::to_string(h.match_kind)),
              chronoterm::to_string(h.score)});
      }
    }
  };
  rows(f.old_results, "old");
  rows(f.new_results, "new");
}

const std::vector<std::string> kHitColumns{"role",       "vocabulary", "doc_id",        "approach",
                                           "stratum",    "rank",       "concept_id",    "heading",
                                           "matched_label", "label_kind", "match_kind", "score"};

}  // namespace

std::string render_report(const drift::StatsReport& report, Format format) {
  switch (format) {
    case Format::Tsv: return stats_tsv(report);
    case Format::Json: return stats_json(report);
    case Format::Md: return stats_md(report);
  }
  return {};
}

std::string render_drift(const serialize::DriftFile& f, Format format) {
  std::string out;
  switch (format) {
    case Format::Json:
      return dump(serialize::to_json(f));
    case Format::Tsv:
      tsv_row(out, kDriftColumns);
      for (const auto& r : f.records) tsv_row(out, drift_cells(r));
      return out;
    case Format::Md:
      out += "# Exclusive terms: " + escape_md(f.old_vocabulary) + " vs " + escape_md(f.new_vocabulary) + "\n\n";
      md_header(out, kDriftColumns);
      for (const auto& r : f.records) md_row(out, drift_cells(r));
      return out;
  }
  return out;
}

std::string render_hits(const serialize::HitsFile& f, Format format) {
  std::string out;
  switch (format) {
    case Format::Json:
      return dump(serialize::to_json(f));
    case Format::Tsv:
      tsv_row(out, kHitColumns);
      hit_rows(f, [&](std::vector<std::string> cells) { tsv_row(out, cells); });
      return out;
    case Format::Md:
      out += "# Indexing results\n\n";
      md_header(out, kHitColumns);
      hit_rows(f, [&](std::vector<std::string> cells) { md_row(out, cells); });
      return out;
  }
  return out;
}

}  // namespace chronoterm::report
