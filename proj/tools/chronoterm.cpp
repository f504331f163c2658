// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Chronoterm Contributors

// chronoterm: index a historical corpus under two vocabulary versions and
// report the terms that drifted.
//
// Exit codes: 0 success, 2 validation error, 3 data error. Errors are written
// to stderr as one JSON object per line.

#include <charconv>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chronoterm/error.hpp"
#include "chronoterm/pipeline.hpp"
#include "chronoterm/report.hpp"
#include "chronoterm/serialize.hpp"

namespace {

namespace ct = chronoterm;
namespace pl = chronoterm::pipeline;
using nlohmann::json;

constexpr int kExitValidation = 2;
constexpr int kExitData = 3;

struct RawOptions {
  std::string vocab_old, vocab_new, vocab_new_full, corpus_manifest, entities, stopwords, exclusions;
  std::string old_tag, new_tag;
  std::int64_t top_k = 10;
  std::string strata = "40,40,10";
  std::uint64_t seed = 0;
  std::int64_t max_distance = 2;
  std::string out;
  std::string format = "tsv";
  std::string existence = "authorized";
  std::string hits, drift;
};

void add_common(CLI::App& app, RawOptions& o) {
  app.add_option("--vocab-old", o.vocab_old, "Historical vocabulary (JSON Lines)");
  app.add_option("--vocab-new", o.vocab_new, "Contemporary vocabulary (JSON Lines)");
  app.add_option("--vocab-new-full", o.vocab_new_full, "Full contemporary vocabulary for the facet filter");
  app.add_option("--corpus-manifest", o.corpus_manifest, "TSV manifest: doc_id, path, edition");
  app.add_option("--entities", o.entities, "Directory of entity JSON Lines files");
  app.add_option("--stopwords", o.stopwords, "Stopword list, one per line");
  app.add_option("--exclusions", o.exclusions, "Known conversion errors, one term per line");
  app.add_option("--old-tag", o.old_tag, "Historical version tag (default: file stem)");
  app.add_option("--new-tag", o.new_tag, "Contemporary version tag (default: file stem)");
  app.add_option("--top-k", o.top_k, "Hits kept per document")->capture_default_str();
  app.add_option("--strata", o.strata, "Sample sizes S,M,L")->capture_default_str();
  app.add_option("--seed", o.seed, "Sampling seed")->capture_default_str();
  app.add_option("--max-distance", o.max_distance, "Levenshtein bound for probable counterparts")
      ->capture_default_str();
  app.add_option("--out", o.out, "Output directory");
  app.add_option("--format", o.format, "tsv, json or md")->capture_default_str();
  app.add_option("--existence", o.existence,
                 "authorized: only authorized labels count as present; any: variants count too")
      ->capture_default_str();
}

std::vector<std::int64_t> parse_strata(const std::string& text) {
  std::vector<std::int64_t> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view part(text.data() + start, (comma == std::string::npos ? text.size() : comma) - start);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
      throw ct::ValidationError("--strata", "--strata expects three integers S,M,L, got '" + text + "'");
    }
    out.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.size() != 3) {
    throw ct::ValidationError("--strata", "--strata expects three integers S,M,L, got '" + text + "'");
  }
  return out;
}

std::optional<std::filesystem::path> optional_path(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return std::filesystem::path(s);
}

pl::PipelineConfig to_config(const RawOptions& o) {
  pl::PipelineConfig c;
  c.vocab_old = o.vocab_old;
  c.vocab_new = o.vocab_new;
  c.vocab_new_full = optional_path(o.vocab_new_full);
  c.corpus_manifest = o.corpus_manifest;
  c.entities_dir = optional_path(o.entities);
  c.stopwords = o.stopwords;
  c.exclusions = optional_path(o.exclusions);
  c.old_tag = o.old_tag;
  c.new_tag = o.new_tag;
  c.recall_cap = o.top_k;
  c.strata = parse_strata(o.strata);
  c.seed = o.seed;
  c.max_distance = o.max_distance;
  c.out_dir = o.out;
  c.format = ct::report::parse_format(o.format);
  if (o.existence == "authorized" || o.existence == "any") {
    c.policy = ct::drift::parse_existence_policy(o.existence);
  } else {
    throw ct::ValidationError("--existence", "--existence must be 'authorized' or 'any', got '" + o.existence + "'");
  }
  return c;
}

void emit_error(const char* kind, const std::string& message, const std::string* flag = nullptr) {
  json j{{"error", kind}, {"message", message}};
  if (flag) j["flag"] = *flag;
  std::cerr << j.dump(-1, ' ', false, json::error_handler_t::replace) << '\n';
}

void print_written(const std::filesystem::path& dir, const pl::OutputSet& files) {
  for (const auto& f : files) std::cout << (dir / f.first).string() << '\n';
}

void require_input(const std::string& path, const char* flag) {
  if (path.empty()) throw ct::ValidationError(flag, std::string(flag) + " is required");
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    throw ct::ValidationError(flag, std::string(flag) + ": not a readable file: " + path);
  }
}

std::string ext(const pl::PipelineConfig& c) { return std::string(ct::report::extension(c.format)); }

int do_run(const pl::PipelineConfig& c) {
  pl::validate(c, pl::Stage::Run);
  auto files = pl::render_run(c, pl::execute(c));
  pl::write_outputs(c.out_dir, files);
  print_written(c.out_dir, files);
  return 0;
}

int do_index(const pl::PipelineConfig& c) {
  pl::validate(c, pl::Stage::Index);
  auto out = pl::run_index(c);
  pl::OutputSet files{{"hits." + ext(c), ct::report::render_hits(out.hits, c.format)}};
  if (c.format != ct::report::Format::Json) {
    files.emplace_back("hits.json", ct::report::render_hits(out.hits, ct::report::Format::Json));
  }
  files.emplace_back("run.json", pl::run_manifest(c, pl::Stage::Index,
                                                  {{"old", out.hits.old_vocabulary}, {"new", out.hits.new_vocabulary}},
                                                  out.sample_ids, out.corpus_size, out.warnings));
  pl::write_outputs(c.out_dir, files);
  print_written(c.out_dir, files);
  return 0;
}

int do_diff(const pl::PipelineConfig& c, const std::string& hits_path) {
  require_input(hits_path, "--hits");
  pl::validate(c, pl::Stage::Diff);
  auto hits = ct::serialize::read_hits_file(hits_path);
  auto out = pl::run_diff(c, hits);
  pl::OutputSet files{{"drift." + ext(c), ct::report::render_drift(out.drift, c.format)}};
  if (c.format != ct::report::Format::Json) {
    files.emplace_back("drift.json", ct::report::render_drift(out.drift, ct::report::Format::Json));
  }
  std::vector<std::pair<std::string, std::string>> vocabs{{"old", hits.old_vocabulary},
                                                          {"new", hits.new_vocabulary}};
  if (c.vocab_new_full) vocabs.emplace_back("new_full", c.vocab_new_full->stem().string());
  files.emplace_back("run.json", pl::run_manifest(c, pl::Stage::Diff, vocabs, {}, 0, out.warnings));
  pl::write_outputs(c.out_dir, files);
  print_written(c.out_dir, files);
  return 0;
}

int do_stats(const pl::PipelineConfig& c, const std::string& hits_path, const std::string& drift_path) {
  require_input(hits_path, "--hits");
  require_input(drift_path, "--drift");
  pl::validate(c, pl::Stage::Stats);
  auto hits = ct::serialize::read_hits_file(hits_path);
  auto drift = ct::serialize::read_drift_file(drift_path);
  auto report = pl::run_stats(hits, drift);
  pl::OutputSet files{
      {"stats." + ext(c), ct::report::render_report(report, c.format)},
      {"run.json", pl::run_manifest(c, pl::Stage::Stats,
                                    {{"old", hits.old_vocabulary}, {"new", hits.new_vocabulary}}, {}, 0, {})}};
  pl::write_outputs(c.out_dir, files);
  print_written(c.out_dir, files);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Index a historical corpus under two vocabulary versions and report temporal drift"};
  app.set_version_flag("--version", std::string(CHRONOTERM_VERSION));
  app.require_subcommand(0, 1);

  RawOptions top, run_o, index_o, diff_o, stats_o;
  add_common(app, top);
  auto* run = app.add_subcommand("run", "Full pipeline: index, diff and stats");
  add_common(*run, run_o);
  auto* index = app.add_subcommand("index", "Index the sample under both vocabularies");
  add_common(*index, index_o);
  auto* diff = app.add_subcommand("diff", "Classify terms exclusive to the historical output");
  add_common(*diff, diff_o);
  diff->add_option("--hits", diff_o.hits, "hits.json from the index stage");
  auto* stats = app.add_subcommand("stats", "Tabulate a drift run");
  add_common(*stats, stats_o);
  stats->add_option("--hits", stats_o.hits, "hits.json from the index stage");
  stats->add_option("--drift", stats_o.drift, "drift.json from the diff stage");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    emit_error("validation", e.what());
    return kExitValidation;
  }

  try {
    if (*index) return do_index(to_config(index_o));
    if (*diff) return do_diff(to_config(diff_o), diff_o.hits);
    if (*stats) return do_stats(to_config(stats_o), stats_o.hits, stats_o.drift);
    return do_run(to_config(*run ? run_o : top));
  } catch (const ct::ValidationError& e) {
    emit_error("validation", e.what(), &e.flag());
    return kExitValidation;
  } catch (const ct::DataError& e) {
    emit_error("data", e.what());
    return kExitData;
  } catch (const std::exception& e) {
    emit_error("data", e.what());
    return kExitData;
  }
}
