// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Chronoterm Contributors

#include "chronoterm/pipeline.hpp"

#include <fstream>
#include <map>
#include <system_error>

#include <json.hpp>

#include "chronoterm/error.hpp"
#include "chronoterm/kernels.hpp"
#include "chronoterm/vocab.hpp"

#ifndef CHRONOTERM_VERSION
#define CHRONOTERM_VERSION "0.0.0"
#endif

namespace chronoterm::pipeline {

using nlohmann::json;

std::string_view to_string(Stage s) {
  switch (s) {
    case Stage::Run: return "run";
    case Stage::Index: return "index";
    case Stage::Diff: return "diff";
    case Stage::Stats: return "stats";
  }
  return "run";
}

namespace {

void require_file(const fs::path& path, const char* flag) {
  if (path.empty()) throw ValidationError(flag, std::string(flag) + " is required");
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) {
    throw ValidationError(flag, std::string(flag) + ": not a readable file: " + path.string());
  }
  std::ifstream probe(path, std::ios::binary);
  if (!probe) throw ValidationError(flag, std::string(flag) + ": cannot open " + path.string());
}

void optional_file(const std::optional<fs::path>& path, const char* flag) {
  if (path) require_file(*path, flag);
}

std::string tag_or_stem(const std::string& tag, const fs::path& path) {
  return tag.empty() ? path.stem().string() : tag;
}

json path_json(const std::optional<fs::path>& p) { return p ? json(p->generic_string()) : json(nullptr); }

json path_json(const fs::path& p) { return p.empty() ? json(nullptr) : json(p.generic_string()); }

}  // namespace

void validate(const PipelineConfig& c, Stage stage) {
  if (c.recall_cap < 1) {
    throw ValidationError("--top-k", "--top-k must be at least 1, got " + std::to_string(c.recall_cap));
  }
  if (c.strata.size() != 3) {
    throw ValidationError("--strata", "--strata takes three counts S,M,L");
  }
  for (auto n : c.strata) {
    if (n < 0) throw ValidationError("--strata", "--strata counts must be non-negative");
  }
  if (c.max_distance < 0) {
    throw ValidationError("--max-distance", "--max-distance must be non-negative");
  }
  if (c.out_dir.empty()) throw ValidationError("--out", "--out is required");
  std::error_code ec;
  if (fs::exists(c.out_dir, ec) && !fs::is_directory(c.out_dir, ec)) {
    throw ValidationError("--out", "--out: not a directory: " + c.out_dir.string());
  }
  kernels::resolve_workers(c.workers);

  if (stage == Stage::Run || stage == Stage::Index) {
    require_file(c.vocab_old, "--vocab-old");
    require_file(c.vocab_new, "--vocab-new");
    require_file(c.corpus_manifest, "--corpus-manifest");
    require_file(c.stopwords, "--stopwords");
    if (c.entities_dir && !fs::is_directory(*c.entities_dir, ec)) {
      throw ValidationError("--entities", "--entities: not a directory: " + c.entities_dir->string());
    }
  }
  if (stage == Stage::Run || stage == Stage::Diff) {
    require_file(c.vocab_new, "--vocab-new");
    optional_file(c.vocab_new_full, "--vocab-new-full");
    optional_file(c.exclusions, "--exclusions");
  }
}

textprep::StrataSizes strata_sizes(const PipelineConfig& c) {
  return {static_cast<std::size_t>(c.strata.at(0)), static_cast<std::size_t>(c.strata.at(1)),
          static_cast<std::size_t>(c.strata.at(2))};
}

std::string old_tag(const PipelineConfig& c) { return tag_or_stem(c.old_tag, c.vocab_old); }
std::string new_tag(const PipelineConfig& c) { return tag_or_stem(c.new_tag, c.vocab_new); }

IndexOutputs run_index(const PipelineConfig& c) {
  const int workers = kernels::resolve_workers(c.workers);
  const auto cap = static_cast<std::size_t>(c.recall_cap);

  auto old_vocab = vocab::load_vocabulary_file(c.vocab_old, old_tag(c));
  auto new_vocab = vocab::load_vocabulary_file(c.vocab_new, new_tag(c));
  auto stopwords = textprep::load_stopwords_file(c.stopwords);
  auto corpus = textprep::load_corpus_file(c.corpus_manifest, workers);
  auto sample = textprep::stratified_sample(corpus.documents, strata_sizes(c), c.seed);

  IndexOutputs out;
  out.corpus_size = corpus.documents.size();
  for (const auto& w : corpus.warnings) out.warnings.push_back("corpus: " + w.doc_id + ": " + w.message);

  indexer::MatchIndex old_index(old_vocab, stopwords);
  indexer::MatchIndex new_index(new_vocab, stopwords);
  for (const auto& w : old_index.warnings()) out.warnings.push_back(old_vocab.version_tag() + ": " + w);
  for (const auto& w : new_index.warnings()) out.warnings.push_back(new_vocab.version_tag() + ": " + w);

  auto& hits = out.hits;
  hits.old_vocabulary = old_vocab.version_tag();
  hits.new_vocabulary = new_vocab.version_tag();
  for (const auto& d : sample) {
    hits.strata.emplace(d.doc_id, d.stratum);
    out.sample_ids.push_back(d.doc_id);
  }

  hits.old_results = kernels::index_documents(sample, old_index, stopwords, cap, workers);
  hits.new_results = kernels::index_documents(sample, new_index, stopwords, cap, workers);

  if (c.entities_dir) {
    auto all = textprep::load_entity_directory(*c.entities_dir);
    std::map<std::string, std::size_t, std::less<>> by_id;
    for (std::size_t i = 0; i < all.size(); ++i) by_id.emplace(all[i].doc_id, i);
    std::vector<textprep::EntityDocument> aligned;
    aligned.reserve(sample.size());
    for (const auto& d : sample) {
      if (auto it = by_id.find(d.doc_id); it != by_id.end()) {
        aligned.push_back(std::move(all[it->second]));
      } else {
        out.warnings.push_back("entities: " + d.doc_id + ": no entity document; NER results are empty");
        aligned.push_back({d.doc_id, {}});
      }
    }
    auto ner_old = kernels::index_entities(aligned, old_index, stopwords, cap, workers);
    auto ner_new = kernels::index_entities(aligned, new_index, stopwords, cap, workers);
    hits.old_results.insert(hits.old_results.end(), std::make_move_iterator(ner_old.begin()),
                            std::make_move_iterator(ner_old.end()));
    hits.new_results.insert(hits.new_results.end(), std::make_move_iterator(ner_new.begin()),
                            std::make_move_iterator(ner_new.end()));
  }
  return out;
}

DiffOutputs run_diff(const PipelineConfig& c, const serialize::HitsFile& hits) {
  const int workers = kernels::resolve_workers(c.workers);
  auto new_vocab = vocab::load_vocabulary_file(c.vocab_new, new_tag(c));
  std::optional<vocab::Vocabulary> full;
  if (c.vocab_new_full) full = vocab::load_vocabulary_file(*c.vocab_new_full, c.vocab_new_full->stem().string());
  drift::ExclusionSet exclusions;
  if (c.exclusions) exclusions = drift::load_exclusions_file(*c.exclusions);

  DiffOutputs out;
  if (new_vocab.version_tag() != hits.new_vocabulary) {
    out.warnings.push_back("hits were indexed under '" + hits.new_vocabulary + "' but classified against '" +
                           new_vocab.version_tag() + "'");
  }

  drift::ClassifyOptions options;
  options.new_full_vocab = full ? &*full : nullptr;
  options.policy = c.policy;
  options.max_distance = static_cast<std::size_t>(c.max_distance);

  auto exclusive = drift::exclusive_terms(hits.old_results, hits.new_results);
  out.drift.old_vocabulary = hits.old_vocabulary;
  out.drift.new_vocabulary = hits.new_vocabulary;
  out.drift.facet_filter = full.has_value();
  out.drift.records = kernels::assess_all(exclusive, new_vocab, exclusions, options, workers);
  return out;
}

drift::StatsReport run_stats(const serialize::HitsFile& hits, const serialize::DriftFile& drift) {
  auto report = drift::compute_statistics(drift.records, hits.old_results, hits.strata);
  report.old_vocabulary = hits.old_vocabulary;
  report.new_vocabulary = hits.new_vocabulary;
  report.facet_filter = drift.facet_filter;
  return report;
}

PipelineOutputs execute(const PipelineConfig& c) {
  PipelineOutputs out;
  out.index = run_index(c);
  out.diff = run_diff(c, out.index.hits);
  out.stats = run_stats(out.index.hits, out.diff.drift);
  return out;
}

std::string run_manifest(const PipelineConfig& c, Stage stage,
                         const std::vector<std::pair<std::string, std::string>>& vocabularies,
                         const std::vector<std::string>& sample_ids, std::size_t corpus_size,
                         const std::vector<std::string>& warnings) {
  json vocabs = json::object();
  for (const auto& [role, tag] : vocabularies) vocabs[role] = tag;
  json config{
      {"vocab_old", path_json(c.vocab_old)},
      {"vocab_new", path_json(c.vocab_new)},
      {"vocab_new_full", path_json(c.vocab_new_full)},
      {"corpus_manifest", path_json(c.corpus_manifest)},
      {"entities", path_json(c.entities_dir)},
      {"stopwords", path_json(c.stopwords)},
      {"exclusions", path_json(c.exclusions)},
      {"top_k", c.recall_cap},
      {"strata", {{"Short", c.strata.at(0)}, {"Medium", c.strata.at(1)}, {"Long", c.strata.at(2)}}},
      {"seed", c.seed},
      {"max_distance", c.max_distance},
      {"existence", drift::to_string(c.policy)},
      {"format", report::to_string(c.format)},
  };
  json doc{{"tool", "chronoterm"},
           {"version", CHRONOTERM_VERSION},
           {"stage", to_string(stage)},
           {"config", std::move(config)},
           {"vocabularies", std::move(vocabs)},
           {"warnings", warnings}};
  if (stage == Stage::Run || stage == Stage::Index) {
    doc["corpus"] = json{{"documents", corpus_size}, {"sampled", sample_ids}};
  }
  return doc.dump(2) + "\n";
}

OutputSet render_run(const PipelineConfig& c, const PipelineOutputs& out) {
  const auto ext = std::string(report::extension(c.format));
  std::vector<std::string> warnings = out.index.warnings;
  warnings.insert(warnings.end(), out.diff.warnings.begin(), out.diff.warnings.end());
  std::vector<std::pair<std::string, std::string>> vocabs{{"old", out.index.hits.old_vocabulary},
                                                          {"new", out.index.hits.new_vocabulary}};
  if (c.vocab_new_full) vocabs.emplace_back("new_full", c.vocab_new_full->stem().string());
  return {
      {"stats." + ext, report::render_report(out.stats, c.format)},
      {"drift." + ext, report::render_drift(out.diff.drift, c.format)},
      {"hits." + ext, report::render_hits(out.index.hits, c.format)},
      {"run.json", run_manifest(c, Stage::Run, vocabs, out.index.sample_ids, out.index.corpus_size, warnings)},
  };
}

void write_outputs(const fs::path& dir, const OutputSet& files) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw DataError(dir.string() + ": cannot create output directory: " + ec.message());

  std::vector<fs::path> temps;
  auto cleanup = [&] {
    for (const auto& t : temps) fs::remove(t, ec);
  };
  try {
    for (const auto& [name, bytes] : files) {
      fs::path tmp = dir / ("." + name + ".tmp");
      temps.push_back(tmp);
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
      out.close();
      if (!out) throw DataError(tmp.string() + ": write failed");
    }
    for (std::size_t i = 0; i < files.size(); ++i) {
      fs::rename(temps[i], dir / files[i].first);
    }
  } catch (const fs::filesystem_error& e) {
    cleanup();
    throw DataError(e.what());
  } catch (...) {
    cleanup();
    throw;
  }
}

std::vector<std::string> run_pipeline(const PipelineConfig& c) {
  validate(c, Stage::Run);
  auto files = render_run(c, execute(c));
  write_outputs(c.out_dir, files);
  std::vector<std::string> names;
  for (const auto& f : files) names.push_back(f.first);
  return names;
}

}  // namespace chronoterm::pipeline
