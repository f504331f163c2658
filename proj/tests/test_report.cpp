// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Chronoterm Contributors

#include <doctest.h>

#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "chronoterm/error.hpp"
#include "chronoterm/report.hpp"
#include "chronoterm/serialize.hpp"
#include "support/synthetic.hpp"
#include "support/table5.hpp"

using namespace chronoterm;
using report::Format;
using report::format_fraction;
using report::format_percent;

namespace {

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::size_t count_char(const std::string& s, char c) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), c)); }

drift::StatsReport table5_report(bool facet_filter = false) {
  auto in = fixtures::table5_inputs();
  auto r = drift::compute_statistics(in.records, in.old_results, in.strata);
  r.old_vocabulary = "1910 LCSH";
  r.new_vocabulary = "2020 FAST Topical";
  r.facet_filter = facet_filter;
  return r;
}

serialize::DriftFile sample_drift() {
  serialize::DriftFile f;
  f.old_vocabulary = "old";
  f.new_vocabulary = "new";
  drift::DriftRecord a;
  a.doc_id = "d1";
  a.term = "Moors (The race)";
  a.concept_id = "sh1";
  a.authorized_form = "Moors (The race)";
  a.counterpart = drift::Counterpart{"fst1", "Muslims", drift::CounterpartStatus::Verified, 0};
  drift::DriftRecord b;
  b.doc_id = "d2";
  b.approach = indexer::Approach::NER;
  b.term = "Tab\there|pipe";
  b.concept_id = "sh2";
  b.authorized_form = "Back\\slash";
  b.label_kind = vocab::LabelKind::Variant;
  b.classification = drift::Classification::PresentInNew;
  f.records = {a, b};
  return f;
}

}  // namespace

TEST_SUITE("report") {
  TEST_CASE("fractions round half up to two decimals") {
    CHECK(format_fraction(107, 1478) == "107/1478 (7.24%)");
    CHECK(format_fraction(458, 1478) == "458/1478 (30.99%)");
    CHECK(format_fraction(74, 107) == "74/107 (69.16%)");
    CHECK(format_fraction(33, 107) == "33/107 (30.84%)");
    CHECK(format_fraction(0, 0) == "0/0 (—)");
    CHECK(format_percent(1, 8) == "12.50%");
    CHECK(format_percent(1, 20000) == "0.01%");
    CHECK(format_percent(1, 40000) == "0.00%");
    CHECK(format_percent(2, 3) == "66.67%");
    CHECK(format_percent(5, 5) == "100.00%");
    CHECK(format_percent(0, 9) == "0.00%");
  }

  TEST_CASE("property: percentages agree with exact rational rounding") {
    synthetic::Rng rng(61);
    for (int i = 0; i < 20000; ++i) {
      std::size_t d = 1 + synthetic::below(rng, i % 2 ? 100 : 5000000);
      std::size_t c = synthetic::below(rng, d + 1);
      Score exact = Score(c) * 10000 / Score(d) + Score(1, 2);
      boost::multiprecision::cpp_int h = numerator(exact) / denominator(exact);
      boost::multiprecision::cpp_int rem = h % 100, whole = h / 100;
      std::string frac = rem.str();
      if (frac.size() < 2) frac = "0" + frac;
      REQUIRE(format_percent(c, d) == whole.str() + "." + frac + "%");
    }
  }

  TEST_CASE("format names") {
    CHECK(report::parse_format("md") == Format::Md);
    CHECK(report::extension(Format::Json) == "json");
    CHECK_THROWS_AS(report::parse_format("csv"), ValidationError);
    try {
      report::parse_format("xml");
    } catch (const ValidationError& e) {
      CHECK(e.flag() == "--format");
    }
  }

  TEST_CASE("tsv statistics layout") {
    auto lines = lines_of(report::render_report(table5_report(), Format::Tsv));
    REQUIRE(lines.size() == 13);
    for (const auto& l : lines) CHECK(count_char(l, '\t') == 16);
    CHECK(lines[0].rfind("slice\tapproach\tstratum\tdocuments\tterms\texclusive", 0) == 0);
    CHECK(lines[1].rfind("cell\tFullText\tShort\t40\t400\t137\t", 0) == 0);
    CHECK(lines[12].rfind("total\tAll\tAll\t180\t1478\t458\t351\t74\t33\t107\t0\t0\t", 0) == 0);
  }

  TEST_CASE("json statistics layout") {
    auto text = report::render_report(table5_report(true), Format::Json);
    auto j = nlohmann::json::parse(text);
    CHECK(j["facet_filter"] == true);
    CHECK(j["total"]["drift_fraction"] == "107/1478 (7.24%)");
    CHECK(j["by_approach"]["FullText"]["terms"] == 886);
    CHECK(j["by_approach"]["NER"]["drift_fraction"] == "52/592 (8.78%)");
    CHECK(j["by_stratum"]["Medium"]["drift_fraction"] == "57/736 (7.74%)");
    CHECK(j["cells"].size() == 6);
    // Keys are emitted in sorted order.
    std::string prev;
    for (const auto& [k, v] : j.items()) {
      CHECK(prev < k);
      prev = k;
    }
    CHECK(text.back() == '\n');
  }

  TEST_CASE("markdown statistics layout") {
    auto md = report::render_report(table5_report(), Format::Md);
    CHECK(md.find("facet exclusions are not detected") != std::string::npos);
    CHECK(md.find("| Terms Demonstrating Temporal Drift | 107/1478 (7.24%) |") != std::string::npos);
    CHECK(md.find("| Authorized Term Results | 74/107 (69.16%) |") != std::string::npos);
    CHECK(md.find("| Variant Term Results | 33/107 (30.84%) |") != std::string::npos);
    CHECK(md.find("| Total Terms Demonstrating Temporal Drift | 23/400 (5.75%) | 25/386 (6.48%) | 7/100 (7.00%) |"
                  " 11/142 (7.75%) | 32/350 (9.14%) | 9/100 (9.00%) | 107/1478 (7.24%) |") != std::string::npos);
    CHECK(md.find("| Number of Documents | 90 | 90 | 180 |") != std::string::npos);
    auto with_filter = report::render_report(table5_report(true), Format::Md);
    CHECK(with_filter.find("facet exclusions are not detected") == std::string::npos);
  }

  TEST_CASE("empty statistics render zero denominators") {
    drift::StatsReport empty;
    auto tsv = report::render_report(empty, Format::Tsv);
    CHECK(tsv.find("0/0 (—)") != std::string::npos);
    auto md = report::render_report(empty, Format::Md);
    CHECK(md.find("| Terms Demonstrating Temporal Drift | 0/0 (—) |") != std::string::npos);
  }

  TEST_CASE("drift rendering escapes cells") {
    auto f = sample_drift();
    auto tsv = lines_of(report::render_drift(f, Format::Tsv));
    REQUIRE(tsv.size() == 3);
    CHECK(tsv[1] == "d1\tFullText\tMoors (The race)\tauthorized\tsh1\tMoors (The race)\tDrift\tfst1\tMuslims\tverified\t0");
    CHECK(tsv[2] == "d2\tNER\tTab\\there|pipe\tvariant\tsh2\tBack\\\\slash\tPresentInNew\t\t\t\t");
    auto md = report::render_drift(f, Format::Md);
    CHECK(md.find("Tab here\\|pipe") != std::string::npos);
    auto j = nlohmann::json::parse(report::render_drift(f, Format::Json));
    CHECK(serialize::drift_from_json(j) == f);
  }

  TEST_CASE("hits rendering and round trip") {
    serialize::HitsFile f;
    f.old_vocabulary = "old";
    f.new_vocabulary = "new";
    indexer::Hit h{"c1", "Human beings", "Man", vocab::LabelKind::Variant, indexer::MatchKind::Prefix, Score(7, 2)};
    f.old_results = {{"d1", "old", indexer::Approach::FullText, {h}}};
    f.new_results = {{"d1", "new", indexer::Approach::FullText, {}}};
    f.strata["d1"] = textprep::Stratum::Medium;
    auto tsv = lines_of(report::render_hits(f, Format::Tsv));
    REQUIRE(tsv.size() == 2);
    CHECK(tsv[1] == "old\told\td1\tFullText\tMedium\t1\tc1\tHuman beings\tMan\tvariant\tprefix\t7/2");
    auto j = nlohmann::json::parse(report::render_hits(f, Format::Json));
    CHECK(serialize::hits_from_json(j) == f);
    CHECK_THROWS_AS(serialize::hits_from_json(nlohmann::json::parse(R"({"results": 3})")), DataError);
  }
}
