// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Chronoterm Contributors

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "chronoterm/drift.hpp"
#include "chronoterm/error.hpp"
#include "chronoterm/unicode.hpp"
#include "support/properties.hpp"
#include "support/synthetic.hpp"
#include "support/table6.hpp"

using namespace chronoterm;
using namespace chronoterm::drift;
using indexer::Approach;
using vocab::LabelKind;

namespace {

indexer::Hit hit(std::string id, std::string pref, std::string matched = {},
                 LabelKind kind = LabelKind::Authorized) {
  indexer::Hit h;
  h.concept_id = std::move(id);
  h.pref_label = pref;
  h.matched_label = matched.empty() ? pref : matched;
  h.label_kind = kind;
  h.score = 1;
  return h;
}

indexer::IndexingResult result(std::string doc, std::vector<indexer::Hit> hits,
                               Approach a = Approach::FullText) {
  return {std::move(doc), "v", a, std::move(hits)};
}

DriftRecord record(std::string term, LabelKind kind = LabelKind::Authorized, std::string authorized = {}) {
  DriftRecord r;
  r.term = term;
  r.label_kind = kind;
  r.authorized_form = authorized.empty() ? term : authorized;
  r.doc_id = "d";
  return r;
}

std::size_t naive_levenshtein(const std::u32string& a, const std::u32string& b) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> memo;
  std::function<std::size_t(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t j) -> std::size_t {
    if (i == a.size()) return b.size() - j;
    if (j == b.size()) return a.size() - i;
    auto key = std::make_pair(i, j);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::size_t best = std::min(go(i + 1, j) + 1, go(i, j + 1) + 1);
    best = std::min(best, go(i + 1, j + 1) + (a[i] == b[j] ? 0 : 1));
    return memo[key] = best;
  };
  return go(0, 0);
}

std::u32string u32(const std::string& s) {
  auto cps = unicode::code_points(s);
  return {cps.begin(), cps.end()};
}

}  // namespace

TEST_SUITE("drift") {
  TEST_CASE("exclusive_terms is a per-document set difference") {
    std::vector<indexer::IndexingResult> old_r{result("d1", {hit("a", "Alpha"), hit("b", "Beta")})};
    std::vector<indexer::IndexingResult> new_r{result("d1", {hit("x", "alpha"), hit("y", "BETA")})};
    CHECK(exclusive_terms(old_r, new_r).empty());

    old_r = {result("d1", {hit("a", "A"), hit("b", "B"), hit("c", "C")})};
    new_r = {result("d1", {hit("x", "B")})};
    auto ex = exclusive_terms(old_r, new_r);
    REQUIRE(ex.size() == 2);
    CHECK(ex[0].hit.matched_label == "A");
    CHECK(ex[1].hit.matched_label == "C");

    // Per document: B appears in d2's new result, not d1's.
    old_r = {result("d1", {hit("b", "B")}), result("d2", {})};
    new_r = {result("d1", {}), result("d2", {hit("x", "B")})};
    CHECK(exclusive_terms(old_r, new_r).size() == 1);
  }

  TEST_CASE("exclusive_terms compares old labels with new headings") {
    // The new indexer reached "Muslims" through its variant "Mohammedans";
    // the historical term is still exclusive to the historical output.
    std::vector<indexer::IndexingResult> old_r{result("d", {hit("h1", "Mohammedans")})};
    std::vector<indexer::IndexingResult> new_r{
        result("d", {hit("c1", "Muslims", "Mohammedans", LabelKind::Variant)})};
    CHECK(exclusive_terms(old_r, new_r).size() == 1);
  }

  TEST_CASE("exclusive_terms rejects mismatched document sets") {
    std::vector<indexer::IndexingResult> old_r{result("d1", {}), result("d2", {}, Approach::NER)};
    std::vector<indexer::IndexingResult> new_r{result("d1", {}), result("d3", {})};
    CHECK_THROWS_WITH_AS(exclusive_terms(old_r, new_r),
                         doctest::Contains("only in old: d2/NER; only in new: d3/FullText"), DataError);
    std::vector<indexer::IndexingResult> dup{result("d1", {}), result("d1", {})};
    CHECK_THROWS_AS(exclusive_terms(dup, dup), DataError);
  }

  TEST_CASE("exclusive count reproduces a 137/400 sample cell") {
    std::vector<indexer::IndexingResult> old_r, new_r;
    int exclusive_left = 137;
    for (int d = 0; d < 40; ++d) {
      indexer::IndexingResult o = result("doc" + std::to_string(d), {});
      indexer::IndexingResult n = result(o.doc_id, {});
      for (int k = 0; k < 10; ++k) {
        std::string label = "Term " + std::to_string(d) + "-" + std::to_string(k);
        o.hits.push_back(hit("h" + std::to_string(k), label));
        if (exclusive_left > 0 && k < 4) {
          --exclusive_left;
        } else {
          n.hits.push_back(hit("n" + std::to_string(k), label));
        }
      }
      old_r.push_back(o);
      new_r.push_back(n);
    }
    CHECK(exclusive_terms(old_r, new_r).size() == 137);
  }

  TEST_CASE("classify examples") {
    auto fast = fixtures::contemporary();
    ExclusionSet none;
    CHECK(classify(record("Gipsies"), fast, none) == Classification::Drift);
    CHECK(classify(record("Muslims"), fast, none) == Classification::PresentInNew);

    vocab::Vocabulary full("full", {vocab::Concept{"l1", "Gipsies", {}, std::nullopt},
                                    vocab::Concept{"l2", "Bryozoa", {}, std::nullopt}});
    ClassifyOptions with_full;
    with_full.new_full_vocab = &full;
    CHECK(classify(record("Gipsies"), fast, none, with_full) == Classification::FacetExclusion);

    vocab::Vocabulary full2("full", {vocab::Concept{"l1", "Polyzoa", {}, std::nullopt}});
    with_full.new_full_vocab = &full2;
    vocab::Vocabulary facet("facet", {vocab::Concept{"f1", "Bryozoa", {}, std::nullopt}});
    CHECK(classify(record("Polyzoa"), facet, none, with_full) == Classification::FacetExclusion);

    std::istringstream excl_in("# OCR errors\nGipsles\n\n");
    auto excl = load_exclusions(excl_in);
    CHECK(excl.size() == 1);
    CHECK(classify(record("GIPSLES"), fast, excl) == Classification::DataError);
  }

  TEST_CASE("existence policy decides whether a variant match counts") {
    auto fast = fixtures::contemporary();
    ExclusionSet none;
    ClassifyOptions any;
    any.policy = ExistencePolicy::AnyLabel;
    CHECK(classify(record("Mohammedans"), fast, none) == Classification::Drift);
    CHECK(classify(record("Mohammedans"), fast, none, any) == Classification::PresentInNew);
  }

  TEST_CASE("variant terms drift only when the authorized form is gone too") {
    vocab::Vocabulary v("v", {vocab::Concept{"c", "Scots", {}, std::nullopt}});
    ExclusionSet none;
    CHECK(classify(record("Scotch", LabelKind::Variant, "Scots"), v, none) == Classification::PresentInNew);
    CHECK(classify(record("Scotch", LabelKind::Variant, "Scotchmen"), v, none) == Classification::Drift);
    CHECK(classify(record("Scotch", LabelKind::Authorized, "Scots"), v, none) == Classification::Drift);
  }

  TEST_CASE("counterpart examples") {
    auto fast = fixtures::contemporary();
    auto m = resolve_counterpart("Mohammedans", fast);
    REQUIRE(m);
    CHECK(m->heading == "Muslims");
    CHECK(m->status == CounterpartStatus::Verified);
    CHECK(m->distance == 0);

    auto u = resolve_counterpart("Uzbegs", fast);
    REQUIRE(u);
    CHECK(u->heading == "Uzbeks");
    CHECK(u->status == CounterpartStatus::Probable);
    CHECK(u->distance == 1);

    CHECK_FALSE(resolve_counterpart("Xyzzyq", fast).has_value());
    CHECK_FALSE(resolve_counterpart("Uzbegs", fast, 0).has_value());
  }

  TEST_CASE("counterpart ties prefer authorized labels, then label order") {
    vocab::Vocabulary v("v", {vocab::Concept{"a", "Bats", {}, std::nullopt},
                              vocab::Concept{"b", "Zoo", {"Cats"}, std::nullopt},
                              vocab::Concept{"c", "Hats", {}, std::nullopt}});
    auto r = resolve_counterpart("Rats", v, 2);
    REQUIRE(r);
    CHECK(r->concept_id == "a");
    CHECK(r->distance == 1);
  }

  TEST_CASE("levenshtein matches a naive recursion") {
    CHECK(levenshtein(U"uzbegs", U"uzbeks") == 1);
    CHECK(levenshtein(U"", U"abc") == 3);
    CHECK(levenshtein(U"kitten", U"sitting") == 3);
    synthetic::Rng rng(51);
    const std::u32string alphabet = U"abé";
    for (int i = 0; i < 3000; ++i) {
      std::u32string a, b;
      for (std::size_t k = synthetic::below(rng, 8); k > 0; --k) a += alphabet[synthetic::below(rng, 3)];
      for (std::size_t k = synthetic::below(rng, 8); k > 0; --k) b += alphabet[synthetic::below(rng, 3)];
      std::size_t d = naive_levenshtein(a, b);
      REQUIRE(levenshtein(a, b) == d);
      std::size_t bound = synthetic::below(rng, 5);
      REQUIRE(levenshtein_bounded(a, b, bound) == std::min(d, bound + 1));
    }
  }

  TEST_CASE("property: counterpart agrees with an exhaustive search") {
    synthetic::Rng rng(52);
    for (int trial = 0; trial < 300; ++trial) {
      auto pool = synthetic::word_pool(20, rng);
      vocab::Vocabulary v("v", synthetic::make_concepts(pool, 1 + synthetic::below(rng, 20), rng, "c", 2));
      std::string term = synthetic::make_label(pool, rng, 2);
      if (synthetic::coin(rng) && !term.empty()) term.back() = 'q';
      std::size_t max_d = synthetic::below(rng, 4);
      auto got = resolve_counterpart(term, v, max_d);

      std::string norm = vocab::normalize_label(term);
      if (v.lookup_exact(norm).found()) {
        REQUIRE(got);
        REQUIRE(got->status == CounterpartStatus::Verified);
        REQUIRE(got->distance == 0);
        continue;
      }
      std::optional<std::tuple<std::size_t, bool, std::string, std::string>> best;
      for (const auto& [key, ref] : v.label_index()) {
        std::size_t d = naive_levenshtein(u32(norm), u32(key));
        if (d > max_d) continue;
        std::tuple<std::size_t, bool, std::string, std::string> cand{d, ref.kind == LabelKind::Variant, key,
                                                                     ref.concept_id};
        if (!best || cand < *best) best = cand;
      }
      if (!best) {
        REQUIRE_FALSE(got);
      } else {
        REQUIRE(got);
        REQUIRE(got->status == CounterpartStatus::Probable);
        REQUIRE(got->distance == std::get<0>(*best));
        REQUIRE(got->concept_id == std::get<3>(*best));
      }
      if (max_d == 0) REQUIRE((!got || got->status == CounterpartStatus::Verified));
    }
  }

  TEST_CASE("property: classify agrees with flat label sets") {
    auto r = properties::classify_oracle(53, 1000);
    CHECK(r.cases == 16000);
    CHECK_MESSAGE(r.ok(), r.first_violation);
  }

  TEST_CASE("property: a drifted term added as a variant is present under any-label existence") {
    auto r = properties::monotonicity_property(55, 200, ExistencePolicy::AnyLabel, false);
    CHECK(r.cases == 200);
    CHECK_MESSAGE(r.ok(), r.first_violation);
  }

  TEST_CASE("property: a drifted term added as a heading is present under authorized-only existence") {
    auto r = properties::monotonicity_property(56, 200, ExistencePolicy::AuthorizedOnly, true);
    CHECK(r.cases == 200);
    CHECK_MESSAGE(r.ok(), r.first_violation);
  }

  TEST_CASE("a drifted term added only as a variant still drifts under authorized-only existence") {
    auto r = properties::monotonicity_property(57, 50, ExistencePolicy::AuthorizedOnly, false);
    CHECK(r.violations == r.cases);
  }

  TEST_CASE("assess attaches counterparts only to drift") {
    auto fast = fixtures::contemporary();
    ExclusiveHit drifted{"d", Approach::NER, hit("h", "Gipsies")};
    auto r = assess(drifted, fast, {});
    CHECK(r.classification == Classification::Drift);
    REQUIRE(r.counterpart);
    CHECK(r.counterpart->heading == "Romanies");
    CHECK(r.approach == Approach::NER);

    ExclusiveHit present{"d", Approach::FullText, hit("h", "Scots")};
    auto p = assess(present, fast, {});
    CHECK(p.classification == Classification::PresentInNew);
    CHECK_FALSE(p.counterpart.has_value());
  }

  TEST_CASE("statistics on empty input") {
    auto report = compute_statistics({}, {}, std::map<std::string, Stratum, std::less<>>{});
    CHECK(report.total() == Tally{});
  }

  TEST_CASE("statistics reject unknown documents") {
    std::vector<indexer::IndexingResult> old_r{result("ghost", {})};
    CHECK_THROWS_AS(compute_statistics({}, old_r, std::map<std::string, Stratum, std::less<>>{}), DataError);
  }

  TEST_CASE("property: slices conserve totals") {
    synthetic::Rng rng(54);
    for (int trial = 0; trial < 300; ++trial) {
      std::map<std::string, Stratum, std::less<>> strata;
      std::vector<indexer::IndexingResult> old_r;
      std::vector<DriftRecord> records;
      std::size_t docs = 1 + synthetic::below(rng, 30);
      for (std::size_t d = 0; d < docs; ++d) {
        std::string id = "d" + std::to_string(d);
        strata[id] = kStrata[synthetic::below(rng, 3)];
        for (auto a : kApproaches) {
          if (synthetic::coin(rng, 0.2)) continue;
          indexer::IndexingResult r = result(id, {}, a);
          for (std::size_t k = synthetic::below(rng, 11); k > 0; --k) r.hits.push_back(hit("c" + std::to_string(k), "L"));
          for (const auto& h : r.hits) {
            if (!synthetic::coin(rng, 0.4)) continue;
            DriftRecord rec = record(h.matched_label, synthetic::coin(rng) ? LabelKind::Variant : LabelKind::Authorized);
            rec.doc_id = id;
            rec.approach = a;
            rec.classification = static_cast<Classification>(synthetic::below(rng, 4));
            records.push_back(rec);
          }
          old_r.push_back(std::move(r));
        }
      }
      auto report = compute_statistics(records, old_r, strata);
      Tally total = report.total();
      Tally by_a, by_s;
      for (auto a : kApproaches) by_a += report.by_approach(a);
      for (auto s : kStrata) by_s += report.by_stratum(s);
      REQUIRE(by_a == total);
      REQUIRE(by_s == total);
      REQUIRE(total.exclusive == records.size());
      REQUIRE(total.drift() <= total.exclusive);
      REQUIRE(total.exclusive <= total.terms);
      REQUIRE(total.present_in_new + total.drift() + total.facet_exclusions + total.data_errors == total.exclusive);
      REQUIRE(total.documents == old_r.size());
    }
  }
}
