// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Chronoterm Contributors

#pragma once

// Micro-texts with candidate lists and deg/freq scores worked out by hand.
// Stems come from the reference Porter vectors.

#include <string>
#include <vector>

#include "chronoterm/score.hpp"

namespace chronoterm::fixtures {

struct HandCandidate {
  std::string text;
  std::vector<std::string> words;
  Score score;
};

struct HandTable {
  std::string text;
  std::vector<std::string> stopwords;
  std::vector<HandCandidate> candidates;  // document order
};

inline const std::vector<HandTable>& rake_tables() {
  static const std::vector<HandTable> tables{
      // deg: every word is alone in its phrase set; freq 1 everywhere.
      {"the Saracens invaded; trade routes collapsed",
       {"the"},
       {{"Saracens invaded", {"saracen", "invad"}, Score(4)},
        {"trade routes collapsed", {"trade", "rout", "collaps"}, Score(9)}}},

      // deep: deg 4, freq 2 -> 2. learn, pars: deg 2, freq 1.
      {"deep learning and deep parsing",
       {"and"},
       {{"deep learning", {"deep", "learn"}, Score(4)}, {"deep parsing", {"deep", "pars"}, Score(4)}}},

      {"Knowledge.", {"the"}, {{"Knowledge", {"knowledg"}, Score(1)}}},

      // gipsi: freq 3, deg 1+2+2 = 5. tribe: freq 2, deg 2+1 = 3.
      // wander: freq 1, deg 2.
      {"Gipsies and the Gipsy tribes: tribes of the Gipsies wandered.",
       {"and", "the", "of"},
       {{"Gipsies", {"gipsi"}, Score(5, 3)},
        {"Gipsy tribes", {"gipsi", "tribe"}, Score(19, 6)},
        {"tribes", {"tribe"}, Score(3, 2)},
        {"Gipsies wandered", {"gipsi", "wander"}, Score(11, 3)}}},

      // muslim: freq 2, deg 1+3. built: freq 2, deg 2+3. mosqu: freq 2,
      // deg 2+1. mohammedan 1/1, school 3/1.
      {"Mohammedans (Muslims) built mosques; Muslims built schools, and mosques!",
       {"and"},
       {{"Mohammedans", {"mohammedan"}, Score(1)},
        {"Muslims", {"muslim"}, Score(2)},
        {"built mosques", {"built", "mosqu"}, Score(4)},
        {"Muslims built schools", {"muslim", "built", "school"}, Score(15, 2)},
        {"mosques", {"mosqu"}, Score(3, 2)}}},

      // human: freq 2, deg 4. men: freq 2, deg 2.
      {"Human beings, men and women: human knowledge of men.",
       {"and", "of"},
       {{"Human beings", {"human", "be"}, Score(4)},
        {"men", {"men"}, Score(1)},
        {"women", {"women"}, Score(1)},
        {"human knowledge", {"human", "knowledg"}, Score(4)},
        {"men", {"men"}, Score(1)}}},

      {"of the and", {"of", "the", "and"}, {}},
      {"", {"the"}, {}},
  };
  return tables;
}

}  // namespace chronoterm::fixtures
