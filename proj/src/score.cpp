// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Chronoterm Contributors

#include "chronoterm/score.hpp"

#include "chronoterm/error.hpp"

namespace chronoterm {

std::string to_string(const Score& s) {
  const auto& num = boost::multiprecision::numerator(s);
  const auto& den = boost::multiprecision::denominator(s);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Score parse_score(std::string_view text) {
  auto digits = [](std::string_view d, bool allow_sign) {
    if (d.empty()) return false;
    std::size_t i = (allow_sign && d.front() == '-') ? 1 : 0;
    if (i == d.size()) return false;
    for (; i < d.size(); ++i) {
      if (d[i] < '0' || d[i] > '9') return false;
    }
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!digits(num, true) || !digits(den, false)) {
    throw DataError("malformed score '" + std::string(text) + "'");
  }
  boost::multiprecision::cpp_int d(std::string{den});
  if (d == 0) throw DataError("zero denominator in score '" + std::string(text) + "'");
  return Score(boost::multiprecision::cpp_int(std::string{num}), d);
}

}  // namespace chronoterm
