// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Chronoterm Contributors

#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace chronoterm {

// Exact rational scores: RAKE's deg/freq ratios are compared and tie-broken
// exactly, so results never depend on floating-point summation order.
using Score = boost::multiprecision::cpp_rational;

/// "n/d", or "n" when the denominator is 1.
std::string to_string(const Score& s);

/// Inverse of to_string. Throws DataError on malformed input.
Score parse_score(std::string_view text);

}  // namespace chronoterm
