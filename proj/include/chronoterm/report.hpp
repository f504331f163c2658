// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Chronoterm Contributors

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>

#include "chronoterm/drift.hpp"
#include "chronoterm/serialize.hpp"

namespace chronoterm::report {

enum class Format { Tsv, Json, Md };

std::string_view to_string(Format f);
/// Also the file extension.
std::string_view extension(Format f);
/// Throws ValidationError("--format", ...) on an unknown name.
Format parse_format(std::string_view text);

/// "pp.pp%", rounded half up at the second decimal. Requires denom > 0.
std::string format_percent(std::size_t count, std::size_t denom);

/// "count/denom (pp.pp%)", or "0/0 (—)" for a zero denominator.
std::string format_fraction(std::size_t count, std::size_t denom);

std::string render_report(const drift::StatsReport& report, Format format);
std::string render_drift(const serialize::DriftFile& drift, Format format);
std::string render_hits(const serialize::HitsFile& hits, Format format);

}  // namespace chronoterm::report
