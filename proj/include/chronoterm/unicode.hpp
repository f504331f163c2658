// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Chronoterm Contributors

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace chronoterm::unicode {

/// Lowercase + NFC + whitespace collapse/trim. Punctuation is kept.
/// Total: malformed UTF-8 sequences become U+FFFD.
std::string normalize_label(std::string_view raw);

/// Full Unicode lowercase (root locale), no other changes.
std::string to_lower(std::string_view s);

bool is_valid_utf8(std::string_view s);

/// Decodes to code points; malformed bytes decode as U+FFFD.
std::vector<char32_t> code_points(std::string_view s);

std::size_t code_point_count(std::string_view s);

bool is_alnum(char32_t c);

}  // namespace chronoterm::unicode
