// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Chronoterm Contributors

#pragma once

#include <stdexcept>
#include <string>

namespace chronoterm {

/// Input data could not be loaded or is inconsistent (CLI exit code 3).
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

/// Configuration rejected before any data was read (CLI exit code 2).
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string flag, const std::string& what)
      : std::runtime_error(what), flag_(std::move(flag)) {}

  const std::string& flag() const noexcept { return flag_; }

 private:
  std::string flag_;
};

}  // namespace chronoterm
