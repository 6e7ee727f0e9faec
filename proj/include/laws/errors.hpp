// Copyright 2026 The laws-vqa Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace laws {

/// Base class for every error raised by the library.
class LawsError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Invalid configuration value (qubit count out of range, bad rates, unknown key).
class ConfigurationError : public LawsError {
  public:
    using LawsError::LawsError;
};

/// Caller passed arguments that violate an operation's contract.
class UsageError : public LawsError {
  public:
    using LawsError::LawsError;
};

/// The request is well formed but outside what the implementation supports.
class CapabilityError : public LawsError {
  public:
    using LawsError::LawsError;
};

/// Non-finite values appeared during an optimization run.
class NumericError : public LawsError {
  public:
    using LawsError::LawsError;
};

/// Malformed input data file. The message carries the offending line number.
class IngestionError : public LawsError {
  public:
    IngestionError(const std::string &what, std::size_t line)
        : LawsError("line " + std::to_string(line) + ": " + what), line_(line) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

/// File system failure while reading or writing run artifacts.
class IoError : public LawsError {
  public:
    using LawsError::LawsError;
};

} // namespace laws
