// Copyright 2026 The dqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dqc {

enum class ErrorKind {
    TypeMismatch,
    AmbiguousType,
    IllTypedValue,
    NotEnumerable,
    DimensionMismatch,
    ZeroVector,
    NoOutcome,
    NotInvertible,
    DepthExceeded,
    UnknownPredicate,
    SyntaxError,
    NameError,
    Internal,
};

std::string_view error_kind_name(ErrorKind kind);

struct SourceLocation {
    int line = 0;
    int column = 0;
};

/// Every failure raised by the library. The kind is stable and tested; the
/// message is for humans.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message, std::optional<SourceLocation> where = std::nullopt);

    ErrorKind kind() const { return kind_; }
    const std::optional<SourceLocation> &where() const { return where_; }
    const std::string &detail() const { return detail_; }

    /// Returns a copy tagged with a location, unless one is already present.
    Error located(SourceLocation loc) const;

   private:
    ErrorKind kind_;
    std::string detail_;
    std::optional<SourceLocation> where_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string &message);

}  // namespace dqc
