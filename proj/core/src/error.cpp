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

#include "dqc/error.hpp"

namespace dqc {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::TypeMismatch:
            return "TypeMismatch";
        case ErrorKind::AmbiguousType:
            return "AmbiguousType";
        case ErrorKind::IllTypedValue:
            return "IllTypedValue";
        case ErrorKind::NotEnumerable:
            return "NotEnumerable";
        case ErrorKind::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorKind::ZeroVector:
            return "ZeroVector";
        case ErrorKind::NoOutcome:
            return "NoOutcome";
        case ErrorKind::NotInvertible:
            return "NotInvertible";
        case ErrorKind::DepthExceeded:
            return "DepthExceeded";
        case ErrorKind::UnknownPredicate:
            return "UnknownPredicate";
        case ErrorKind::SyntaxError:
            return "SyntaxError";
        case ErrorKind::NameError:
            return "NameError";
        case ErrorKind::Internal:
            return "InternalError";
    }
    return "Error";
}

namespace {

std::string render(ErrorKind kind, const std::string &message, const std::optional<SourceLocation> &where) {
    std::string out(error_kind_name(kind));
    if (where) {
        out += " at " + std::to_string(where->line) + ":" + std::to_string(where->column);
    }
    out += ": ";
    out += message;
    return out;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string &message, std::optional<SourceLocation> where)
    : std::runtime_error(render(kind, message, where)), kind_(kind), detail_(message), where_(where) {
}

Error Error::located(SourceLocation loc) const {
    if (where_) {
        return *this;
    }
    return Error(kind_, detail_, loc);
}

void fail(ErrorKind kind, const std::string &message) {
    throw Error(kind, message);
}

}  // namespace dqc
