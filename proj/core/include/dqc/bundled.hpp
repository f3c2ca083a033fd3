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

// Example programs compiled into the library.

#include <span>
#include <string>
#include <string_view>

namespace dqc {

struct BundledProgram {
    std::string_view file;  // e.g. "superdense.rpi"
    std::string_view text;

    /// The file name without its extension.
    std::string_view name() const { return file.substr(0, file.rfind('.')); }
    /// The first comment line of the file.
    std::string summary() const;
};

std::span<const BundledProgram> bundled_programs();

/// Looks up by file name ("intro.dlog") or, for an unambiguous stem, by name.
const BundledProgram *find_bundled(std::string_view name);

}  // namespace dqc
