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

#include "dqc/bundled.hpp"

namespace dqc {

std::string BundledProgram::summary() const {
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto end = text.find('\n', pos);
        auto line = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
        for (std::string_view marker : {"--", "%"}) {
            if (line.substr(0, marker.size()) == marker) {
                auto body = line.substr(marker.size());
                auto start = body.find_first_not_of(' ');
                return start == std::string_view::npos ? std::string() : std::string(body.substr(start));
            }
        }
        if (end == std::string_view::npos) {
            break;
        }
        pos = end + 1;
    }
    return {};
}

const BundledProgram *find_bundled(std::string_view name) {
    for (const auto &p : bundled_programs()) {
        if (p.file == name) {
            return &p;
        }
    }
    const BundledProgram *hit = nullptr;
    for (const auto &p : bundled_programs()) {
        if (p.name() == name) {
            if (hit) {
                return nullptr;
            }
            hit = &p;
        }
    }
    return hit;
}

}  // namespace dqc
