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

// Running a program's main directive, relationally, through matrices, or
// both side by side.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dqc/gf2.hpp"
#include "dqc/logic.hpp"
#include "dqc/measurement.hpp"
#include "dqc/rel.hpp"
#include "dqc/syntax.hpp"

namespace dqc {

enum class RunMode { Rel, Vec, Both };

std::string_view run_mode_name(RunMode mode);
std::optional<RunMode> run_mode_from_name(std::string_view name);

struct RunConfig {
    RunMode mode = RunMode::Both;
    logic::UnionMode union_mode = logic::UnionMode::Prolog;
    /// Used only when several duals match a measured state.
    std::uint64_t seed = 0;
    /// Reject steps whose matrix is singular (NotInvertible).
    bool require_invertible = false;
    bool show_matrix = false;
};

struct StepReport {
    RelExpr rel;  // elaborated
    RelType type;
    bool sound = true;
    std::optional<bool> invertible;
};

struct RunReport {
    RunMode mode;
    XorSet input;
    XorSet result;
    Gf2Vec vector;
    std::vector<StepReport> steps;
    std::optional<Gf2Mat> matrix;
    std::optional<MeasurementOutcome> outcome;
    /// One line per step where the two interpretations disagree.
    std::vector<std::string> divergences;
};

/// Splits the top-level sequence of an elaborated relation into the shortest
/// consecutive runs whose matrices are square. A trailing run that cannot be
/// closed is returned as is.
std::vector<RelExpr> split_steps(const RelExpr &elaborated);

/// Evaluates main on its input. A run is in quantum mode when it measures or
/// requires invertibility; there an empty final state raises ZeroVector.
/// NameError when the program has no main.
RunReport run(const RunConfig &config, const SourceProgram &program);

/// Human-readable report: `result: {T}`, `vector: F T`, and as applicable
/// the soundness summary, the matrix and `outcome: 2 (deterministic)`.
std::string format_report(const RunReport &report, const RunConfig &config);

}  // namespace dqc
