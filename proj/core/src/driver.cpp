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

#include "dqc/driver.hpp"

#include "dqc/denote.hpp"
#include "dqc/error.hpp"

namespace dqc {

std::string_view run_mode_name(RunMode mode) {
    switch (mode) {
        case RunMode::Rel:
            return "rel";
        case RunMode::Vec:
            return "vec";
        case RunMode::Both:
            return "both";
    }
    return "";
}

std::optional<RunMode> run_mode_from_name(std::string_view name) {
    for (auto m : {RunMode::Rel, RunMode::Vec, RunMode::Both}) {
        if (run_mode_name(m) == name) {
            return m;
        }
    }
    return std::nullopt;
}

namespace {

void flatten(const RelExpr &r, std::vector<RelExpr> &out) {
    if (r.kind() == RelExpr::Kind::Seq) {
        flatten(r.lhs(), out);
        flatten(r.rhs(), out);
    } else {
        out.push_back(r);
    }
}

}  // namespace

std::vector<RelExpr> split_steps(const RelExpr &elaborated) {
    std::vector<RelExpr> spine;
    flatten(elaborated, spine);
    std::vector<RelExpr> steps;
    std::optional<RelExpr> open;
    std::uint64_t open_dom = 0;
    for (const auto &piece : spine) {
        if (!open) {
            open = piece;
            open_dom = elaborated_type(piece).dom.cardinality();
        } else {
            open = RelExpr::seq(*open, piece);
        }
        if (elaborated_type(piece).cod.cardinality() == open_dom) {
            steps.push_back(*open);
            open.reset();
        }
    }
    if (open) {
        steps.push_back(*open);
    }
    return steps;
}

RunReport run(const RunConfig &config, const SourceProgram &program) {
    if (!program.main) {
        fail(ErrorKind::NameError, "the program has no 'main'");
    }
    const auto &main = *program.main;
    bool quantum = config.require_invertible || main.measure.has_value();
    auto whole = elaborate(main.rel, main.input.elem_type());
    bool use_rel = config.mode != RunMode::Vec;
    bool use_vec = config.mode != RunMode::Rel;

    RunReport report{config.mode, main.input, main.input, vec_of_set(main.input), {}, {}, {}, {}};
    auto set_state = main.input;
    auto vec_state = vec_of_set(main.input);
    std::size_t index = 0;
    for (const auto &step : split_steps(whole)) {
        ++index;
        StepReport sr{step, elaborated_type(step), true, std::nullopt};
        std::optional<Gf2Mat> m;
        if (use_vec || config.require_invertible) {
            m = denote_elaborated(step);
        }
        if (config.require_invertible) {
            if (m->bits.rows() != m->bits.cols()) {
                fail(ErrorKind::DimensionMismatch, "step " + std::to_string(index) + " (" + sr.type.str() +
                                                       ") cannot be an evolution: its matrix is not square");
            }
            sr.invertible = is_invertible(*m);
            if (!*sr.invertible) {
                fail(ErrorKind::NotInvertible, "step " + std::to_string(index) + " (" + sr.type.str() +
                                                   ") has a singular matrix: " + step.str());
            }
        }
        if (use_rel) {
            set_state = apply_elaborated_set(step, set_state);
        }
        if (use_vec) {
            vec_state = mat_apply(*m, vec_state);
        }
        if (use_rel && use_vec && vec_of_set(set_state) != vec_state) {
            sr.sound = false;
            report.divergences.push_back("step " + std::to_string(index) + ": relational " + set_state.str() +
                                         " but matrix " + vec_state.bits.str());
        }
        report.steps.push_back(std::move(sr));
    }
    report.result = use_rel ? set_state : set_of_vec(vec_state);
    report.vector = use_vec ? vec_state : vec_of_set(set_state);
    if (config.show_matrix) {
        report.matrix = denote_elaborated(whole);
    }
    if (quantum && report.result.empty()) {
        fail(ErrorKind::ZeroVector, "the final state is the zero vector, which is not a quantum state");
    }
    if (main.measure) {
        report.outcome = measure(report.result, DualBasis(*main.measure), config.seed);
    }
    return report;
}

namespace {

std::string count(std::size_t n, const char *noun) {
    return std::to_string(n) + " " + noun + (n == 1 ? "" : "s");
}

}  // namespace

std::string format_report(const RunReport &report, const RunConfig &config) {
    std::string out;
    out += "result: " + report.result.str() + "\n";
    out += "vector: " + report.vector.bits.str() + "\n";
    if (report.mode == RunMode::Both) {
        if (report.divergences.empty()) {
            out += "soundness: ok (" + count(report.steps.size(), "step") + ")\n";
        } else {
            for (const auto &d : report.divergences) {
                out += "divergence: " + d + "\n";
            }
        }
    }
    if (config.require_invertible) {
        out += "invertible: ok (" + count(report.steps.size(), "step") + ")\n";
    }
    if (report.matrix) {
        out += "matrix:\n" + report.matrix->str() + "\n";
    }
    if (report.outcome) {
        const auto &o = *report.outcome;
        out += "outcome: " + std::to_string(o.index);
        if (o.deterministic) {
            out += " (deterministic)";
        } else {
            std::string among;
            for (auto i : o.matches) {
                among += (among.empty() ? "" : ", ") + std::to_string(i);
            }
            out += " (seed " + std::to_string(config.seed) + " chose among " + among + ")";
        }
        out += "\n";
        out += "dual: " + o.dual.str() + "\n";
    }
    return out;
}

}  // namespace dqc
