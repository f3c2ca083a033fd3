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

// Command-line driver: check, run, matrix, logic and examples.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <sstream>

#include "dqc/bundled.hpp"
#include "dqc/denote.hpp"
#include "dqc/driver.hpp"
#include "dqc/error.hpp"
#include "dqc/logic.hpp"
#include "dqc/syntax.hpp"

namespace {

using nlohmann::json;

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

// Usage problems that are not library errors (missing files and the like).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Source {
    std::string label;
    std::string text;
};

Source load(const std::string &arg) {
    std::ifstream in(arg, std::ios::binary);
    if (in) {
        std::stringstream buf;
        buf << in.rdbuf();
        return {arg, buf.str()};
    }
    if (const auto *b = dqc::find_bundled(arg)) {
        return {std::string(b->file), std::string(b->text)};
    }
    throw UsageError("cannot read '" + arg + "' (not a file or a bundled program; see 'rpi examples')");
}

json set_json(const dqc::XorSet &s) {
    json elems = json::array();
    for (const auto &v : s.elements()) {
        elems.push_back(v.str());
    }
    return elems;
}

json matrix_json(const dqc::Gf2Mat &m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.bits.rows(); ++r) {
        rows.push_back(m.bits.row(r).str());
    }
    return {{"dom", m.dom.str()}, {"cod", m.cod.str()}, {"rows", rows}};
}

std::string def_kind(dqc::Definition::Kind k) {
    switch (k) {
        case dqc::Definition::Kind::Type:
            return "type";
        case dqc::Definition::Kind::Iso:
            return "iso";
        case dqc::Definition::Kind::Set:
            return "set";
        case dqc::Definition::Kind::Basis:
            return "basis";
        case dqc::Definition::Kind::Rel:
            return "def";
    }
    return "";
}

std::string def_signature(const dqc::Definition &d) {
    switch (d.kind) {
        case dqc::Definition::Kind::Type:
            return d.type->str();
        case dqc::Definition::Kind::Iso:
            return d.iso_type ? d.iso_type->str() : d.comb->str();
        case dqc::Definition::Kind::Set:
            return dqc::BaseType::set(d.set->elem_type()).str();
        case dqc::Definition::Kind::Basis:
            return std::to_string(d.basis.size()) + " vectors over " + d.basis.front().elem_type().str();
        case dqc::Definition::Kind::Rel:
            return dqc::describe_rel_type(*d.rel);
    }
    return "";
}

int cmd_check(const std::string &file, bool expand, bool as_json) {
    auto src = load(file);
    auto program = dqc::parse_rpi(src.text);
    json out = {{"file", src.label}, {"definitions", json::array()}};
    std::string text;
    for (const auto &d : program.defs) {
        auto sig = def_signature(d);
        out["definitions"].push_back({{"kind", def_kind(d.kind)}, {"name", d.name}, {"type", sig}});
        text += def_kind(d.kind) + " " + d.name + " : " + sig + "\n";
    }
    if (program.main) {
        auto t = dqc::type_check_rel(program.main->rel, program.main->input.elem_type());
        out["main"] = {{"type", t.str()}, {"input", set_json(program.main->input)}};
        text += "main : " + t.str() + " on " + program.main->input.str() + "\n";
    }
    if (expand) {
        out["expanded"] = dqc::print_program(program);
        text += "\n" + dqc::print_program(program);
    }
    if (as_json) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << text << "ok\n";
    }
    return 0;
}

int cmd_run(const std::string &file, const dqc::RunConfig &config, const dqc::ParseOptions &options, bool as_json) {
    auto src = load(file);
    auto program = dqc::parse_rpi(src.text, options);
    for (const auto &[name, target] : options.rebind) {
        if (!program.find(target)) {
            throw UsageError("--" + name + " selects '" + target + "', which " + src.label + " does not define");
        }
    }
    auto report = dqc::run(config, program);
    if (!as_json) {
        std::cout << dqc::format_report(report, config);
        return report.divergences.empty() ? 0 : kExitDomain;
    }
    json out = {{"file", src.label},
                {"mode", std::string(dqc::run_mode_name(config.mode))},
                {"input", set_json(report.input)},
                {"result", set_json(report.result)},
                {"element_type", report.result.elem_type().str()},
                {"vector", report.vector.bits.str()},
                {"steps", report.steps.size()},
                {"divergences", report.divergences}};
    if (report.matrix) {
        out["matrix"] = matrix_json(*report.matrix);
    }
    if (report.outcome) {
        out["outcome"] = {{"index", report.outcome->index},
                          {"dual", set_json(report.outcome->dual)},
                          {"deterministic", report.outcome->deterministic},
                          {"matches", report.outcome->matches},
                          {"seed", config.seed}};
    }
    std::cout << out.dump(2) << "\n";
    return report.divergences.empty() ? 0 : kExitDomain;
}

int cmd_matrix(const std::string &file, const std::string &target, const std::string &dom, bool as_json) {
    auto src = load(file);
    auto program = dqc::parse_rpi(src.text);
    std::optional<dqc::BaseType> hint;
    if (!dom.empty()) {
        hint = dqc::parse_type(dom);
    }
    const auto *d = program.find(target);
    dqc::RelExpr r = d && d->kind == dqc::Definition::Kind::Rel ? *d->rel : dqc::parse_rel(target, program);
    auto m = dqc::denote_rel(r, hint);
    if (as_json) {
        std::cout << matrix_json(m).dump(2) << "\n";
    } else {
        std::cout << m.str() << "\n";
    }
    return 0;
}

int cmd_logic(const std::string &file, const std::string &query, dqc::logic::UnionMode mode, std::uint64_t max_steps,
              bool as_json) {
    auto src = load(file);
    auto program = dqc::logic::parse_program(src.text);
    auto goals = dqc::logic::parse_query(query);
    auto answers = dqc::logic::apply_union_mode(dqc::logic::solve(program, goals, {max_steps}), mode);
    if (as_json) {
        json list = json::array();
        for (const auto &a : answers) {
            json binding = json::object();
            for (const auto &[name, term] : a.bindings) {
                binding[name] = term.str();
            }
            list.push_back(binding);
        }
        std::cout << json{{"query", query}, {"union", std::string(dqc::logic::union_mode_name(mode))},
                          {"answers", list}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << dqc::logic::format_answers(answers) << "\n";
    }
    return 0;
}

int cmd_examples(const std::string &name, bool as_json) {
    if (!name.empty()) {
        const auto *b = dqc::find_bundled(name);
        if (!b) {
            throw UsageError("no bundled program named '" + name + "'");
        }
        if (as_json) {
            std::cout << json{{"file", b->file}, {"text", b->text}}.dump(2) << "\n";
        } else {
            std::cout << b->text;
        }
        return 0;
    }
    json list = json::array();
    for (const auto &b : dqc::bundled_programs()) {
        list.push_back({{"file", b.file}, {"summary", b.summary()}});
        if (!as_json) {
            std::cout << b.file << "  " << b.summary() << "\n";
        }
    }
    if (as_json) {
        std::cout << list.dump(2) << "\n";
    }
    return 0;
}

// Leftover `--NAME N` pairs select definition NAME_N wherever NAME is used.
dqc::ParseOptions rebindings(const std::vector<std::string> &extras) {
    dqc::ParseOptions options;
    for (std::size_t i = 0; i < extras.size(); ++i) {
        const auto &flag = extras[i];
        if (flag.rfind("--", 0) != 0 || flag.size() <= 2) {
            throw UsageError("unexpected argument '" + flag + "'");
        }
        auto eq = flag.find('=');
        std::string name = flag.substr(2, eq == std::string::npos ? std::string::npos : eq - 2);
        std::string value;
        if (eq != std::string::npos) {
            value = flag.substr(eq + 1);
        } else if (i + 1 < extras.size()) {
            value = extras[++i];
        } else {
            throw UsageError("option '" + flag + "' needs a value");
        }
        options.rebind[name] = name + "_" + value;
    }
    return options;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Interpreter for reversible and relational programs over the field of booleans"};
    app.require_subcommand(1);
    std::string output = "text";
    app.add_option("--output", output, "Output format")->check(CLI::IsMember({"text", "json"}));

    std::string file;
    bool expand = false;
    auto *check = app.add_subcommand("check", "Parse and type-check a program");
    check->add_option("file", file, "Program file or bundled program name")->required();
    check->add_flag("--expand", expand, "Print the program with derived forms expanded");

    std::string mode = "both";
    dqc::RunConfig config;
    auto *run = app.add_subcommand("run", "Evaluate the main directive (--NAME N selects NAME_N)");
    run->add_option("file", file, "Program file or bundled program name")->required();
    run->add_option("--mode", mode, "rel, vec or both")->check(CLI::IsMember({"rel", "vec", "both"}));
    run->add_option("--seed", config.seed, "Seed for choosing among several matching duals (default 0)");
    run->add_flag("--require-invertible", config.require_invertible, "Reject singular evolution steps");
    run->add_flag("--show-matrix", config.show_matrix, "Print the matrix of main");
    run->allow_extras();

    std::string target;
    std::string dom;
    auto *matrix = app.add_subcommand("matrix", "Print the matrix of a definition or relation expression");
    matrix->add_option("file", file, "Program file or bundled program name")->required();
    matrix->add_option("relation", target, "Definition name or relation expression")->required();
    matrix->add_option("--dom", dom, "Domain type, when the relation leaves it open");

    std::string query;
    std::string union_mode = "prolog";
    std::uint64_t max_steps = dqc::logic::SolveOptions{}.max_steps;
    auto *logic = app.add_subcommand("logic", "Answer a query against a logic program");
    logic->add_option("file", file, "Program file or bundled program name")->required();
    logic->add_option("--query", query, "Goal, e.g. \"sdcoding(0,X)\"")->required();
    logic->add_option("--union", union_mode, "prolog, set or xor")->check(CLI::IsMember({"prolog", "set", "xor"}));
    logic->add_option("--max-steps", max_steps, "Resolution step bound");

    std::string example;
    auto *examples = app.add_subcommand("examples", "List bundled programs, or print one");
    examples->add_option("name", example, "Program to print");

    // Accept --output on either side of the subcommand.
    for (auto *sub : {check, run, matrix, logic, examples}) {
        sub->add_option("--output", output, "Output format")->check(CLI::IsMember({"text", "json"}));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    }

    bool as_json = output == "json";
    std::string label = file;
    try {
        if (*check) {
            return cmd_check(file, expand, as_json);
        }
        if (*run) {
            config.mode = *dqc::run_mode_from_name(mode);
            return cmd_run(file, config, rebindings(run->remaining()), as_json);
        }
        if (*matrix) {
            return cmd_matrix(file, target, dom, as_json);
        }
        if (*logic) {
            return cmd_logic(file, query, *dqc::logic::union_mode_from_name(union_mode), max_steps, as_json);
        }
        return cmd_examples(example, as_json);
    } catch (const UsageError &e) {
        std::cerr << "rpi: " << e.what() << "\n";
        return kExitUsage;
    } catch (const dqc::Error &e) {
        std::cerr << "rpi: ";
        if (!label.empty()) {
            std::cerr << label;
            if (e.where()) {
                std::cerr << ":" << e.where()->line << ":" << e.where()->column;
            }
            std::cerr << ": ";
        }
        std::cerr << dqc::error_kind_name(e.kind()) << ": " << e.detail() << "\n";
        bool usage = e.kind() == dqc::ErrorKind::SyntaxError || e.kind() == dqc::ErrorKind::NameError;
        return usage ? kExitUsage : kExitDomain;
    }
}
