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

// A small logic-programming engine: depth-first SLD resolution over atoms,
// integers, variables and pairs, with a choice of how repeated answers to a
// query are combined.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dqc::logic {

struct Term {
    enum class Kind { Atom, Int, Var, Pair };

    Kind kind;
    std::string text;          // atom or variable name
    std::int64_t number = 0;   // Int
    std::vector<Term> kids;    // Pair: exactly two

    static Term atom(std::string name);
    static Term integer(std::int64_t n);
    static Term var(std::string name);
    static Term pair(Term a, Term b);

    /// `foo`, `42`, `X`, `(a,b)`.
    std::string str() const;

    friend bool operator==(const Term &, const Term &) = default;
};

/// A goal or clause head: predicate name applied to arguments.
struct Goal {
    std::string pred;
    std::vector<Term> args;

    std::string key() const { return pred + "/" + std::to_string(args.size()); }
    std::string str() const;

    friend bool operator==(const Goal &, const Goal &) = default;
};

struct Clause {
    Goal head;
    std::vector<Goal> body;  // empty for facts
    int line = 0;

    std::string str() const;
};

struct Program {
    std::vector<Clause> clauses;
};

/// Facts `p(t1,...,tk).`, rules `h :- g1, ..., gn.`, `%` line comments.
/// SyntaxError with a line and column on bad input.
Program parse_program(std::string_view text);

/// A conjunction of goals, optionally prefixed by `?-` and ended by `.`.
std::vector<Goal> parse_query(std::string_view text);

/// Bindings of the query's named variables, in order of first appearance.
/// Unbound results print as _A, _B, ... numbered per answer.
struct Answer {
    std::vector<std::pair<std::string, Term>> bindings;

    /// `X = 1, Y = a`, or `true` when the query has no variables.
    std::string str() const;

    friend bool operator==(const Answer &, const Answer &) = default;
};

using AnswerStream = std::vector<Answer>;

struct SolveOptions {
    /// Successful resolution steps allowed before DepthExceeded.
    std::uint64_t max_steps = 10000;
};

/// All answers in depth-first discovery order, with repetitions. Clauses are
/// tried in textual order and body goals left to right; unification has no
/// occurs check. UnknownPredicate when a called predicate has no clauses.
AnswerStream solve(const Program &program, const std::vector<Goal> &query, const SolveOptions &options = {});

enum class UnionMode { Prolog, Set, Xor };

std::string_view union_mode_name(UnionMode mode);
std::optional<UnionMode> union_mode_from_name(std::string_view name);

/// Prolog keeps the stream, Set keeps first occurrences, Xor keeps answers
/// seen an odd number of times (at their first position).
AnswerStream apply_union_mode(const AnswerStream &answers, UnionMode mode);

/// Toplevel rendering: `X = 1 ; X = 3.`, `true.`, or `false.` when empty.
std::string format_answers(const AnswerStream &answers);

}  // namespace dqc::logic
