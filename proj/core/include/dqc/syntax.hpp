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

// Surface syntax for combinators and relations (.rpi files).
//
//   program  ::= item*
//   item     ::= 'type' NAME '=' type ';'
//              | 'iso' NAME '=' cexpr ['@' type '<->' type] ';'
//              | 'set' NAME '=' setexpr ';'
//              | 'basis' NAME '=' '[' setexpr (',' setexpr)* ']' ';'
//              | 'def' NAME '=' (rexpr | setexpr) ';'
//              | 'main' rexpr 'on' setexpr ['measure' basis] ';'
//   rexpr    ::= unary ('>>>' unary)*
//   unary    ::= 'arr' cexpr ['@' type '<->' type]
//              | ('second' ['@' slot] | 'first' | 'curry' | 'uncurry'
//                 | 'trace' | 'adjointR') unary
//              | 'strength' ['@' slot ',' slot]
//              | ('eta' | 'eps') ['@' slot]
//              | ('state' | 's2r' | 'costate') setatom
//              | ('dot' | 'outer') setatom setatom
//              | NAME | '(' rexpr ')'
//   cexpr    ::= cterm (';' cterm)*
//   cterm    ::= catom (('(+)' | '(x)') catom)*
//   catom    ::= ISO | NAME | 'inv' catom | '(' cexpr ')'
//   setexpr  ::= setatom ('<+>' setatom)*
//   setatom  ::= '{' [value (',' value)*] '}' ['@' type] | NAME | '(' setexpr ')'
//   value    ::= '()' | 'L' value | 'R' value | 'T' | 'F' | setatom-literal
//              | '(' value ',' value (',' value)* ')'
//   type     ::= tterm ('+' tterm)*     tterm ::= tfac ('*' tfac)*
//   tfac     ::= '0' | '1' | 'bool' | 'S' tfac | NAME | '(' type ')'
//   slot     ::= type | '_'
//   basis    ::= '[' setexpr (',' setexpr)* ']' | NAME
//
// A ';' ends an item when the next token starts an item or ends the file;
// otherwise it sequences combinators. Comments run from '--' to end of line.
// Derived forms and names are expanded while parsing.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dqc/error.hpp"
#include "dqc/pi.hpp"
#include "dqc/rel.hpp"
#include "dqc/value.hpp"

namespace dqc {

struct Definition {
    enum class Kind { Type, Iso, Set, Basis, Rel };

    Kind kind;
    std::string name;
    SourceLocation loc;
    std::optional<BaseType> type;        // Type
    std::optional<PiComb> comb;          // Iso
    std::optional<IsoType> iso_type;     // Iso, when annotated
    std::optional<XorSet> set;           // Set
    std::vector<XorSet> basis;           // Basis
    std::optional<RelExpr> rel;          // Rel

    friend bool operator==(const Definition &a, const Definition &b) {
        return a.kind == b.kind && a.name == b.name && a.type == b.type && a.comb == b.comb &&
               a.iso_type == b.iso_type && a.set == b.set && a.basis == b.basis && a.rel == b.rel;
    }
};

struct MainDirective {
    RelExpr rel;
    XorSet input;
    std::optional<std::vector<XorSet>> measure;
    SourceLocation loc;

    friend bool operator==(const MainDirective &a, const MainDirective &b) {
        return a.rel == b.rel && a.input == b.input && a.measure == b.measure;
    }
};

struct SourceProgram {
    std::vector<Definition> defs;
    std::optional<MainDirective> main;

    const Definition *find(std::string_view name) const;

    friend bool operator==(const SourceProgram &, const SourceProgram &) = default;
};

struct ParseOptions {
    /// References to a key resolve to the named value instead (`alice` ->
    /// `alice_2`). Definitions themselves keep their names.
    std::map<std::string, std::string> rebind;
};

/// SyntaxError and NameError carry a line and column; type errors inside a
/// definition are tagged with the definition's location.
SourceProgram parse_rpi(std::string_view text, const ParseOptions &options = {});

/// Parses one relation expression against the definitions of `context`.
RelExpr parse_rel(std::string_view text, const SourceProgram &context = {}, const ParseOptions &options = {});

/// Parses one set expression against the definitions of `context`.
XorSet parse_set(std::string_view text, const SourceProgram &context = {});

/// Parses a type.
BaseType parse_type(std::string_view text);

/// Source text that parses back to a structurally equal program. Names are
/// printed as their expansions.
std::string print_program(const SourceProgram &p);

}  // namespace dqc
