/*
 * vdatalog - a variability-aware Datalog engine
 * Copyright (c) 2026, the vdatalog developers. All rights reserved
 * Licensed under the Apache License, Version 2.0 as shown at:
 * - https://www.apache.org/licenses/LICENSE-2.0
 */

/************************************************************************
 *
 * @file Parser.h
 *
 * Parsers for program text and for presence-condition strings as they
 * appear in fact files. Feature identifiers encountered in presence
 * conditions are registered in the feature table, never in the Datalog
 * symbol table.
 *
 ***********************************************************************/

#pragma once

#include "vdatalog/Ast.h"
#include "vdatalog/Error.h"
#include "vdatalog/FeatureTable.h"

#include <string_view>

namespace vdatalog {

/**
 * Parses a program: `.decl`/`.input`/`.output` directives, rules, and
 * inline facts, each optionally annotated with `@ PC` before the final
 * period. `//` starts a line comment. Throws ParseError with a source
 * position for syntax errors, undeclared predicates, arity mismatches,
 * non-ground facts, and rules whose head variables do not all occur in
 * the body.
 */
Program parseProgram(std::string_view text, FeatureTable& features);

/**
 * Parses a bare presence condition. Negation binds tightest, then
 * conjunction, then disjunction; both binary operators associate to the
 * left and parentheses override precedence.
 */
PcExprRef parsePc(std::string_view text, FeatureTable& features);

}  // namespace vdatalog
