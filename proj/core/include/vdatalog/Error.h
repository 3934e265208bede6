/*
 * vdatalog - a variability-aware Datalog engine
 * Copyright (c) 2026, the vdatalog developers. All rights reserved
 * Licensed under the Apache License, Version 2.0 as shown at:
 * - https://www.apache.org/licenses/LICENSE-2.0
 */

/************************************************************************
 *
 * @file Error.h
 *
 * Error types shared across the engine.
 *
 ***********************************************************************/

#pragma once

#include <stdexcept>
#include <string>

namespace vdatalog {

/** A syntax error carrying a 1-based source position. */
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line, int column)
            : std::runtime_error("line " + std::to_string(line) + ", column " +
                                 std::to_string(column) + ": " + message),
              errorLine(line), errorColumn(column) {}

    int line() const {
        return errorLine;
    }
    int column() const {
        return errorColumn;
    }

private:
    int errorLine;
    int errorColumn;
};

/** Violation of an API precondition (arity mismatch, mixed managers, ...). */
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/** File system failure or missing input. */
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/** A caller-imposed cap was exceeded (configuration enumeration, ...). */
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace vdatalog
