/*
 * vdatalog - a variability-aware Datalog engine
 * Copyright (c) 2026, the vdatalog developers. All rights reserved
 * Licensed under the Apache License, Version 2.0 as shown at:
 * - https://www.apache.org/licenses/LICENSE-2.0
 */

/************************************************************************
 *
 * @file Ast.h
 *
 * Abstract syntax for the Datalog fragment with presence conditions:
 * terms, atoms, clauses, relation declarations, and the syntactic form
 * of presence conditions.
 *
 ***********************************************************************/

#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace vdatalog {

enum class TermKind { Constant, Variable };

struct Term {
    TermKind kind;
    std::string text;

    bool isVariable() const {
        return kind == TermKind::Variable;
    }
    bool operator==(const Term&) const = default;
};

struct Atom {
    std::string predicate;
    std::vector<Term> args;

    bool operator==(const Atom&) const = default;
};

class PcExpr;
using PcExprRef = std::shared_ptr<const PcExpr>;

/**
 * Syntactic presence condition. Immutable tree; subtrees may be shared.
 * Feature identifiers live in the feature namespace, not the Datalog one.
 */
class PcExpr {
public:
    enum class Kind { True, False, Id, Not, And, Or };

    Kind kind;
    std::string name;      // Kind::Id only
    PcExprRef left;        // Not, And, Or
    PcExprRef right;       // And, Or

    static PcExprRef mkTrue();
    static PcExprRef mkFalse();
    static PcExprRef mkId(std::string name);
    static PcExprRef mkNot(PcExprRef a);
    static PcExprRef mkAnd(PcExprRef a, PcExprRef b);
    static PcExprRef mkOr(PcExprRef a, PcExprRef b);

    bool isTrue() const {
        return kind == Kind::True;
    }

private:
    explicit PcExpr(Kind kind) : kind(kind) {}
    friend struct PcExprFactory;
};

bool structurallyEqual(const PcExprRef& a, const PcExprRef& b);

/** Renders with minimal parentheses; reparses to an equivalent formula. */
std::string toPcText(const PcExprRef& e);

/** A fact (empty body, ground head) or a rule, with its presence condition. */
struct Clause {
    Atom head;
    std::vector<Atom> body;
    PcExprRef pc;  // never null; True when the clause carries no annotation

    bool isFact() const {
        return body.empty();
    }
};

struct RelationDecl {
    std::string name;
    std::vector<std::string> attributes;
    bool isInput = false;
    bool isOutput = false;

    std::size_t arity() const {
        return attributes.size();
    }
};

/** A parsed program: declarations, rules, and inline facts, in text order. */
struct Program {
    std::vector<RelationDecl> decls;
    std::map<std::string, std::size_t> declIndex;
    std::vector<Clause> rules;
    std::vector<Clause> facts;

    const RelationDecl* decl(const std::string& name) const {
        auto it = declIndex.find(name);
        return it == declIndex.end() ? nullptr : &decls[it->second];
    }
};

std::string toText(const Atom& atom);
std::string toText(const Clause& clause);

}  // namespace vdatalog
