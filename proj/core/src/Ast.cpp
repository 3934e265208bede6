/*
 * vdatalog - a variability-aware Datalog engine
 * Copyright (c) 2026, the vdatalog developers. All rights reserved
 * Licensed under the Apache License, Version 2.0 as shown at:
 * - https://www.apache.org/licenses/LICENSE-2.0
 */

/************************************************************************
 *
 * @file Ast.cpp
 *
 * Constructors, structural equality, and text rendering for the AST.
 *
 ***********************************************************************/

#include "vdatalog/Ast.h"

namespace vdatalog {

struct PcExprFactory {
    static std::shared_ptr<PcExpr> make(PcExpr::Kind kind) {
        return std::shared_ptr<PcExpr>(new PcExpr(kind));
    }
};

PcExprRef PcExpr::mkTrue() {
    static const PcExprRef instance = PcExprFactory::make(Kind::True);
    return instance;
}

PcExprRef PcExpr::mkFalse() {
    static const PcExprRef instance = PcExprFactory::make(Kind::False);
    return instance;
}

PcExprRef PcExpr::mkId(std::string name) {
    auto e = PcExprFactory::make(Kind::Id);
    e->name = std::move(name);
    return e;
}

PcExprRef PcExpr::mkNot(PcExprRef a) {
    auto e = PcExprFactory::make(Kind::Not);
    e->left = std::move(a);
    return e;
}

PcExprRef PcExpr::mkAnd(PcExprRef a, PcExprRef b) {
    auto e = PcExprFactory::make(Kind::And);
    e->left = std::move(a);
    e->right = std::move(b);
    return e;
}

PcExprRef PcExpr::mkOr(PcExprRef a, PcExprRef b) {
    auto e = PcExprFactory::make(Kind::Or);
    e->left = std::move(a);
    e->right = std::move(b);
    return e;
}

bool structurallyEqual(const PcExprRef& a, const PcExprRef& b) {
    if (a == b) {
        return true;
    }
    if (!a || !b || a->kind != b->kind) {
        return false;
    }
    switch (a->kind) {
        case PcExpr::Kind::True:
        case PcExpr::Kind::False: return true;
        case PcExpr::Kind::Id: return a->name == b->name;
        case PcExpr::Kind::Not: return structurallyEqual(a->left, b->left);
        case PcExpr::Kind::And:
        case PcExpr::Kind::Or:
            return structurallyEqual(a->left, b->left) && structurallyEqual(a->right, b->right);
    }
    return false;
}

namespace {

// Precedence: atoms 3, negation 3, conjunction 2, disjunction 1.
int precedence(const PcExpr& e) {
    switch (e.kind) {
        case PcExpr::Kind::Or: return 1;
        case PcExpr::Kind::And: return 2;
        default: return 3;
    }
}

void print(const PcExpr& e, int parent, std::string& out) {
    int level = precedence(e);
    bool parens = level < parent;
    if (parens) {
        out += "(";
    }
    switch (e.kind) {
        case PcExpr::Kind::True: out += "True"; break;
        case PcExpr::Kind::False: out += "False"; break;
        case PcExpr::Kind::Id: out += e.name; break;
        case PcExpr::Kind::Not:
            out += "!";
            print(*e.left, 3, out);
            break;
        case PcExpr::Kind::And:
            print(*e.left, 2, out);
            out += " /\\ ";
            print(*e.right, 3, out);  // left-associative: parenthesize a nested right operand
            break;
        case PcExpr::Kind::Or:
            print(*e.left, 1, out);
            out += " \\/ ";
            print(*e.right, 2, out);
            break;
    }
    if (parens) {
        out += ")";
    }
}

}  // namespace

std::string toPcText(const PcExprRef& e) {
    std::string out;
    print(*e, 0, out);
    return out;
}

std::string toText(const Atom& atom) {
    std::string out = atom.predicate + "(";
    for (std::size_t i = 0; i < atom.args.size(); i++) {
        if (i > 0) {
            out += ", ";
        }
        out += atom.args[i].text;
    }
    out += ")";
    return out;
}

std::string toText(const Clause& clause) {
    std::string out = toText(clause.head);
    if (!clause.body.empty()) {
        out += " :- ";
        for (std::size_t i = 0; i < clause.body.size(); i++) {
            if (i > 0) {
                out += ", ";
            }
            out += toText(clause.body[i]);
        }
    }
    if (clause.pc && !clause.pc->isTrue()) {
        out += " @ " + toPcText(clause.pc);
    }
    out += ".";
    return out;
}

}  // namespace vdatalog
