/*
 * vdatalog - a variability-aware Datalog engine
 * Copyright (c) 2026, the vdatalog developers. All rights reserved
 * Licensed under the Apache License, Version 2.0 as shown at:
 * - https://www.apache.org/licenses/LICENSE-2.0
 */

/************************************************************************
 *
 * @file Bdd.cpp
 *
 * BDD manager implementation. Everything goes through the if-then-else
 * operator, which keeps a single memo cache for all connectives.
 *
 ***********************************************************************/

#include "vdatalog/Bdd.h"

#include <algorithm>
#include <ostream>

namespace vdatalog {

namespace {

std::size_t hashCombine(std::size_t seed, std::size_t value) {
    return seed ^ (value + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

}  // namespace

std::size_t BddManager::NodeKeyHash::operator()(const NodeKey& k) const {
    std::size_t h = std::hash<std::uint32_t>()(k.var);
    h = hashCombine(h, k.low);
    h = hashCombine(h, k.high);
    return h;
}

std::size_t BddManager::IteKeyHash::operator()(const IteKey& k) const {
    std::size_t h = std::hash<std::uint32_t>()(k.f);
    h = hashCombine(h, k.g);
    h = hashCombine(h, k.h);
    return h;
}

BddManager::BddManager() {
    // Slot 0 is the false terminal, slot 1 the true terminal.
    nodes.push_back({kBddTerminalVar, kBddFalse, kBddFalse});
    nodes.push_back({kBddTerminalVar, kBddTrue, kBddTrue});
}

PresenceCondition BddManager::var(const std::string& name) {
    std::uint32_t v = featureTable.registerFeature(name);
    return PresenceCondition(this, makeNode(v, kBddFalse, kBddTrue));
}

void BddManager::requireMine(const PresenceCondition& pc) const {
    if (&pc.manager() != this) {
        throw UsageError("presence conditions from different BDD managers cannot be combined");
    }
}

BddNodeRef BddManager::makeNode(std::uint32_t var, BddNodeRef low, BddNodeRef high) {
    if (low == high) {
        return low;
    }
    NodeKey key{var, low, high};
    auto it = uniqueTable.find(key);
    if (it != uniqueTable.end()) {
        return it->second;
    }
    auto ref = static_cast<BddNodeRef>(nodes.size());
    nodes.push_back({var, low, high});
    uniqueTable.emplace(key, ref);
    return ref;
}

BddNodeRef BddManager::cofactor(BddNodeRef n, std::uint32_t var, bool branch) const {
    const BddNode& node = nodes[n];
    if (node.var != var) {
        return n;
    }
    return branch ? node.high : node.low;
}

BddNodeRef BddManager::iteRec(BddNodeRef f, BddNodeRef g, BddNodeRef h) {
    if (f == kBddTrue) {
        return g;
    }
    if (f == kBddFalse) {
        return h;
    }
    if (g == h) {
        return g;
    }
    if (g == kBddTrue && h == kBddFalse) {
        return f;
    }
    IteKey key{f, g, h};
    auto it = opCache.find(key);
    if (it != opCache.end()) {
        return it->second;
    }
    std::uint32_t v = std::min({nodes[f].var, nodes[g].var, nodes[h].var});
    BddNodeRef high = iteRec(cofactor(f, v, true), cofactor(g, v, true), cofactor(h, v, true));
    BddNodeRef low = iteRec(cofactor(f, v, false), cofactor(g, v, false), cofactor(h, v, false));
    BddNodeRef result = makeNode(v, low, high);
    opCache.emplace(key, result);
    return result;
}

PresenceCondition BddManager::ite(PresenceCondition f, PresenceCondition g, PresenceCondition h) {
    requireMine(f);
    requireMine(g);
    requireMine(h);
    return PresenceCondition(this, iteRec(f.root(), g.root(), h.root()));
}

PresenceCondition BddManager::conj(PresenceCondition a, PresenceCondition b) {
    requireMine(a);
    requireMine(b);
    return PresenceCondition(this, iteRec(a.root(), b.root(), kBddFalse));
}

PresenceCondition BddManager::disj(PresenceCondition a, PresenceCondition b) {
    requireMine(a);
    requireMine(b);
    return PresenceCondition(this, iteRec(a.root(), kBddTrue, b.root()));
}

PresenceCondition BddManager::neg(PresenceCondition a) {
    requireMine(a);
    return PresenceCondition(this, iteRec(a.root(), kBddFalse, kBddTrue));
}

bool BddManager::evaluate(PresenceCondition pc, const Configuration& config) const {
    requireMine(pc);
    if (config.size() < featureTable.size()) {
        throw UsageError("configuration is not total over the feature table");
    }
    BddNodeRef n = pc.root();
    while (n != kBddFalse && n != kBddTrue) {
        const BddNode& node = nodes[n];
        n = config.isPresent(node.var) ? node.high : node.low;
    }
    return n == kBddTrue;
}

std::vector<Configuration> BddManager::validConfigurations(
        PresenceCondition pc, std::size_t maxConfigs) const {
    requireMine(pc);
    std::vector<Configuration> result;
    if (pc.isFalse()) {
        return result;
    }
    std::size_t n = featureTable.size();
    if (n > kMaxEnumerableFeatures) {
        throw ResourceError("cannot enumerate configurations over " + std::to_string(n) +
                            " features (limit " + std::to_string(kMaxEnumerableFeatures) + ")");
    }
    std::uint64_t total = std::uint64_t(1) << n;
    for (std::uint64_t bits = 0; bits < total; bits++) {
        Configuration config = Configuration::fromBits(bits, n);
        if (evaluate(pc, config)) {
            if (result.size() >= maxConfigs) {
                throw ResourceError("more than " + std::to_string(maxConfigs) +
                                    " valid configurations");
            }
            result.push_back(std::move(config));
        }
    }
    return result;
}

void BddManager::dumpNodeTable(std::ostream& out) const {
    for (std::size_t i = 0; i < nodes.size(); i++) {
        const BddNode& node = nodes[i];
        out << i << "\t";
        if (node.var == kBddTerminalVar) {
            out << (i == kBddTrue ? "True" : "False") << "\t-\t-\n";
        } else {
            out << featureTable.name(node.var) << "\t" << node.low << "\t" << node.high << "\n";
        }
    }
}

PresenceCondition PresenceCondition::operator&(const PresenceCondition& other) const {
    return owner->conj(*this, other);
}

PresenceCondition PresenceCondition::operator|(const PresenceCondition& other) const {
    return owner->disj(*this, other);
}

PresenceCondition PresenceCondition::operator!() const {
    return owner->neg(*this);
}

bool PresenceCondition::evaluate(const Configuration& config) const {
    return owner->evaluate(*this, config);
}

}  // namespace vdatalog
