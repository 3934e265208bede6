/*
 * vdatalog - a variability-aware Datalog engine
 * Copyright (c) 2026, the vdatalog developers. All rights reserved
 * Licensed under the Apache License, Version 2.0 as shown at:
 * - https://www.apache.org/licenses/LICENSE-2.0
 */

/************************************************************************
 *
 * @file Bdd.h
 *
 * Reduced ordered binary decision diagrams with hash-consing. A presence
 * condition is a handle to a node of one manager; two handles denote the
 * same Boolean function iff they point at the identical node, which makes
 * equivalence and satisfiability checks constant time.
 *
 ***********************************************************************/

#pragma once

#include "vdatalog/Error.h"
#include "vdatalog/FeatureTable.h"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

namespace vdatalog {

class BddManager;

using BddNodeRef = std::uint32_t;

/** Decision node. Terminals use `kBddTerminalVar` as their variable. */
struct BddNode {
    std::uint32_t var;
    BddNodeRef low;
    BddNodeRef high;
};

inline constexpr std::uint32_t kBddTerminalVar = 0xffffffffu;
inline constexpr BddNodeRef kBddFalse = 0;
inline constexpr BddNodeRef kBddTrue = 1;

/**
 * Canonical handle to a propositional formula over features. Copying is
 * free; all structure lives in the owning manager. Handle equality is
 * function equality.
 */
class PresenceCondition {
public:
    PresenceCondition(const PresenceCondition&) = default;
    PresenceCondition& operator=(const PresenceCondition&) = default;

    BddNodeRef root() const {
        return node;
    }
    BddManager& manager() const {
        return *owner;
    }

    bool isTrue() const {
        return node == kBddTrue;
    }
    bool isFalse() const {
        return node == kBddFalse;
    }

    /** Constant time: anything but the false terminal has a satisfying path. */
    bool satisfiable() const {
        return node != kBddFalse;
    }

    PresenceCondition operator&(const PresenceCondition& other) const;
    PresenceCondition operator|(const PresenceCondition& other) const;
    PresenceCondition operator!() const;

    /** Truth value under a total assignment. */
    bool evaluate(const Configuration& config) const;

    bool operator==(const PresenceCondition& other) const {
        return owner == other.owner && node == other.node;
    }
    bool operator!=(const PresenceCondition& other) const = default;

private:
    friend class BddManager;
    PresenceCondition(BddManager* owner, BddNodeRef node) : owner(owner), node(node) {}

    BddManager* owner;
    BddNodeRef node;
};

/**
 * Node store with a unique table (hash-consing) and an if-then-else cache.
 * Nodes are immortal for the lifetime of the manager; the variable order is
 * the feature registration order.
 */
class BddManager {
public:
    BddManager();
    BddManager(const BddManager&) = delete;
    BddManager& operator=(const BddManager&) = delete;

    FeatureTable& features() {
        return featureTable;
    }
    const FeatureTable& features() const {
        return featureTable;
    }

    PresenceCondition pcTrue() {
        return PresenceCondition(this, kBddTrue);
    }
    PresenceCondition pcFalse() {
        return PresenceCondition(this, kBddFalse);
    }

    /** Single-variable condition; registers the feature if unseen. */
    PresenceCondition var(const std::string& name);

    PresenceCondition conj(PresenceCondition a, PresenceCondition b);
    PresenceCondition disj(PresenceCondition a, PresenceCondition b);
    PresenceCondition neg(PresenceCondition a);
    PresenceCondition ite(PresenceCondition f, PresenceCondition g, PresenceCondition h);

    bool evaluate(PresenceCondition pc, const Configuration& config) const;

    /**
     * All total assignments satisfying `pc`, in ascending bit order.
     * Throws ResourceError when the feature count makes enumeration
     * infeasible or more than `maxConfigs` assignments satisfy `pc`.
     */
    std::vector<Configuration> validConfigurations(
            PresenceCondition pc, std::size_t maxConfigs = kDefaultMaxConfigs) const;

    std::size_t nodeCount() const {
        return nodes.size();
    }

    /** Debug dump, one node per line: id, variable name, low id, high id. */
    void dumpNodeTable(std::ostream& out) const;

    static constexpr std::size_t kDefaultMaxConfigs = std::size_t(1) << 20;
    static constexpr std::size_t kMaxEnumerableFeatures = 20;

private:
    struct NodeKey {
        std::uint32_t var;
        BddNodeRef low;
        BddNodeRef high;
        bool operator==(const NodeKey&) const = default;
    };
    struct NodeKeyHash {
        std::size_t operator()(const NodeKey& k) const;
    };
    struct IteKey {
        BddNodeRef f;
        BddNodeRef g;
        BddNodeRef h;
        bool operator==(const IteKey&) const = default;
    };
    struct IteKeyHash {
        std::size_t operator()(const IteKey& k) const;
    };

    BddNodeRef makeNode(std::uint32_t var, BddNodeRef low, BddNodeRef high);
    BddNodeRef iteRec(BddNodeRef f, BddNodeRef g, BddNodeRef h);
    BddNodeRef cofactor(BddNodeRef n, std::uint32_t var, bool branch) const;
    void requireMine(const PresenceCondition& pc) const;

    FeatureTable featureTable;
    std::vector<BddNode> nodes;
    std::unordered_map<NodeKey, BddNodeRef, NodeKeyHash> uniqueTable;
    std::unordered_map<IteKey, BddNodeRef, IteKeyHash> opCache;
};

}  // namespace vdatalog
