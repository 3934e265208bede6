/*
 * vdatalog - a variability-aware Datalog engine
 * Copyright (c) 2026, the vdatalog developers. All rights reserved
 * Licensed under the Apache License, Version 2.0 as shown at:
 * - https://www.apache.org/licenses/LICENSE-2.0
 */

/************************************************************************
 *
 * @file FeatureTable.h
 *
 * Symbol table for feature names and total configurations over them.
 * Features live in a namespace of their own, separate from the Datalog
 * constant symbols, so a feature may share its spelling with a constant.
 *
 ***********************************************************************/

#pragma once

#include "vdatalog/Error.h"

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace vdatalog {

/**
 * Ordered registry of feature identifiers. The position assigned on first
 * registration is the BDD variable of the feature and never changes.
 */
class FeatureTable {
public:
    /** Returns the variable of `name`, registering it if unseen. */
    std::uint32_t registerFeature(const std::string& name) {
        auto it = index.find(name);
        if (it != index.end()) {
            return it->second;
        }
        auto var = static_cast<std::uint32_t>(names.size());
        names.push_back(name);
        index.emplace(name, var);
        return var;
    }

    std::optional<std::uint32_t> lookup(const std::string& name) const {
        auto it = index.find(name);
        if (it == index.end()) {
            return std::nullopt;
        }
        return it->second;
    }

    bool contains(const std::string& name) const {
        return index.count(name) != 0;
    }

    const std::string& name(std::uint32_t var) const {
        return names.at(var);
    }

    std::size_t size() const {
        return names.size();
    }

private:
    std::vector<std::string> names;
    std::unordered_map<std::string, std::uint32_t> index;
};

/** A total truth assignment over the features of one table. */
class Configuration {
public:
    Configuration() = default;
    explicit Configuration(std::vector<bool> bits) : present(std::move(bits)) {}

    /** Assignment from the low `featureCount` bits of `bits` (bit i = feature i). */
    static Configuration fromBits(std::uint64_t bits, std::size_t featureCount) {
        std::vector<bool> p(featureCount);
        for (std::size_t i = 0; i < featureCount; i++) {
            p[i] = (bits >> i) & 1u;
        }
        return Configuration(std::move(p));
    }

    bool isPresent(std::uint32_t var) const {
        if (var >= present.size()) {
            throw UsageError("configuration is not total: feature variable " +
                             std::to_string(var) + " unassigned");
        }
        return present[var];
    }

    std::size_t size() const {
        return present.size();
    }

    /** Renders the assignment as {A=1, B=0, ...} in variable order. */
    std::string describe(const FeatureTable& features) const {
        std::string out = "{";
        for (std::size_t i = 0; i < present.size(); i++) {
            if (i > 0) {
                out += ", ";
            }
            out += features.name(static_cast<std::uint32_t>(i));
            out += present[i] ? "=1" : "=0";
        }
        out += "}";
        return out;
    }

    bool operator==(const Configuration& other) const = default;

private:
    std::vector<bool> present;
};

}  // namespace vdatalog
