#pragma once

#include "gkforge/gk.hpp"

#include <string>
#include <utility>
#include <vector>

namespace gkforge {

struct CatalogParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownEntry : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StructureDef {
    bool is_pair = false;
    Mat j;                     // when a single structure
    std::string first, second; // when a pair, names of earlier structures
};

struct CatalogEntry {
    std::string name;
    LieAlgebra g;
    Twist twist;
    std::vector<std::pair<std::string, StructureDef>> structures;
    std::vector<std::pair<std::string, bool>> expected;
};

std::vector<std::string> builtin_names();
CatalogEntry builtin(const std::string& name); // throws UnknownEntry listing the names

CatalogEntry parse_entry(const std::string& text); // throws CatalogParseError with field diagnostics
std::string serialize_entry(const CatalogEntry& e); // canonical JSON; parse(serialize(e)) == e

// Resolve by name within an entry; throws UnknownEntry.
GCStructure structure_gcs(const CatalogEntry& e, const std::string& name);
GKPair structure_pair(const CatalogEntry& e, const std::string& name);

} // namespace gkforge
