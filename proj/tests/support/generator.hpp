#pragma once

#include "svcdep/model.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

namespace svcdep::testing {

struct GenSizes {
    int services = 3;
    int endpoints = 6;
    int calls = 10;
    int entities = 5;
};

struct PlantedCall {
    enum class Kind { Matched, Unmatched, Unresolvable };

    Kind kind = Kind::Unmatched;
    std::size_t endpoint = 0; // meaningful when Matched
    bool ambiguous = false;
    int specificity = 0;
};

struct PlantedTruth {
    std::vector<PlantedCall> calls; // parallel to SystemIR::calls
    std::map<ServicePair, int> edm;
    std::map<ServicePair, int> ddm; // canonical pairs
    // endpoint index -> (matched calls, distinct callers)
    std::map<std::size_t, std::pair<int, int>> endpointLoad;
    int matched = 0;
    int unmatched = 0;
    int unresolvable = 0;
    int ambiguous = 0;
};

struct GeneratedSystem {
    SystemIR ir;
    PlantedTruth truth;
};

// Every call is built from a chosen endpoint, so the expected resolution is
// known by construction. Injects same-shape twins differing only in the
// variable type (ambiguous), literal-vs-variable specificity decoys,
// method/extra-segment/one-char decoys and near-miss calls.
// Throws Error(Generator) unless services and endpoints are >= 1 and the
// other sizes are >= 0.
GeneratedSystem generate_ir_system(std::uint64_t seed, const GenSizes& sizes);

} // namespace svcdep::testing
