#pragma once

#include "svcdep/match.hpp"
#include "svcdep/model.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace svcdep {

// Counts each match once per call site. Ambiguous matches are skipped when
// includeAmbiguous is false.
EDM build_edm(const SystemIR& ir, const std::vector<EndpointMatch>& matches, bool includeAmbiguous = true);

// One unit per equivalence class spanning both services of a pair.
DDM build_ddm(const SystemIR& ir, const EntityEquivalence& equivalence);

// Throws InvalidMerge when the two service universes differ.
SDM build_sdm(const EDM& edm, const DDM& ddm);

// ---------------------------------------------------------------------------
// Kind-neutral matrix used by prune, render and diff.

struct CellValue {
    int primary = 0;   // EDM count, DDM count, or SDM endpoint degree
    int secondary = 0; // SDM data degree; 0 for the other kinds

    friend bool operator==(const CellValue&, const CellValue&) = default;
};

struct MatrixTable {
    MatrixKind kind = MatrixKind::Edm;
    ServiceUniverse services;
    // DDM tables hold the canonical pair only unless built with bothTriangles.
    std::map<ServicePair, CellValue> cells;

    std::string display(const CellValue& v) const;
};

MatrixTable to_table(const EDM& edm);
MatrixTable to_table(const DDM& ddm, bool bothTriangles = false);
MatrixTable to_table(const SDM& sdm);

// Rows and columns that carry at least one cell. Symmetric kinds keep the
// same service list on both axes.
struct DisplayView {
    MatrixKind kind = MatrixKind::Edm;
    std::vector<ServiceId> rows;
    std::vector<ServiceId> cols;
    std::map<ServicePair, CellValue> cells;

    std::string display(const ServicePair& pair) const;
};

// DDM tables are mirrored into both triangles before pruning.
DisplayView prune(const MatrixTable& table);

// ---------------------------------------------------------------------------

struct HotspotRow {
    std::size_t endpoint = 0; // index into SystemIR::endpoints
    int callCount = 0;
    int distinctCallers = 0;

    friend bool operator==(const HotspotRow&, const HotspotRow&) = default;
};

// Endpoints with callCount > minCalls, by count descending then service,
// path and method. Throws Config when minCalls is negative.
std::vector<HotspotRow> hotspots(const SystemIR& ir, const std::vector<EndpointMatch>& matches, int minCalls = 3);

// ---------------------------------------------------------------------------

struct CellChange {
    ServicePair pair;
    CellValue before;
    CellValue after;

    friend bool operator==(const CellChange&, const CellChange&) = default;
};

struct CellEntry {
    ServicePair pair;
    CellValue value;

    friend bool operator==(const CellEntry&, const CellEntry&) = default;
};

struct MatrixDiff {
    MatrixKind kind = MatrixKind::Edm;
    std::vector<CellEntry> added;
    std::vector<CellEntry> removed;
    std::vector<CellChange> changed;
    std::vector<std::string> servicesAdded;
    std::vector<std::string> servicesRemoved;

    bool empty() const noexcept {
        return added.empty() && removed.empty() && changed.empty() && servicesAdded.empty() &&
               servicesRemoved.empty();
    }

    friend bool operator==(const MatrixDiff&, const MatrixDiff&) = default;
};

// Keyed by service names; every list is sorted by pair. Throws InvalidDiff
// when the kinds differ.
MatrixDiff diff(const MatrixTable& before, const MatrixTable& after);

} // namespace svcdep
