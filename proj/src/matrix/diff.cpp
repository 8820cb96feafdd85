#include "svcdep/error.hpp"
#include "svcdep/matrix.hpp"

#include <algorithm>

namespace svcdep {

MatrixDiff diff(const MatrixTable& before, const MatrixTable& after) {
    if (before.kind != after.kind) {
        throw Error(ErrorKind::InvalidDiff, "cannot diff " + std::string(matrix_kind_name(before.kind)) + " against " +
                                                std::string(matrix_kind_name(after.kind)));
    }
    MatrixDiff d;
    d.kind = before.kind;

    const auto oldNames = before.services.names();
    const auto newNames = after.services.names();
    std::set_difference(newNames.begin(), newNames.end(), oldNames.begin(), oldNames.end(),
                        std::back_inserter(d.servicesAdded));
    std::set_difference(oldNames.begin(), oldNames.end(), newNames.begin(), newNames.end(),
                        std::back_inserter(d.servicesRemoved));

    // Both maps are ordered by pair; walk them together.
    auto a = before.cells.begin();
    auto b = after.cells.begin();
    while (a != before.cells.end() || b != after.cells.end()) {
        if (b == after.cells.end() || (a != before.cells.end() && a->first < b->first)) {
            d.removed.push_back(CellEntry{a->first, a->second});
            ++a;
        } else if (a == before.cells.end() || b->first < a->first) {
            d.added.push_back(CellEntry{b->first, b->second});
            ++b;
        } else {
            if (!(a->second == b->second)) {
                d.changed.push_back(CellChange{a->first, a->second, b->second});
            }
            ++a;
            ++b;
        }
    }
    return d;
}

} // namespace svcdep
