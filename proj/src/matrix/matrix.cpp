#include "svcdep/matrix.hpp"

#include "svcdep/error.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace svcdep {

EDM build_edm(const SystemIR& ir, const std::vector<EndpointMatch>& matches, bool includeAmbiguous) {
    EDM edm;
    edm.services = ir.services;
    for (const auto& m : matches) {
        if (m.ambiguous && !includeAmbiguous) {
            continue;
        }
        const auto& from = ir.calls.at(m.call).caller;
        const auto& to = ir.endpoints.at(m.endpoint).service;
        if (from == to) {
            continue;
        }
        ++edm.cells[{from, to}];
    }
    return edm;
}

DDM build_ddm(const SystemIR& ir, const EntityEquivalence& equivalence) {
    DDM ddm;
    ddm.services = ir.services;
    for (const auto& cls : equivalence.classes) {
        std::set<std::string> services;
        for (auto m : cls.members) {
            services.insert(ir.entities.at(m).service);
        }
        for (auto a = services.begin(); a != services.end(); ++a) {
            for (auto b = std::next(a); b != services.end(); ++b) {
                ++ddm.cells[{*a, *b}];
            }
        }
    }
    return ddm;
}

SDM build_sdm(const EDM& edm, const DDM& ddm) {
    if (!(edm.services == ddm.services)) {
        throw Error(ErrorKind::InvalidMerge, "EDM and DDM cover different service sets");
    }
    SDM sdm;
    sdm.services = edm.services;
    for (const auto& [pair, count] : edm.cells) {
        sdm.cells[pair].endpointDegree = count;
    }
    for (const auto& [pair, count] : ddm.cells) {
        sdm.cells[pair].dataDegree = count;
        sdm.cells[{pair.second, pair.first}].dataDegree = count;
    }
    return sdm;
}

// ---------------------------------------------------------------------------

std::string MatrixTable::display(const CellValue& v) const {
    if (kind == MatrixKind::Sdm) {
        return sdm_display(SdmCell{v.primary, v.secondary});
    }
    return std::to_string(v.primary);
}

MatrixTable to_table(const EDM& edm) {
    MatrixTable t{MatrixKind::Edm, edm.services, {}};
    for (const auto& [pair, count] : edm.cells) {
        t.cells[pair] = CellValue{count, 0};
    }
    return t;
}

MatrixTable to_table(const DDM& ddm, bool bothTriangles) {
    MatrixTable t{MatrixKind::Ddm, ddm.services, {}};
    for (const auto& [pair, count] : ddm.cells) {
        t.cells[pair] = CellValue{count, 0};
        if (bothTriangles) {
            t.cells[{pair.second, pair.first}] = CellValue{count, 0};
        }
    }
    return t;
}

MatrixTable to_table(const SDM& sdm) {
    MatrixTable t{MatrixKind::Sdm, sdm.services, {}};
    for (const auto& [pair, cell] : sdm.cells) {
        t.cells[pair] = CellValue{cell.endpointDegree, cell.dataDegree};
    }
    return t;
}

std::string DisplayView::display(const ServicePair& pair) const {
    auto it = cells.find(pair);
    if (it == cells.end()) {
        return {};
    }
    if (kind == MatrixKind::Sdm) {
        return sdm_display(SdmCell{it->second.primary, it->second.secondary});
    }
    return std::to_string(it->second.primary);
}

DisplayView prune(const MatrixTable& table) {
    DisplayView view;
    view.kind = table.kind;
    for (const auto& [pair, v] : table.cells) {
        if (v.primary == 0 && v.secondary == 0) {
            continue;
        }
        view.cells[pair] = v;
        if (table.kind == MatrixKind::Ddm) {
            view.cells[{pair.second, pair.first}] = v;
        }
    }
    std::set<std::string> rowNames;
    std::set<std::string> colNames;
    for (const auto& [pair, v] : view.cells) {
        rowNames.insert(pair.first);
        colNames.insert(pair.second);
    }
    for (const auto& id : table.services.ids()) {
        if (rowNames.count(id.name) != 0) {
            view.rows.push_back(id);
        }
        if (colNames.count(id.name) != 0) {
            view.cols.push_back(id);
        }
    }
    return view;
}

// ---------------------------------------------------------------------------

std::vector<HotspotRow> hotspots(const SystemIR& ir, const std::vector<EndpointMatch>& matches, int minCalls) {
    if (minCalls < 0) {
        throw Error(ErrorKind::Config, "minCalls must be >= 0");
    }
    std::map<std::size_t, std::pair<int, std::set<std::string>>> byEndpoint;
    for (const auto& m : matches) {
        auto& [count, callers] = byEndpoint[m.endpoint];
        ++count;
        callers.insert(ir.calls.at(m.call).caller);
    }
    std::vector<HotspotRow> rows;
    for (const auto& [ep, info] : byEndpoint) {
        if (info.first > minCalls) {
            rows.push_back(HotspotRow{ep, info.first, static_cast<int>(info.second.size())});
        }
    }
    std::vector<std::string> rendered(ir.endpoints.size());
    for (const auto& r : rows) {
        rendered[r.endpoint] = ir.endpoints[r.endpoint].path.render();
    }
    std::sort(rows.begin(), rows.end(), [&](const HotspotRow& x, const HotspotRow& y) {
        const auto& ex = ir.endpoints[x.endpoint];
        const auto& ey = ir.endpoints[y.endpoint];
        if (x.callCount != y.callCount) {
            return x.callCount > y.callCount;
        }
        return std::make_tuple(std::cref(ex.service), std::cref(rendered[x.endpoint]), ex.method.str(), x.endpoint) <
               std::make_tuple(std::cref(ey.service), std::cref(rendered[y.endpoint]), ey.method.str(), y.endpoint);
    });
    return rows;
}

} // namespace svcdep
