#include "svcdep/match.hpp"
#include "svcdep/parallel.hpp"

#include <algorithm>
#include <numeric>

namespace svcdep {

namespace {

bool entity_less(const EntityDef& a, const EntityDef& b) {
    if (a.service != b.service) {
        return a.service < b.service;
    }
    return a.name < b.name;
}

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent_[std::max(a, b)] = std::min(a, b);
        }
    }

private:
    std::vector<std::size_t> parent_;
};

} // namespace

int matched_field_count(const EntityDef& a, const EntityDef& b, double threshold, const SynonymDictionary& dict) {
    std::vector<bool> used(b.fields.size(), false);
    int count = 0;
    for (const auto& fa : a.fields) {
        const std::string ta = erase_generics(fa.typeName);
        for (std::size_t j = 0; j < b.fields.size(); ++j) {
            if (used[j] || erase_generics(b.fields[j].typeName) != ta) {
                continue;
            }
            if (name_similarity(fa.name, b.fields[j].name, dict) >= threshold) {
                used[j] = true;
                ++count;
                break;
            }
        }
    }
    return count;
}

EntityEquivalence build_equivalence(const SystemIR& ir, const std::vector<EntityMatch>& matches) {
    DisjointSets sets(ir.entities.size());
    std::vector<bool> matched(ir.entities.size(), false);
    for (const auto& m : matches) {
        sets.unite(m.a, m.b);
        matched[m.a] = true;
        matched[m.b] = true;
    }
    std::map<std::size_t, std::vector<std::size_t>> byRoot;
    for (std::size_t i = 0; i < ir.entities.size(); ++i) {
        if (matched[i]) {
            byRoot[sets.find(i)].push_back(i);
        }
    }
    auto less = [&](std::size_t x, std::size_t y) {
        if (entity_less(ir.entities[x], ir.entities[y])) return true;
        if (entity_less(ir.entities[y], ir.entities[x])) return false;
        return x < y;
    };
    EntityEquivalence eq;
    for (auto& [root, members] : byRoot) {
        std::sort(members.begin(), members.end(), less);
        eq.classes.push_back(EquivalenceClass{members.front(), std::move(members)});
    }
    std::sort(eq.classes.begin(), eq.classes.end(),
              [&](const EquivalenceClass& x, const EquivalenceClass& y) {
                  return less(x.representative, y.representative);
              });
    for (std::size_t c = 0; c < eq.classes.size(); ++c) {
        for (auto m : eq.classes[c].members) {
            eq.classOf[m] = c;
        }
    }
    return eq;
}

EntityMatching match_entities(const SystemIR& ir, const SimilarityConfig& cfg, const SynonymDictionary& dict,
                              Execution execution) {
    const auto& ents = ir.entities;
    // Row i holds the matches (i, j) for j > i.
    std::vector<std::vector<EntityMatch>> rows(ents.size());
    for_each_index(ents.size(), execution == Execution::Parallel, [&](std::size_t i) {
        for (std::size_t j = i + 1; j < ents.size(); ++j) {
            if (ents[i].service == ents[j].service) {
                continue;
            }
            const double score = name_similarity(ents[i].name, ents[j].name, dict);
            if (score < cfg.threshold) {
                continue;
            }
            std::size_t a = i;
            std::size_t b = j;
            if (entity_less(ents[b], ents[a])) {
                std::swap(a, b);
            }
            const int fields = matched_field_count(ents[a], ents[b], cfg.threshold, dict);
            const bool fieldless = ents[a].fields.empty() || ents[b].fields.empty();
            if (!fieldless && fields < cfg.minFieldMatches) {
                continue;
            }
            rows[i].push_back(EntityMatch{a, b, score, fields});
        }
    });

    EntityMatching out;
    for (auto& row : rows) {
        out.matches.insert(out.matches.end(), row.begin(), row.end());
    }
    std::sort(out.matches.begin(), out.matches.end(), [&](const EntityMatch& x, const EntityMatch& y) {
        const auto kx = std::tie(ents[x.a].service, ents[x.a].name, ents[x.b].service, ents[x.b].name);
        const auto ky = std::tie(ents[y.a].service, ents[y.a].name, ents[y.b].service, ents[y.b].name);
        if (kx != ky) {
            return kx < ky;
        }
        return std::tie(x.a, x.b) < std::tie(y.a, y.b);
    });
    out.equivalence = build_equivalence(ir, out.matches);
    return out;
}

} // namespace svcdep
