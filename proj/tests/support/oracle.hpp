#pragma once

#include "svcdep/model.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace svcdep::testing {

// Brute-force reference for call resolution. Shares no code with the
// library matcher beyond the IR types.
struct OracleOutcome {
    enum class Kind { Matched, Unmatched, Unresolvable };

    Kind kind = Kind::Unmatched;
    std::size_t endpoint = 0;
    int specificity = 0;
    bool ambiguous = false;
};

std::vector<OracleOutcome> oracle_resolve(const SystemIR& ir,
                                          const std::map<std::string, std::string>& extraPatterns = {});

// Per-pair call counts from oracle outcomes.
std::map<ServicePair, int> oracle_edm(const SystemIR& ir, const std::vector<OracleOutcome>& outcomes,
                                      bool includeAmbiguous = true);

// Textbook two-row edit distance.
std::size_t oracle_levenshtein(const std::string& a, const std::string& b);

} // namespace svcdep::testing
