#pragma once

#include "svcdep/model.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace svcdep {

struct NormalizedPath {
    PathTemplate path;
    // Lowercased host without scheme or port; empty when none was visible.
    std::string host;
    // Placeholder name for each Variable segment, in order ("" for holes).
    std::vector<std::string> variableNames;
    // The URL began with a dynamic expression standing in for scheme+host.
    bool dynamicHost = false;
};

// Strips scheme/host, query string and fragment; splits on '/' and drops
// empty segments. `{name}` becomes Variable("name"), `{name:type}` becomes
// Variable("type"), a segment mixing text and placeholders becomes
// Variable("unknown"). Throws InvalidPath when nothing is left.
NormalizedPath normalize_path(std::string_view raw);

// Same rules applied to a call URL; each Hole becomes a Variable tagged with
// the hole's inferred type.
NormalizedPath normalize_path(const std::vector<UrlPart>& url);

// Joins a class-level and a method-level path the way framework annotations
// combine them: "/a/" + "b" -> "/a/b".
std::string join_paths(std::string_view prefix, std::string_view suffix);

// "List<String>" -> "List", "java.util.UUID" -> "java.util.UUID".
std::string erase_generics(std::string_view type);

// "java.util.List<X>" -> "List".
std::string simple_type_name(std::string_view type);

} // namespace svcdep
