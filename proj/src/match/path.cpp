#include "svcdep/path.hpp"

#include "svcdep/error.hpp"

#include <algorithm>
#include <cctype>

namespace svcdep {

namespace {

// Holes are carried through string processing as this control character.
constexpr char kHole = '\x01';

bool starts_with_icase(std::string_view s, std::string_view prefix) {
    if (s.size() < prefix.size()) {
        return false;
    }
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        if (std::tolower(static_cast<unsigned char>(s[i])) != prefix[i]) {
            return false;
        }
    }
    return true;
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

// `text` uses kHole markers; `holeTypes[i]` is the type of the i-th marker.
NormalizedPath normalize_marked(std::string text, const std::vector<std::string>& holeTypes,
                                std::string_view original) {
    NormalizedPath out;

    // Map each marker position to its hole ordinal before any slicing.
    std::vector<std::size_t> holeIndexAt(text.size(), 0);
    for (std::size_t i = 0, h = 0; i < text.size(); ++i) {
        if (text[i] == kHole) {
            holeIndexAt[i] = h++;
        }
    }

    std::size_t begin = 0;
    std::size_t end = text.find_first_of("?#");
    if (end == std::string::npos) {
        end = text.size();
    }

    if (starts_with_icase(text, "http://") || starts_with_icase(text, "https://")) {
        begin = text.find("://") + 3;
        std::size_t slash = text.find('/', begin);
        if (slash == std::string::npos || slash > end) {
            slash = end;
        }
        std::string host = text.substr(begin, slash - begin);
        if (host.find(kHole) != std::string::npos) {
            out.dynamicHost = true;
        } else {
            if (auto at = host.rfind('@'); at != std::string::npos) {
                host.erase(0, at + 1);
            }
            if (auto colon = host.find(':'); colon != std::string::npos) {
                host.erase(colon);
            }
            out.host = lower(host);
        }
        begin = slash;
    } else if (!text.empty() && text.front() == kHole && text.size() > 1 && (text[1] == '/' || text[1] == ':')) {
        // baseUrl + "/api/..." : the leading expression is the origin.
        out.dynamicHost = true;
        begin = text.find('/', 1);
        if (begin == std::string::npos || begin > end) {
            begin = end;
        }
    }

    std::vector<std::pair<std::size_t, std::size_t>> pieces;
    std::size_t pos = begin;
    while (pos < end) {
        std::size_t slash = text.find('/', pos);
        if (slash == std::string::npos || slash > end) {
            slash = end;
        }
        if (slash > pos) {
            pieces.emplace_back(pos, slash);
        }
        pos = slash + 1;
    }

    for (std::size_t p = 0; p < pieces.size(); ++p) {
        const auto [s, e] = pieces[p];
        const std::string_view seg(text.data() + s, e - s);
        if (seg == "**" && p + 1 == pieces.size()) {
            out.path.hasTrailingWildcard = true;
            continue;
        }
        const auto holes = std::count(seg.begin(), seg.end(), kHole);
        if (holes == 1 && seg.size() == 1) {
            out.path.segments.push_back(PathSegment::variable(holeTypes.at(holeIndexAt[s])));
            out.variableNames.emplace_back();
            continue;
        }
        if (seg.size() >= 2 && seg.front() == '{' && seg.back() == '}' && holes == 0 &&
            seg.find('{', 1) == std::string_view::npos) {
            const std::string_view inner = seg.substr(1, seg.size() - 2);
            const auto colon = inner.find(':');
            if (colon == std::string_view::npos) {
                out.path.segments.push_back(PathSegment::variable(std::string(inner)));
                out.variableNames.emplace_back(inner);
            } else {
                out.path.segments.push_back(PathSegment::variable(std::string(inner.substr(colon + 1))));
                out.variableNames.emplace_back(inner.substr(0, colon));
            }
            continue;
        }
        if (holes > 0 || seg.find('{') != std::string_view::npos) {
            out.path.segments.push_back(PathSegment::variable(std::string(kUnknownType)));
            out.variableNames.emplace_back();
            continue;
        }
        out.path.segments.push_back(PathSegment::literal(std::string(seg)));
    }

    if (out.path.segments.empty() && !out.path.hasTrailingWildcard) {
        throw Error(ErrorKind::InvalidPath, "path '" + std::string(original) + "' is empty after normalization");
    }
    return out;
}

} // namespace

NormalizedPath normalize_path(std::string_view raw) {
    return normalize_marked(std::string(raw), {}, raw);
}

NormalizedPath normalize_path(const std::vector<UrlPart>& url) {
    std::string text;
    std::string display;
    std::vector<std::string> holeTypes;
    for (const auto& part : url) {
        if (part.is_literal()) {
            text += part.text;
            display += part.text;
        } else {
            text += kHole;
            holeTypes.push_back(part.text);
            display += "<" + part.text + ">";
        }
    }
    // URI-template variables inside literals ("/users/{id}") are holes too;
    // normalize_marked handles them as placeholders of unknown type.
    auto out = normalize_marked(std::move(text), holeTypes, display);
    std::size_t var = 0;
    for (auto& seg : out.path.segments) {
        if (seg.is_variable() && !out.variableNames[var++].empty()) {
            seg.text = std::string(kUnknownType);
        }
    }
    return out;
}

std::string join_paths(std::string_view prefix, std::string_view suffix) {
    std::string out(prefix);
    while (!out.empty() && out.back() == '/') {
        out.pop_back();
    }
    std::string_view rest = suffix;
    while (!rest.empty() && rest.front() == '/') {
        rest.remove_prefix(1);
    }
    out += '/';
    out += rest;
    while (out.size() > 1 && out.back() == '/') {
        out.pop_back();
    }
    if (out.empty() || out.front() != '/') {
        out.insert(out.begin(), '/');
    }
    return out;
}

std::string erase_generics(std::string_view type) {
    std::string out;
    int depth = 0;
    for (char c : type) {
        if (c == '<') {
            ++depth;
        } else if (c == '>') {
            depth = std::max(0, depth - 1);
        } else if (depth == 0 && !std::isspace(static_cast<unsigned char>(c))) {
            out += c;
        }
    }
    return out;
}

std::string simple_type_name(std::string_view type) {
    std::string erased = erase_generics(type);
    if (auto dot = erased.rfind('.'); dot != std::string::npos) {
        erased.erase(0, dot + 1);
    }
    return erased;
}

} // namespace svcdep
