#include "svcdep/error.hpp"
#include "svcdep/ir_io.hpp"
#include "svcdep/match.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace svcdep {

std::vector<std::string> tokenize_name(std::string_view name) {
    std::vector<std::string> tokens;
    std::string current;
    auto flush = [&] {
        if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    };
    auto lower = [](char c) { return static_cast<char>(std::tolower(static_cast<unsigned char>(c))); };
    for (std::size_t i = 0; i < name.size(); ++i) {
        const auto c = static_cast<unsigned char>(name[i]);
        if (!std::isalnum(c)) {
            flush();
            continue;
        }
        if (!current.empty()) {
            const auto prev = static_cast<unsigned char>(name[i - 1]);
            const bool next_lower = i + 1 < name.size() && std::islower(static_cast<unsigned char>(name[i + 1]));
            if (std::isupper(c) && (std::islower(prev) || std::isdigit(prev))) {
                flush(); // fooBar, foo1Bar
            } else if (std::isupper(c) && std::isupper(prev) && next_lower) {
                flush(); // DTOList -> DTO | List
            } else if (std::isdigit(c) != std::isdigit(prev) && std::isalpha(prev) != 0 && std::isdigit(c)) {
                flush(); // travel2 -> travel | 2
            }
        }
        current += lower(name[i]);
    }
    flush();
    return tokens;
}

std::size_t levenshtein(std::string_view a, std::string_view b) {
    if (a.size() < b.size()) {
        std::swap(a, b);
    }
    std::vector<std::size_t> row(b.size() + 1);
    std::iota(row.begin(), row.end(), std::size_t{0});
    for (std::size_t i = 1; i <= a.size(); ++i) {
        std::size_t diag = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const std::size_t up = row[j];
            const std::size_t cost = a[i - 1] == b[j - 1] ? 0 : 1;
            row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + cost});
            diag = up;
        }
    }
    return row[b.size()];
}

// ---------------------------------------------------------------------------

namespace {

std::string trim(std::string_view s) {
    const auto* ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(ws);
    return std::string(s.substr(b, e - b + 1));
}

std::string join(const std::vector<std::string>& tokens) {
    std::string out;
    for (const auto& t : tokens) {
        out += t;
    }
    return out;
}

} // namespace

void SynonymDictionary::add_set(const std::vector<std::string>& words) {
    const int id = next_++;
    for (const auto& w : words) {
        const std::string key = join(tokenize_name(w));
        if (key.empty()) {
            continue;
        }
        auto& ids = sets_[key];
        if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
            ids.push_back(id);
        }
    }
}

SynonymDictionary SynonymDictionary::parse(std::string_view text) {
    SynonymDictionary dict;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        const std::string trimmed = trim(line);
        if (trimmed.empty() || trimmed.front() == '#') {
            continue;
        }
        std::vector<std::string> words;
        std::istringstream fields(trimmed);
        std::string word;
        while (std::getline(fields, word, ',')) {
            if (auto w = trim(word); !w.empty()) {
                words.push_back(std::move(w));
            }
        }
        if (words.size() > 1) {
            dict.add_set(words);
        }
    }
    return dict;
}

SynonymDictionary SynonymDictionary::load(const std::filesystem::path& file) {
    try {
        return parse(read_text_file(file));
    } catch (const Error& e) {
        throw Error(ErrorKind::Config, std::string("synonym dictionary: ") + e.what());
    }
}

bool SynonymDictionary::synonyms(std::string_view a, std::string_view b) const {
    if (a == b) {
        return true;
    }
    auto ia = sets_.find(std::string(a));
    auto ib = sets_.find(std::string(b));
    if (ia == sets_.end() || ib == sets_.end()) {
        return false;
    }
    for (int id : ia->second) {
        if (std::find(ib->second.begin(), ib->second.end(), id) != ib->second.end()) {
            return true;
        }
    }
    return false;
}

double name_similarity(std::string_view a, std::string_view b, const SynonymDictionary& dict) {
    if (a.empty() || b.empty()) {
        throw Error(ErrorKind::InvalidName, "name_similarity: empty name");
    }
    const auto ta = tokenize_name(a);
    const auto tb = tokenize_name(b);
    if (ta == tb) {
        return 1.0;
    }
    const std::string ja = join(ta);
    const std::string jb = join(tb);
    if (!dict.empty()) {
        if (dict.synonyms(ja, jb)) {
            return 1.0;
        }
        if (ta.size() == tb.size()) {
            bool all = true;
            for (std::size_t i = 0; i < ta.size() && all; ++i) {
                all = dict.synonyms(ta[i], tb[i]);
            }
            if (all) {
                return 1.0;
            }
        }
    }
    const std::size_t longest = std::max(ja.size(), jb.size());
    if (longest == 0) {
        return 1.0;
    }
    return 1.0 - static_cast<double>(levenshtein(ja, jb)) / static_cast<double>(longest);
}

} // namespace svcdep
