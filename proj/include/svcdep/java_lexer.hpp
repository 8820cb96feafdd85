#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace svcdep::java {

enum class TokKind { Identifier, String, Char, Number, Punct, End };

struct Token {
    TokKind kind = TokKind::End;
    // Identifiers and punctuation keep their spelling; string literals hold
    // the decoded contents without quotes.
    std::string text;
    int line = 0;

    bool is(TokKind k) const noexcept { return kind == k; }
    bool is_punct(std::string_view p) const noexcept { return kind == TokKind::Punct && text == p; }
    bool is_ident(std::string_view s) const noexcept { return kind == TokKind::Identifier && text == s; }
};

// Comments are dropped. Unterminated literals end at end of line; the lexer
// never fails. The returned vector always ends with an End token.
std::vector<Token> tokenize(std::string_view source);

} // namespace svcdep::java
