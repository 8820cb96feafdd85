#include "svcdep/java_lexer.hpp"

#include <array>
#include <cctype>

namespace svcdep::java {

namespace {

bool ident_start(unsigned char c) { return std::isalpha(c) || c == '_' || c == '$' || c >= 0x80; }
bool ident_part(unsigned char c) { return std::isalnum(c) || c == '_' || c == '$' || c >= 0x80; }

constexpr std::array<std::string_view, 19> kMultiPunct{
    "...", "::", "->", "==", "!=", "<=", ">=", "&&", "||", "++",
    "--", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=",
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (c == '\n') {
                ++line_;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else if (c == '/' && peek(1) == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n') {
                    ++pos_;
                }
            } else if (c == '/' && peek(1) == '*') {
                block_comment();
            } else if (c == '"') {
                if (peek(1) == '"' && peek(2) == '"') {
                    text_block();
                } else {
                    quoted('"', TokKind::String);
                }
            } else if (c == '\'') {
                quoted('\'', TokKind::Char);
            } else if (ident_start(static_cast<unsigned char>(c))) {
                const std::size_t start = pos_;
                while (pos_ < src_.size() && ident_part(static_cast<unsigned char>(src_[pos_]))) {
                    ++pos_;
                }
                emit(TokKind::Identifier, std::string(src_.substr(start, pos_ - start)), line_);
            } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                       (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
                number();
            } else {
                punct();
            }
        }
        emit(TokKind::End, "", line_);
        return std::move(out_);
    }

private:
    char peek(std::size_t ahead) const {
        return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
    }

    void emit(TokKind kind, std::string text, int line) { out_.push_back(Token{kind, std::move(text), line}); }

    void block_comment() {
        pos_ += 2;
        while (pos_ < src_.size() && !(src_[pos_] == '*' && peek(1) == '/')) {
            if (src_[pos_] == '\n') {
                ++line_;
            }
            ++pos_;
        }
        pos_ = pos_ < src_.size() ? pos_ + 2 : src_.size();
    }

    void escape(std::string& value) {
        const char e = peek(1);
        pos_ += 2;
        switch (e) {
        case 'n': value += '\n'; break;
        case 't': value += '\t'; break;
        case 'r': value += '\r'; break;
        case 'b': value += '\b'; break;
        case 'f': value += '\f'; break;
        case 's': value += ' '; break;
        case '0': value += '\0'; break;
        case '\0': break;
        default: value += e; break;
        }
    }

    void quoted(char quote, TokKind kind) {
        const int line = line_;
        ++pos_;
        std::string value;
        while (pos_ < src_.size() && src_[pos_] != quote && src_[pos_] != '\n') {
            if (src_[pos_] == '\\') {
                escape(value);
            } else {
                value += src_[pos_++];
            }
        }
        if (pos_ < src_.size() && src_[pos_] == quote) {
            ++pos_;
        }
        emit(kind, std::move(value), line);
    }

    void text_block() {
        const int line = line_;
        pos_ += 3;
        while (pos_ < src_.size() && src_[pos_] != '\n') {
            ++pos_;
        }
        std::string value;
        while (pos_ < src_.size() && !(src_[pos_] == '"' && peek(1) == '"' && peek(2) == '"')) {
            if (src_[pos_] == '\n') {
                ++line_;
            }
            if (src_[pos_] == '\\') {
                escape(value);
            } else {
                value += src_[pos_++];
            }
        }
        pos_ = pos_ < src_.size() ? pos_ + 3 : src_.size();
        if (!value.empty() && value.front() == '\n') {
            value.erase(0, 1);
        }
        emit(TokKind::String, std::move(value), line);
    }

    void number() {
        const std::size_t start = pos_;
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.') {
                ++pos_;
            } else if ((c == '+' || c == '-') && pos_ > start &&
                       (src_[pos_ - 1] == 'e' || src_[pos_ - 1] == 'E')) {
                ++pos_;
            } else {
                break;
            }
        }
        emit(TokKind::Number, std::string(src_.substr(start, pos_ - start)), line_);
    }

    void punct() {
        for (auto p : kMultiPunct) {
            if (src_.substr(pos_, p.size()) == p) {
                emit(TokKind::Punct, std::string(p), line_);
                pos_ += p.size();
                return;
            }
        }
        emit(TokKind::Punct, std::string(1, src_[pos_]), line_);
        ++pos_;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    std::vector<Token> out_;
};

} // namespace

std::vector<Token> tokenize(std::string_view source) { return Lexer(source).run(); }

} // namespace svcdep::java
