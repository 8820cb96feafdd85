#include "svcdep/error.hpp"
#include "svcdep/frontend.hpp"
#include "svcdep/ir_io.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace fs = std::filesystem;

namespace svcdep {

using java::TokKind;
using java::Token;

bool ClassDecl::has_annotation(std::string_view n) const { return annotation(n) != nullptr; }

const AnnotationSite* ClassDecl::annotation(std::string_view n) const {
    for (const auto& a : annotations) {
        if (a.name == n) {
            return &a;
        }
    }
    return nullptr;
}

namespace {

constexpr std::array<std::string_view, 14> kModifiers{
    "public", "protected", "private", "static", "abstract", "final", "native", "synchronized",
    "transient", "volatile", "strictfp", "default", "sealed", "non-sealed"};

constexpr std::array<std::string_view, 4> kTypeKeywords{"class", "interface", "enum", "record"};

bool is_modifier(const Token& t) {
    return t.is(TokKind::Identifier) &&
           std::find(kModifiers.begin(), kModifiers.end(), t.text) != kModifiers.end();
}

bool is_type_keyword(const Token& t) {
    return t.is(TokKind::Identifier) &&
           std::find(kTypeKeywords.begin(), kTypeKeywords.end(), t.text) != kTypeKeywords.end();
}

std::string quote(const Token& t) {
    if (t.is(TokKind::String)) {
        std::string out = "\"";
        for (char c : t.text) {
            if (c == '"' || c == '\\') {
                out += '\\';
            }
            out += c;
        }
        return out + "\"";
    }
    if (t.is(TokKind::Char)) {
        return "'" + t.text + "'";
    }
    return t.text;
}

// Space only between two word-like tokens.
std::string join_tokens(const std::vector<Token>& toks, std::size_t b, std::size_t e) {
    std::string out;
    for (std::size_t i = b; i < e; ++i) {
        const bool word = toks[i].is(TokKind::Identifier) || toks[i].is(TokKind::Number);
        if (i > b && word && (toks[i - 1].is(TokKind::Identifier) || toks[i - 1].is(TokKind::Number))) {
            out += ' ';
        }
        out += quote(toks[i]);
    }
    return out;
}

class Parser {
public:
    Parser(std::vector<Token> toks, std::string service, std::string file, std::vector<Warning>& warnings)
        : t_(std::move(toks)), service_(std::move(service)), file_(std::move(file)), warnings_(warnings) {}

    std::vector<ClassDecl> parse_file() {
        std::vector<ClassDecl> out;
        std::vector<AnnotationSite> pending;
        while (!at_end()) {
            const Token& tok = cur();
            if (tok.is_ident("package") || tok.is_ident("import")) {
                skip_past(";");
            } else if (tok.is_punct("@") && peek(1).is_ident("interface")) {
                pos_ += 2;
                skip_type_decl();
                pending.clear();
            } else if (tok.is_punct("@")) {
                pending.push_back(parse_annotation(AttachTarget::Class));
            } else if (is_modifier(tok)) {
                ++pos_;
            } else if (tok.is_ident("non") && peek(1).is_punct("-") && peek(2).is_ident("sealed")) {
                pos_ += 3;
            } else if (is_type_keyword(tok) && peek(1).is(TokKind::Identifier)) {
                if (auto decl = parse_type_decl(std::move(pending))) {
                    out.push_back(std::move(*decl));
                }
                pending.clear();
            } else if (tok.is_punct(";")) {
                ++pos_;
            } else {
                warn("unparseable-region", "skipped unexpected token '" + tok.text + "'", tok.line);
                recover_top_level();
                pending.clear();
            }
        }
        return out;
    }

private:
    // ---- token access -------------------------------------------------
    const Token& cur() const { return t_[pos_]; }
    const Token& peek(std::size_t n) const {
        return pos_ + n < t_.size() ? t_[pos_ + n] : t_.back();
    }
    bool at_end() const { return t_[pos_].is(TokKind::End); }

    void warn(const std::string& code, const std::string& msg, int line) {
        warnings_.push_back(Warning{code, msg, service_, SourceLoc{file_, line}});
    }

    void skip_past(std::string_view punct) {
        while (!at_end() && !cur().is_punct(punct)) {
            ++pos_;
        }
        if (!at_end()) {
            ++pos_;
        }
    }

    // Positioned on an opening bracket; returns the index of its match (or
    // the End token) and leaves pos_ just past it.
    std::size_t skip_balanced(std::string_view open, std::string_view close) {
        int depth = 0;
        while (!at_end()) {
            if (cur().is_punct(open)) {
                ++depth;
            } else if (cur().is_punct(close)) {
                if (--depth == 0) {
                    return pos_++;
                }
            }
            ++pos_;
        }
        return pos_;
    }

    void recover_top_level() {
        while (!at_end()) {
            if (cur().is_punct(";")) {
                ++pos_;
                return;
            }
            if (cur().is_punct("{")) {
                skip_balanced("{", "}");
                return;
            }
            if (is_type_keyword(cur()) || cur().is_punct("@")) {
                return;
            }
            ++pos_;
        }
    }

    // ---- annotations --------------------------------------------------
    AnnotationSite parse_annotation(AttachTarget target) {
        AnnotationSite site;
        site.attachedTo = target;
        site.sourceLoc = SourceLoc{file_, cur().line};
        ++pos_; // '@'
        while (cur().is(TokKind::Identifier)) {
            site.name = cur().text;
            ++pos_;
            if (cur().is_punct(".") && peek(1).is(TokKind::Identifier)) {
                ++pos_;
            } else {
                break;
            }
        }
        if (!cur().is_punct("(")) {
            return site;
        }
        const std::size_t open = pos_;
        const std::size_t close = skip_balanced("(", ")");
        // Split by top-level commas into `key = value` or a bare default value.
        std::size_t start = open + 1;
        int depth = 0;
        for (std::size_t i = open + 1; i <= close; ++i) {
            const Token& tk = t_[i];
            if (i == close || (depth == 0 && tk.is_punct(","))) {
                if (i > start) {
                    std::string key;
                    std::size_t vb = start;
                    if (t_[start].is(TokKind::Identifier) && start + 1 < i && t_[start + 1].is_punct("=")) {
                        key = t_[start].text;
                        vb = start + 2;
                    }
                    site.args[key] = join_tokens(t_, vb, i);
                    site.argTokens[key] = std::vector<Token>(t_.begin() + static_cast<std::ptrdiff_t>(vb),
                                                             t_.begin() + static_cast<std::ptrdiff_t>(i));
                }
                start = i + 1;
                continue;
            }
            if (tk.is_punct("(") || tk.is_punct("{") || tk.is_punct("[")) {
                ++depth;
            } else if (tk.is_punct(")") || tk.is_punct("}") || tk.is_punct("]")) {
                --depth;
            }
        }
        return site;
    }

    std::vector<AnnotationSite> parse_annotations(AttachTarget target) {
        std::vector<AnnotationSite> out;
        while (cur().is_punct("@") && !peek(1).is_ident("interface")) {
            out.push_back(parse_annotation(target));
        }
        return out;
    }

    // ---- types --------------------------------------------------------
    // Parses `a.b.C<...>[]`; returns false (pos_ unchanged) if no type here.
    bool parse_type(std::string& out) {
        const std::size_t start = pos_;
        parse_annotations(AttachTarget::Field); // type-use annotations
        if (!cur().is(TokKind::Identifier) || is_type_keyword(cur())) {
            pos_ = start;
            return false;
        }
        const std::size_t typeStart = pos_;
        for (;;) {
            if (!cur().is(TokKind::Identifier)) {
                pos_ = start;
                return false;
            }
            ++pos_;
            if (cur().is_punct("<")) {
                int depth = 0;
                while (!at_end()) {
                    if (cur().is_punct("<")) {
                        ++depth;
                    } else if (cur().is_punct(">")) {
                        if (--depth == 0) {
                            ++pos_;
                            break;
                        }
                    } else if (cur().is_punct(";") || cur().is_punct("{") || cur().is_punct("(")) {
                        pos_ = start;
                        return false;
                    }
                    ++pos_;
                }
            }
            if (cur().is_punct(".") && peek(1).is(TokKind::Identifier)) {
                ++pos_;
                continue;
            }
            break;
        }
        while (cur().is_punct("[") && peek(1).is_punct("]")) {
            pos_ += 2;
        }
        out = join_tokens(t_, typeStart, pos_);
        return true;
    }

    // ---- declarations -------------------------------------------------
    void skip_type_decl() {
        while (!at_end() && !cur().is_punct("{") && !cur().is_punct(";")) {
            if (cur().is_punct("(")) {
                skip_balanced("(", ")");
            } else {
                ++pos_;
            }
        }
        if (cur().is_punct("{")) {
            skip_balanced("{", "}");
        } else if (!at_end()) {
            ++pos_;
        }
    }

    std::optional<ClassDecl> parse_type_decl(std::vector<AnnotationSite> annotations) {
        ClassDecl decl;
        decl.service = service_;
        const std::string& kw = cur().text;
        decl.kind = kw == "interface" ? TypeKind::Interface
                    : kw == "enum"    ? TypeKind::Enum
                    : kw == "record"  ? TypeKind::Record
                                      : TypeKind::Class;
        decl.sourceLoc = SourceLoc{file_, annotations.empty() ? cur().line : annotations.front().sourceLoc.line};
        ++pos_;
        decl.name = cur().text;
        ++pos_;
        decl.annotations = std::move(annotations);

        if (cur().is_punct("<")) {
            int depth = 0;
            do {
                if (cur().is_punct("<")) ++depth;
                if (cur().is_punct(">")) --depth;
                ++pos_;
            } while (!at_end() && depth > 0);
        }
        if (decl.kind == TypeKind::Record && cur().is_punct("(")) {
            parse_record_components(decl);
        }
        while (!at_end() && !cur().is_punct("{")) {
            if (cur().is_punct(";")) {
                warn("unparseable-region", "type '" + decl.name + "' has no body", cur().line);
                ++pos_;
                return decl;
            }
            ++pos_;
        }
        if (at_end()) {
            warn("unparseable-region", "type '" + decl.name + "' has no body", t_.back().line);
            return decl;
        }
        ++pos_; // '{'
        parse_body(decl);
        return decl;
    }

    void parse_record_components(ClassDecl& decl) {
        ++pos_; // '('
        while (!at_end() && !cur().is_punct(")")) {
            parse_annotations(AttachTarget::Field);
            std::string type;
            if (!parse_type(type)) {
                ++pos_;
                continue;
            }
            if (cur().is_punct("...")) {
                type += "...";
                ++pos_;
            }
            if (cur().is(TokKind::Identifier)) {
                decl.fields.push_back(EntityField{cur().text, type});
                ++pos_;
            }
            if (cur().is_punct(",")) {
                ++pos_;
            }
        }
        if (!at_end()) {
            ++pos_;
        }
    }

    void skip_enum_constants() {
        while (!at_end() && !cur().is_punct(";") && !cur().is_punct("}")) {
            if (cur().is_punct("(")) {
                skip_balanced("(", ")");
            } else if (cur().is_punct("{")) {
                skip_balanced("{", "}");
            } else {
                ++pos_;
            }
        }
        if (cur().is_punct(";")) {
            ++pos_;
        }
    }

    // Called just past '{'; consumes through the matching '}'.
    void parse_body(ClassDecl& decl) {
        if (decl.kind == TypeKind::Enum) {
            skip_enum_constants();
        }
        std::vector<AnnotationSite> pending;
        bool isStatic = false;
        bool isFinal = false;
        auto reset = [&] {
            pending.clear();
            isStatic = false;
            isFinal = false;
        };
        while (!at_end()) {
            const Token& tok = cur();
            if (tok.is_punct("}")) {
                ++pos_;
                return;
            }
            if (tok.is_punct(";")) {
                ++pos_;
                reset();
            } else if (tok.is_punct("@") && peek(1).is_ident("interface")) {
                pos_ += 2;
                skip_type_decl();
                reset();
            } else if (tok.is_punct("@")) {
                pending.push_back(parse_annotation(AttachTarget::Method));
            } else if (is_modifier(tok)) {
                isStatic = isStatic || tok.text == "static";
                isFinal = isFinal || tok.text == "final";
                ++pos_;
            } else if (tok.is_ident("non") && peek(1).is_punct("-") && peek(2).is_ident("sealed")) {
                pos_ += 3;
            } else if (is_type_keyword(tok) && peek(1).is(TokKind::Identifier)) {
                // Member types are not top-level declarations.
                skip_type_decl();
                reset();
            } else if (tok.is_punct("{")) {
                skip_balanced("{", "}");
                reset();
            } else if (tok.is_punct("<")) {
                int depth = 0;
                do {
                    if (cur().is_punct("<")) ++depth;
                    if (cur().is_punct(">")) --depth;
                    ++pos_;
                } while (!at_end() && depth > 0);
            } else if (!parse_member(decl, pending, isStatic, isFinal)) {
                warn("unparseable-region", "skipped member near '" + tok.text + "' in " + decl.name, tok.line);
                recover_member();
                reset();
            } else {
                reset();
            }
        }
        warn("unparseable-region", "unterminated body of " + decl.name, t_.back().line);
    }

    void recover_member() {
        while (!at_end()) {
            if (cur().is_punct(";")) {
                ++pos_;
                return;
            }
            if (cur().is_punct("{")) {
                skip_balanced("{", "}");
                return;
            }
            if (cur().is_punct("}")) {
                return;
            }
            if (cur().is_punct("(")) {
                skip_balanced("(", ")");
                continue;
            }
            ++pos_;
        }
    }

    bool parse_member(ClassDecl& decl, std::vector<AnnotationSite>& pending, bool isStatic, bool isFinal) {
        const std::size_t start = pos_;
        const int line = cur().line;
        // Constructor: Name '('
        if (cur().is_ident(decl.name) && peek(1).is_punct("(")) {
            ++pos_;
            return parse_method(decl, pending, decl.name, "", line);
        }
        std::string type;
        if (!parse_type(type)) {
            pos_ = start;
            return false;
        }
        if (!cur().is(TokKind::Identifier)) {
            pos_ = start;
            return false;
        }
        std::string name = cur().text;
        ++pos_;
        if (cur().is_punct("(")) {
            return parse_method(decl, pending, name, type, line);
        }
        // One or more field declarators.
        for (;;) {
            FieldDecl field;
            field.name = name;
            field.typeName = type;
            field.isStatic = isStatic;
            field.isFinal = isFinal;
            field.line = line;
            for (auto& a : pending) {
                a.attachedTo = AttachTarget::Field;
            }
            field.annotations = pending;
            while (cur().is_punct("[") && peek(1).is_punct("]")) {
                field.typeName += "[]";
                pos_ += 2;
            }
            if (cur().is_punct("=")) {
                ++pos_;
                const std::size_t b = pos_;
                int depth = 0;
                while (!at_end()) {
                    const Token& tk = cur();
                    if (depth == 0 && (tk.is_punct(",") || tk.is_punct(";"))) {
                        break;
                    }
                    if (depth == 0 && tk.is_punct("}")) {
                        break;
                    }
                    if (tk.is_punct("(") || tk.is_punct("{") || tk.is_punct("[")) ++depth;
                    if (tk.is_punct(")") || tk.is_punct("}") || tk.is_punct("]")) --depth;
                    ++pos_;
                }
                field.initializer.assign(t_.begin() + static_cast<std::ptrdiff_t>(b),
                                         t_.begin() + static_cast<std::ptrdiff_t>(pos_));
            }
            if (!isStatic) {
                decl.fields.push_back(EntityField{field.name, field.typeName});
            }
            decl.fieldDecls.push_back(std::move(field));
            if (cur().is_punct(",") && peek(1).is(TokKind::Identifier)) {
                ++pos_;
                name = cur().text;
                ++pos_;
                continue;
            }
            if (cur().is_punct(";")) {
                ++pos_;
                return true;
            }
            return !decl.fieldDecls.empty() && cur().is_punct("}");
        }
    }

    bool parse_method(ClassDecl& decl, std::vector<AnnotationSite>& pending, const std::string& name,
                      const std::string& returnType, int line) {
        MethodDecl m;
        m.name = name;
        m.returnType = returnType;
        m.line = line;
        m.annotations = pending;
        ++pos_; // '('
        while (!at_end() && !cur().is_punct(")")) {
            ParamDecl p;
            p.annotations = parse_annotations(AttachTarget::Parameter);
            while (is_modifier(cur())) {
                ++pos_;
            }
            auto more = parse_annotations(AttachTarget::Parameter);
            p.annotations.insert(p.annotations.end(), more.begin(), more.end());
            if (!parse_type(p.typeName)) {
                // Unparseable parameter list: skip it entirely.
                while (!at_end() && !cur().is_punct(")")) {
                    if (cur().is_punct("(")) {
                        skip_balanced("(", ")");
                    } else {
                        ++pos_;
                    }
                }
                break;
            }
            if (cur().is_punct("...")) {
                p.typeName += "...";
                ++pos_;
            }
            if (cur().is(TokKind::Identifier)) {
                p.name = cur().text;
                ++pos_;
            }
            while (cur().is_punct("[") && peek(1).is_punct("]")) {
                p.typeName += "[]";
                pos_ += 2;
            }
            m.params.push_back(std::move(p));
            if (cur().is_punct(",")) {
                ++pos_;
            } else if (!cur().is_punct(")")) {
                return false;
            }
        }
        if (at_end()) {
            return false;
        }
        ++pos_; // ')'
        while (cur().is_punct("[") && peek(1).is_punct("]")) {
            pos_ += 2;
        }
        while (!at_end() && !cur().is_punct("{") && !cur().is_punct(";") && !cur().is_punct("}")) {
            // throws clause, annotation-type default values
            ++pos_;
        }
        if (cur().is_punct("{")) {
            const std::size_t open = pos_;
            const std::size_t close = skip_balanced("{", "}");
            m.hasBody = true;
            m.body.assign(t_.begin() + static_cast<std::ptrdiff_t>(open + 1),
                          t_.begin() + static_cast<std::ptrdiff_t>(close));
        } else if (cur().is_punct(";")) {
            ++pos_;
        } else {
            return false;
        }
        decl.methods.push_back(std::move(m));
        return true;
    }

    std::vector<Token> t_;
    std::size_t pos_ = 0;
    std::string service_;
    std::string file_;
    std::vector<Warning>& warnings_;
};

} // namespace

std::vector<ClassDecl> scan_source(std::string_view text, const std::string& service, const std::string& file,
                                   std::vector<Warning>& warnings) {
    return Parser(java::tokenize(text), service, file, warnings).parse_file();
}

std::vector<ClassDecl> scan_classes(const ServiceRoot& serviceRoot, const FrontendConfig& config,
                                    const fs::path& relativeTo, std::vector<Warning>& warnings) {
    std::vector<fs::path> files;
    std::error_code ec;
    fs::recursive_directory_iterator it(serviceRoot.rootDir, fs::directory_options::skip_permission_denied, ec);
    for (fs::recursive_directory_iterator end; !ec && it != end; it.increment(ec)) {
        std::error_code sec;
        if (it->is_directory(sec)) {
            const auto name = it->path().filename().string();
            if (!name.empty() && (name.front() == '.' || name == "target" || name == "build" ||
                                  name == "node_modules")) {
                it.disable_recursion_pending();
            }
            continue;
        }
        if (!it->is_regular_file(sec)) {
            continue;
        }
        const auto ext = it->path().extension().string();
        if (std::find(config.sourceExtensions.begin(), config.sourceExtensions.end(), ext) !=
            config.sourceExtensions.end()) {
            files.push_back(it->path());
        }
    }
    if (ec) {
        warnings.push_back(Warning{"unreadable-directory", ec.message(), serviceRoot.id.name,
                                   SourceLoc{serviceRoot.rootDir.lexically_relative(relativeTo).generic_string(), 0}});
    }
    std::sort(files.begin(), files.end());

    std::vector<ClassDecl> out;
    for (const auto& f : files) {
        const std::string rel = f.lexically_relative(relativeTo).generic_string();
        std::string text;
        try {
            text = read_text_file(f);
        } catch (const Error& e) {
            warnings.push_back(Warning{"unreadable-file", e.what(), serviceRoot.id.name, SourceLoc{rel, 0}});
            continue;
        }
        auto classes = scan_source(text, serviceRoot.id.name, rel, warnings);
        std::move(classes.begin(), classes.end(), std::back_inserter(out));
    }
    return out;
}

} // namespace svcdep
