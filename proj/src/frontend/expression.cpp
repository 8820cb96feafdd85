#include "expression.hpp"

#include <algorithm>
#include <array>

namespace svcdep::detail {

using java::TokKind;
using java::Token;

namespace {

constexpr int kMaxDepth = 16;

constexpr std::array<std::string_view, 16> kNotTypes{
    "return", "new", "throw", "case", "else", "instanceof", "assert", "yield",
    "do", "try", "this", "super", "null", "true", "false", "break"};

constexpr std::array<std::string_view, 11> kAssignOps{"=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=",
                                                       "<<=", ">>="};

bool is_assign_op(const Token& t) {
    return t.is(TokKind::Punct) && std::find(kAssignOps.begin(), kAssignOps.end(), t.text) != kAssignOps.end();
}

bool type_end_token(const std::vector<Token>& t, std::size_t k) {
    const Token& prev = t[k];
    if (prev.is(TokKind::Identifier)) {
        return std::find(kNotTypes.begin(), kNotTypes.end(), prev.text) == kNotTypes.end();
    }
    if (prev.is_punct(">")) {
        return true;
    }
    return prev.is_punct("]") && k > 0 && t[k - 1].is_punct("[");
}

// Walks back from the last type token to reconstruct the declared type.
std::string type_before(const std::vector<Token>& t, std::size_t last) {
    std::size_t b = last;
    int angle = 0;
    for (;;) {
        const Token& tk = t[b];
        if (tk.is_punct(">")) {
            ++angle;
        } else if (tk.is_punct("<")) {
            --angle;
        } else if (tk.is_punct(",") && angle <= 0) {
            ++b;
            break;
        } else if (!(tk.is(TokKind::Identifier) || tk.is_punct(".") || tk.is_punct("?") || tk.is_punct("[") ||
                     tk.is_punct("]") || (angle > 0 && tk.is_punct(",")))) {
            ++b;
            break;
        } else if (tk.is(TokKind::Identifier) && angle <= 0 && b < last && t[b + 1].is(TokKind::Identifier)) {
            // `final String x`: stop at the modifier.
            ++b;
            break;
        }
        if (b == 0) {
            break;
        }
        --b;
    }
    std::string out;
    for (std::size_t i = b; i <= last; ++i) {
        if (i > b && t[i].is(TokKind::Identifier) && t[i - 1].is(TokKind::Identifier)) {
            out += ' ';
        }
        out += t[i].text;
    }
    return out;
}

std::size_t matching_close(const std::vector<Token>& t, std::size_t open, std::size_t e) {
    int depth = 0;
    for (std::size_t i = open; i < e; ++i) {
        if (t[i].is_punct("(") || t[i].is_punct("[") || t[i].is_punct("{")) {
            ++depth;
        } else if (t[i].is_punct(")") || t[i].is_punct("]") || t[i].is_punct("}")) {
            if (--depth == 0) {
                return i;
            }
        }
    }
    return e;
}

void append_parts(std::vector<UrlPart>& out, std::vector<UrlPart> more) {
    for (auto& p : more) {
        if (p.is_literal() && !out.empty() && out.back().is_literal()) {
            out.back().text += p.text;
        } else {
            out.push_back(std::move(p));
        }
    }
}

} // namespace

std::vector<std::pair<std::size_t, std::size_t>> split_top_level(const std::vector<Token>& t, std::size_t b,
                                                                 std::size_t e, std::string_view sep) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    int depth = 0;
    std::size_t start = b;
    for (std::size_t i = b; i < e; ++i) {
        const Token& tk = t[i];
        if (tk.is_punct("(") || tk.is_punct("[") || tk.is_punct("{")) {
            ++depth;
        } else if (tk.is_punct(")") || tk.is_punct("]") || tk.is_punct("}")) {
            --depth;
        } else if (depth == 0 && tk.is_punct(sep)) {
            out.emplace_back(start, i);
            start = i + 1;
        }
    }
    if (start < e || !out.empty()) {
        out.emplace_back(start, e);
    }
    return out;
}

std::map<std::string, LocalVar> collect_locals(const std::vector<Token>& body) {
    std::map<std::string, LocalVar> locals;
    for (std::size_t k = 1; k + 1 < body.size(); ++k) {
        const Token& tk = body[k];
        if (!tk.is(TokKind::Identifier)) {
            continue;
        }
        const Token& next = body[k + 1];
        const bool declTerminator =
            next.is_punct("=") || next.is_punct(";") || next.is_punct(",") || next.is_punct(":");
        if (declTerminator && type_end_token(body, k - 1) && !body[k - 1].is_punct(".")) {
            // Reject `a.b c` style false positives where the type is an expression.
            std::string type = type_before(body, k - 1);
            if (type.empty()) {
                continue;
            }
            auto [it, inserted] = locals.try_emplace(tk.text);
            LocalVar& var = it->second;
            if (!inserted) {
                var.assignments += 2; // redeclared in another block: not a constant
                continue;
            }
            var.type = std::move(type);
            if (next.is_punct("=")) {
                std::size_t e = k + 2;
                int depth = 0;
                while (e < body.size()) {
                    const Token& x = body[e];
                    if (depth == 0 && (x.is_punct(";") || x.is_punct(","))) {
                        break;
                    }
                    if (x.is_punct("(") || x.is_punct("[") || x.is_punct("{")) ++depth;
                    if (x.is_punct(")") || x.is_punct("]") || x.is_punct("}")) {
                        if (--depth < 0) break;
                    }
                    ++e;
                }
                var.initializer.assign(body.begin() + static_cast<std::ptrdiff_t>(k + 2),
                                       body.begin() + static_cast<std::ptrdiff_t>(e));
                var.assignments = 1;
            }
            continue;
        }
        if (is_assign_op(next) && !body[k - 1].is_punct(".")) {
            if (auto it = locals.find(tk.text); it != locals.end()) {
                it->second.assignments += 1;
            }
        }
    }
    // k == 0 cannot be a declaration (no type before it) but can be an assignment.
    if (body.size() > 1 && body[0].is(TokKind::Identifier) && is_assign_op(body[1])) {
        if (auto it = locals.find(body[0].text); it != locals.end()) {
            it->second.assignments += 1;
        }
    }
    return locals;
}

std::map<std::string, int> count_field_assignments(const ClassDecl& cls) {
    std::map<std::string, int> counts;
    for (const auto& f : cls.fieldDecls) {
        counts[f.name] = 0;
    }
    for (const auto& m : cls.methods) {
        const auto locals = collect_locals(m.body);
        const auto& b = m.body;
        for (std::size_t k = 0; k + 1 < b.size(); ++k) {
            if (!b[k].is(TokKind::Identifier) || !is_assign_op(b[k + 1])) {
                continue;
            }
            auto it = counts.find(b[k].text);
            if (it == counts.end()) {
                continue;
            }
            const bool viaThis = k >= 2 && b[k - 1].is_punct(".") && b[k - 2].is_ident("this");
            const bool bare = k == 0 || (!b[k - 1].is_punct(".") && !type_end_token(b, k - 1));
            const bool shadowed = locals.count(b[k].text) != 0 ||
                                  std::any_of(m.params.begin(), m.params.end(),
                                              [&](const ParamDecl& p) { return p.name == b[k].text; });
            if (viaThis || (bare && !shadowed)) {
                ++it->second;
            }
        }
    }
    return counts;
}

// ---------------------------------------------------------------------------

ExpressionScope::ExpressionScope(const ClassDecl& cls, const MethodDecl* method,
                                 const std::map<std::string, int>& fieldAssignments)
    : cls_(cls), fieldAssignments_(fieldAssignments) {
    if (method != nullptr) {
        locals_ = collect_locals(method->body);
        for (const auto& p : method->params) {
            params_[p.name] = p.typeName;
        }
    }
}

std::optional<std::string> ExpressionScope::type_of(const std::string& name) const {
    if (auto it = locals_.find(name); it != locals_.end()) {
        return it->second.type;
    }
    if (auto it = params_.find(name); it != params_.end()) {
        return it->second;
    }
    for (const auto& f : cls_.fieldDecls) {
        if (f.name == name) {
            return f.typeName;
        }
    }
    return std::nullopt;
}

const std::vector<Token>* ExpressionScope::constant_initializer(const std::string& name) const {
    if (auto it = locals_.find(name); it != locals_.end()) {
        const auto& v = it->second;
        return v.assignments == 1 && !v.initializer.empty() ? &v.initializer : nullptr;
    }
    if (params_.count(name) != 0) {
        return nullptr;
    }
    for (const auto& f : cls_.fieldDecls) {
        if (f.name != name || f.initializer.empty()) {
            continue;
        }
        auto it = fieldAssignments_.find(name);
        const int later = it == fieldAssignments_.end() ? 0 : it->second;
        if ((f.isStatic && f.isFinal) || f.isFinal || later == 0) {
            return &f.initializer;
        }
    }
    return nullptr;
}

std::vector<UrlPart> ExpressionScope::evaluate(const std::vector<Token>& tokens) const {
    return eval_range(tokens, 0, tokens.size(), 0);
}

std::vector<UrlPart> ExpressionScope::eval_range(const std::vector<Token>& t, std::size_t b, std::size_t e,
                                                 int depth) const {
    std::vector<UrlPart> out;
    if (b >= e || depth > kMaxDepth) {
        out.push_back(UrlPart::hole(std::string(kUnknownType)));
        return out;
    }
    if (t[b].is_punct("(") && matching_close(t, b, e) == e - 1) {
        return eval_range(t, b + 1, e - 1, depth + 1);
    }
    for (const auto& [ob, oe] : split_top_level(t, b, e, "?")) {
        if (ob != b || oe != e) {
            out.push_back(UrlPart::hole(std::string(kUnknownType)));
            return out;
        }
    }
    for (const auto& [ob, oe] : split_top_level(t, b, e, "+")) {
        append_parts(out, eval_operand(t, ob, oe, depth));
    }
    return out;
}

std::vector<UrlPart> ExpressionScope::eval_operand(const std::vector<Token>& t, std::size_t b, std::size_t e,
                                                   int depth) const {
    const std::size_t n = e - b;
    if (n == 0) {
        return {UrlPart::hole(std::string(kUnknownType))};
    }
    if (n == 1) {
        const Token& tk = t[b];
        switch (tk.kind) {
        case TokKind::String:
        case TokKind::Char:
            return {UrlPart::literal(tk.text)};
        case TokKind::Number:
            return {UrlPart::hole(tk.text.find('.') == std::string::npos ? "int" : "double")};
        case TokKind::Identifier:
            if (tk.text == "null") {
                return {UrlPart::hole(std::string(kUnknownType))};
            }
            return eval_name(tk.text, false, depth);
        default:
            return {UrlPart::hole(std::string(kUnknownType))};
        }
    }
    if (t[b].is_punct("(")) {
        const std::size_t close = matching_close(t, b, e);
        if (close == e - 1) {
            return eval_range(t, b + 1, e - 1, depth + 1);
        }
        if (close + 1 < e && t[b + 1].is(TokKind::Identifier)) {
            // (Type) expr
            return eval_range(t, close + 1, e, depth + 1);
        }
    }
    if (n == 3 && t[b + 1].is_punct(".") && t[b + 2].is(TokKind::Identifier) &&
        (t[b].is_ident("this") || t[b].is_ident(cls_.name))) {
        return eval_name(t[b + 2].text, true, depth);
    }
    // URI.create(x), new URI(x)
    const bool uriCreate = n >= 5 && t[b].is_ident("URI") && t[b + 1].is_punct(".") && t[b + 2].is_ident("create") &&
                           t[b + 3].is_punct("(") && t[e - 1].is_punct(")");
    const bool newUri = n >= 4 && t[b].is_ident("new") && t[b + 1].is_ident("URI") && t[b + 2].is_punct("(") &&
                        t[e - 1].is_punct(")");
    if (uriCreate || newUri) {
        const std::size_t open = uriCreate ? b + 3 : b + 2;
        if (matching_close(t, open, e) == e - 1) {
            return eval_range(t, open + 1, e - 1, depth + 1);
        }
    }
    return {UrlPart::hole(std::string(kUnknownType))};
}

std::vector<UrlPart> ExpressionScope::eval_name(const std::string& name, bool fieldOnly, int depth) const {
    const std::vector<Token>* init = nullptr;
    std::optional<std::string> type;
    if (fieldOnly) {
        for (const auto& f : cls_.fieldDecls) {
            if (f.name == name) {
                type = f.typeName;
                auto it = fieldAssignments_.find(name);
                const int later = it == fieldAssignments_.end() ? 0 : it->second;
                if (!f.initializer.empty() && (f.isFinal || later == 0)) {
                    init = &f.initializer;
                }
                break;
            }
        }
    } else {
        init = constant_initializer(name);
        type = type_of(name);
    }
    if (init != nullptr) {
        std::vector<UrlPart> parts;
        // Field initializers only see other fields.
        if (fieldOnly || locals_.count(name) == 0) {
            ExpressionScope classScope(cls_, nullptr, fieldAssignments_);
            parts = classScope.eval_range(*init, 0, init->size(), depth + 1);
        } else {
            parts = eval_range(*init, 0, init->size(), depth + 1);
        }
        // An opaque initializer still tells us the declared type.
        if (parts.size() == 1 && parts[0].is_hole() && parts[0].text == kUnknownType && type && *type != "var") {
            parts[0].text = *type;
        }
        return parts;
    }
    return {UrlPart::hole(type ? *type : std::string(kUnknownType))};
}

} // namespace svcdep::detail
