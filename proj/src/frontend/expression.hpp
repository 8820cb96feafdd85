#pragma once

#include "svcdep/frontend.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace svcdep::detail {

struct LocalVar {
    std::string type;
    std::vector<java::Token> initializer;
    int assignments = 0; // declaration initializer included
};

// Names visible from one method (or from class level when method is null).
class ExpressionScope {
public:
    // `fieldAssignments` comes from count_field_assignments(cls).
    ExpressionScope(const ClassDecl& cls, const MethodDecl* method,
                    const std::map<std::string, int>& fieldAssignments);

    // Declared type of a local, parameter or field; nullopt when unknown.
    std::optional<std::string> type_of(const std::string& name) const;

    // Evaluates a string expression to literal/hole parts. Constants and
    // single-assignment locals are substituted.
    std::vector<UrlPart> evaluate(const std::vector<java::Token>& tokens) const;

    // Initializer of a single-assignment local or constant-like field.
    const std::vector<java::Token>* constant_initializer(const std::string& name) const;

private:
    std::vector<UrlPart> eval_range(const std::vector<java::Token>& t, std::size_t b, std::size_t e,
                                    int depth) const;
    std::vector<UrlPart> eval_operand(const std::vector<java::Token>& t, std::size_t b, std::size_t e,
                                      int depth) const;
    std::vector<UrlPart> eval_name(const std::string& name, bool fieldOnly, int depth) const;

    const ClassDecl& cls_;
    std::map<std::string, LocalVar> locals_;
    std::map<std::string, std::string> params_;
    const std::map<std::string, int>& fieldAssignments_;
};

// Assignments to each field outside its declaration, across all methods.
std::map<std::string, int> count_field_assignments(const ClassDecl& cls);

// Locals declared in a method body with their initializers and assignment counts.
std::map<std::string, LocalVar> collect_locals(const std::vector<java::Token>& body);

// Splits tokens [b, e) on top-level occurrences of `sep`.
std::vector<std::pair<std::size_t, std::size_t>> split_top_level(const std::vector<java::Token>& t, std::size_t b,
                                                                 std::size_t e, std::string_view sep);

} // namespace svcdep::detail
