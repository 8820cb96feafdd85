#pragma once

#include "svcdep/ingest.hpp"
#include "svcdep/java_lexer.hpp"
#include "svcdep/model.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace svcdep {

// Structured, non-fatal finding. Codes are stable identifiers.
struct Warning {
    std::string code;
    std::string message;
    std::string service;
    SourceLoc loc;

    friend bool operator==(const Warning&, const Warning&) = default;
};

struct FrontendConfig {
    std::vector<std::string> controllerMarkers{"RestController", "Controller", "Path"};
    std::vector<std::string> endpointAnnotations{"GetMapping", "PostMapping", "PutMapping", "DeleteMapping",
                                                 "PatchMapping", "RequestMapping", "GET", "POST",
                                                 "PUT", "DELETE"};
    std::vector<std::string> clientMethods{"getForObject", "getForEntity", "postForObject", "postForEntity",
                                           "put", "delete", "exchange"};
    std::vector<std::string> persistenceAnnotations{"Entity", "Document", "Table"};
    std::vector<std::string> dataAnnotations{"Data", "Value", "Getter"};
    std::vector<std::string> dtoSuffixes{"Dto", "DTO", "VO", "Request", "Response"};
    std::vector<std::string> sourceExtensions{".java"};
};

enum class AttachTarget { Class, Method, Parameter, Field };

struct AnnotationSite {
    std::string name; // simple name, no '@'
    // Raw argument text keyed by attribute name; "" holds the default value.
    std::map<std::string, std::string> args;
    std::map<std::string, std::vector<java::Token>> argTokens;
    AttachTarget attachedTo = AttachTarget::Class;
    SourceLoc sourceLoc;

    bool has_arg(const std::string& key) const { return argTokens.count(key) != 0; }
};

struct ParamDecl {
    std::string name;
    std::string typeName;
    std::vector<AnnotationSite> annotations;
};

struct MethodDecl {
    std::string name;
    std::vector<AnnotationSite> annotations;
    std::vector<ParamDecl> params;
    std::string returnType; // empty for constructors
    int line = 0;
    bool hasBody = false;
    std::vector<java::Token> body; // tokens between the braces
};

struct FieldDecl {
    std::string name;
    std::string typeName;
    std::vector<AnnotationSite> annotations;
    bool isStatic = false;
    bool isFinal = false;
    std::vector<java::Token> initializer; // empty when none
    int line = 0;
};

enum class TypeKind { Class, Interface, Enum, Record, AnnotationType };

struct ClassDecl {
    std::string service;
    std::string name;
    TypeKind kind = TypeKind::Class;
    std::vector<AnnotationSite> annotations;
    // Instance fields (and record components) as entity fields.
    std::vector<EntityField> fields;
    std::vector<FieldDecl> fieldDecls; // every field, static ones included
    std::vector<MethodDecl> methods;
    SourceLoc sourceLoc;

    bool has_annotation(std::string_view n) const;
    const AnnotationSite* annotation(std::string_view n) const;
};

// Parses one source text. `file` is recorded in source locations.
std::vector<ClassDecl> scan_source(std::string_view text, const std::string& service, const std::string& file,
                                   std::vector<Warning>& warnings);

// Walks a service root for files with the configured extensions (sorted by
// path). Locations are reported relative to `relativeTo`.
std::vector<ClassDecl> scan_classes(const ServiceRoot& serviceRoot, const FrontendConfig& config,
                                    const std::filesystem::path& relativeTo, std::vector<Warning>& warnings);

std::vector<EndpointDef> extract_endpoints(const std::vector<ClassDecl>& classes, const FrontendConfig& config,
                                           std::vector<Warning>& warnings);

std::vector<RestCall> extract_calls(const std::vector<ClassDecl>& classes, const FrontendConfig& config,
                                    std::vector<Warning>& warnings);

std::vector<EntityDef> filter_entities(const std::vector<ClassDecl>& classes, const FrontendConfig& config);

struct FrontendResult {
    SystemIR ir;
    std::vector<Warning> warnings;
};

struct BuildOptions {
    std::string sourceLabel;        // recorded as meta.sourceRoot
    std::string revision{kUnversioned};
    std::vector<std::string> skippedServices;
    bool parallel = true;
};

// Scans every service (concurrently when enabled) and concatenates the
// facts. Throws EmptySystem when `serviceRoots` is empty.
FrontendResult build_ir(const std::vector<ServiceRoot>& serviceRoots, const std::filesystem::path& sourceRoot,
                        const FrontendConfig& config, const BuildOptions& options);

} // namespace svcdep
