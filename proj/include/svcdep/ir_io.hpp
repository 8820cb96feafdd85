#pragma once

#include "svcdep/model.hpp"

#include <filesystem>
#include <string>

#include <json.hpp>

namespace svcdep {

// IR document: one JSON object with `services`, `endpoints`, `calls`,
// `entities`, `meta`. Paths are strings with `{Type}` placeholders; call URLs
// are arrays of {"lit": ...} / {"hole": ...}.
nlohmann::ordered_json ir_to_json(const SystemIR& ir);
std::string serialize_ir(const SystemIR& ir);
void write_ir(const SystemIR& ir, const std::filesystem::path& file);

// Schema errors raise ErrorKind::Load with a JSON-pointer-like location;
// model invariant violations raise ErrorKind::Validation / EmptySystem.
SystemIR ir_from_json(const nlohmann::json& doc);
SystemIR parse_ir(const std::string& text);
SystemIR load_ir(const std::filesystem::path& file);

std::string read_text_file(const std::filesystem::path& file);
void write_text_file(const std::filesystem::path& file, const std::string& content);

} // namespace svcdep
