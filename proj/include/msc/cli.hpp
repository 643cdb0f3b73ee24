#pragma once

/*
 * Document format and command surface of the `msc` tool. The token
 * grammar and report layout are described in docs/FORMATS.md.
 */

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "msc/structure.hpp"

namespace msc::cli {

inline constexpr std::string_view kToolName = "msc";
inline constexpr std::string_view kVersion = "0.1.0";
// Field used when a document has no "field" key; falls back to "Q".
inline constexpr const char* kDefaultFieldEnv = "MSC_DEFAULT_FIELD";

enum ExitCode : int { kOk = 0, kUsage = 1, kRefused = 2 };

struct MscDocument {
    StructureMatrix msc;
    std::optional<std::string> label;
};

FieldDescriptor default_field();

// ParseError (with line/column or key diagnostics) or FieldMismatch.
MscDocument parse_msc(std::string_view text);
MscDocument load_msc(const std::string& path);

// Canonical text: fixed key order, scalars in token syntax.
std::string emit_msc(const MscDocument& doc);

nlohmann::ordered_json matrix_to_json(const Matrix& m);
nlohmann::ordered_json msc_to_json(const MscDocument& doc);

// Runs one command; argv excludes the program name. Writes the report to
// out and diagnostics to err; returns an ExitCode.
int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace msc::cli
