#pragma once

// Readers and writers for the Burmeister .cxt exchange format and a simple
// CSV incidence layout. Parsers report 1-based line numbers in ParseError.
//
// .cxt layout: "B", context name, |G|, |M|, then |G| object names, |M|
// attribute names, then |G| grid rows over {X,.} ('x' accepted on input).
// Written files use LF line endings; CRLF input is tolerated.
//
// CSV layout: header ",attr1,attr2,...", then one row per object with
// cells 1/X/x for incident and 0/./empty for not incident.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "fcar/context.hpp"
#include "fcar/errors.hpp"

namespace fcar {

enum class ContextFormat { cxt, csv };

FormalContext parse_cxt(std::string_view text);
FormalContext parse_csv(std::string_view text);

std::string write_cxt(const FormalContext& ctx);

// Reads a context file, inferring the format from the extension unless one
// is given. Missing files and unknown extensions raise std::runtime_error.
FormalContext load_context(const std::filesystem::path& path,
                           std::optional<ContextFormat> format = std::nullopt);

void save_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace fcar
