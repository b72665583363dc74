// io.hpp -- sequence file loading for the CLI.
#pragma once

#include <filesystem>
#include <string_view>

#include "striclcs/core.hpp"

namespace striclcs {

// One sequence per file. If any line starts with '>' the file is treated as
// FASTA: header lines are skipped and the remaining lines are concatenated
// without their line breaks. Otherwise the file is a raw token stream with a
// single trailing newline (or CRLF) stripped; every other byte is a token.
// Throws std::runtime_error when the file cannot be read.
Sequence read_sequence_file(const std::filesystem::path& path);

// Applies the same FASTA/raw interpretation to an in-memory buffer.
Sequence parse_sequence_text(std::string_view text);

} // namespace striclcs
