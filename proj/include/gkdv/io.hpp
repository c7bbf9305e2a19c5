#pragma once

#include <filesystem>
#include <string>

namespace gkdv::io {

// Shortest decimal form that round-trips the double (%.17g).
std::string format_real(double value);

// Writes content to path via a temporary sibling file plus rename, so a
// reader never observes a half-written file. Creates parent directories.
void write_file_atomic(const std::filesystem::path& path,
                       const std::string& content);

}  // namespace gkdv::io
