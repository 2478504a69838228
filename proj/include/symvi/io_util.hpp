#pragma once

#include <string>

namespace symvi {

/// Formats with 12 significant digits ("%.12g"); never produces locale
/// surprises. NaN/Inf are rejected by callers before writing.
std::string format_g12(double v);

/// Writes via a temp file in the same directory followed by an atomic
/// rename. Creates parent directories as needed.
void write_file_atomic(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

}  // namespace symvi
