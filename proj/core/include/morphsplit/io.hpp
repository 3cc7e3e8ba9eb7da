#pragma once

#include <string>
#include <string_view>

namespace morphsplit {

/// Reads a whole file; throws Error with the path on failure.
std::string read_file(const std::string& path);

/// Writes via a temp file in the same directory plus rename, so a failed
/// write never leaves a partial file at the target path.
void write_file_atomic(const std::string& path, std::string_view content);

}  // namespace morphsplit
