#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace pdm {

/// %.17g through std::to_chars: locale-free, '.' separator, round-trips.
std::string format_double(double value);

/// Writes via a temporary sibling file and renames it into place.
/// Throws Error(Io).
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace pdm
