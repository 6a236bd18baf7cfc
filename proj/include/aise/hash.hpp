#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace aise::hash {

// Hex-encoded SHA-256. Used for verdict cache keys and artifact provenance.
std::string sha256_hex(std::string_view data);

// SHA-256 of a file's bytes; throws Errc::missing_file.
std::string sha256_file(const std::filesystem::path& path);

}  // namespace aise::hash
