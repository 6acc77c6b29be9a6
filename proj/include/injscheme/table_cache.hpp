#pragma once

#include <optional>
#include <string>

#include "injscheme/character_table.hpp"

namespace injscheme {

inline constexpr int kCacheFormatVersion = 1;

/// Versioned JSON with every big integer as a decimal string and an
/// FNV-1a content checksum over the payload. Deterministic byte output.
std::string serialize_table(const CharacterTable& ct);

/// Parses and validates: format version, checksum, dimensions, class
/// order and per-class distance. Throws CacheError on any mismatch.
CharacterTable parse_table(const std::string& text);

std::string cache_file_name(int k, int n);

/// Atomic write: temp file in the same directory, then rename.
void store_table(const CharacterTable& ct, const std::string& dir);

/// nullopt when the file does not exist; CacheError when it exists but
/// fails to parse or validate (never silently recomputes).
std::optional<CharacterTable> load_table(int k, int n, const std::string& dir);

}  // namespace injscheme
