// Output-directory plumbing: atomic text writes (temp-then-rename), content
// hashing for provenance, and the tool version string.
#pragma once

#include <string>

namespace wavecomp {

// Create the directory (and parents) if needed; returns the absolute path.
// Throws IoError if the path exists as a non-directory or cannot be created.
std::string ensure_dir(const std::string& dir);

// Write text to a sibling temp file, then rename over the target.
void atomic_write_text(const std::string& path, const std::string& text);

// Whole-file read; IoError if the file is missing or unreadable.
std::string read_text(const std::string& path);

// FNV-1a 64-bit content hash, as 16 lowercase hex digits.
std::string fnv1a_hex(const std::string& text);

std::string version_string();

}  // namespace wavecomp
