#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace isoforge {

std::string sha256_hex(std::string_view data);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

// Split on '\n'; a trailing newline does not create an empty final line.
std::vector<std::string> split_lines(std::string_view text);

// Replace CRLF and lone CR with LF. Used only for comparisons, never for
// storage, so byte round-trips stay intact.
std::string normalize_newlines(std::string_view text);

}  // namespace isoforge
