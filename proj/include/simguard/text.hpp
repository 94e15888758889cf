#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace simguard {

std::string trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);
std::string join(const std::vector<std::string>& parts, const std::string& sep);
std::string to_lower(std::string_view s);

/// Validates UTF-8; returns byte offset of the first bad sequence or npos.
size_t find_invalid_utf8(std::string_view bytes);

/// Shell-style glob: '*', '?', '[set]' (with leading '!' negation).
/// '*' matches path separators too; matching is over the full string.
bool glob_match(std::string_view pattern, std::string_view name);

std::string read_file(const std::string& path);       // throws FileMissingError
void write_file(const std::string& path, std::string_view content);

} // namespace simguard
