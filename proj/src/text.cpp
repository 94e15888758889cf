#include "simguard/text.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "simguard/errors.hpp"

namespace simguard {

std::string trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  for (size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.emplace_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

size_t find_invalid_utf8(std::string_view bytes) {
  size_t i = 0;
  const auto cont = [&](size_t k) {
    return k < bytes.size() && (static_cast<unsigned char>(bytes[k]) & 0xC0) == 0x80;
  };
  while (i < bytes.size()) {
    unsigned char c = bytes[i];
    if (c < 0x80) {
      ++i;
    } else if ((c & 0xE0) == 0xC0) {
      if (c < 0xC2 || !cont(i + 1)) return i; // C0/C1 are overlong
      i += 2;
    } else if ((c & 0xF0) == 0xE0) {
      if (!cont(i + 1) || !cont(i + 2)) return i;
      unsigned char c1 = bytes[i + 1];
      if (c == 0xE0 && c1 < 0xA0) return i;               // overlong
      if (c == 0xED && c1 >= 0xA0) return i;              // surrogate
      i += 3;
    } else if ((c & 0xF8) == 0xF0) {
      if (c > 0xF4 || !cont(i + 1) || !cont(i + 2) || !cont(i + 3)) return i;
      unsigned char c1 = bytes[i + 1];
      if (c == 0xF0 && c1 < 0x90) return i;               // overlong
      if (c == 0xF4 && c1 >= 0x90) return i;              // > U+10FFFF
      i += 4;
    } else {
      return i;
    }
  }
  return std::string_view::npos;
}

namespace {

bool glob_match_at(std::string_view pat, std::string_view str) {
  if (pat.empty()) return str.empty();
  const char p = pat[0];
  if (p == '*') {
    for (size_t skip = 0; skip <= str.size(); ++skip)
      if (glob_match_at(pat.substr(1), str.substr(skip))) return true;
    return false;
  }
  if (str.empty()) return false;
  if (p == '?') return glob_match_at(pat.substr(1), str.substr(1));
  if (p == '[') {
    size_t close = pat.find(']', 2); // ']' right after '[' or '!' is literal
    if (close == std::string_view::npos) return p == str[0] && glob_match_at(pat.substr(1), str.substr(1));
    std::string_view set = pat.substr(1, close - 1);
    bool negate = !set.empty() && set[0] == '!';
    if (negate) set.remove_prefix(1);
    bool hit = false;
    for (size_t i = 0; i < set.size(); ++i) {
      if (i + 2 < set.size() && set[i + 1] == '-') {
        if (str[0] >= set[i] && str[0] <= set[i + 2]) hit = true;
        i += 2;
      } else if (set[i] == str[0]) {
        hit = true;
      }
    }
    if (hit == negate) return false;
    return glob_match_at(pat.substr(close + 1), str.substr(1));
  }
  return p == str[0] && glob_match_at(pat.substr(1), str.substr(1));
}

} // namespace

bool glob_match(std::string_view pattern, std::string_view name) {
  return glob_match_at(pattern, name);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileMissingError(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
}

} // namespace simguard
