#include "simguard/value.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <compare>
#include <cstdio>

namespace simguard {

std::string to_string(ValueType t) {
  switch (t) {
  case ValueType::Null: return "null";
  case ValueType::Integer: return "integer";
  case ValueType::Real: return "real";
  case ValueType::Boolean: return "boolean";
  case ValueType::Text: return "text";
  }
  return "?";
}

std::string render_real(double d) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), d);
  (void)ec;
  return std::string(buf, end);
}

std::string CellValue::render() const {
  switch (type()) {
  case ValueType::Null: return "";
  case ValueType::Integer: return std::to_string(as_int());
  case ValueType::Real: return render_real(std::get<double>(rep_));
  case ValueType::Boolean: return as_bool() ? "true" : "false";
  case ValueType::Text: return as_text();
  }
  return "";
}

std::strong_ordering CellValue::operator<=>(const CellValue& other) const {
  if (rep_.index() != other.rep_.index())
    return rep_.index() <=> other.rep_.index();
  switch (type()) {
  case ValueType::Null: return std::strong_ordering::equal;
  case ValueType::Integer: return as_int() <=> other.as_int();
  case ValueType::Real: {
    double a = std::get<double>(rep_), b = std::get<double>(other.rep_);
    if (a < b) return std::strong_ordering::less;
    if (a > b) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  case ValueType::Boolean: return as_bool() <=> other.as_bool();
  case ValueType::Text: return as_text().compare(other.as_text()) <=> 0;
  }
  return std::strong_ordering::equal;
}

std::optional<std::int64_t> parse_integer_token(const std::string& tok) {
  if (tok.empty()) return std::nullopt;
  std::int64_t v = 0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (*first == '+') ++first; // from_chars accepts '-' but not '+'
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return v;
}

std::optional<double> parse_real_token(const std::string& tok) {
  if (tok.empty()) return std::nullopt;
  // Strict grammar: [sign] digits [. digits] [ (e|E) [sign] digits ]
  // or [sign] . digits [...]. Keeps word-like tokens ("nan", "1f") out.
  size_t i = 0;
  if (tok[i] == '+' || tok[i] == '-') ++i;
  size_t int_digits = 0, frac_digits = 0;
  while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) {
    ++i;
    ++int_digits;
  }
  if (i < tok.size() && tok[i] == '.') {
    ++i;
    while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) {
      ++i;
      ++frac_digits;
    }
  }
  if (int_digits + frac_digits == 0) return std::nullopt;
  if (i < tok.size() && (tok[i] == 'e' || tok[i] == 'E')) {
    ++i;
    if (i < tok.size() && (tok[i] == '+' || tok[i] == '-')) ++i;
    size_t exp_digits = 0;
    while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) {
      ++i;
      ++exp_digits;
    }
    if (exp_digits == 0) return std::nullopt;
  }
  if (i != tok.size()) return std::nullopt;
  double v = 0;
  auto [ptr, ec] = std::from_chars(tok.data() + (tok[0] == '+' ? 1 : 0),
                                   tok.data() + tok.size(), v);
  if (ec == std::errc::result_out_of_range) {
    // Overflow to +-inf is non-finite, underflow to 0 is fine.
    if (!std::isfinite(v)) return v; // caller rejects via isfinite check
    return tok[0] == '-' ? -v : v;
  }
  if (ec != std::errc() || ptr != tok.data() + tok.size()) return std::nullopt;
  return v;
}

std::optional<bool> parse_boolean_token(const std::string& tok) {
  if (tok == "true" || tok == "True") return true;
  if (tok == "false" || tok == "False") return false;
  return std::nullopt;
}

bool is_nonfinite_token(const std::string& tok) {
  std::string t = tok;
  if (!t.empty() && (t[0] == '+' || t[0] == '-')) t.erase(0, 1);
  std::transform(t.begin(), t.end(), t.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (t == "nan" || t == "inf" || t == "infinity") return true;
  // Numeric overflow ("1e999") also yields a non-finite value.
  if (auto r = parse_real_token(tok); r && !std::isfinite(*r)) return true;
  return false;
}

CellValue type_cell(const std::string& token) {
  if (token.empty()) return CellValue::null();
  if (auto i = parse_integer_token(token)) return CellValue::of_int(*i);
  if (auto d = parse_real_token(token)) {
    if (std::isfinite(*d)) return CellValue::of_real(*d);
    return CellValue::of_text(token); // callers screen via is_nonfinite_token
  }
  if (auto b = parse_boolean_token(token)) return CellValue::of_bool(*b);
  return CellValue::of_text(token);
}

} // namespace simguard
