#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

namespace simguard {

enum class ValueType { Null, Integer, Real, Boolean, Text };

std::string to_string(ValueType t);

/// One typed cell. Exactly one alternative is active; Null is distinct
/// from empty text. Reals are always finite.
class CellValue {
public:
  CellValue() = default;

  static CellValue null() { return CellValue(); }
  static CellValue of_int(std::int64_t i) { return CellValue(Rep{i}); }
  static CellValue of_real(double d) { return CellValue(Rep{d}); }
  static CellValue of_bool(bool b) { return CellValue(Rep{b}); }
  static CellValue of_text(std::string s) { return CellValue(Rep{std::move(s)}); }

  ValueType type() const { return static_cast<ValueType>(rep_.index()); }
  bool is_null() const { return rep_.index() == 0; }
  bool is_numeric() const {
    return type() == ValueType::Integer || type() == ValueType::Real;
  }

  std::int64_t as_int() const { return std::get<std::int64_t>(rep_); }
  bool as_bool() const { return std::get<bool>(rep_); }
  const std::string& as_text() const { return std::get<std::string>(rep_); }
  /// Numeric value widened to double. Caller checks is_numeric() first.
  double as_number() const {
    return type() == ValueType::Integer
               ? static_cast<double>(std::get<std::int64_t>(rep_))
               : std::get<double>(rep_);
  }

  /// Canonical text form: shortest round-trip for reals, "true"/"false",
  /// "" for null. Used for set membership, report output and CSV writing.
  std::string render() const;

  bool operator==(const CellValue&) const = default;
  /// Total order used for deterministic sorting; null < everything.
  std::strong_ordering operator<=>(const CellValue& other) const;

private:
  using Rep = std::variant<std::monostate, std::int64_t, double, bool, std::string>;
  explicit CellValue(Rep r) : rep_(std::move(r)) {}
  Rep rep_;
};

/// Shortest decimal form that parses back to exactly d ("1", "0.25", "1e30").
std::string render_real(double d);

/// Strict scalar parsers: full-token match or nullopt. parse_real rejects
/// non-finite results so range checks stay total.
std::optional<std::int64_t> parse_integer_token(const std::string& tok);
std::optional<double> parse_real_token(const std::string& tok);
std::optional<bool> parse_boolean_token(const std::string& tok);
/// True for nan/inf spellings that must be rejected as parse errors.
bool is_nonfinite_token(const std::string& tok);

/// Typing precedence integer -> real -> boolean -> text; empty -> null.
/// Throws nothing; non-finite tokens are reported via is_nonfinite_token
/// by callers before use.
CellValue type_cell(const std::string& token);

} // namespace simguard
