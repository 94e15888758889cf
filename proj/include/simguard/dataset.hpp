#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "simguard/value.hpp"

namespace simguard {

struct TabularOptions {
  char delimiter = ',';
  bool header_row = true;
  bool type_coercion = true; // false keeps every non-blank cell as text
};

/// Ordered, named-column table of typed cells. Immutable after load;
/// row indices reported externally are 0-based data rows.
struct TabularDataset {
  std::string source_path;
  std::vector<std::string> column_names;
  std::vector<std::vector<CellValue>> rows;

  size_t row_count() const { return rows.size(); }
  size_t column_count() const { return column_names.size(); }

  std::optional<size_t> column_index(const std::string& name) const;
  const CellValue& cell(size_t row, size_t col) const { return rows[row][col]; }
};

/// RFC-4180-style reader: quoted fields with "" escapes, embedded
/// delimiters/newlines inside quotes, CRLF tolerated. Header names are
/// trimmed, a leading '#' and surrounding quotes stripped. Cell tokens are
/// trimmed before typing; blank fields become null. Ragged rows, duplicate
/// header names, invalid UTF-8 and non-finite numeric literals raise
/// ParseError.
TabularDataset load_tabular(const std::string& path, const TabularOptions& options = {});

/// Same grammar applied to an in-memory buffer (used for prompt excerpts).
TabularDataset parse_tabular(const std::string& content, const std::string& logical_path,
                             const TabularOptions& options = {});

/// Canonical writer; load(save(ds)) reproduces ds cell-for-cell under the
/// same options.
std::string save_tabular(const TabularDataset& ds, const TabularOptions& options = {});

} // namespace simguard
