#pragma once

#include <stdexcept>
#include <string>

namespace simguard {

/// Base class for all simguard failures that abort an operation.
/// Constraint findings are never exceptions; they are Violation values.
class Error : public std::runtime_error {
public:
  explicit Error(std::string msg) : std::runtime_error(std::move(msg)) {}
};

/// A required file does not exist or cannot be opened.
class FileMissingError : public Error {
public:
  explicit FileMissingError(const std::string& path)
      : Error("file missing: " + path), path(path) {}
  std::string path;
};

/// Malformed input data (delimited or hierarchical). Carries 1-based
/// line/column where known; 0 means unknown.
class ParseError : public Error {
public:
  ParseError(std::string path, int line, int col, const std::string& reason)
      : Error(path + ":" + std::to_string(line) +
              (col > 0 ? ":" + std::to_string(col) : "") + ": " + reason),
        path(std::move(path)), line(line), col(col), reason(reason) {}
  std::string path;
  int line = 0;
  int col = 0;
  std::string reason;
};

/// A hierarchical document declares the same key twice in one mapping.
class DuplicateKeyError : public ParseError {
public:
  DuplicateKeyError(std::string path, int line, std::string doc_path)
      : ParseError(std::move(path), line, 0, "duplicate key at " + doc_path),
        doc_path(std::move(doc_path)) {}
  std::string doc_path;
};

/// Invalid guard spec: unknown kind, bad parameters, duplicate ids, ...
class SpecError : public Error {
public:
  using Error::Error;
};

/// Broken run configuration: missing sibling file, unresolvable config
/// binding, unreadable inputs. Maps to exit code 2 at the CLI.
class RunError : public Error {
public:
  using Error::Error;
};

} // namespace simguard
