#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace nkc {

// Base of every engine exception. The C API maps each subclass to an error code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParameterMismatch : public Error {
 public:
  using Error::Error;
};

class IncompleteAssignment : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

// Lemma-level or construction-level inconsistency of geometric data.
class StructureError : public Error {
 public:
  using Error::Error;
};

class InternalError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error("parse error at " + std::to_string(position) + ": " + message), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Structured manifest failure. Each entry is "path: message".
class ManifestError : public Error {
 public:
  explicit ManifestError(std::vector<std::string> entries)
      : Error(join(entries)), entries_(std::move(entries)) {}

  const std::vector<std::string>& entries() const { return entries_; }

 private:
  static std::string join(const std::vector<std::string>& entries) {
    std::string out = "manifest error";
    for (const auto& e : entries) out += "\n  " + e;
    return out;
  }

  std::vector<std::string> entries_;
};

}  // namespace nkc
