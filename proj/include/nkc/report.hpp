#pragma once

#include "nkc/frame.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace nkc {

enum class CheckStatus { holds, fails, not_applicable };

std::string to_string(CheckStatus s);

struct Witness {
  std::vector<int> indices;  // 1-based frame indices
  std::string residual;      // scalar expression or frame-vector rendering
};

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::holds;
  std::optional<Witness> witness;
  std::vector<std::string> convention_notes;
};

struct Provenance {
  std::string manifest_hash;
  std::string engine_version;
};

enum class Format { json, text };

// Ordered list of named checks plus named computed values.
//
// Ordering is insertion order, so serialization is deterministic as long as
// the producing code is.
class VerificationReport {
 public:
  Check& add(Check c);
  Check& add(std::string name, CheckStatus status, std::optional<Witness> witness = std::nullopt,
             std::vector<std::string> notes = {});
  void add_value(std::string name, std::string value);
  void add_note(std::string note);
  void append(const VerificationReport& other);

  const std::vector<Check>& checks() const { return checks_; }
  const std::vector<std::pair<std::string, std::string>>& values() const { return values_; }
  const std::vector<std::string>& notes() const { return notes_; }

  const Check* find(std::string_view name) const;
  const std::string* value(std::string_view name) const;
  std::size_t fail_count() const;
  bool all_hold() const;

  Provenance provenance;

 private:
  std::vector<Check> checks_;
  std::vector<std::pair<std::string, std::string>> values_;
  std::vector<std::string> notes_;
};

std::string emit(const VerificationReport& report, Format format);

// Iterates every index tuple of the given arity over [0, dim) in
// lexicographic order and records the first tuple whose residual is nonzero.
Check scan_vectors(std::string name, std::size_t dim, std::size_t arity,
                   const std::function<FrameVector(std::span<const std::size_t>)>& residual);
Check scan_scalars(std::string name, std::size_t dim, std::size_t arity,
                   const std::function<Scalar(std::span<const std::size_t>)>& residual);

std::vector<int> one_based(std::span<const std::size_t> idx);

}  // namespace nkc
