// Copyright 2026 the serbest authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SERBEST_ERROR_HPP
#define SERBEST_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace serbest {

/// All engine errors carry a stable machine-greppable code token
/// (e.g. "path-through-atom", "no-applicable-rule") plus a human message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, std::string message)
      : std::runtime_error("[" + code + "] " + message),
        code_(std::move(code)),
        message_(std::move(message)) {}

  const std::string& code() const { return code_; }
  const std::string& message() const { return message_; }

 private:
  std::string code_;
  std::string message_;
};

/// One schema violation, anchored at a feature path.
struct SchemaViolation {
  std::string code;  // unknown-role, missing-verb, bad-enum-value, ...
  std::string path;  // dotted feature path into the offending structure
  std::string message;
};

/// Case-frame validation collects every violation before failing.
class SchemaError : public Error {
 public:
  explicit SchemaError(std::vector<SchemaViolation> violations)
      : Error("schema-error", describe(violations)), violations_(std::move(violations)) {}

  const std::vector<SchemaViolation>& violations() const { return violations_; }

 private:
  static std::string describe(const std::vector<SchemaViolation>& vs) {
    std::string out;
    for (const auto& v : vs) {
      if (!out.empty()) out += "; ";
      out += v.code + " at " + (v.path.empty() ? "<root>" : v.path) + ": " + v.message;
    }
    return out.empty() ? "no violations" : out;
  }

  std::vector<SchemaViolation> violations_;
};

}  // namespace serbest

#endif  // SERBEST_ERROR_HPP
