#pragma once

// Exception taxonomy.  Construction errors are exceptions; axiom
// failures are never exceptions, they are data in a Report.

#include <stdexcept>
#include <string>

namespace dblift {

struct FrameMismatch : std::runtime_error {
  explicit FrameMismatch(const std::string& what)
      : std::runtime_error("frame mismatch: " + what) {}
};

struct LeafMismatch : std::runtime_error {
  explicit LeafMismatch(const std::string& what)
      : std::runtime_error("leaf mismatch: " + what) {}
};

struct CompanionMismatch : std::runtime_error {
  explicit CompanionMismatch(const std::string& what)
      : std::runtime_error("companion mismatch: " + what) {}
};

struct NotInverse : std::runtime_error {
  explicit NotInverse(const std::string& what)
      : std::runtime_error("not a two-sided inverse: " + what) {}
};

struct NotFibrant : std::runtime_error {
  explicit NotFibrant(const std::string& what)
      : std::runtime_error("not fibrant: " + what) {}
};

struct MissingCompanion : std::runtime_error {
  explicit MissingCompanion(const std::string& what)
      : std::runtime_error("missing companion choice: " + what) {}
};

struct SchemaError : std::runtime_error {
  explicit SchemaError(const std::string& what)
      : std::runtime_error("schema error: " + what) {}
};

}  // namespace dblift
