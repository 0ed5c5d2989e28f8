#pragma once

#include <optional>
#include <string>
#include <vector>

#include "whq/mor.hpp"
#include "whq/term.hpp"

namespace whq {

/// Verdict on one displayed identity.
struct Check {
  std::string label;
  bool passed = true;
  /// First differing entry (column-major) when the identity fails.
  std::optional<Witness> witness;
  std::string detail;
};

/// An ordered list of verdicts. Axiom, identity and evidence reports all use it.
class Report {
 public:
  /// Compares `lhs` and `rhs` exactly and records the verdict under `label`.
  bool expect_equal(const std::string& label, const Mor& lhs, const Mor& rhs);
  bool expect_equal(const std::string& label, const Term& lhs, const Term& rhs);
  /// Records a verdict computed elsewhere.
  bool expect(const std::string& label, bool ok, std::string detail = {});
  void append(const Report& other);

  bool passed() const noexcept;
  const Check* first_failure() const noexcept;
  const Check* find(const std::string& label) const noexcept;
  const std::vector<Check>& checks() const noexcept { return checks_; }
  std::size_t size() const noexcept { return checks_.size(); }

 private:
  std::vector<Check> checks_;
};

/// Throws LawFailure for the first failed check, if any.
void require(const Report& report);

}  // namespace whq
