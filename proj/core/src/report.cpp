#include "whq/report.hpp"

#include "whq/errors.hpp"

namespace whq {

namespace {

Field field_of(const Term& a, const Term& b) {
  if (auto f = a.field()) return *f;
  if (auto f = b.field()) return *f;
  return Field::rationals();
}

}  // namespace

bool Report::expect_equal(const std::string& label, const Mor& lhs, const Mor& rhs) {
  Check c;
  c.label = label;
  if (lhs.src() != rhs.src() || lhs.dst() != rhs.dst()) {
    c.passed = false;
    c.detail = "shape " + std::to_string(lhs.dst()) + "x" + std::to_string(lhs.src()) + " vs " +
               std::to_string(rhs.dst()) + "x" + std::to_string(rhs.src());
  } else if (auto w = first_difference(lhs, rhs)) {
    c.passed = false;
    c.detail = w->to_string();
    c.witness = std::move(w);
  }
  const bool ok = c.passed;
  checks_.push_back(std::move(c));
  return ok;
}

bool Report::expect_equal(const std::string& label, const Term& lhs, const Term& rhs) {
  const Field f = field_of(lhs, rhs);
  if (lhs.src() != rhs.src() || lhs.dst() != rhs.dst())
    return expect(label, false,
                  "shape " + std::to_string(lhs.dst()) + "x" + std::to_string(lhs.src()) + " vs " +
                      std::to_string(rhs.dst()) + "x" + std::to_string(rhs.src()));
  return expect_equal(label, lhs.eval(f), rhs.eval(f));
}

bool Report::expect(const std::string& label, bool ok, std::string detail) {
  checks_.push_back(Check{label, ok, std::nullopt, std::move(detail)});
  return ok;
}

void Report::append(const Report& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

bool Report::passed() const noexcept { return first_failure() == nullptr; }

const Check* Report::first_failure() const noexcept {
  for (const Check& c : checks_)
    if (!c.passed) return &c;
  return nullptr;
}

const Check* Report::find(const std::string& label) const noexcept {
  for (const Check& c : checks_)
    if (c.label == label) return &c;
  return nullptr;
}

void require(const Report& report) {
  if (const Check* c = report.first_failure()) throw LawFailure(c->label, c->detail);
}

}  // namespace whq
