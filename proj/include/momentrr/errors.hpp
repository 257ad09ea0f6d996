#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace momentrr {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Axiom or precondition violated by the input objects (CLI exit code 1).
class ValidationError : public Error {
public:
  using Error::Error;
};

// An exact computation could not be carried out (CLI exit code 2).
class MathError : public Error {
public:
  using Error::Error;
};

// Malformed input (CLI exit code 3).
class SchemaError : public Error {
public:
  using Error::Error;
};

#define MOMENTRR_DEFINE_ERROR(Name, Base)                                      \
  class Name : public Base {                                                   \
  public:                                                                      \
    using Base::Base;                                                          \
  };

MOMENTRR_DEFINE_ERROR(ZeroVector, MathError)
MOMENTRR_DEFINE_ERROR(RankMismatch, MathError)
MOMENTRR_DEFINE_ERROR(NotUnimodular, MathError)
MOMENTRR_DEFINE_ERROR(NotFiniteType, MathError)
MOMENTRR_DEFINE_ERROR(AmbiguousSign, MathError)
MOMENTRR_DEFINE_ERROR(NotTriangular, MathError)
MOMENTRR_DEFINE_ERROR(NotInSpan, MathError)

MOMENTRR_DEFINE_ERROR(IncompatibleRelation, ValidationError)
MOMENTRR_DEFINE_ERROR(NotSpecialMatching, ValidationError)
MOMENTRR_DEFINE_ERROR(InvalidMonodromy, ValidationError)
MOMENTRR_DEFINE_ERROR(HypothesisViolated, ValidationError)
MOMENTRR_DEFINE_ERROR(NotMember, ValidationError)
MOMENTRR_DEFINE_ERROR(PreconditionFailed, ValidationError)

#undef MOMENTRR_DEFINE_ERROR

// Exact division failed; `remainder` is the canonical text of what was left.
class NotDivisible : public MathError {
public:
  NotDivisible(const std::string &what, std::string remainder)
      : MathError(what + " (remainder: " + remainder + ")"),
        remainder_(std::move(remainder)) {}

  const std::string &remainder() const noexcept { return remainder_; }

private:
  std::string remainder_;
};

struct Violation {
  std::string rule;
  std::string detail;
};

// Outcome of an axiom checker. An empty report means the object is valid.
class ValidationReport {
public:
  bool ok() const noexcept { return violations_.empty(); }
  explicit operator bool() const noexcept { return ok(); }

  void add(std::string rule, std::string detail) {
    violations_.push_back({std::move(rule), std::move(detail)});
  }

  void merge(const ValidationReport &other) {
    violations_.insert(violations_.end(), other.violations_.begin(),
                       other.violations_.end());
  }

  bool has(const std::string &rule) const {
    for (const auto &v : violations_)
      if (v.rule == rule) return true;
    return false;
  }

  const std::vector<Violation> &violations() const noexcept {
    return violations_;
  }

  // One line per violation, "rule: detail".
  std::string summary() const;

private:
  std::vector<Violation> violations_;
};

} // namespace momentrr
