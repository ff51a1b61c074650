#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace genaff {

// A tuple of element labels certifying that some law fails.
struct Witness {
  std::vector<std::string> elements;

  // "(a, b, c)"
  std::string str() const;

  bool operator==(const Witness&) const = default;
};

// Outcome of an exhaustive law check over argument tuples.
struct LawCheck {
  bool holds = true;
  std::optional<Witness> witness;  // first violation in enumeration order
  std::size_t violations = 0;
  std::size_t checked = 0;

  void record(bool ok, const std::vector<std::string>& tuple);
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The caller broke an operation's precondition: mismatched carriers, a group
// operation on a bare-set domain, a size cap, ...
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A structure failed a law it was required to satisfy.
class VerificationError : public Error {
 public:
  VerificationError(std::string rule, Witness witness, const std::string& detail = {});

  const std::string& rule() const noexcept { return rule_; }
  const Witness& witness() const noexcept { return witness_; }

 private:
  std::string rule_;
  Witness witness_;
};

// Malformed structure file. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string rule, const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& rule() const noexcept { return rule_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string rule_;
};

// An exhaustive search ran out of its candidate budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace genaff
