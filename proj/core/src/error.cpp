#include "genaff/error.hpp"

#include <sstream>

namespace genaff {

std::string Witness::str() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i > 0) out << ", ";
    out << elements[i];
  }
  out << ')';
  return out.str();
}

void LawCheck::record(bool ok, const std::vector<std::string>& tuple) {
  ++checked;
  if (ok) return;
  ++violations;
  if (holds) {
    holds = false;
    witness = Witness{tuple};
  }
}

namespace {

std::string verification_message(const std::string& rule, const Witness& witness,
                                 const std::string& detail) {
  std::string msg = "law '" + rule + "' fails at " + witness.str();
  if (!detail.empty()) msg += ": " + detail;
  return msg;
}

std::string parse_message(std::size_t line, std::size_t column, const std::string& rule,
                          const std::string& message) {
  std::ostringstream out;
  out << "line " << line << ", column " << column << " [" << rule << "]: " << message;
  return out.str();
}

}  // namespace

VerificationError::VerificationError(std::string rule, Witness witness,
                                     const std::string& detail)
    : Error(verification_message(rule, witness, detail)),
      rule_(std::move(rule)),
      witness_(std::move(witness)) {}

ParseError::ParseError(std::size_t line, std::size_t column, std::string rule,
                       const std::string& message)
    : Error(parse_message(line, column, rule, message)),
      line_(line),
      column_(column),
      rule_(std::move(rule)) {}

}  // namespace genaff
