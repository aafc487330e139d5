#pragma once

#include <string>
#include <vector>

namespace tplan {

struct Diagnostic {
  enum class Severity : std::uint8_t { Error, Warning };
  Severity severity = Severity::Error;
  int line = 1;
  int column = 1;
  std::string code;
  std::string message;

  static Diagnostic error(int line, int column, std::string code, std::string message) {
    return {Severity::Error, line, column, std::move(code), std::move(message)};
  }
  static Diagnostic warning(int line, int column, std::string code, std::string message) {
    return {Severity::Warning, line, column, std::move(code), std::move(message)};
  }
};

inline bool has_errors(const std::vector<Diagnostic>& ds) {
  for (const Diagnostic& d : ds) {
    if (d.severity == Diagnostic::Severity::Error) return true;
  }
  return false;
}

std::string format_diagnostic(const Diagnostic& d);

}  // namespace tplan
