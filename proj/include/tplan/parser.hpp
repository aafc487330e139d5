#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tplan/diagnostics.hpp"
#include "tplan/problem.hpp"

namespace tplan {

struct ParseResult {
  std::optional<Problem> problem;  // present iff no error diagnostics
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return problem.has_value(); }
};

// Parses the clause-per-line KB format: ground facts, init_state/1,
// goal_state/1, action/5, ll_action/5|6, mapping/2, resources/1, duration/3.
// '%' starts a comment; clauses end with '.'. Never throws on bad input.
ParseResult parse_kb(const std::string& text);

// Emits KB text that reparses to an equal Problem.
std::string serialize_kb(const Problem& p);

// Static consistency checks; errors and warnings, never throws.
std::vector<Diagnostic> validate_kb(const Problem& p);

}  // namespace tplan
