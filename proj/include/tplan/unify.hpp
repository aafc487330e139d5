#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "tplan/problem.hpp"
#include "tplan/term.hpp"

namespace tplan {

// One-way matching: pattern may contain variables and wildcards, ground must
// be ground. Wildcards match anything and bind nothing. Returns the extended
// bindings or nullopt on functor/arity mismatch or binding conflict.
std::optional<Bindings> match(const Term& pattern, const Term& ground, const Bindings& b);

// Replaces bound variables; unbound variables and wildcards are preserved.
Term substitute(const Term& t, const Bindings& b);

// Visitor returns false to stop the stream early.
using BindingsVisitor = std::function<bool(const Bindings&)>;

// Depth-first product over the grounding items in list order; candidate facts
// are tried in KB declaration order. Disequality items filter bindings.
void enumerate_groundings(const std::vector<GroundingItem>& items,
                          const std::vector<Term>& kb, const Bindings& b0,
                          const BindingsVisitor& visit);

std::vector<Bindings> enumerate_groundings(const std::vector<GroundingItem>& items,
                                           const std::vector<Term>& kb,
                                           const Bindings& b0);

// Single-literal satisfaction. Positive: true iff some state fluent matches
// substitute(l, b), extending b with the first match in canonical state
// order. Negative: true iff no state fluent matches; never extends b.
std::pair<bool, Bindings> holds(const Literal& l, const State& s, const Bindings& b);

// Conjunction of positive literals with backtracking across state matches;
// yields every extension of b0 under which all literals hold, in
// canonical-state-order DFS.
void enumerate_positive_matches(const std::vector<Term>& literals, const State& s,
                                const Bindings& b0, const BindingsVisitor& visit);

// True iff every negative pattern has no match in the state under b
// (wildcards and unbound variables act universally).
bool negatives_absent(const std::vector<Term>& patterns, const State& s, const Bindings& b);

}  // namespace tplan
