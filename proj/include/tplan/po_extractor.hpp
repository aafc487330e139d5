#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tplan/problem.hpp"
#include "tplan/term.hpp"

namespace tplan {

// Boolean causal matrix over matrix indices: 0 is the virtual init(), then
// the plan steps shifted by one, then the virtual end().
struct EnablerMatrix {
  std::size_t n = 0;
  std::vector<std::vector<bool>> cells;  // cells[i][j]: a_i enables a_j

  bool at(std::size_t i, std::size_t j) const { return cells[i][j]; }
  static std::size_t to_matrix(std::size_t plan_index) { return plan_index + 1; }
};

struct ResourceType {
  std::string name;  // pattern functor
  Term pattern;
  std::vector<Term> instances;  // matching general-KB facts, declaration order
};

struct ResourceCatalog {
  std::vector<ResourceType> types;
  // Per plan step: one type name per resource-typed parameter.
  std::vector<std::vector<std::string>> demands;

  // True iff the value appears among any instance's arguments.
  bool is_resource_value(const Term& value) const;
  const ResourceType* find_type(const std::string& name) const;
};

class InconsistentMatrix : public PlanningError {
 public:
  explicit InconsistentMatrix(const std::string& detail)
      : PlanningError("inconsistent enabler matrix: " + detail) {}
};

// Pairs (i, j) in matrix indices forced by the mapping structure: the parent
// start enables every mapped action, the parent end is enabled by the start
// and every mapped action, and earlier mapped actions of the same instance
// enable later ones (the expansion is an ordered sequence).
std::set<std::pair<std::size_t, std::size_t>> mapping_precedence(const TOPlan& plan,
                                                                 const Problem& p);

// Causal-enabler test for plan steps (matrix indices >= 1). Checks the
// add/del-to-precondition rule with the resource-argument exclusion, plus the
// mapping-precedence pairs.
bool is_enabler(const TOPlan& plan, std::size_t j, std::size_t i, const ResourceCatalog& cat,
                const std::set<std::pair<std::size_t, std::size_t>>& mapping_pairs);

// The pure add/del rule without mapping precedence (exposed for the oracle
// comparison in tests).
bool is_enabler_eq(const TOPlan& plan, std::size_t j, std::size_t i,
                   const ResourceCatalog& cat);

// Builds the full matrix with virtual init/end rows and validates that every
// node reaches end. Throws InconsistentMatrix otherwise.
EnablerMatrix find_enablers(const TOPlan& plan, const Problem& p, const ResourceCatalog& cat);

ResourceCatalog extract_resources(const Problem& p, const TOPlan& plan);

// Paper-style listing: "[i] head(args), [enabler indices]"; the init row
// prints as "[0] init()[]".
std::string enabler_listing(const TOPlan& plan, const EnablerMatrix& m);

// "Resources:" / "Resources list:" / "Resources required by action:" text.
std::string resource_listing(const TOPlan& plan, const ResourceCatalog& cat);

}  // namespace tplan
