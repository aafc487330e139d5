#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tplan/problem.hpp"
#include "tplan/term.hpp"
#include "tplan/unify.hpp"

namespace tplan {

struct SearchLimits {
  long max_depth = 64;          // plan length bound, in snap actions
  long max_expansions = 1000000;
  bool visited_pruning = true;  // closed set of canonical states
};

enum class PlanStatus : std::uint8_t { Found, Unsolvable, LimitExceeded };

struct PlanResult {
  PlanStatus status = PlanStatus::Unsolvable;
  TOPlan plan;
  long expansions = 0;
};

class MappingInapplicable : public PlanningError {
 public:
  MappingInapplicable(int step_index, const std::string& detail)
      : PlanningError("mapping inapplicable at step " + std::to_string(step_index) + ": " +
                      detail),
        step_index(step_index) {}
  int step_index;
};

class EffectNotGround : public PlanningError {
 public:
  explicit EffectNotGround(const Term& t)
      : PlanningError("effect not ground: " + t.to_string()) {}
};

// Yields every binding under which the action's grounding succeeds, all
// positive preconditions hold and all negative ones are absent. Order:
// grounding stream order, then canonical state order for preconditions.
void applicable(const SnapAction& a, const State& s, const std::vector<Term>& kb,
                const Bindings& seed, const BindingsVisitor& visit);

std::optional<Bindings> first_applicable(const SnapAction& a, const State& s,
                                         const std::vector<Term>& kb, const Bindings& seed);

// Applies ground effects; the input state is left untouched.
State apply_action(const SnapAction& a, const Bindings& b, const State& s);

bool goal_satisfied(const Problem& p, const State& s);

// Optional reordering hook for the high-level action list; defaults to
// declaration order.
using ActionOrderHook = std::function<std::vector<std::size_t>(const Problem&)>;

// Depth-first forward search over high-level actions, declaration order,
// backtracking on dead ends. skip_plans discards that many solutions first
// (used to request alternative total orders); alternatives are enumerated
// with path-only pruning since a closed set hides them.
PlanResult plan_hl(const Problem& p, const SearchLimits& limits, std::size_t skip_plans = 0,
                   const ActionOrderHook& order = nullptr);

// Expands each mapped high-level _start step into its low-level sequence,
// threading the state and checking applicability of every inserted action.
// Throws MappingInapplicable on abstraction violations.
TOPlan expand_mappings(const TOPlan& hl, const Problem& p);

// Assigns durative_id/is_start to the steps by pairing _start/_end snaps
// (FIFO per base name + arguments); plain snaps pair with themselves.
// Throws UnpairedSnapAction if the plan is not well bracketed.
void pair_plan_steps(TOPlan& plan);

std::string plan_to_json(const TOPlan& plan);

}  // namespace tplan
