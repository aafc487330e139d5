#include "tplan/to_planner.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <unordered_set>

namespace tplan {

void applicable(const SnapAction& a, const State& s, const std::vector<Term>& kb,
                const Bindings& seed, const BindingsVisitor& visit) {
  enumerate_groundings(a.grounding, kb, seed, [&](const Bindings& b) {
    bool keep_going = true;
    enumerate_positive_matches(a.pos_pre, s, b, [&](const Bindings& full) {
      if (!negatives_absent(a.neg_pre, s, full)) return true;
      keep_going = visit(full);
      return keep_going;
    });
    return keep_going;
  });
}

std::optional<Bindings> first_applicable(const SnapAction& a, const State& s,
                                         const std::vector<Term>& kb, const Bindings& seed) {
  std::optional<Bindings> found;
  applicable(a, s, kb, seed, [&found](const Bindings& b) {
    found = b;
    return false;
  });
  return found;
}

State apply_action(const SnapAction& a, const Bindings& b, const State& s) {
  State next = s;
  for (const Effect& e : a.effects) {
    Term lit = substitute(e.literal, b);
    if (!lit.ground()) throw EffectNotGround(lit);
    if (e.op == Effect::Op::Del) {
      next.remove(lit);
    } else {
      next.add(lit);
    }
  }
  return next;
}

bool goal_satisfied(const Problem& p, const State& s) {
  for (const Term& g : p.goal.fluents()) {
    if (!s.contains(g)) return false;
  }
  for (const Term& pattern : p.goal_wildcards) {
    bool matched = false;
    for (const Term& f : s.fluents()) {
      if (match(pattern, f, {})) {
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

namespace {

PlanStep make_step(const SnapAction& schema, const Bindings& b, bool mapped, int parent) {
  PlanStep step;
  step.head = substitute(schema.head, b);
  step.level = schema.level;
  step.mapped = mapped;
  step.parent = parent;
  step.schema = schema.name();
  step.param_parent_pos.assign(step.head.arity(), -1);
  if (!mapped) {
    for (std::size_t i = 0; i < step.head.arity(); ++i) {
      step.param_parent_pos[i] = static_cast<int>(i);
    }
  }
  for (const Term& t : schema.pos_pre) step.ground_pos_pre.push_back(substitute(t, b));
  for (const Term& t : schema.neg_pre) step.ground_neg_pre.push_back(substitute(t, b));
  for (const Effect& e : schema.effects) {
    Term lit = substitute(e.literal, b);
    if (e.op == Effect::Op::Add) {
      step.adds.push_back(std::move(lit));
    } else {
      step.dels.push_back(std::move(lit));
    }
  }
  return step;
}

struct Search {
  const Problem& problem;
  const SearchLimits& limits;
  std::size_t skip;
  std::vector<std::size_t> order;
  long expansions = 0;
  bool limit_hit = false;
  std::unordered_set<State, StateHash> visited;
  std::vector<PlanStep> path;
  std::optional<TOPlan> found;

  // Depth-first; returns true when the requested solution has been found.
  bool dfs(const State& s) {
    if (goal_satisfied(problem, s)) {
      if (skip == 0) {
        TOPlan plan;
        plan.steps = path;
        found = std::move(plan);
        return true;
      }
      --skip;
      return false;
    }
    if (static_cast<long>(path.size()) >= limits.max_depth) {
      limit_hit = true;
      return false;
    }
    for (std::size_t idx : order) {
      const SnapAction& schema = problem.hl_actions[idx];
      bool done = false;
      applicable(schema, s, problem.general_kb, {}, [&](const Bindings& b) {
        Term head = substitute(schema.head, b);
        if (!head.ground()) return true;  // cannot plan with an open head
        if (++expansions > limits.max_expansions) {
          limit_hit = true;
          return false;
        }
        State next = apply_action(schema, b, s);
        if (limits.visited_pruning) {
          if (visited.count(next)) return true;
          visited.insert(next);
        } else {
          // Path-only pruning for alternative-plan enumeration.
          for (const PathState& ps : path_states) {
            if (ps.state == next) return true;
          }
        }
        path.push_back(make_step(schema, b, /*mapped=*/false, /*parent=*/-1));
        path_states.push_back(PathState{next});
        done = dfs(next);
        path_states.pop_back();
        path.pop_back();
        return !done;
      });
      if (done || limit_hit) return done;
    }
    return false;
  }

  struct PathState {
    State state;
  };
  std::vector<PathState> path_states;
};

}  // namespace

PlanResult plan_hl(const Problem& p, const SearchLimits& limits, std::size_t skip_plans,
                   const ActionOrderHook& order_hook) {
  Search search{p, limits, skip_plans};
  if (order_hook) {
    search.order = order_hook(p);
  } else {
    search.order.resize(p.hl_actions.size());
    for (std::size_t i = 0; i < search.order.size(); ++i) search.order[i] = i;
  }
  if (limits.visited_pruning) search.visited.insert(p.init);
  search.path_states.push_back(Search::PathState{p.init});
  const bool found = search.dfs(p.init);

  PlanResult result;
  result.expansions = search.expansions;
  if (found && search.found) {
    result.status = PlanStatus::Found;
    result.plan = std::move(*search.found);
  } else if (search.limit_hit) {
    result.status = PlanStatus::LimitExceeded;
  } else {
    result.status = PlanStatus::Unsolvable;
  }
  return result;
}

namespace {

std::string first_failing_literal(const SnapAction& schema, const Bindings& seed,
                                  const State& s, const std::vector<Term>& kb) {
  // Best-effort diagnosis: report the first precondition that cannot be
  // satisfied on its own under the seed bindings.
  for (const Term& t : schema.pos_pre) {
    auto [ok, _] = holds(Literal{t, true}, s, seed);
    if (!ok) return substitute(t, seed).to_string();
  }
  for (const Term& t : schema.neg_pre) {
    auto [ok, _] = holds(Literal{t, false}, s, seed);
    if (!ok) return "not " + substitute(t, seed).to_string();
  }
  return "grounding failed for " + schema.head.to_string();
}

}  // namespace

TOPlan expand_mappings(const TOPlan& hl, const Problem& p) {
  TOPlan out;
  State state = p.init;
  for (const PlanStep& hl_step : hl.steps) {
    const SnapAction* schema = p.find_action(hl_step.schema, hl_step.head.arity());
    if (!schema) throw PlanningError("plan references unknown action: " + hl_step.schema);

    // Re-derive the binding in the current low-level state; the high-level
    // head pins the choice, auxiliaries re-ground against the threaded state.
    auto seed = match(schema->head, hl_step.head, {});
    if (!seed) throw PlanningError("plan head does not match schema: " + hl_step.schema);
    auto b = first_applicable(*schema, state, p.general_kb, *seed);
    if (!b) {
      throw MappingInapplicable(
          static_cast<int>(out.steps.size()),
          first_failing_literal(*schema, *seed, state, p.general_kb));
    }
    out.steps.push_back(make_step(*schema, *b, /*mapped=*/false, /*parent=*/-1));
    state = apply_action(*schema, *b, state);

    const Mapping* mapping =
        schema->kind == SnapKind::Start ? p.mapping_for(schema->name()) : nullptr;
    if (!mapping) continue;

    const int parent_index = static_cast<int>(out.steps.size()) - 1;
    auto map_binding = match(mapping->hl_start_head, hl_step.head, {});
    if (!map_binding) {
      throw MappingInapplicable(parent_index,
                                "mapping head does not match " + hl_step.head.to_string());
    }
    // Argument positions of the mapping head, keyed by variable name.
    std::map<std::string, int> var_to_parent_pos;
    for (std::size_t i = 0; i < mapping->hl_start_head.arity(); ++i) {
      const Term& arg = mapping->hl_start_head.args()[i];
      if (arg.is_variable() && !var_to_parent_pos.count(arg.name())) {
        var_to_parent_pos[arg.name()] = static_cast<int>(i);
      }
    }
    for (const Term& pattern : mapping->expansion) {
      const Term ground_head = substitute(pattern, *map_binding);
      const SnapAction* ll = p.find_action(pattern.name(), pattern.arity());
      if (!ll) {
        throw MappingInapplicable(
            static_cast<int>(out.steps.size()),
            "mapping target not declared: " + pattern.to_string());
      }
      auto ll_seed = match(ll->head, ground_head, {});
      if (!ll_seed) {
        throw MappingInapplicable(static_cast<int>(out.steps.size()),
                                  "head mismatch for " + ground_head.to_string());
      }
      auto ll_b = first_applicable(*ll, state, p.general_kb, *ll_seed);
      if (!ll_b) {
        throw MappingInapplicable(
            static_cast<int>(out.steps.size()),
            first_failing_literal(*ll, *ll_seed, state, p.general_kb));
      }
      PlanStep step = make_step(*ll, *ll_b, /*mapped=*/true, parent_index);
      for (std::size_t i = 0; i < pattern.arity(); ++i) {
        const Term& arg = pattern.args()[i];
        if (arg.is_variable()) {
          auto it = var_to_parent_pos.find(arg.name());
          if (it != var_to_parent_pos.end()) step.param_parent_pos[i] = it->second;
        }
      }
      out.steps.push_back(std::move(step));
      state = apply_action(*ll, *ll_b, state);
    }
  }
  if (!goal_satisfied(p, state)) {
    throw MappingInapplicable(static_cast<int>(out.steps.size()),
                              "expanded plan does not reach the goal");
  }
  return out;
}

void pair_plan_steps(TOPlan& plan) {
  // FIFO queues of open starts per (base name, arguments).
  std::map<std::string, std::deque<std::size_t>> open;
  int next_id = 0;
  auto key_of = [](const PlanStep& s) {
    return snap_base_name(s.schema) + "|" + [&s] {
      std::string args;
      for (const Term& a : s.head.args()) args += a.to_string() + ",";
      return args;
    }();
  };
  for (std::size_t i = 0; i < plan.steps.size(); ++i) {
    PlanStep& step = plan.steps[i];
    const SnapKind kind = snap_kind_of(step.schema);
    if (kind == SnapKind::Plain) {
      step.durative_id = next_id++;
      step.is_start = true;
      continue;
    }
    const std::string key = key_of(step);
    if (kind == SnapKind::Start) {
      step.durative_id = next_id++;
      step.is_start = true;
      open[key].push_back(i);
    } else {
      auto it = open.find(key);
      if (it == open.end() || it->second.empty()) {
        throw UnpairedSnapAction(step.head.to_string());
      }
      const std::size_t start_index = it->second.front();
      it->second.pop_front();
      step.durative_id = plan.steps[start_index].durative_id;
      step.is_start = false;
    }
  }
  for (const auto& [key, queue] : open) {
    if (!queue.empty()) {
      throw UnpairedSnapAction(plan.steps[queue.front()].head.to_string());
    }
  }
}

std::string plan_to_json(const TOPlan& plan) {
  std::ostringstream os;
  os << "[\n";
  for (std::size_t i = 0; i < plan.steps.size(); ++i) {
    const PlanStep& s = plan.steps[i];
    os << "  {\"index\": " << i << ", \"head\": \"" << s.head.to_string(true)
       << "\", \"level\": \"" << (s.level == ActionLevel::High ? "high" : "low")
       << "\", \"origin\": ";
    if (s.mapped) {
      os << "{\"type\": \"mapped\", \"parent\": " << s.parent << "}";
    } else {
      os << "{\"type\": \"hl\"}";
    }
    os << "}" << (i + 1 < plan.steps.size() ? "," : "") << "\n";
  }
  os << "]\n";
  return os.str();
}

}  // namespace tplan
