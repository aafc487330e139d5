#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tplan/term.hpp"

namespace tplan {

struct Effect {
  enum class Op : std::uint8_t { Add, Del };
  Op op = Op::Add;
  Term literal;

  bool operator==(const Effect&) const = default;
};

// Item of an action's grounding list: either a pattern enumerated against
// the general KB or a disequality between two already-bound variables.
struct GroundingItem {
  enum class Kind : std::uint8_t { Pattern, Disequality };
  Kind kind = Kind::Pattern;
  Term pattern;
  std::string lhs_var;
  std::string rhs_var;

  static GroundingItem make_pattern(Term t) {
    GroundingItem g;
    g.kind = Kind::Pattern;
    g.pattern = std::move(t);
    return g;
  }
  static GroundingItem make_disequality(std::string lhs, std::string rhs) {
    GroundingItem g;
    g.kind = Kind::Disequality;
    g.lhs_var = std::move(lhs);
    g.rhs_var = std::move(rhs);
    return g;
  }

  bool operator==(const GroundingItem&) const = default;
};

enum class ActionLevel : std::uint8_t { High, Low };
enum class SnapKind : std::uint8_t { Start, End, Plain };

struct SnapAction {
  Term head;
  std::vector<Term> pos_pre;
  std::vector<Term> neg_pre;
  std::vector<GroundingItem> grounding;
  std::vector<Effect> effects;
  ActionLevel level = ActionLevel::High;
  SnapKind kind = SnapKind::Plain;

  const std::string& name() const { return head.name(); }
  // Name without the _start/_end suffix.
  std::string base_name() const;

  bool operator==(const SnapAction&) const = default;
};

// Classifies by the _start/_end suffix convention.
SnapKind snap_kind_of(const std::string& name);
std::string snap_base_name(const std::string& name);

struct DurativeAction {
  std::string name;
  SnapAction start;
  SnapAction end;
  long d_min = 1;
  long d_max = 1;
};

struct Mapping {
  Term hl_start_head;
  std::vector<Term> expansion;  // low-level snap-action heads, in order

  bool operator==(const Mapping&) const = default;
};

struct ResourcePattern {
  Term pattern;  // e.g. agent(_)

  bool operator==(const ResourcePattern&) const = default;
};

struct DurationBounds {
  long min = 1;
  long max = 1;

  bool operator==(const DurationBounds&) const = default;
};

struct Problem {
  std::vector<Term> general_kb;  // declaration order preserved; ground facts
  State init;
  State goal;                        // ground goal fluents
  std::vector<Term> goal_wildcards;  // goal fluents with wildcards; matched existentially
  std::vector<SnapAction> hl_actions;
  std::vector<SnapAction> ll_actions;
  std::vector<Mapping> mappings;
  std::vector<ResourcePattern> resources;
  std::map<std::string, DurationBounds> durations;

  bool kb_contains(const Term& fact) const;
  const Mapping* mapping_for(const std::string& hl_start_name) const;
  const SnapAction* find_action(const std::string& name, std::size_t arity) const;
  // Duration bounds with defaults: declared facts win; mapped HL actions are
  // elastic [1, unbounded); everything else is (1,1).
  DurationBounds duration_of(const std::string& base_name, bool mapped_hl) const;

  bool operator==(const Problem&) const = default;
};

// Unbounded upper duration marker for elastic high-level actions.
inline constexpr long kUnboundedDuration = -1;

class PlanningError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnpairedSnapAction : public PlanningError {
 public:
  explicit UnpairedSnapAction(const std::string& name)
      : PlanningError("unpaired snap action: " + name) {}
};

class SignatureMismatch : public PlanningError {
 public:
  explicit SignatureMismatch(const std::string& name)
      : PlanningError("start/end parameter lists differ for: " + name) {}
};

class NonGroundFluent : public PlanningError {
 public:
  explicit NonGroundFluent(const Term& t)
      : PlanningError("fluent not ground: " + t.to_string()) {}
};

// Pairs _start/_end snap actions into durative actions; plain actions become
// zero-duration durative actions with start = end.
std::vector<DurativeAction> pair_snap_actions(const std::vector<SnapAction>& actions);

// Deduplicates, validates groundness and returns the canonical State.
State canonical_state(const std::vector<Term>& fluents);

// One step of a total-order plan. Ground preconditions and effects are
// recorded at simulation time so the causal analysis can work on ground
// literals without re-deriving bindings.
struct PlanStep {
  Term head;
  ActionLevel level = ActionLevel::High;
  // hl: chosen by the high-level search; mapped: inserted by expand_mappings.
  bool mapped = false;
  int parent = -1;        // index of the HL _start step this was mapped from
  int durative_id = -1;   // filled by pairing; start and end share the id
  bool is_start = false;  // role within its durative pair
  std::string schema;     // snap schema name (head functor)
  // For each head argument: the controlling argument position of the parent
  // high-level step (identity for high-level steps, -1 if untied). Drives
  // the scheduler's parameter-equality groups.
  std::vector<int> param_parent_pos;
  std::vector<Term> ground_pos_pre;
  std::vector<Term> ground_neg_pre;  // substituted patterns; may keep wildcards
  std::vector<Term> adds;
  std::vector<Term> dels;
};

struct TOPlan {
  std::vector<PlanStep> steps;

  // Paper-style listing: "[i] head(args)" per line.
  std::string to_text() const;
};

}  // namespace tplan
