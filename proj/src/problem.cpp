#include "tplan/problem.hpp"

#include <algorithm>
#include <sstream>

namespace tplan {

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

SnapKind snap_kind_of(const std::string& name) {
  if (ends_with(name, "_start")) return SnapKind::Start;
  if (ends_with(name, "_end")) return SnapKind::End;
  return SnapKind::Plain;
}

std::string snap_base_name(const std::string& name) {
  if (ends_with(name, "_start")) return name.substr(0, name.size() - 6);
  if (ends_with(name, "_end")) return name.substr(0, name.size() - 4);
  return name;
}

std::string SnapAction::base_name() const { return snap_base_name(name()); }

bool Problem::kb_contains(const Term& fact) const {
  return std::find(general_kb.begin(), general_kb.end(), fact) != general_kb.end();
}

const Mapping* Problem::mapping_for(const std::string& hl_start_name) const {
  for (const Mapping& m : mappings) {
    if (m.hl_start_head.name() == hl_start_name) return &m;
  }
  return nullptr;
}

const SnapAction* Problem::find_action(const std::string& name, std::size_t arity) const {
  for (const SnapAction& a : hl_actions) {
    if (a.name() == name && a.head.arity() == arity) return &a;
  }
  for (const SnapAction& a : ll_actions) {
    if (a.name() == name && a.head.arity() == arity) return &a;
  }
  return nullptr;
}

DurationBounds Problem::duration_of(const std::string& base_name, bool mapped_hl) const {
  auto it = durations.find(base_name);
  if (it != durations.end()) return it->second;
  if (mapped_hl) return DurationBounds{1, kUnboundedDuration};
  return DurationBounds{1, 1};
}

std::vector<DurativeAction> pair_snap_actions(const std::vector<SnapAction>& actions) {
  std::vector<DurativeAction> out;
  std::vector<bool> used(actions.size(), false);
  for (std::size_t i = 0; i < actions.size(); ++i) {
    if (used[i]) continue;
    const SnapAction& a = actions[i];
    if (a.kind == SnapKind::Plain) {
      DurativeAction d;
      d.name = a.name();
      d.start = a;
      d.end = a;
      d.d_min = 0;
      d.d_max = 0;
      out.push_back(std::move(d));
      used[i] = true;
      continue;
    }
    const std::string base = a.base_name();
    const SnapKind partner_kind = a.kind == SnapKind::Start ? SnapKind::End : SnapKind::Start;
    std::size_t partner = actions.size();
    for (std::size_t j = i + 1; j < actions.size(); ++j) {
      if (used[j]) continue;
      if (actions[j].kind == partner_kind && actions[j].base_name() == base) {
        partner = j;
        break;
      }
      if (actions[j].kind == a.kind && actions[j].base_name() == base) {
        throw UnpairedSnapAction(actions[j].name());
      }
    }
    if (partner == actions.size()) throw UnpairedSnapAction(a.name());
    const SnapAction& s = a.kind == SnapKind::Start ? a : actions[partner];
    const SnapAction& e = a.kind == SnapKind::Start ? actions[partner] : a;
    // Parameter lists must agree variable-for-variable.
    if (s.head.arity() != e.head.arity() || s.head.args() != e.head.args()) {
      throw SignatureMismatch(base);
    }
    DurativeAction d;
    d.name = base;
    d.start = s;
    d.end = e;
    out.push_back(std::move(d));
    used[i] = true;
    used[partner] = true;
  }
  return out;
}

State canonical_state(const std::vector<Term>& fluents) {
  for (const Term& f : fluents) {
    if (!f.ground()) throw NonGroundFluent(f);
  }
  return State(fluents);
}

std::string TOPlan::to_text() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    os << '[' << i << "] " << steps[i].head.to_string(/*spaced=*/true) << '\n';
  }
  return os.str();
}

}  // namespace tplan
