#include "tplan/unify.hpp"

#include <cassert>

namespace tplan {

namespace {

bool match_into(const Term& pattern, const Term& ground, Bindings& b) {
  switch (pattern.kind()) {
    case Term::Kind::Wildcard:
      return true;
    case Term::Kind::Variable: {
      auto it = b.find(pattern.name());
      if (it != b.end()) return it->second == ground;
      b.emplace(pattern.name(), ground);
      return true;
    }
    case Term::Kind::Atom:
      return ground.is_atom() && ground.name() == pattern.name();
    case Term::Kind::Integer:
      return ground.is_integer() && ground.value() == pattern.value();
    case Term::Kind::Compound: {
      if (!ground.is_compound() || ground.name() != pattern.name() ||
          ground.arity() != pattern.arity()) {
        return false;
      }
      for (std::size_t i = 0; i < pattern.arity(); ++i) {
        if (!match_into(pattern.args()[i], ground.args()[i], b)) return false;
      }
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<Bindings> match(const Term& pattern, const Term& ground, const Bindings& b) {
  Bindings result = b;
  if (match_into(pattern, ground, result)) return result;
  return std::nullopt;
}

Term substitute(const Term& t, const Bindings& b) {
  switch (t.kind()) {
    case Term::Kind::Variable: {
      auto it = b.find(t.name());
      return it != b.end() ? it->second : t;
    }
    case Term::Kind::Compound: {
      std::vector<Term> args;
      args.reserve(t.arity());
      for (const Term& a : t.args()) args.push_back(substitute(a, b));
      return Term::compound(t.name(), std::move(args));
    }
    default:
      return t;
  }
}

namespace {

bool enumerate_rec(const std::vector<GroundingItem>& items, std::size_t idx,
                   const std::vector<Term>& kb, const Bindings& b,
                   const BindingsVisitor& visit) {
  if (idx == items.size()) return visit(b);
  const GroundingItem& item = items[idx];
  if (item.kind == GroundingItem::Kind::Disequality) {
    auto lhs = b.find(item.lhs_var);
    auto rhs = b.find(item.rhs_var);
    // Disequalities reference variables bound by earlier patterns; an
    // unbound side cannot be decided and fails the filter.
    if (lhs == b.end() || rhs == b.end()) return true;
    if (lhs->second == rhs->second) return true;  // filtered out, keep going
    return enumerate_rec(items, idx + 1, kb, b, visit);
  }
  for (const Term& fact : kb) {
    if (auto extended = match(item.pattern, fact, b)) {
      if (!enumerate_rec(items, idx + 1, kb, *extended, visit)) return false;
    }
  }
  return true;
}

}  // namespace

void enumerate_groundings(const std::vector<GroundingItem>& items,
                          const std::vector<Term>& kb, const Bindings& b0,
                          const BindingsVisitor& visit) {
  enumerate_rec(items, 0, kb, b0, visit);
}

std::vector<Bindings> enumerate_groundings(const std::vector<GroundingItem>& items,
                                           const std::vector<Term>& kb,
                                           const Bindings& b0) {
  std::vector<Bindings> out;
  enumerate_groundings(items, kb, b0, [&out](const Bindings& b) {
    out.push_back(b);
    return true;
  });
  return out;
}

std::pair<bool, Bindings> holds(const Literal& l, const State& s, const Bindings& b) {
  const Term pattern = substitute(l.term, b);
  if (l.positive) {
    for (const Term& fluent : s.fluents()) {
      if (auto extended = match(pattern, fluent, b)) return {true, *extended};
    }
    return {false, b};
  }
  for (const Term& fluent : s.fluents()) {
    if (match(pattern, fluent, b)) return {false, b};
  }
  return {true, b};
}

namespace {

bool positive_rec(const std::vector<Term>& literals, std::size_t idx, const State& s,
                  const Bindings& b, const BindingsVisitor& visit) {
  if (idx == literals.size()) return visit(b);
  const Term pattern = substitute(literals[idx], b);
  for (const Term& fluent : s.fluents()) {
    if (auto extended = match(pattern, fluent, b)) {
      if (!positive_rec(literals, idx + 1, s, *extended, visit)) return false;
    }
  }
  return true;
}

}  // namespace

void enumerate_positive_matches(const std::vector<Term>& literals, const State& s,
                                const Bindings& b0, const BindingsVisitor& visit) {
  positive_rec(literals, 0, s, b0, visit);
}

bool negatives_absent(const std::vector<Term>& patterns, const State& s, const Bindings& b) {
  for (const Term& p : patterns) {
    const Term pattern = substitute(p, b);
    for (const Term& fluent : s.fluents()) {
      if (match(pattern, fluent, b)) return false;
    }
  }
  return true;
}

}  // namespace tplan
