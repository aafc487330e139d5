#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace tplan {

// A logic term. Atoms are functors with zero arguments; integers are their
// own leaf kind so positions and durations compare numerically.
class Term {
 public:
  enum class Kind : std::uint8_t { Atom, Integer, Variable, Wildcard, Compound };

  Term() : kind_(Kind::Wildcard) {}

  static Term atom(std::string name);
  static Term integer(long value);
  static Term variable(std::string name);
  static Term wildcard();
  static Term compound(std::string functor, std::vector<Term> args);

  Kind kind() const { return kind_; }
  bool is_atom() const { return kind_ == Kind::Atom; }
  bool is_integer() const { return kind_ == Kind::Integer; }
  bool is_variable() const { return kind_ == Kind::Variable; }
  bool is_wildcard() const { return kind_ == Kind::Wildcard; }
  bool is_compound() const { return kind_ == Kind::Compound; }
  // Atom or compound: something that can head a clause or name a fluent.
  bool is_callable() const { return is_atom() || is_compound(); }

  // Functor name for atoms/compounds, variable name for variables.
  const std::string& name() const { return name_; }
  long value() const { return value_; }
  const std::vector<Term>& args() const { return args_; }
  std::size_t arity() const { return args_.size(); }

  bool ground() const;
  // Collects named variables in depth-first order, once each.
  void collect_variables(std::vector<std::string>& out) const;
  std::vector<std::string> variables() const;

  // Prolog-style text: at(b1,1,1). `spaced` inserts a space after commas,
  // matching the plan-listing style.
  std::string to_string(bool spaced = false) const;

  bool operator==(const Term& other) const;
  bool operator!=(const Term& other) const { return !(*this == other); }
  // Total order: kind, then functor/name, then arity, then args.
  bool operator<(const Term& other) const;

 private:
  Kind kind_;
  std::string name_;
  long value_ = 0;
  std::vector<Term> args_;
};

std::size_t hash_value(const Term& t);

struct TermHash {
  std::size_t operator()(const Term& t) const { return hash_value(t); }
};

// Fluent with polarity; negative literals only appear in precondition
// contexts, never inside a State.
struct Literal {
  Term term;
  bool positive = true;
};

// Set of ground fluents in canonical (sorted, deduplicated) form.
class State {
 public:
  State() = default;
  explicit State(std::vector<Term> fluents);

  bool contains(const Term& fluent) const;
  void add(const Term& fluent);
  void remove(const Term& fluent);

  const std::vector<Term>& fluents() const { return fluents_; }
  std::size_t size() const { return fluents_.size(); }
  bool empty() const { return fluents_.empty(); }

  bool operator==(const State& other) const { return fluents_ == other.fluents_; }
  bool operator!=(const State& other) const { return !(*this == other); }
  bool operator<(const State& other) const { return fluents_ < other.fluents_; }

  std::string to_string() const;

 private:
  std::vector<Term> fluents_;  // sorted, unique
};

std::size_t hash_value(const State& s);

struct StateHash {
  std::size_t operator()(const State& s) const { return hash_value(s); }
};

// Variable assignment produced by matching. std::map keeps iteration
// deterministic for printing and hashing.
using Bindings = std::map<std::string, Term>;

std::string to_string(const Bindings& b);

}  // namespace tplan
