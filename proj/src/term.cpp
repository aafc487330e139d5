#include "tplan/term.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tplan {

Term Term::atom(std::string name) {
  Term t;
  t.kind_ = Kind::Atom;
  t.name_ = std::move(name);
  return t;
}

Term Term::integer(long value) {
  Term t;
  t.kind_ = Kind::Integer;
  t.value_ = value;
  return t;
}

Term Term::variable(std::string name) {
  Term t;
  t.kind_ = Kind::Variable;
  t.name_ = std::move(name);
  return t;
}

Term Term::wildcard() {
  Term t;
  t.kind_ = Kind::Wildcard;
  return t;
}

Term Term::compound(std::string functor, std::vector<Term> args) {
  if (args.empty()) return atom(std::move(functor));
  Term t;
  t.kind_ = Kind::Compound;
  t.name_ = std::move(functor);
  t.args_ = std::move(args);
  return t;
}

bool Term::ground() const {
  switch (kind_) {
    case Kind::Variable:
    case Kind::Wildcard:
      return false;
    case Kind::Compound:
      return std::all_of(args_.begin(), args_.end(),
                         [](const Term& a) { return a.ground(); });
    default:
      return true;
  }
}

void Term::collect_variables(std::vector<std::string>& out) const {
  if (kind_ == Kind::Variable) {
    if (std::find(out.begin(), out.end(), name_) == out.end()) out.push_back(name_);
  } else if (kind_ == Kind::Compound) {
    for (const Term& a : args_) a.collect_variables(out);
  }
}

std::vector<std::string> Term::variables() const {
  std::vector<std::string> out;
  collect_variables(out);
  return out;
}

std::string Term::to_string(bool spaced) const {
  switch (kind_) {
    case Kind::Atom:
      return name_;
    case Kind::Integer:
      return std::to_string(value_);
    case Kind::Variable:
      return name_;
    case Kind::Wildcard:
      return "_";
    case Kind::Compound: {
      std::ostringstream os;
      os << name_ << '(';
      for (std::size_t i = 0; i < args_.size(); ++i) {
        if (i) os << (spaced ? ", " : ",");
        os << args_[i].to_string(spaced);
      }
      os << ')';
      return os.str();
    }
  }
  return "?";
}

bool Term::operator==(const Term& other) const {
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case Kind::Atom:
    case Kind::Variable:
      return name_ == other.name_;
    case Kind::Integer:
      return value_ == other.value_;
    case Kind::Wildcard:
      return true;
    case Kind::Compound:
      return name_ == other.name_ && args_ == other.args_;
  }
  return false;
}

bool Term::operator<(const Term& other) const {
  if (kind_ != other.kind_) return kind_ < other.kind_;
  switch (kind_) {
    case Kind::Atom:
    case Kind::Variable:
      return name_ < other.name_;
    case Kind::Integer:
      return value_ < other.value_;
    case Kind::Wildcard:
      return false;
    case Kind::Compound:
      if (name_ != other.name_) return name_ < other.name_;
      if (args_.size() != other.args_.size()) return args_.size() < other.args_.size();
      return args_ < other.args_;
  }
  return false;
}

std::size_t hash_value(const Term& t) {
  // FNV-1a over a structural encoding.
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](std::size_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::size_t>(t.kind()));
  switch (t.kind()) {
    case Term::Kind::Atom:
    case Term::Kind::Variable:
      for (char c : t.name()) mix(static_cast<unsigned char>(c));
      break;
    case Term::Kind::Integer:
      mix(static_cast<std::size_t>(t.value()));
      break;
    case Term::Kind::Wildcard:
      break;
    case Term::Kind::Compound:
      for (char c : t.name()) mix(static_cast<unsigned char>(c));
      mix(t.arity());
      for (const Term& a : t.args()) mix(hash_value(a));
      break;
  }
  return h;
}

State::State(std::vector<Term> fluents) : fluents_(std::move(fluents)) {
  for (const Term& f : fluents_) {
    if (!f.ground()) throw std::invalid_argument("state fluent not ground: " + f.to_string());
  }
  std::sort(fluents_.begin(), fluents_.end());
  fluents_.erase(std::unique(fluents_.begin(), fluents_.end()), fluents_.end());
}

bool State::contains(const Term& fluent) const {
  return std::binary_search(fluents_.begin(), fluents_.end(), fluent);
}

void State::add(const Term& fluent) {
  auto it = std::lower_bound(fluents_.begin(), fluents_.end(), fluent);
  if (it == fluents_.end() || *it != fluent) fluents_.insert(it, fluent);
}

void State::remove(const Term& fluent) {
  auto it = std::lower_bound(fluents_.begin(), fluents_.end(), fluent);
  if (it != fluents_.end() && *it == fluent) fluents_.erase(it);
}

std::string State::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < fluents_.size(); ++i) {
    if (i) os << ", ";
    os << fluents_[i].to_string();
  }
  os << '}';
  return os.str();
}

std::size_t hash_value(const State& s) {
  std::size_t h = 14695981039346656037ull;
  for (const Term& f : s.fluents()) {
    h ^= hash_value(f);
    h *= 1099511628211ull;
  }
  return h;
}

std::string to_string(const Bindings& b) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [name, value] : b) {
    if (!first) os << ", ";
    first = false;
    os << name << "=" << value.to_string();
  }
  os << '}';
  return os.str();
}

}  // namespace tplan
