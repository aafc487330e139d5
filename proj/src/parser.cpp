#include "tplan/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "tplan/unify.hpp"

namespace tplan {

std::string format_diagnostic(const Diagnostic& d) {
  std::ostringstream os;
  os << (d.severity == Diagnostic::Severity::Error ? "error" : "warning") << ':' << d.line
     << ':' << d.column << ": [" << d.code << "] " << d.message;
  return os.str();
}

namespace {

struct Token {
  enum class Kind {
    Atom,
    Variable,
    Wildcard,
    Integer,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Dot,
    Neq,
    End,
    Bad
  };
  Kind kind = Kind::End;
  std::string text;
  long value = 0;
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    skip_ws_and_comments();
    Token t;
    t.line = line_;
    t.column = column_;
    if (pos_ >= text_.size()) {
      t.kind = Token::Kind::End;
      return t;
    }
    const char c = text_[pos_];
    if (c == '(') return punct(Token::Kind::LParen);
    if (c == ')') return punct(Token::Kind::RParen);
    if (c == '[') return punct(Token::Kind::LBracket);
    if (c == ']') return punct(Token::Kind::RBracket);
    if (c == ',') return punct(Token::Kind::Comma);
    if (c == '.') return punct(Token::Kind::Dot);
    if (c == '\\' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '=') {
      advance();
      advance();
      t.kind = Token::Kind::Neq;
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '-' && pos_ + 1 < text_.size() &&
         std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
      std::size_t start = pos_;
      if (c == '-') advance();
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        advance();
      }
      t.text = text_.substr(start, pos_ - start);
      try {
        t.value = std::stol(t.text);
        t.kind = Token::Kind::Integer;
      } catch (...) {
        t.kind = Token::Kind::Bad;
      }
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        advance();
      }
      t.text = text_.substr(start, pos_ - start);
      if (t.text == "_") {
        t.kind = Token::Kind::Wildcard;
      } else if (std::isupper(static_cast<unsigned char>(t.text[0])) || t.text[0] == '_') {
        t.kind = Token::Kind::Variable;
      } else {
        t.kind = Token::Kind::Atom;
      }
      return t;
    }
    advance();
    t.kind = Token::Kind::Bad;
    t.text = std::string(1, c);
    return t;
  }

 private:
  Token punct(Token::Kind kind) {
    Token t;
    t.kind = kind;
    t.line = line_;
    t.column = column_;
    advance();
    return t;
  }

  void advance() {
    if (pos_ < text_.size()) {
      if (text_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
      ++pos_;
    }
  }

  void skip_ws_and_comments() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

// Raw parse node: a term, a bracketed list, or a disequality inside a list.
struct PTerm {
  enum class Kind { Term, List, Diseq };
  Kind kind = Kind::Term;
  Term term;
  std::string functor;       // set for clause heads with list arguments
  std::vector<PTerm> items;  // list elements or mixed clause arguments
  std::string lhs, rhs;
  int line = 1, column = 1;
};

class ClauseParser {
 public:
  ClauseParser(const std::string& text, std::vector<Diagnostic>& diags)
      : lexer_(text), diags_(diags) {
    shift();
  }

  bool at_end() const { return tok_.kind == Token::Kind::End; }

  std::optional<PTerm> clause() {
    auto t = parse_item(/*allow_list=*/false, /*allow_diseq=*/false);
    if (!t) {
      recover();
      return std::nullopt;
    }
    if (tok_.kind != Token::Kind::Dot) {
      error("expected '.' after clause");
      recover();
      return std::nullopt;
    }
    shift();
    return t;
  }

 private:
  void shift() { tok_ = lexer_.next(); }

  void error(const std::string& message) {
    diags_.push_back(Diagnostic::error(tok_.line, tok_.column, "syntax_error", message));
  }

  void recover() {
    while (tok_.kind != Token::Kind::End && tok_.kind != Token::Kind::Dot) shift();
    if (tok_.kind == Token::Kind::Dot) shift();
  }

  std::optional<PTerm> parse_item(bool allow_list, bool allow_diseq) {
    if (tok_.kind == Token::Kind::LBracket) {
      if (!allow_list) {
        error("list not allowed here");
        return std::nullopt;
      }
      return parse_list();
    }
    if (allow_diseq && tok_.kind == Token::Kind::Variable) {
      Token var = tok_;
      shift();
      if (tok_.kind == Token::Kind::Neq) {
        shift();
        if (tok_.kind != Token::Kind::Variable) {
          error("expected variable after \\=");
          return std::nullopt;
        }
        PTerm p;
        p.kind = PTerm::Kind::Diseq;
        p.lhs = var.text;
        p.rhs = tok_.text;
        p.line = var.line;
        p.column = var.column;
        shift();
        return p;
      }
      PTerm p;
      p.term = Term::variable(var.text);
      p.line = var.line;
      p.column = var.column;
      return p;
    }
    return parse_term();
  }

  std::optional<PTerm> parse_list() {
    PTerm list;
    list.kind = PTerm::Kind::List;
    list.line = tok_.line;
    list.column = tok_.column;
    shift();  // '['
    if (tok_.kind == Token::Kind::RBracket) {
      shift();
      return list;
    }
    while (true) {
      auto item = parse_item(/*allow_list=*/false, /*allow_diseq=*/true);
      if (!item) return std::nullopt;
      list.items.push_back(std::move(*item));
      if (tok_.kind == Token::Kind::Comma) {
        shift();
        continue;
      }
      if (tok_.kind == Token::Kind::RBracket) {
        shift();
        return list;
      }
      error("expected ',' or ']' in list");
      return std::nullopt;
    }
  }

  std::optional<PTerm> parse_term() {
    PTerm p;
    p.line = tok_.line;
    p.column = tok_.column;
    switch (tok_.kind) {
      case Token::Kind::Integer:
        p.term = Term::integer(tok_.value);
        shift();
        return p;
      case Token::Kind::Variable:
        p.term = Term::variable(tok_.text);
        shift();
        return p;
      case Token::Kind::Wildcard:
        p.term = Term::wildcard();
        shift();
        return p;
      case Token::Kind::Atom: {
        std::string functor = tok_.text;
        shift();
        if (tok_.kind != Token::Kind::LParen) {
          p.term = Term::atom(functor);
          return p;
        }
        shift();  // '('
        std::vector<PTerm> raw_args;
        if (tok_.kind == Token::Kind::RParen) {
          shift();
          p.term = Term::atom(functor);
          return p;
        }
        while (true) {
          auto arg = parse_item(/*allow_list=*/true, /*allow_diseq=*/false);
          if (!arg) return std::nullopt;
          raw_args.push_back(std::move(*arg));
          if (tok_.kind == Token::Kind::Comma) {
            shift();
            continue;
          }
          if (tok_.kind == Token::Kind::RParen) {
            shift();
            break;
          }
          error("expected ',' or ')' in argument list");
          return std::nullopt;
        }
        const bool any_list = std::any_of(
            raw_args.begin(), raw_args.end(),
            [](const PTerm& a) { return a.kind != PTerm::Kind::Term; });
        if (any_list) {
          p.functor = functor;
          p.items = std::move(raw_args);
          return p;
        }
        std::vector<Term> args;
        args.reserve(raw_args.size());
        for (auto& a : raw_args) args.push_back(std::move(a.term));
        p.term = Term::compound(functor, std::move(args));
        return p;
      }
      default:
        error("expected a term");
        return std::nullopt;
    }
  }

  Lexer lexer_;
  Token tok_;
  std::vector<Diagnostic>& diags_;
};

// Functor and argument count of a clause node, whichever shape it carries.
std::pair<std::string, std::size_t> clause_signature(const PTerm& clause) {
  if (!clause.functor.empty()) return {clause.functor, clause.items.size()};
  if (clause.term.is_callable()) return {clause.term.name(), clause.term.arity()};
  return {"", 0};
}

const std::set<std::string> kReservedFunctors = {
    "init_state", "goal_state", "action", "ll_action", "mapping", "resources", "duration"};

class KbBuilder {
 public:
  explicit KbBuilder(std::vector<Diagnostic>& diags) : diags_(diags) {}

  void add_clause(const PTerm& clause) {
    auto [functor, arity] = clause_signature(clause);
    if (functor.empty()) {
      err(clause, "unknown_clause", "clause is not a callable term");
      return;
    }
    if (functor == "init_state" && arity == 1) return handle_state(clause, /*init=*/true);
    if (functor == "goal_state" && arity == 1) return handle_state(clause, /*init=*/false);
    if (functor == "action" && arity == 5) return handle_action(clause, ActionLevel::High);
    if (functor == "ll_action" && (arity == 5 || arity == 6)) {
      return handle_action(clause, ActionLevel::Low);
    }
    if (functor == "mapping" && arity == 2) return handle_mapping(clause);
    if (functor == "resources" && arity == 1) return handle_resources(clause);
    if (functor == "duration" && arity == 3) return handle_duration(clause);
    if (kReservedFunctors.count(functor)) {
      err(clause, "unknown_clause",
          functor + "/" + std::to_string(arity) + " does not match the expected schema");
      return;
    }
    handle_fact(clause);
  }

  void finish() {
    if (!saw_init_) {
      diags_.push_back(
          Diagnostic::warning(1, 1, "missing_section", "no init_state clause; assuming empty"));
    }
    if (!saw_goal_) {
      diags_.push_back(
          Diagnostic::warning(1, 1, "missing_section", "no goal_state clause; assuming empty"));
    }
  }

  Problem take() { return std::move(problem_); }

 private:
  void err(const PTerm& at, std::string code, std::string message) {
    diags_.push_back(Diagnostic::error(at.line, at.column, std::move(code), std::move(message)));
  }
  void warn(const PTerm& at, std::string code, std::string message) {
    diags_.push_back(
        Diagnostic::warning(at.line, at.column, std::move(code), std::move(message)));
  }

  const PTerm* list_at(const PTerm& clause, std::size_t idx, const char* what) {
    if (idx >= clause.items.size() || clause.items[idx].kind != PTerm::Kind::List) {
      err(clause, "unknown_clause",
          std::string("expected a list for ") + what + " (argument " +
              std::to_string(idx + 1) + ")");
      return nullptr;
    }
    return &clause.items[idx];
  }

  bool plain_terms(const PTerm& list, std::vector<Term>& out, const char* what) {
    out.clear();
    for (const PTerm& item : list.items) {
      if (item.kind != PTerm::Kind::Term || !item.term.is_callable()) {
        err(item, "unknown_clause", std::string("expected a predicate in ") + what);
        return false;
      }
      out.push_back(item.term);
    }
    return true;
  }

  void handle_state(const PTerm& clause, bool init) {
    bool& seen = init ? saw_init_ : saw_goal_;
    if (seen) {
      err(clause, "duplicate_section",
          std::string(init ? "init_state" : "goal_state") + " declared twice");
      return;
    }
    const PTerm* list = list_at(clause, 0, "the state");
    if (!list) return;
    seen = true;
    std::vector<Term> fluents;
    bool ok = true;
    for (const PTerm& item : list->items) {
      if (item.kind != PTerm::Kind::Term || !item.term.is_callable()) {
        err(item, "unknown_clause", "expected a fluent");
        ok = false;
        continue;
      }
      const Term& t = item.term;
      if (init && !t.ground()) {
        err(item, "non_ground_fluent", "init_state fluent not ground: " + t.to_string());
        ok = false;
        continue;
      }
      if (!init && !t.variables().empty()) {
        err(item, "non_ground_fluent",
            "goal_state fluent may use wildcards but not variables: " + t.to_string());
        ok = false;
        continue;
      }
      fluents.push_back(t);
    }
    if (!ok) return;
    State s;
    for (const Term& f : fluents) {
      if (f.ground()) s.add(f);
    }
    if (init) {
      problem_.init = std::move(s);
    } else {
      problem_.goal = std::move(s);
      for (const Term& f : fluents) {
        if (!f.ground()) problem_.goal_wildcards.push_back(f);
      }
      std::sort(problem_.goal_wildcards.begin(), problem_.goal_wildcards.end());
      problem_.goal_wildcards.erase(
          std::unique(problem_.goal_wildcards.begin(), problem_.goal_wildcards.end()),
          problem_.goal_wildcards.end());
    }
  }

  void handle_action(const PTerm& clause, ActionLevel level) {
    if (clause.items.empty() || clause.items[0].kind != PTerm::Kind::Term ||
        !clause.items[0].term.is_callable()) {
      err(clause, "unknown_clause", "action head must be a callable term");
      return;
    }
    SnapAction a;
    a.head = clause.items[0].term;
    a.level = level;
    a.kind = snap_kind_of(a.head.name());

    const std::size_t nlists = clause.items.size() - 1;
    std::size_t pos_idx = 1, neg_idx = 2, grounding_idx = 3, effects_idx = 4;
    if (nlists == 5) {
      // Five-list low-level form: the third list holds end conditions the
      // pipeline does not support and must be empty.
      const PTerm* endc = list_at(clause, 3, "end conditions");
      if (!endc) return;
      if (!endc->items.empty()) {
        err(*endc, "unsupported_end_conditions",
            "non-empty end-condition list is not supported");
        return;
      }
      grounding_idx = 4;
      effects_idx = 5;
    }

    const PTerm* pos = list_at(clause, pos_idx, "positive preconditions");
    const PTerm* neg = list_at(clause, neg_idx, "negative preconditions");
    const PTerm* grounding = list_at(clause, grounding_idx, "grounding predicates");
    const PTerm* effects = list_at(clause, effects_idx, "effects");
    if (!pos || !neg || !grounding || !effects) return;

    if (!plain_terms(*pos, a.pos_pre, "positive preconditions")) return;
    if (!plain_terms(*neg, a.neg_pre, "negative preconditions")) return;

    std::vector<std::string> bound = a.head.variables();
    for (const PTerm& item : grounding->items) {
      if (item.kind == PTerm::Kind::Diseq) {
        const bool lhs_ok = std::find(bound.begin(), bound.end(), item.lhs) != bound.end();
        const bool rhs_ok = std::find(bound.begin(), bound.end(), item.rhs) != bound.end();
        if (!lhs_ok || !rhs_ok) {
          err(item, "unbound_disequality",
              "disequality references a variable not bound by earlier grounding patterns");
          return;
        }
        a.grounding.push_back(GroundingItem::make_disequality(item.lhs, item.rhs));
        continue;
      }
      if (!item.term.is_callable()) {
        err(item, "unknown_clause", "expected a predicate in grounding list");
        return;
      }
      for (const std::string& v : item.term.variables()) {
        if (std::find(bound.begin(), bound.end(), v) == bound.end()) bound.push_back(v);
      }
      a.grounding.push_back(GroundingItem::make_pattern(item.term));
    }

    // Positive preconditions may bind further variables (validated with a
    // warning later); effects must not introduce fresh ones.
    std::vector<std::string> effect_scope = bound;
    for (const Term& t : a.pos_pre) {
      for (const std::string& v : t.variables()) {
        if (std::find(effect_scope.begin(), effect_scope.end(), v) == effect_scope.end()) {
          effect_scope.push_back(v);
        }
      }
    }
    for (const PTerm& item : effects->items) {
      if (item.kind != PTerm::Kind::Term || !item.term.is_compound() ||
          item.term.arity() != 1 ||
          (item.term.name() != "add" && item.term.name() != "del")) {
        err(item, "invalid_effect", "effects must be add(Literal) or del(Literal)");
        return;
      }
      Effect e;
      e.op = item.term.name() == "add" ? Effect::Op::Add : Effect::Op::Del;
      e.literal = item.term.args()[0];
      if (!e.literal.is_callable()) {
        err(item, "invalid_effect", "effect literal must be a predicate");
        return;
      }
      for (const std::string& v : e.literal.variables()) {
        if (std::find(effect_scope.begin(), effect_scope.end(), v) == effect_scope.end()) {
          err(item, "unbound_effect_variable",
              "effect variable " + v + " not bound by head, grounding or preconditions");
          return;
        }
      }
      a.effects.push_back(std::move(e));
    }

    auto& bucket = level == ActionLevel::High ? problem_.hl_actions : problem_.ll_actions;
    for (const SnapAction& existing : bucket) {
      if (existing.name() == a.name() && existing.head.arity() == a.head.arity()) {
        err(clause, "duplicate_action",
            "action " + a.name() + "/" + std::to_string(a.head.arity()) + " declared twice");
        return;
      }
    }
    bucket.push_back(std::move(a));
  }

  void handle_mapping(const PTerm& clause) {
    if (clause.items.empty() || clause.items[0].kind != PTerm::Kind::Term ||
        !clause.items[0].term.is_compound()) {
      err(clause, "unknown_clause", "mapping head must be a compound term");
      return;
    }
    Mapping m;
    m.hl_start_head = clause.items[0].term;
    const PTerm* list = list_at(clause, 1, "the expansion");
    if (!list) return;
    const std::vector<std::string> head_vars = m.hl_start_head.variables();
    for (const PTerm& item : list->items) {
      if (item.kind != PTerm::Kind::Term || !item.term.is_callable()) {
        err(item, "unknown_clause", "expected an action head in mapping expansion");
        return;
      }
      for (const std::string& v : item.term.variables()) {
        if (std::find(head_vars.begin(), head_vars.end(), v) == head_vars.end()) {
          err(item, "unbound_mapping_variable",
              "mapping expansion variable " + v + " not bound by the high-level head");
          return;
        }
      }
      m.expansion.push_back(item.term);
    }
    problem_.mappings.push_back(std::move(m));
  }

  void handle_resources(const PTerm& clause) {
    if (!clause.term.is_compound()) {
      err(clause, "unknown_clause", "resources/1 expects a pattern argument");
      return;
    }
    ResourcePattern r;
    r.pattern = clause.term.args()[0];
    if (!r.pattern.is_callable()) {
      err(clause, "unknown_clause", "resource pattern must be a predicate");
      return;
    }
    problem_.resources.push_back(std::move(r));
  }

  void handle_duration(const PTerm& clause) {
    const auto& args = clause.term.args();
    if (clause.term.arity() != 3 || !args[0].is_atom() || !args[1].is_integer() ||
        !args[2].is_integer()) {
      err(clause, "invalid_duration", "expected duration(name, Min, Max) with integer bounds");
      return;
    }
    const long lo = args[1].value();
    const long hi = args[2].value();
    if (lo < 0 || hi < lo) {
      err(clause, "invalid_duration", "duration bounds must satisfy 0 <= Min <= Max");
      return;
    }
    problem_.durations[args[0].name()] = DurationBounds{lo, hi};
  }

  void handle_fact(const PTerm& clause) {
    if (!clause.functor.empty()) {
      err(clause, "unknown_clause", "lists are not allowed in plain facts");
      return;
    }
    const Term& t = clause.term;
    if (!t.ground()) {
      err(clause, "unknown_clause",
          "non-ground fact is not a recognized clause: " + t.to_string());
      return;
    }
    if (problem_.kb_contains(t)) {
      warn(clause, "duplicate_fact", "duplicate fact ignored: " + t.to_string());
      return;
    }
    problem_.general_kb.push_back(t);
  }

  std::vector<Diagnostic>& diags_;
  Problem problem_;
  bool saw_init_ = false;
  bool saw_goal_ = false;
};

std::string effects_to_string(const std::vector<Effect>& effects) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < effects.size(); ++i) {
    if (i) os << ", ";
    os << (effects[i].op == Effect::Op::Add ? "add(" : "del(")
       << effects[i].literal.to_string() << ')';
  }
  os << ']';
  return os.str();
}

std::string terms_to_string(const std::vector<Term>& terms) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) os << ", ";
    os << terms[i].to_string();
  }
  os << ']';
  return os.str();
}

std::string grounding_to_string(const std::vector<GroundingItem>& items) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) os << ", ";
    if (items[i].kind == GroundingItem::Kind::Pattern) {
      os << items[i].pattern.to_string();
    } else {
      os << items[i].lhs_var << " \\= " << items[i].rhs_var;
    }
  }
  os << ']';
  return os.str();
}

void serialize_action(std::ostringstream& os, const SnapAction& a) {
  os << (a.level == ActionLevel::High ? "action(" : "ll_action(") << a.head.to_string()
     << ",\n  " << terms_to_string(a.pos_pre) << ",\n  " << terms_to_string(a.neg_pre)
     << ",\n  " << grounding_to_string(a.grounding) << ",\n  "
     << effects_to_string(a.effects) << "\n).\n";
}

}  // namespace

ParseResult parse_kb(const std::string& text) {
  ParseResult result;
  ClauseParser parser(text, result.diagnostics);
  KbBuilder builder(result.diagnostics);
  while (!parser.at_end()) {
    if (auto clause = parser.clause()) builder.add_clause(*clause);
  }
  builder.finish();
  if (!has_errors(result.diagnostics)) result.problem = builder.take();
  return result;
}

std::string serialize_kb(const Problem& p) {
  std::ostringstream os;
  if (!p.general_kb.empty()) {
    os << "% general knowledge\n";
    for (const Term& fact : p.general_kb) os << fact.to_string() << ".\n";
    os << '\n';
  }
  os << "init_state(" << terms_to_string(p.init.fluents()) << ").\n";
  std::vector<Term> goal = p.goal.fluents();
  goal.insert(goal.end(), p.goal_wildcards.begin(), p.goal_wildcards.end());
  std::sort(goal.begin(), goal.end());
  os << "goal_state(" << terms_to_string(goal) << ").\n";
  if (!p.hl_actions.empty()) {
    os << "\n% high-level actions\n";
    for (const SnapAction& a : p.hl_actions) serialize_action(os, a);
  }
  if (!p.ll_actions.empty()) {
    os << "\n% low-level actions\n";
    for (const SnapAction& a : p.ll_actions) serialize_action(os, a);
  }
  if (!p.mappings.empty()) {
    os << "\n% mappings\n";
    for (const Mapping& m : p.mappings) {
      os << "mapping(" << m.hl_start_head.to_string() << ",\n  "
         << terms_to_string(m.expansion) << "\n).\n";
    }
  }
  if (!p.resources.empty()) {
    os << '\n';
    for (const ResourcePattern& r : p.resources) {
      os << "resources(" << r.pattern.to_string() << ").\n";
    }
  }
  if (!p.durations.empty()) {
    os << '\n';
    for (const auto& [name, bounds] : p.durations) {
      os << "duration(" << name << ", " << bounds.min << ", " << bounds.max << ").\n";
    }
  }
  return os.str();
}

std::vector<Diagnostic> validate_kb(const Problem& p) {
  std::vector<Diagnostic> ds;
  auto err = [&ds](std::string code, std::string message) {
    ds.push_back(Diagnostic::error(1, 1, std::move(code), std::move(message)));
  };
  auto warn = [&ds](std::string code, std::string message) {
    ds.push_back(Diagnostic::warning(1, 1, std::move(code), std::move(message)));
  };

  // High- and low-level action names must be disjoint.
  std::set<std::string> hl_names, ll_names;
  for (const SnapAction& a : p.hl_actions) hl_names.insert(a.name());
  for (const SnapAction& a : p.ll_actions) ll_names.insert(a.name());
  for (const std::string& n : hl_names) {
    if (ll_names.count(n)) err("level_name_clash", "action declared at both levels: " + n);
  }

  // Mapping sources must be declared _start high-level actions; every
  // expansion head must name a declared low-level action.
  for (const Mapping& m : p.mappings) {
    const std::string& src = m.hl_start_head.name();
    const SnapAction* hl = nullptr;
    for (const SnapAction& a : p.hl_actions) {
      if (a.name() == src && a.head.arity() == m.hl_start_head.arity()) hl = &a;
    }
    if (!hl || hl->kind != SnapKind::Start) {
      err("unknown_mapping_source",
          "mapping source is not a declared high-level start action: " + src);
    }
    for (const Term& target : m.expansion) {
      bool found = false;
      for (const SnapAction& a : p.ll_actions) {
        if (a.name() == target.name() && a.head.arity() == target.arity()) found = true;
      }
      if (!found) {
        err("unknown_mapping_target",
            "mapping target is not a declared low-level action: " + target.to_string());
      }
    }
  }

  // Snap pairing must succeed per level.
  for (const auto* bucket : {&p.hl_actions, &p.ll_actions}) {
    try {
      pair_snap_actions(*bucket);
    } catch (const PlanningError& e) {
      err("unpaired_snap_action", e.what());
    }
  }

  // Goal fluents must be achievable: produced by some effect or already true.
  auto functor_arity = [](const Term& t) {
    return t.name() + "/" + std::to_string(t.arity());
  };
  std::set<std::string> added;
  std::set<std::string> touched;
  for (const auto* bucket : {&p.hl_actions, &p.ll_actions}) {
    for (const SnapAction& a : *bucket) {
      for (const Effect& e : a.effects) {
        touched.insert(functor_arity(e.literal));
        if (e.op == Effect::Op::Add) added.insert(functor_arity(e.literal));
      }
    }
  }
  std::vector<Term> goal_all = p.goal.fluents();
  goal_all.insert(goal_all.end(), p.goal_wildcards.begin(), p.goal_wildcards.end());
  for (const Term& g : goal_all) {
    bool in_init = false;
    for (const Term& f : p.init.fluents()) {
      if (f.name() == g.name() && f.arity() == g.arity()) in_init = true;
    }
    if (!in_init && !added.count(functor_arity(g))) {
      warn("unreachable_goal_fluent",
           "no action adds " + functor_arity(g) + " and it is not initially true");
    }
  }

  // A negative precondition over a family nothing ever touches is suspicious.
  std::set<std::string> init_families;
  for (const Term& f : p.init.fluents()) init_families.insert(functor_arity(f));
  for (const auto* bucket : {&p.hl_actions, &p.ll_actions}) {
    for (const SnapAction& a : *bucket) {
      for (const Term& n : a.neg_pre) {
        const std::string fa = functor_arity(n);
        if (!touched.count(fa) && !init_families.count(fa)) {
          warn("dangling_neg_pre",
               a.name() + ": negative precondition " + fa + " is never produced or consumed");
        }
      }
    }
  }

  // Positive preconditions binding fresh variables are allowed but flagged.
  for (const auto* bucket : {&p.hl_actions, &p.ll_actions}) {
    for (const SnapAction& a : *bucket) {
      std::vector<std::string> bound = a.head.variables();
      for (const GroundingItem& g : a.grounding) {
        if (g.kind != GroundingItem::Kind::Pattern) continue;
        for (const std::string& v : g.pattern.variables()) {
          if (std::find(bound.begin(), bound.end(), v) == bound.end()) bound.push_back(v);
        }
      }
      for (const Term& t : a.pos_pre) {
        for (const std::string& v : t.variables()) {
          if (std::find(bound.begin(), bound.end(), v) == bound.end()) {
            warn("positive_precondition_binds",
                 a.name() + ": positive precondition binds new variable " + v);
            bound.push_back(v);
          }
        }
      }
    }
  }

  // Resource patterns should match at least one fact.
  for (const ResourcePattern& r : p.resources) {
    bool any = false;
    for (const Term& fact : p.general_kb) {
      if (match(r.pattern, fact, {})) any = true;
    }
    if (!any) {
      warn("empty_resource_type",
           "resource pattern matches no general-KB fact: " + r.pattern.to_string());
    }
  }

  return ds;
}

}  // namespace tplan
