#include "sheafcalc/logic.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

namespace sheafcalc {

Term Term::make(Kind k, std::optional<Term> a, std::optional<Term> b, std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->name = std::move(name);
  if (a) n->lhs = a->node_;
  if (b) n->rhs = b->node_;
  return Term(std::move(n));
}

Term Term::var(std::string name) { return make(Kind::Var, std::nullopt, std::nullopt, std::move(name)); }
Term Term::zero() { return make(Kind::Zero, std::nullopt, std::nullopt); }
Term Term::one() { return make(Kind::One, std::nullopt, std::nullopt); }
Term Term::negation(Term t) { return make(Kind::Not, std::move(t), std::nullopt); }
Term Term::conj(Term a, Term b) { return make(Kind::And, std::move(a), std::move(b)); }
Term Term::disj(Term a, Term b) { return make(Kind::Or, std::move(a), std::move(b)); }
Term Term::implies(Term a, Term b) { return make(Kind::Imp, std::move(a), std::move(b)); }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::Var: return a.name() == b.name();
    case Term::Kind::Zero:
    case Term::Kind::One: return true;
    case Term::Kind::Not: return a.lhs() == b.lhs();
    default: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

namespace {

enum class Tok { Var, Zero, One, Not, And, Or, Imp, LParen, RParen, Comma, Turnstile, Eq, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;  // 1-based
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::Var: return "variable";
    case Tok::Zero: return "'0'";
    case Tok::One: return "'1'";
    case Tok::Not: return "'~'";
    case Tok::And: return "'&'";
    case Tok::Or: return "'|'";
    case Tok::Imp: return "'->'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Turnstile: return "'|-'";
    case Tok::Eq: return "'='";
    case Tok::End: return "end of input";
  }
  return "?";
}

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char ch = s[i];
    const std::size_t col = i + 1;
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (ch >= 'a' && ch <= 'z') {
      std::size_t j = i + 1;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::Var, std::string(s.substr(i, j - i)), col});
      i = j;
      continue;
    }
    auto single = [&](Tok t) {
      out.push_back({t, std::string(1, ch), col});
      ++i;
    };
    switch (ch) {
      case '0': single(Tok::Zero); continue;
      case '1': single(Tok::One); continue;
      case '~': single(Tok::Not); continue;
      case '&': single(Tok::And); continue;
      case '(': single(Tok::LParen); continue;
      case ')': single(Tok::RParen); continue;
      case ',': single(Tok::Comma); continue;
      case '=': single(Tok::Eq); continue;
      case '|':
        if (i + 1 < s.size() && s[i + 1] == '-') {
          out.push_back({Tok::Turnstile, "|-", col});
          i += 2;
        } else {
          single(Tok::Or);
        }
        continue;
      case '-':
        if (i + 1 < s.size() && s[i + 1] == '>') {
          out.push_back({Tok::Imp, "->", col});
          i += 2;
          continue;
        }
        break;
      default: break;
    }
    throw SyntaxError("syntax error at token " + std::to_string(out.size() + 1) + " (column " +
                          std::to_string(col) + "): unexpected character '" + std::string(1, ch) + "'",
                      out.size() + 1, col);
  }
  out.push_back({Tok::End, "", s.size() + 1});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(lex(text)) {}

  Term term() { return implication(); }

  Equation equation() {
    Term l = term();
    expect(Tok::Eq, "'='");
    Term r = term();
    return {std::move(l), std::move(r)};
  }

  bool has(Tok t) const {
    return std::ranges::any_of(tokens_, [t](const Token& k) { return k.kind == t; });
  }
  Tok peek() const { return tokens_[pos_].kind; }
  void advance() { ++pos_; }

  void expect(Tok t, const char* what) {
    if (peek() != t) fail(std::string("expected ") + what);
    advance();
  }

  [[noreturn]] void fail(const std::string& msg) const {
    const auto& tok = tokens_[pos_];
    std::string found = tok.kind == Tok::End ? "end of input" : "'" + tok.text + "'";
    throw SyntaxError("syntax error at token " + std::to_string(pos_ + 1) + " (" + found + ", column " +
                          std::to_string(tok.column) + "): " + msg,
                      pos_ + 1, tok.column);
  }

 private:
  Term implication() {
    Term lhs = disjunction();
    if (peek() == Tok::Imp) {
      advance();
      return Term::implies(std::move(lhs), implication());
    }
    return lhs;
  }

  Term disjunction() {
    Term lhs = conjunction();
    while (peek() == Tok::Or) {
      advance();
      lhs = Term::disj(std::move(lhs), conjunction());
    }
    return lhs;
  }

  Term conjunction() {
    Term lhs = unary();
    while (peek() == Tok::And) {
      advance();
      lhs = Term::conj(std::move(lhs), unary());
    }
    return lhs;
  }

  Term unary() {
    if (peek() == Tok::Not) {
      advance();
      return Term::negation(unary());
    }
    return atom();
  }

  Term atom() {
    const auto& tok = tokens_[pos_];
    switch (tok.kind) {
      case Tok::Var: advance(); return Term::var(tok.text);
      case Tok::Zero: advance(); return Term::zero();
      case Tok::One: advance(); return Term::one();
      case Tok::LParen: {
        advance();
        Term t = implication();
        expect(Tok::RParen, "')'");
        return t;
      }
      default: fail(std::string("expected a term, found ") + describe(tok.kind));
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

int precedence(Term::Kind k) {
  switch (k) {
    case Term::Kind::Imp: return 1;
    case Term::Kind::Or: return 2;
    case Term::Kind::And: return 3;
    case Term::Kind::Not: return 4;
    default: return 5;
  }
}

void print(const Term& t, int min_prec, std::string& out) {
  const int p = precedence(t.kind());
  const bool parens = p < min_prec;
  if (parens) out += '(';
  switch (t.kind()) {
    case Term::Kind::Var: out += t.name(); break;
    case Term::Kind::Zero: out += '0'; break;
    case Term::Kind::One: out += '1'; break;
    case Term::Kind::Not:
      out += '~';
      print(t.lhs(), 4, out);
      break;
    case Term::Kind::Imp:
      print(t.lhs(), 2, out);
      out += " -> ";
      print(t.rhs(), 1, out);
      break;
    case Term::Kind::Or:
    case Term::Kind::And:
      print(t.lhs(), p, out);
      out += t.kind() == Term::Kind::Or ? " | " : " & ";
      print(t.rhs(), p + 1, out);
      break;
  }
  if (parens) out += ')';
}

void collect_vars(const Term& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case Term::Kind::Var: out.insert(t.name()); break;
    case Term::Kind::Zero:
    case Term::Kind::One: break;
    case Term::Kind::Not: collect_vars(t.lhs(), out); break;
    default:
      collect_vars(t.lhs(), out);
      collect_vars(t.rhs(), out);
  }
}

bool contains_kind(const Term& t, Term::Kind k) {
  if (t.kind() == k) return true;
  switch (t.kind()) {
    case Term::Kind::Var:
    case Term::Kind::Zero:
    case Term::Kind::One: return false;
    case Term::Kind::Not: return contains_kind(t.lhs(), k);
    default: return contains_kind(t.lhs(), k) || contains_kind(t.rhs(), k);
  }
}

}  // namespace

Term parse_term(std::string_view text) {
  Parser p(text);
  Term t = p.term();
  if (p.peek() != Tok::End) p.fail("unexpected trailing input");
  return t;
}

std::string to_string(const Term& t) {
  std::string out;
  print(t, 1, out);
  return out;
}

std::vector<std::string> free_variables(const Term& t) {
  std::set<std::string> vars;
  collect_vars(t, vars);
  return {vars.begin(), vars.end()};
}

std::size_t depth(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var:
    case Term::Kind::Zero:
    case Term::Kind::One: return 1;
    case Term::Kind::Not: return 1 + depth(t.lhs());
    default: return 1 + std::max(depth(t.lhs()), depth(t.rhs()));
  }
}

bool is_admissible(const Term& t) {
  if (t.kind() == Term::Kind::Or) return is_admissible(t.lhs()) && is_admissible(t.rhs());
  return !contains_kind(t, Term::Kind::Or);
}

bool uses_implication(const Term& t) { return contains_kind(t, Term::Kind::Imp); }

HornSequent make_sequent(std::vector<Equation> premises, Equation conclusion) {
  std::set<std::string> vars;
  for (const auto& eq : premises) {
    collect_vars(eq.lhs, vars);
    collect_vars(eq.rhs, vars);
  }
  collect_vars(conclusion.lhs, vars);
  collect_vars(conclusion.rhs, vars);
  return HornSequent{{vars.begin(), vars.end()}, std::move(premises), std::move(conclusion)};
}

HornSequent axiom_sequent(const Term& t) { return make_sequent({}, Equation{Term::one(), t}); }

HornSequent parse_sequent(std::string_view text) {
  Parser p(text);
  if (!p.has(Tok::Turnstile)) {
    if (!p.has(Tok::Eq)) {
      Term t = p.term();
      if (p.peek() != Tok::End) p.fail("unexpected trailing input");
      return axiom_sequent(t);
    }
    Equation eq = p.equation();
    if (p.peek() != Tok::End) p.fail("unexpected trailing input");
    return make_sequent({}, std::move(eq));
  }
  std::vector<Equation> premises;
  if (p.peek() != Tok::Turnstile) {
    premises.push_back(p.equation());
    while (p.peek() == Tok::Comma) {
      p.advance();
      premises.push_back(p.equation());
    }
  }
  p.expect(Tok::Turnstile, "'|-'");
  Equation conclusion = p.equation();
  if (p.peek() != Tok::End) p.fail("unexpected trailing input");
  return make_sequent(std::move(premises), std::move(conclusion));
}

std::string to_string(const HornSequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.premises.size(); ++i) {
    if (i) out += ", ";
    out += to_string(s.premises[i].lhs) + " = " + to_string(s.premises[i].rhs);
  }
  if (!s.premises.empty()) out += ' ';
  out += "|- " + to_string(s.conclusion.lhs) + " = " + to_string(s.conclusion.rhs);
  return out;
}

LogicSpec custom_logic(std::string name, Term axiom) {
  const bool admissible = is_admissible(axiom);
  return LogicSpec{std::move(name), std::move(axiom), admissible};
}

const std::vector<LogicSpec>& registry() {
  static const std::vector<LogicSpec> logics = [] {
    std::vector<LogicSpec> v;
    v.push_back(custom_logic("classical", parse_term("p | ~p")));
    v.push_back(custom_logic("demorgan", parse_term("~p | ~~p")));
    v.push_back(custom_logic("goedel_dummett", parse_term("(p -> q) | (q -> p)")));
    v.push_back(custom_logic("kreisel_putnam", parse_term("(~p -> q | r) -> (~p -> q) | (~p -> r)")));
    return v;
  }();
  return logics;
}

const LogicSpec& lookup_logic(std::string_view name) {
  for (const auto& l : registry()) {
    if (l.name == name) return l;
  }
  throw InputError("unknown logic '" + std::string(name) +
                   "' (known: classical, demorgan, goedel_dummett, kreisel_putnam)");
}

CompiledTerm::CompiledTerm(const Term& t, std::span<const std::string> context) {
  std::function<void(const Term&)> emit = [&](const Term& u) {
    switch (u.kind()) {
      case Term::Kind::Var: {
        auto it = std::ranges::find(context, u.name());
        if (it == context.end()) throw InputError("unbound variable '" + u.name() + "'");
        program_.push_back({Op::Var, static_cast<std::size_t>(it - context.begin())});
        return;
      }
      case Term::Kind::Zero: program_.push_back({Op::Zero, 0}); return;
      case Term::Kind::One: program_.push_back({Op::One, 0}); return;
      case Term::Kind::Not:
        emit(u.lhs());
        program_.push_back({Op::Not, 0});
        return;
      case Term::Kind::And:
      case Term::Kind::Or:
      case Term::Kind::Imp:
        emit(u.lhs());
        emit(u.rhs());
        program_.push_back({u.kind() == Term::Kind::And  ? Op::And
                            : u.kind() == Term::Kind::Or ? Op::Or
                                                         : Op::Imp,
                            0});
        return;
    }
  };
  emit(t);
}

Elem eval_in_frame(const Term& t, const FiniteFrame& A, const std::map<std::string, Elem>& assignment) {
  std::vector<std::string> context;
  std::vector<Elem> values;
  for (const auto& v : free_variables(t)) {
    auto it = assignment.find(v);
    if (it == assignment.end()) throw InputError("unbound variable '" + v + "'");
    if (it->second >= A.size()) throw InputError("value for '" + v + "' is not a frame element");
    context.push_back(v);
    values.push_back(it->second);
  }
  return CompiledTerm(t, context).evaluate(A, std::span<const Elem>(values));
}

FrameVerdict holds_in_frame(const HornSequent& s, const FiniteFrame& A, std::size_t max_tuples) {
  std::vector<Elem> carrier(A.size());
  for (Elem i = 0; i < A.size(); ++i) carrier[i] = i;
  FrameVerdict verdict;
  if (auto w = first_counterexample(s, A, std::span<const Elem>(carrier), max_tuples)) {
    verdict.holds = false;
    for (std::size_t i = 0; i < s.context.size(); ++i) verdict.witness.emplace_back(s.context[i], (*w)[i]);
  }
  return verdict;
}

FrameVerdict holds_in_frame(const LogicSpec& logic, const FiniteFrame& A, std::size_t max_tuples) {
  return holds_in_frame(axiom_sequent(logic.axiom), A, max_tuples);
}

}  // namespace sheafcalc
