#pragma once

// Terms over the Heyting signature {0, 1, ~, &, |, ->}, Horn sequents, the
// registry of named intermediate logics, and evaluation in finite algebras.
//
// Concrete syntax (precedence ~ > & > | > ->, with -> right-associative and
// & and | left-associative):
//
//   term     := var | 0 | 1 | ~term | term & term | term | term | term -> term | ( term )
//   var      := [a-z][a-zA-Z0-9_]*
//   sequent  := [eq ("," eq)*] "|-" eq      eq := term "=" term
//
// A bare term t abbreviates the axiom |- 1 = t.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sheafcalc/error.hpp"
#include "sheafcalc/frame.hpp"

namespace sheafcalc {

class Term {
 public:
  enum class Kind { Var, Zero, One, Not, And, Or, Imp };

  static Term var(std::string name);
  static Term zero();
  static Term one();
  static Term negation(Term t);
  static Term conj(Term a, Term b);
  static Term disj(Term a, Term b);
  static Term implies(Term a, Term b);

  Kind kind() const noexcept { return node_->kind; }
  /// Variable name; empty for other kinds.
  const std::string& name() const noexcept { return node_->name; }
  /// Operand of ~, or left operand of a binary connective.
  Term lhs() const { return Term(node_->lhs); }
  Term rhs() const { return Term(node_->rhs); }

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Term make(Kind k, std::optional<Term> a, std::optional<Term> b, std::string name = {});

  std::shared_ptr<const Node> node_;
};

/// Position-annotated syntax error. Token numbers are 1-based.
class SyntaxError : public InputError {
 public:
  SyntaxError(const std::string& what, std::size_t token, std::size_t column)
      : InputError(what), token_(token), column_(column) {}
  std::size_t token() const noexcept { return token_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t token_;
  std::size_t column_;
};

Term parse_term(std::string_view text);
/// Minimal parenthesization; parse_term(to_string(t)) == t.
std::string to_string(const Term& t);

/// Sorted, without duplicates.
std::vector<std::string> free_variables(const Term& t);
std::size_t depth(const Term& t);

/// True iff the term is a join of ∨-free subterms.
bool is_admissible(const Term& t);
bool uses_implication(const Term& t);

struct Equation {
  Term lhs;
  Term rhs;
};

struct HornSequent {
  std::vector<std::string> context;  // sorted free variables of all equations
  std::vector<Equation> premises;
  Equation conclusion;
};

/// Throws SyntaxError. A bare term t yields |- 1 = t; a lone equation yields |- eq.
HornSequent parse_sequent(std::string_view text);
HornSequent make_sequent(std::vector<Equation> premises, Equation conclusion);
/// |- 1 = t
HornSequent axiom_sequent(const Term& t);
std::string to_string(const HornSequent& s);

struct LogicSpec {
  std::string name;
  Term axiom;
  bool admissible;
};

/// classical, demorgan, goedel_dummett, kreisel_putnam.
const std::vector<LogicSpec>& registry();
/// Throws InputError for names not in the registry.
const LogicSpec& lookup_logic(std::string_view name);
LogicSpec custom_logic(std::string name, Term axiom);

/// A term flattened to postfix over variable slots, for repeated evaluation.
class CompiledTerm {
 public:
  enum class Op : unsigned char { Var, Zero, One, Not, And, Or, Imp };
  struct Instr {
    Op op;
    std::size_t slot;
  };

  /// Throws InputError if a free variable is missing from `context`.
  CompiledTerm(const Term& t, std::span<const std::string> context);

  template <class Algebra>
  typename Algebra::value_type evaluate(const Algebra& A,
                                        std::span<const typename Algebra::value_type> values) const {
    using V = typename Algebra::value_type;
    std::vector<V> stack;
    stack.reserve(program_.size());
    for (const auto& ins : program_) {
      switch (ins.op) {
        case Op::Var: stack.push_back(values[ins.slot]); break;
        case Op::Zero: stack.push_back(A.bottom()); break;
        case Op::One: stack.push_back(A.top()); break;
        case Op::Not: stack.back() = A.neg(stack.back()); break;
        default: {
          const V b = stack.back();
          stack.pop_back();
          V& a = stack.back();
          a = ins.op == Op::And ? A.meet(a, b) : ins.op == Op::Or ? A.join(a, b) : A.imp(a, b);
        }
      }
    }
    return stack.back();
  }

 private:
  std::vector<Instr> program_;
};

/// Calls `visit(values)` for every tuple over `carrier` of length `arity` in
/// lexicographic order until it returns false. Throws CapExceeded if the
/// number of tuples exceeds `max_tuples`.
template <class V, class Visit>
void for_each_assignment(std::span<const V> carrier, std::size_t arity, std::size_t max_tuples, Visit&& visit) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    if (carrier.empty()) return;
    if (total > max_tuples / carrier.size()) {
      throw CapExceeded("assignment enumeration over " + std::to_string(carrier.size()) + "^" +
                        std::to_string(arity) + " tuples exceeds the cap");
    }
    total *= carrier.size();
  }
  std::vector<std::size_t> digits(arity, 0);
  std::vector<V> values(arity);
  for (std::size_t k = 0; k < total; ++k) {
    for (std::size_t i = 0; i < arity; ++i) values[i] = carrier[digits[i]];
    if (!visit(std::span<const V>(values))) return;
    for (std::size_t i = arity; i-- > 0;) {
      if (++digits[i] < carrier.size()) break;
      digits[i] = 0;
    }
  }
}

/// Horn sequent checker over any algebra exposing the Heyting operations and a
/// finite carrier. Returns the lexicographically first failing assignment.
template <class Algebra>
std::optional<std::vector<typename Algebra::value_type>> first_counterexample(
    const HornSequent& s, const Algebra& A, std::span<const typename Algebra::value_type> carrier,
    std::size_t max_tuples) {
  using V = typename Algebra::value_type;
  std::vector<std::pair<CompiledTerm, CompiledTerm>> premises;
  for (const auto& eq : s.premises) premises.emplace_back(CompiledTerm(eq.lhs, s.context), CompiledTerm(eq.rhs, s.context));
  const CompiledTerm lhs(s.conclusion.lhs, s.context), rhs(s.conclusion.rhs, s.context);
  std::optional<std::vector<V>> witness;
  for_each_assignment<V>(carrier, s.context.size(), max_tuples, [&](std::span<const V> values) {
    for (const auto& [p, q] : premises) {
      if (p.evaluate(A, values) != q.evaluate(A, values)) return true;
    }
    if (lhs.evaluate(A, values) == rhs.evaluate(A, values)) return true;
    witness.emplace(values.begin(), values.end());
    return false;
  });
  return witness;
}

/// Standard Heyting evaluation; throws InputError on unbound variables.
Elem eval_in_frame(const Term& t, const FiniteFrame& A, const std::map<std::string, Elem>& assignment);

struct FrameVerdict {
  bool holds = true;
  std::vector<std::pair<std::string, Elem>> witness;  // failing assignment, in context order
};

FrameVerdict holds_in_frame(const HornSequent& s, const FiniteFrame& A, std::size_t max_tuples = 1u << 22);
FrameVerdict holds_in_frame(const LogicSpec& logic, const FiniteFrame& A, std::size_t max_tuples = 1u << 22);

}  // namespace sheafcalc
