#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "biq/biquasigroup.hpp"
#include "biq/error.hpp"

namespace biq {

enum class Var : std::uint8_t { x, y, z, u, w };
enum class Op : std::uint8_t { circ, star };

char to_char(Var v);
std::string_view to_string(Op op);  // "o" or "*"

/// Immutable term tree over the variables x, y, z, u, w and the two
/// operations. Subtrees are shared, so copies are cheap.
class Term {
 public:
  static Term variable(Var v);
  static Term apply(Op op, Term left, Term right);

  bool is_variable() const noexcept { return !node_; }
  Var var() const noexcept { return var_; }
  Op op() const noexcept;
  const Term& left() const noexcept;
  const Term& right() const noexcept;

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;
  Var var_ = Var::x;
  std::shared_ptr<const Node> node_;
};

struct Term::Node {
  Op op;
  Term left;
  Term right;
};

/// lhs = rhs; `vars` lists the variables that occur, in the order
/// x, y, z, u, w.
struct Equation {
  Term lhs;
  Term rhs;
  std::vector<Var> vars;

  Equation(Term lhs, Term rhs);
  friend bool operator==(const Equation& a, const Equation& b) {
    return a.lhs == b.lhs && a.rhs == b.rhs;
  }
};

/// Parse failure; position is the 0-based offset into the input.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Grammar (whitespace ignored):
///   equation := side '=' side
///   side     := operand [ op operand ]
///   operand  := var | '(' operand op operand ')'
///   op       := 'o' | '*'        var := x | y | z | u | w
/// Nested applications need parentheses; a side may leave its top-level
/// application bare, as in "(x o z) * (y o z) = x * y".
Equation parse_identity(std::string_view text);

/// Fully parenthesized form, e.g. "((x o z) * (y o z)) = (x * y)".
std::string render(const Term& term);
std::string render(const Equation& eq);

enum class Builtin {
  e1, e2, e3, e4, e5, e6, e7, e8, e9,
  medial_circ, medial_star,
  paramedial_circ, paramedial_star,
  left_modular,
};

Equation builtin(Builtin id);
std::string_view to_string(Builtin id);
/// Accepts e1..e9, medial[_circ|_star], paramedial[_circ|_star],
/// leftmod / left_modular.
std::optional<Builtin> parse_builtin(std::string_view name);
/// e1..e9 in order.
std::span<const Builtin> ward_identities();

/// A builtin name or "custom:<equation>".
Equation resolve_identity(std::string_view spec);

using Assignment = std::map<Var, Element>;

/// Throws biq::Error on an unbound variable.
Element eval_term(const Term& term, const Biquasigroup& biq, const Assignment& assign);
Element eval_term(const Term& term, const CayleyTable& circ, const CayleyTable& star,
                  const Assignment& assign);

struct Counterexample {
  std::vector<std::pair<Var, Element>> assignment;  // in Equation::vars order
  Element lhs_value;
  Element rhs_value;
};

struct CheckResult {
  bool holds;
  std::optional<Counterexample> counterexample;
};

/// Flattened equation for repeated evaluation over raw row-major tables.
/// Assignments run lexicographically over Equation::vars, the first variable
/// most significant.
class CompiledIdentity {
 public:
  explicit CompiledIdentity(const Equation& eq);

  std::size_t arity() const noexcept { return vars_.size(); }
  const std::vector<Var>& vars() const noexcept { return vars_; }
  bool uses(Op op) const noexcept;

  bool holds(std::span<const Element> circ, std::span<const Element> star,
             std::size_t order) const;
  std::optional<Counterexample> first_counterexample(std::span<const Element> circ,
                                                     std::span<const Element> star,
                                                     std::size_t order) const;

 private:
  struct Step {
    Op op;
    std::uint8_t lhs;
    std::uint8_t rhs;
  };
  using Slots = std::array<Element, 256>;
  std::uint8_t compile(const Term& term);
  bool find_failure(std::span<const Element> circ, std::span<const Element> star,
                    std::size_t order, Slots& slots) const;

  std::vector<Var> vars_;
  std::vector<Step> steps_;
  std::uint8_t lhs_slot_ = 0;
  std::uint8_t rhs_slot_ = 0;
};

/// Exhaustive check over all order^k assignments.
CheckResult check(const Biquasigroup& biq, const Equation& eq);
/// Same, on raw tables that need not be Latin (orders must agree).
CheckResult check_tables(const CayleyTable& circ, const CayleyTable& star,
                         const Equation& eq);

}  // namespace biq
