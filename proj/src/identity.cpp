#include "biq/identity.hpp"

#include <algorithm>

namespace biq {

char to_char(Var v) { return "xyzuw"[static_cast<int>(v)]; }

std::string_view to_string(Op op) { return op == Op::circ ? "o" : "*"; }

Term Term::variable(Var v) {
  Term t;
  t.var_ = v;
  return t;
}

Term Term::apply(Op op, Term left, Term right) {
  Term t;
  t.node_ = std::make_shared<const Node>(Node{op, std::move(left), std::move(right)});
  return t;
}

Op Term::op() const noexcept { return node_->op; }
const Term& Term::left() const noexcept { return node_->left; }
const Term& Term::right() const noexcept { return node_->right; }

bool operator==(const Term& a, const Term& b) {
  if (a.is_variable() || b.is_variable()) {
    return a.is_variable() && b.is_variable() && a.var_ == b.var_;
  }
  return a.op() == b.op() && a.left() == b.left() && a.right() == b.right();
}

namespace {

void collect_vars(const Term& t, std::vector<Var>& out) {
  if (t.is_variable()) {
    if (std::find(out.begin(), out.end(), t.var()) == out.end()) out.push_back(t.var());
    return;
  }
  collect_vars(t.left(), out);
  collect_vars(t.right(), out);
}

}  // namespace

Equation::Equation(Term l, Term r) : lhs(std::move(l)), rhs(std::move(r)) {
  collect_vars(lhs, vars);
  collect_vars(rhs, vars);
  std::sort(vars.begin(), vars.end());
}

ParseError::ParseError(std::size_t position, const std::string& what)
    : Error("column " + std::to_string(position + 1) + ": " + what), position_(position) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Equation parse() {
    Term lhs = side();
    skip_space();
    if (at_end()) throw ParseError(pos_, "missing '='");
    if (peek() != '=') unexpected();
    ++pos_;
    Term rhs = side();
    skip_space();
    if (!at_end()) {
      if (peek() == '=') throw ParseError(pos_, "unexpected '=': exactly one '=' is allowed");
      unexpected();
    }
    return Equation(std::move(lhs), std::move(rhs));
  }

 private:
  Term side() {
    Term left = operand();
    skip_space();
    if (auto op = maybe_op()) {
      Term right = operand();
      skip_space();
      if (!at_end() && is_op(peek())) {
        throw ParseError(pos_, "unparenthesized application: parenthesize each application");
      }
      return Term::apply(*op, std::move(left), std::move(right));
    }
    return left;
  }

  Term operand() {
    skip_space();
    if (at_end()) throw ParseError(pos_, "unexpected end of input: expected a variable or '('");
    const char c = peek();
    if (const auto v = var_of(c)) {
      ++pos_;
      return Term::variable(*v);
    }
    if (c == '(') {
      const std::size_t open = pos_++;
      Term left = operand();
      skip_space();
      const auto op = maybe_op();
      if (!op) {
        if (at_end()) throw ParseError(open, "unbalanced parentheses: '(' is never closed");
        if (peek() == ')') {
          throw ParseError(pos_, "expected 'o' or '*' before ')': parentheses must enclose an application");
        }
        unexpected();
      }
      Term right = operand();
      skip_space();
      if (at_end() || peek() == '=') {
        throw ParseError(open, "unbalanced parentheses: '(' is never closed");
      }
      if (is_op(peek())) {
        throw ParseError(pos_, "unparenthesized application: parenthesize each application");
      }
      if (peek() != ')') unexpected();
      ++pos_;
      return Term::apply(*op, std::move(left), std::move(right));
    }
    if (c == ')') throw ParseError(pos_, "unbalanced parentheses: unexpected ')'");
    if (c == '=') throw ParseError(pos_, "expected a variable or '(' before '='");
    if (is_op(c)) throw ParseError(pos_, std::string("operator '") + c + "' is missing its left operand");
    unexpected();
  }

  std::optional<Op> maybe_op() {
    if (at_end()) return std::nullopt;
    if (peek() == 'o') {
      ++pos_;
      return Op::circ;
    }
    if (peek() == '*') {
      ++pos_;
      return Op::star;
    }
    return std::nullopt;
  }

  [[noreturn]] void unexpected() const {
    const char c = peek();
    if (c == ')') throw ParseError(pos_, "unbalanced parentheses: unexpected ')'");
    if (c == '(' || var_of(c)) {
      throw ParseError(pos_, std::string("unexpected '") + c + "': expected an operator");
    }
    if (c == '=' || is_op(c)) {
      throw ParseError(pos_, std::string("unexpected '") + c + "'");
    }
    throw ParseError(pos_, std::string("unknown token '") + c + "'");
  }

  static bool is_op(char c) { return c == 'o' || c == '*'; }

  static std::optional<Var> var_of(char c) {
    switch (c) {
      case 'x': return Var::x;
      case 'y': return Var::y;
      case 'z': return Var::z;
      case 'u': return Var::u;
      case 'w': return Var::w;
      default: return std::nullopt;
    }
  }

  void skip_space() {
    while (!at_end() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
                         text_[pos_] == '\r')) {
      ++pos_;
    }
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Equation parse_identity(std::string_view text) { return Parser(text).parse(); }

std::string render(const Term& term) {
  if (term.is_variable()) return std::string(1, to_char(term.var()));
  return "(" + render(term.left()) + " " + std::string(to_string(term.op())) + " " +
         render(term.right()) + ")";
}

std::string render(const Equation& eq) { return render(eq.lhs) + " = " + render(eq.rhs); }

namespace {

Term v(Var var) { return Term::variable(var); }
Term circ(Term a, Term b) { return Term::apply(Op::circ, std::move(a), std::move(b)); }
Term app(Op op, Term a, Term b) { return Term::apply(op, std::move(a), std::move(b)); }

// (x A z) B (y C z) = x D y
Equation ward_shape(Op a, Op b, Op c, Op d) {
  return Equation(app(b, app(a, v(Var::x), v(Var::z)), app(c, v(Var::y), v(Var::z))),
                  app(d, v(Var::x), v(Var::y)));
}

Equation medial(Op op) {
  return Equation(app(op, app(op, v(Var::x), v(Var::y)), app(op, v(Var::z), v(Var::w))),
                  app(op, app(op, v(Var::x), v(Var::z)), app(op, v(Var::y), v(Var::w))));
}

Equation paramedial(Op op) {
  return Equation(app(op, app(op, v(Var::x), v(Var::y)), app(op, v(Var::z), v(Var::u))),
                  app(op, app(op, v(Var::u), v(Var::y)), app(op, v(Var::z), v(Var::x))));
}

constexpr Op O = Op::circ;
constexpr Op S = Op::star;

constexpr std::array<Builtin, 9> kWard = {Builtin::e1, Builtin::e2, Builtin::e3,
                                          Builtin::e4, Builtin::e5, Builtin::e6,
                                          Builtin::e7, Builtin::e8, Builtin::e9};

}  // namespace

Equation builtin(Builtin id) {
  switch (id) {
    case Builtin::e1: return ward_shape(O, O, O, O);
    case Builtin::e2: return ward_shape(O, S, O, S);
    case Builtin::e3: return ward_shape(O, O, O, O);
    case Builtin::e4: return ward_shape(O, O, O, S);
    case Builtin::e5: return ward_shape(O, O, S, O);
    case Builtin::e6: return ward_shape(O, S, O, O);
    case Builtin::e7: return ward_shape(O, O, S, S);
    case Builtin::e8: return ward_shape(O, S, S, O);
    case Builtin::e9: return ward_shape(O, S, S, S);
    case Builtin::medial_circ: return medial(O);
    case Builtin::medial_star: return medial(S);
    case Builtin::paramedial_circ: return paramedial(O);
    case Builtin::paramedial_star: return paramedial(S);
    case Builtin::left_modular:
      return Equation(circ(v(Var::x), circ(v(Var::y), v(Var::z))),
                      circ(v(Var::z), circ(v(Var::y), v(Var::x))));
  }
  throw Error("unknown builtin identity");
}

std::string_view to_string(Builtin id) {
  switch (id) {
    case Builtin::e1: return "e1";
    case Builtin::e2: return "e2";
    case Builtin::e3: return "e3";
    case Builtin::e4: return "e4";
    case Builtin::e5: return "e5";
    case Builtin::e6: return "e6";
    case Builtin::e7: return "e7";
    case Builtin::e8: return "e8";
    case Builtin::e9: return "e9";
    case Builtin::medial_circ: return "medial_circ";
    case Builtin::medial_star: return "medial_star";
    case Builtin::paramedial_circ: return "paramedial_circ";
    case Builtin::paramedial_star: return "paramedial_star";
    case Builtin::left_modular: return "left_modular";
  }
  return "?";
}

std::optional<Builtin> parse_builtin(std::string_view name) {
  for (const Builtin b : kWard) {
    if (name == to_string(b)) return b;
  }
  if (name == "medial" || name == "medial_circ") return Builtin::medial_circ;
  if (name == "medial_star") return Builtin::medial_star;
  if (name == "paramedial" || name == "paramedial_circ") return Builtin::paramedial_circ;
  if (name == "paramedial_star") return Builtin::paramedial_star;
  if (name == "leftmod" || name == "left_modular") return Builtin::left_modular;
  return std::nullopt;
}

std::span<const Builtin> ward_identities() { return kWard; }

Equation resolve_identity(std::string_view spec) {
  constexpr std::string_view prefix = "custom:";
  if (spec.substr(0, prefix.size()) == prefix) return parse_identity(spec.substr(prefix.size()));
  if (const auto b = parse_builtin(spec)) return builtin(*b);
  throw Error("unknown identity '" + std::string(spec) +
              "' (expected e1..e9, medial, paramedial, leftmod or custom:EQUATION)");
}

Element eval_term(const Term& term, const CayleyTable& circ_table,
                  const CayleyTable& star_table, const Assignment& assign) {
  if (term.is_variable()) {
    const auto it = assign.find(term.var());
    if (it == assign.end()) {
      throw Error(std::string("unbound variable '") + to_char(term.var()) + "'");
    }
    if (it->second >= circ_table.order()) {
      throw Error(std::string("value of '") + to_char(term.var()) + "' is outside the carrier");
    }
    return it->second;
  }
  const Element l = eval_term(term.left(), circ_table, star_table, assign);
  const Element r = eval_term(term.right(), circ_table, star_table, assign);
  return term.op() == Op::circ ? circ_table(l, r) : star_table(l, r);
}

Element eval_term(const Term& term, const Biquasigroup& biq, const Assignment& assign) {
  return eval_term(term, biq.circ(), biq.star(), assign);
}

CompiledIdentity::CompiledIdentity(const Equation& eq) : vars_(eq.vars) {
  lhs_slot_ = compile(eq.lhs);
  rhs_slot_ = compile(eq.rhs);
}

std::uint8_t CompiledIdentity::compile(const Term& term) {
  if (term.is_variable()) {
    const auto it = std::find(vars_.begin(), vars_.end(), term.var());
    return static_cast<std::uint8_t>(it - vars_.begin());
  }
  const std::uint8_t l = compile(term.left());
  const std::uint8_t r = compile(term.right());
  steps_.push_back({term.op(), l, r});
  if (vars_.size() + steps_.size() > 255) throw Error("identity too large");
  return static_cast<std::uint8_t>(vars_.size() + steps_.size() - 1);
}

bool CompiledIdentity::uses(Op op) const noexcept {
  return std::any_of(steps_.begin(), steps_.end(), [op](const Step& s) { return s.op == op; });
}

bool CompiledIdentity::find_failure(std::span<const Element> circ, std::span<const Element> star,
                                    std::size_t order, Slots& slots) const {
  const std::size_t k = vars_.size();
  std::fill(slots.begin(), slots.begin() + static_cast<std::ptrdiff_t>(k), Element{0});
  const Element* c = circ.data();
  const Element* s = star.data();
  for (;;) {
    for (std::size_t i = 0; i < steps_.size(); ++i) {
      const Step& st = steps_[i];
      slots[k + i] = (st.op == Op::circ ? c : s)[slots[st.lhs] * order + slots[st.rhs]];
    }
    if (slots[lhs_slot_] != slots[rhs_slot_]) return true;
    // Odometer: the last variable moves fastest.
    std::size_t i = k;
    for (;;) {
      if (i == 0) return false;
      --i;
      if (++slots[i] < order) break;
      slots[i] = 0;
    }
  }
}

std::optional<Counterexample> CompiledIdentity::first_counterexample(
    std::span<const Element> circ, std::span<const Element> star, std::size_t order) const {
  Slots slots{};
  if (!find_failure(circ, star, order, slots)) return std::nullopt;
  Counterexample ce;
  for (std::size_t i = 0; i < vars_.size(); ++i) ce.assignment.emplace_back(vars_[i], slots[i]);
  ce.lhs_value = slots[lhs_slot_];
  ce.rhs_value = slots[rhs_slot_];
  return ce;
}

bool CompiledIdentity::holds(std::span<const Element> circ, std::span<const Element> star,
                             std::size_t order) const {
  Slots slots;
  return !find_failure(circ, star, order, slots);
}

CheckResult check_tables(const CayleyTable& circ, const CayleyTable& star, const Equation& eq) {
  if (circ.order() != star.order()) throw Error("tables have different orders");
  const CompiledIdentity compiled(eq);
  auto ce = compiled.first_counterexample(circ.entries(), star.entries(), circ.order());
  return CheckResult{!ce.has_value(), std::move(ce)};
}

CheckResult check(const Biquasigroup& biq, const Equation& eq) {
  return check_tables(biq.circ(), biq.star(), eq);
}

}  // namespace biq
