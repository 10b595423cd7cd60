// Copyright 2026 The lgames Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Propositional formulas over the connectives of algebra.hpp.
//
// Formulas are immutable and share subterms, so a Formula is really a DAG.
// Generated formulas (hats, characteristic formulas, encodings) rely on this
// heavily: their tree expansion can be exponentially larger than the DAG.
// Everything here except print() works in time linear in the DAG.
//
// Grammar, loosest to tightest:
//   imp   := or (("->" | "=>") imp)?
//   or    := and (("\/" | "+" | "-") and)*
//   and   := unary (("/\" | "&" | "*") unary)*
//   unary := ("~" | "D") unary | atom
//   atom  := ident | "0" | "1" | "c(" rational ")" | "(" imp ")"

#ifndef LGAMES_FORMULA_HPP_
#define LGAMES_FORMULA_HPP_

#include <cctype>
#include <cstddef>
#include <map>
#include <memory>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "lgames/algebra.hpp"
#include "lgames/error.hpp"
#include "lgames/rational.hpp"

namespace lgames {

class Formula {
 public:
  enum class Kind : std::uint8_t { kVariable, kConstant, kApply };

  struct Node {
    Kind kind;
    std::string name;     // kVariable
    TruthValue constant;  // kConstant
    Connective op{};      // kApply
    std::vector<Formula> args;
  };

  // Default-constructed formula is the constant 0.
  Formula() : Formula(constant(TruthValue::zero())) {}

  static Formula var(std::string name) {
    if (name.empty()) throw InputError("empty variable name");
    auto n = std::make_shared<Node>();
    n->kind = Kind::kVariable;
    n->name = std::move(name);
    return Formula(std::move(n));
  }

  static Formula constant(TruthValue v) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::kConstant;
    n->constant = std::move(v);
    return Formula(std::move(n));
  }
  static Formula constant(const Rational& v) { return constant(TruthValue(v)); }
  static Formula zero() { return constant(TruthValue::zero()); }
  static Formula one() { return constant(TruthValue::one()); }

  static Formula apply(Connective c, std::vector<Formula> args) {
    if (static_cast<int>(args.size()) != arity(c)) {
      throw InputError("connective '" + std::string(connective_name(c)) + "' expects " +
                       std::to_string(arity(c)) + " argument(s), got " +
                       std::to_string(args.size()));
    }
    auto n = std::make_shared<Node>();
    n->kind = Kind::kApply;
    n->op = c;
    n->args = std::move(args);
    return Formula(std::move(n));
  }

  Kind kind() const { return node_->kind; }
  bool is_variable() const { return node_->kind == Kind::kVariable; }
  bool is_constant() const { return node_->kind == Kind::kConstant; }
  bool is_apply() const { return node_->kind == Kind::kApply; }

  const std::string& name() const { return node_->name; }
  const TruthValue& value() const { return node_->constant; }
  Connective op() const { return node_->op; }
  const std::vector<Formula>& args() const { return node_->args; }

  const Node* node() const { return node_.get(); }
  bool same_node(const Formula& o) const { return node_ == o.node_; }

 private:
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

// Connective shorthands.
inline Formula f_and(Formula a, Formula b) { return Formula::apply(Connective::kAnd, {std::move(a), std::move(b)}); }
inline Formula f_or(Formula a, Formula b) { return Formula::apply(Connective::kOr, {std::move(a), std::move(b)}); }
inline Formula f_imp(Formula a, Formula b) { return Formula::apply(Connective::kImp, {std::move(a), std::move(b)}); }
inline Formula f_neg(Formula a) { return Formula::apply(Connective::kNeg, {std::move(a)}); }
inline Formula f_sconj(Formula a, Formula b) { return Formula::apply(Connective::kStrongAnd, {std::move(a), std::move(b)}); }
inline Formula f_oplus(Formula a, Formula b) { return Formula::apply(Connective::kOplus, {std::move(a), std::move(b)}); }
inline Formula f_ominus(Formula a, Formula b) { return Formula::apply(Connective::kOminus, {std::move(a), std::move(b)}); }
inline Formula f_odot(Formula a, Formula b) { return Formula::apply(Connective::kOdot, {std::move(a), std::move(b)}); }
inline Formula f_imp_pi(Formula a, Formula b) { return Formula::apply(Connective::kImpPi, {std::move(a), std::move(b)}); }
inline Formula f_delta(Formula a) { return Formula::apply(Connective::kDelta, {std::move(a)}); }
inline Formula f_const(const Rational& v) { return Formula::constant(v); }

namespace detail {

inline Formula balanced(Connective c, const std::vector<Formula>& xs, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return xs[lo];
  std::size_t mid = lo + (hi - lo) / 2;
  return Formula::apply(c, {balanced(c, xs, lo, mid), balanced(c, xs, mid, hi)});
}

inline Formula big(Connective c, const std::vector<Formula>& xs, const Formula& empty) {
  if (xs.empty()) return empty;
  return balanced(c, xs, 0, xs.size());
}

}  // namespace detail

// Iterated connectives, built as balanced trees. Empty joins and sums are 0,
// empty meets and products are 1.
inline Formula big_or(const std::vector<Formula>& xs) { return detail::big(Connective::kOr, xs, Formula::zero()); }
inline Formula big_and(const std::vector<Formula>& xs) { return detail::big(Connective::kAnd, xs, Formula::one()); }
inline Formula big_oplus(const std::vector<Formula>& xs) { return detail::big(Connective::kOplus, xs, Formula::zero()); }
inline Formula big_sconj(const std::vector<Formula>& xs) { return detail::big(Connective::kStrongAnd, xs, Formula::one()); }
inline Formula big_odot(const std::vector<Formula>& xs) { return detail::big(Connective::kOdot, xs, Formula::one()); }

// k-fold power of f under c. power(c, f, 0) is the unit of c.
inline Formula power(Connective c, const Formula& f, int k) {
  return detail::big(c, std::vector<Formula>(static_cast<std::size_t>(std::max(k, 0)), f),
                     c == Connective::kOplus ? Formula::zero() : Formula::one());
}

inline bool operator==(const Formula& a, const Formula& b) {
  struct PairHash {
    std::size_t operator()(const std::pair<const void*, const void*>& p) const {
      return std::hash<const void*>{}(p.first) * 31 + std::hash<const void*>{}(p.second);
    }
  };
  std::unordered_set<std::pair<const void*, const void*>, PairHash> equal;
  std::vector<std::pair<Formula, Formula>> stack{{a, b}};
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    if (x.same_node(y)) continue;
    if (!equal.insert({x.node(), y.node()}).second) continue;
    if (x.kind() != y.kind()) return false;
    switch (x.kind()) {
      case Formula::Kind::kVariable:
        if (x.name() != y.name()) return false;
        break;
      case Formula::Kind::kConstant:
        if (x.value() != y.value()) return false;
        break;
      case Formula::Kind::kApply:
        if (x.op() != y.op()) return false;
        for (std::size_t i = 0; i < x.args().size(); ++i) stack.emplace_back(x.args()[i], y.args()[i]);
        break;
    }
  }
  return true;
}

// Distinct variables in order of first occurrence, left to right.
inline std::vector<std::string> free_variables(const Formula& f) {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  std::unordered_set<const void*> visited;
  std::vector<Formula> stack{f};
  while (!stack.empty()) {
    Formula g = stack.back();
    stack.pop_back();
    if (!visited.insert(g.node()).second) continue;
    if (g.is_variable()) {
      if (seen.insert(g.name()).second) out.push_back(g.name());
    } else if (g.is_apply()) {
      for (auto it = g.args().rbegin(); it != g.args().rend(); ++it) stack.push_back(*it);
    }
  }
  return out;
}

// Number of distinct nodes.
inline std::size_t dag_size(const Formula& f) {
  std::unordered_set<const void*> visited;
  std::vector<Formula> stack{f};
  while (!stack.empty()) {
    Formula g = stack.back();
    stack.pop_back();
    if (!visited.insert(g.node()).second) continue;
    for (const auto& a : g.args()) stack.push_back(a);
  }
  return visited.size();
}

// Connectives and constants used by f.
inline std::set<Connective> connectives_of(const Formula& f) {
  std::set<Connective> out;
  std::unordered_set<const void*> visited;
  std::vector<Formula> stack{f};
  while (!stack.empty()) {
    Formula g = stack.back();
    stack.pop_back();
    if (!visited.insert(g.node()).second) continue;
    if (g.is_apply()) out.insert(g.op());
    for (const auto& a : g.args()) stack.push_back(a);
  }
  return out;
}

using Substitution = std::map<std::string, Formula>;

// Simultaneous substitution. Untouched subterms keep their identity.
inline Formula substitute(const Formula& f, const Substitution& sub) {
  if (sub.empty()) return f;
  std::unordered_map<const void*, Formula> memo;
  auto go = [&](auto&& self, const Formula& g) -> Formula {
    auto it = memo.find(g.node());
    if (it != memo.end()) return it->second;
    Formula r = g;
    if (g.is_variable()) {
      auto s = sub.find(g.name());
      if (s != sub.end()) r = s->second;
    } else if (g.is_apply()) {
      std::vector<Formula> args;
      args.reserve(g.args().size());
      bool changed = false;
      for (const auto& a : g.args()) {
        args.push_back(self(self, a));
        changed = changed || !args.back().same_node(a);
      }
      if (changed) r = Formula::apply(g.op(), std::move(args));
    }
    memo.emplace(g.node(), r);
    return r;
  };
  return go(go, f);
}

// Fully parenthesized canonical text. Expands shared subterms, so the output
// of some generated formulas is very large.
inline std::string print(const Formula& f) {
  std::string out;
  auto go = [&](auto&& self, const Formula& g) -> void {
    switch (g.kind()) {
      case Formula::Kind::kVariable:
        out += g.name();
        return;
      case Formula::Kind::kConstant:
        if (g.value().is_zero() || g.value().is_one()) {
          out += g.value().str();
        } else {
          out += "c(" + g.value().str() + ")";
        }
        return;
      case Formula::Kind::kApply:
        if (g.op() == Connective::kNeg) {
          out += "~";
          self(self, g.args()[0]);
        } else if (g.op() == Connective::kDelta) {
          out += "D ";
          self(self, g.args()[0]);
        } else {
          out += "(";
          self(self, g.args()[0]);
          out += " ";
          out += connective_token(g.op());
          out += " ";
          self(self, g.args()[1]);
          out += ")";
        }
        return;
    }
  };
  go(go, f);
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Formula& f) { return os << print(f); }

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula parse_all() {
    skip_ws();
    if (pos_ >= text_.size()) fail("empty formula");
    Formula f = parse_imp();
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }

  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw SyntaxError(msg, line, col);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(std::string_view tok) {
    skip_ws();
    return text_.substr(pos_, tok.size()) == tok;
  }

  bool accept(std::string_view tok) {
    if (!peek(tok)) return false;
    pos_ += tok.size();
    return true;
  }

  static bool ident_start(char ch) { return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_'; }
  static bool ident_char(char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; }

  // The identifier starting at pos_, without consuming it.
  std::string_view peek_ident() {
    skip_ws();
    if (pos_ >= text_.size() || !ident_start(text_[pos_])) return {};
    std::size_t e = pos_;
    while (e < text_.size() && ident_char(text_[e])) ++e;
    return text_.substr(pos_, e - pos_);
  }

  Formula parse_imp() {
    Formula lhs = parse_or();
    if (accept("->")) return f_imp(lhs, parse_imp());
    if (accept("=>")) return f_imp_pi(lhs, parse_imp());
    return lhs;
  }

  Formula parse_or() {
    Formula lhs = parse_and();
    for (;;) {
      if (accept("\\/")) {
        lhs = f_or(lhs, parse_and());
      } else if (accept("+")) {
        lhs = f_oplus(lhs, parse_and());
      } else if (!peek("->") && accept("-")) {
        lhs = f_ominus(lhs, parse_and());
      } else {
        return lhs;
      }
    }
  }

  Formula parse_and() {
    Formula lhs = parse_unary();
    for (;;) {
      if (accept("/\\")) {
        lhs = f_and(lhs, parse_unary());
      } else if (accept("&")) {
        lhs = f_sconj(lhs, parse_unary());
      } else if (accept("*")) {
        lhs = f_odot(lhs, parse_unary());
      } else {
        return lhs;
      }
    }
  }

  Formula parse_unary() {
    if (accept("~")) return f_neg(parse_unary());
    if (peek_ident() == "D") {
      pos_ += 1;
      return f_delta(parse_unary());
    }
    return parse_atom();
  }

  Formula parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      Formula f = parse_imp();
      if (!accept(")")) fail("expected ')'");
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string_view lit = text_.substr(start, pos_ - start);
      if (lit == "0") return Formula::zero();
      if (lit == "1") return Formula::one();
      fail_at("bare numeral '" + std::string(lit) + "'; write c(" + std::string(lit) + ")", start);
    }
    std::string_view id = peek_ident();
    if (id.empty()) fail("unexpected '" + std::string(1, ch) + "'");
    std::size_t start = pos_;
    pos_ += id.size();
    if (id == "c" && peek("(")) {
      accept("(");
      skip_ws();
      std::size_t lit_start = pos_;
      while (pos_ < text_.size() && text_[pos_] != ')') ++pos_;
      if (pos_ >= text_.size()) fail("unterminated constant");
      std::string_view lit = text_.substr(lit_start, pos_ - lit_start);
      ++pos_;
      Rational r;
      try {
        r = Rational::parse(lit);
      } catch (const InputError&) {
        fail_at("malformed constant '" + std::string(lit) + "'", lit_start);
      }
      if (r < Rational(0) || r > Rational(1)) {
        throw DomainError("constant " + r.str() + " outside [0,1]");
      }
      return Formula::constant(r);
    }
    (void)start;
    return Formula::var(std::string(id));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Formula parse_formula(std::string_view text) { return detail::Parser(text).parse_all(); }

// A formula flattened against a fixed algebra and variable order. Checks the
// signature and constants once, then evaluates in one pass over the DAG.
class CompiledFormula {
 public:
  CompiledFormula(const Formula& f, const Algebra& alg, const std::vector<std::string>& variables)
      : alg_(alg), arity_(variables.size()) {
    std::unordered_map<std::string, std::size_t> slot;
    for (std::size_t i = 0; i < variables.size(); ++i) slot.emplace(variables[i], i);
    std::unordered_map<const void*, std::size_t> index;
    // Iterative post-order.
    std::vector<std::pair<Formula, bool>> stack{{f, false}};
    while (!stack.empty()) {
      auto [g, expanded] = stack.back();
      stack.pop_back();
      if (index.count(g.node())) continue;
      if (g.is_apply() && !expanded) {
        stack.emplace_back(g, true);
        for (auto it = g.args().rbegin(); it != g.args().rend(); ++it) {
          if (!index.count(it->node())) stack.emplace_back(*it, false);
        }
        continue;
      }
      Instr ins;
      if (g.is_variable()) {
        auto s = slot.find(g.name());
        if (s == slot.end()) throw InputError("unassigned variable '" + g.name() + "'");
        ins.kind = Formula::Kind::kVariable;
        ins.a = s->second;
      } else if (g.is_constant()) {
        if (!alg.has_constant(g.value())) {
          throw DomainError("constant " + g.value().str() + " is not available in " + alg.name());
        }
        ins.kind = Formula::Kind::kConstant;
        ins.value = g.value();
      } else {
        if (!alg.has_connective(g.op())) {
          throw DomainError("connective '" + std::string(connective_name(g.op())) +
                            "' is not in the signature of " + alg.name());
        }
        ins.kind = Formula::Kind::kApply;
        ins.op = g.op();
        ins.a = index.at(g.args()[0].node());
        ins.b = g.args().size() > 1 ? index.at(g.args()[1].node()) : ins.a;
      }
      index.emplace(g.node(), code_.size());
      code_.push_back(std::move(ins));
    }
  }

  std::size_t arity() const { return arity_; }
  std::size_t size() const { return code_.size(); }

  // values[i] is assigned to variables[i]; values are trusted to lie in the
  // algebra's domain.
  Rational eval_unchecked(const std::vector<Rational>& values) const {
    std::vector<Rational> reg(code_.size());
    for (std::size_t i = 0; i < code_.size(); ++i) {
      const Instr& ins = code_[i];
      switch (ins.kind) {
        case Formula::Kind::kVariable: reg[i] = values[ins.a]; break;
        case Formula::Kind::kConstant: reg[i] = ins.value; break;
        case Formula::Kind::kApply: reg[i] = alg_.apply_unchecked(ins.op, reg[ins.a], reg[ins.b]); break;
      }
    }
    return reg.back();
  }

  TruthValue eval(const std::vector<TruthValue>& values) const {
    if (values.size() != arity_) {
      throw InputError("expected " + std::to_string(arity_) + " values, got " + std::to_string(values.size()));
    }
    std::vector<Rational> r;
    r.reserve(values.size());
    for (const auto& v : values) {
      if (!alg_.contains(v)) throw DomainError("value " + v.str() + " is outside the domain of " + alg_.name());
      r.push_back(v.value());
    }
    return TruthValue(eval_unchecked(r));
  }

 private:
  struct Instr {
    Formula::Kind kind = Formula::Kind::kConstant;
    Connective op{};
    std::size_t a = 0;
    std::size_t b = 0;
    Rational value;
  };

  Algebra alg_;
  std::size_t arity_;
  std::vector<Instr> code_;
};

using Evaluation = std::map<std::string, TruthValue>;

inline TruthValue evaluate(const Formula& f, const Algebra& alg, const Evaluation& e) {
  std::vector<std::string> vars = free_variables(f);
  std::vector<TruthValue> values;
  values.reserve(vars.size());
  for (const auto& v : vars) {
    auto it = e.find(v);
    if (it == e.end()) throw InputError("unassigned variable '" + v + "'");
    values.push_back(it->second);
  }
  return CompiledFormula(f, alg, vars).eval(values);
}

}  // namespace lgames

#endif  // LGAMES_FORMULA_HPP_
