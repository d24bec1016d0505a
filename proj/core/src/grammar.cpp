// Copyright 2026 the serbest authors
// SPDX-License-Identifier: Apache-2.0

#include "serbest/grammar.hpp"

#include <cctype>

#include "serbest/turkish.hpp"
#include "sexpr_lexer.hpp"

namespace serbest {

namespace {

using detail::SexprLexer;
using detail::TokKind;
using detail::Token;

bool is_register_token(const std::string& t, int& reg) {
  if (t.size() < 2 || t[0] != 'x') return false;
  for (size_t i = 1; i < t.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
  }
  reg = std::stoi(t.substr(1));
  return true;
}

std::string strip_brackets(const std::string& name) {
  if (name.size() >= 2 && name.front() == '<' && name.back() == '>') {
    return name.substr(1, name.size() - 2);
  }
  return name;
}

// "(xK seg seg ...)" already opened; consumes through the closing paren.
RegisterPath parse_register_path(SexprLexer& lex) {
  Token regtok = lex.next();
  RegisterPath rp;
  if (regtok.kind != TokKind::Atom || !is_register_token(regtok.text, rp.reg)) {
    lex.fail(regtok, "expected register x0..xn");
  }
  while (lex.peek().kind == TokKind::Atom) {
    rp.path.segments.push_back(turkish::to_lower(lex.next().text));
  }
  Token close = lex.next();
  if (close.kind != TokKind::RParen) lex.fail(close, "expected ')' after register path");
  return rp;
}

Equation parse_equation(SexprLexer& lex) {
  Token open = lex.next();
  if (open.kind != TokKind::LParen) lex.fail(open, "expected '(' starting an equation");

  Equation eq;
  const Token& head = lex.peek();
  if (head.kind == TokKind::LParen) {
    lex.next();
    eq.lhs = parse_register_path(lex);
  } else if (head.kind == TokKind::Atom) {
    Token regtok = lex.next();
    if (!is_register_token(regtok.text, eq.lhs.reg)) {
      lex.fail(regtok, "expected register or register path on equation lhs");
    }
  } else {
    lex.fail(head, "expected equation lhs");
  }

  Token op = lex.next();
  if (op.kind != TokKind::Atom || (op.text != "=" && op.text != "=c")) {
    lex.fail(op, "expected '=' or '=c'");
  }
  bool constrain = (op.text == "=c");

  const Token& rhs = lex.peek();
  if (rhs.kind == TokKind::LParen) {
    if (constrain) lex.fail(rhs, "=c requires an atom or *undefined* on the rhs");
    lex.next();
    eq.kind = Equation::Kind::assign;
    eq.rhs_ref = parse_register_path(lex);
  } else if (rhs.kind == TokKind::Atom) {
    Token a = lex.next();
    int reg = 0;
    if (is_register_token(a.text, reg)) {
      if (constrain) lex.fail(a, "=c requires an atom or *undefined* on the rhs");
      eq.kind = Equation::Kind::assign;
      eq.rhs_ref = RegisterPath{reg, Path{}};
    } else {
      std::string folded = turkish::to_lower(a.text);
      if (folded == kRemove) {
        if (constrain) lex.fail(a, "*remove* is not a constraint target");
        if (eq.lhs.path.empty()) lex.fail(a, "*remove* requires a feature path on the lhs");
        eq.kind = Equation::Kind::remove;
      } else {
        if (eq.lhs.path.empty()) {
          lex.fail(a, "atom assignment requires a feature path on the lhs");
        }
        eq.kind = constrain ? Equation::Kind::constrain : Equation::Kind::assign;
        eq.rhs_atom = Atom{folded};
      }
    }
  } else {
    lex.fail(rhs, "expected equation rhs");
  }

  if (eq.kind == Equation::Kind::constrain && eq.lhs.path.empty()) {
    lex.fail(op, "=c requires a feature path on the lhs");
  }

  Token close = lex.next();
  if (close.kind != TokKind::RParen) lex.fail(close, "expected ')' closing equation");
  return eq;
}

void check_registers(const Rule& rule) {
  int max_reg = static_cast<int>(rule.rhs.size());
  auto check = [&](const RegisterPath& rp) {
    if (rp.reg < 0 || rp.reg > max_reg) {
      throw Error("bad-register",
                  "rule <" + rule.lhs + "> at line " + std::to_string(rule.line) +
                      " references x" + std::to_string(rp.reg) + " but has " +
                      std::to_string(rule.rhs.size()) + " rhs symbols");
    }
  };
  for (const auto& eq : rule.equations) {
    check(eq.lhs);
    if (eq.rhs_ref) check(*eq.rhs_ref);
  }
}

}  // namespace

RuleSet parse_rule_file(std::string_view text) {
  SexprLexer lex(text);
  RuleSet set;
  while (lex.peek().kind != TokKind::End) {
    Token open = lex.next();
    if (open.kind != TokKind::LParen) lex.fail(open, "expected '(' starting a rule");

    Rule rule;
    rule.line = open.line;
    Token lhs = lex.next();
    if (lhs.kind != TokKind::Atom) lex.fail(lhs, "expected rule lhs nonterminal");
    rule.lhs = strip_brackets(lhs.text);

    Token arrow = lex.next();
    if (arrow.kind != TokKind::Atom || arrow.text != "<==>") lex.fail(arrow, "expected <==>");

    Token rhs_open = lex.next();
    if (rhs_open.kind != TokKind::LParen) lex.fail(rhs_open, "expected '(' starting rhs list");
    while (lex.peek().kind == TokKind::Atom) {
      rule.rhs.push_back(strip_brackets(lex.next().text));
    }
    Token rhs_close = lex.next();
    if (rhs_close.kind != TokKind::RParen) lex.fail(rhs_close, "expected ')' closing rhs list");
    if (rule.rhs.empty()) lex.fail(rhs_close, "rule rhs must contain at least one symbol");

    Token eq_open = lex.next();
    if (eq_open.kind != TokKind::LParen) lex.fail(eq_open, "expected '(' starting equations");
    while (lex.peek().kind == TokKind::LParen) {
      rule.equations.push_back(parse_equation(lex));
    }
    Token eq_close = lex.next();
    if (eq_close.kind != TokKind::RParen) lex.fail(eq_close, "expected ')' closing equations");

    Token rule_close = lex.next();
    if (rule_close.kind != TokKind::RParen) lex.fail(rule_close, "expected ')' closing rule");

    check_registers(rule);
    set.rules.push_back(std::move(rule));
  }
  return set;
}

const std::vector<Rule>& CompiledGrammar::rules_for(std::string_view nonterminal) const {
  auto it = table_.find(nonterminal);
  if (it == table_.end()) {
    throw Error("undefined-nonterminal", "no rules for <" + std::string(nonterminal) + ">");
  }
  return it->second;
}

bool CompiledGrammar::has_nonterminal(std::string_view name) const {
  return table_.find(name) != table_.end();
}

bool CompiledGrammar::is_builtin(std::string_view name) const {
  return builtins_.find(std::string(name)) != builtins_.end();
}

CompiledGrammar compile(RuleSet rules, std::set<std::string> builtins) {
  CompiledGrammar g;
  g.builtins_ = std::move(builtins);
  g.rule_count_ = rules.rules.size();
  for (auto& r : rules.rules) {
    g.table_[r.lhs];  // ensure entry exists even before rhs validation
  }
  for (auto& r : rules.rules) {
    for (const auto& sym : r.rhs) {
      if (g.table_.find(sym) == g.table_.end() && !g.is_builtin(sym)) {
        throw Error("undefined-nonterminal",
                    "rhs symbol <" + sym + "> in rule <" + r.lhs + "> at line " +
                        std::to_string(r.line) + " is neither defined nor a builtin");
      }
    }
    g.table_[r.lhs].push_back(std::move(r));
  }
  return g;
}

namespace {

struct DeriveContext {
  const CompiledGrammar* grammar = nullptr;
  const BuiltinTable* builtins = nullptr;
  // Innermost exhausted nonterminal, for the no-applicable-rule report.
  std::string deepest_failure_state;
  std::string deepest_failure_fs;
  size_t deepest_failure_depth = 0;
};

bool eval_constraints(const Rule& rule, const std::vector<Value>& regs) {
  for (const auto& eq : rule.equations) {
    if (eq.kind != Equation::Kind::constrain) continue;
    const Value& reg = regs[static_cast<size_t>(eq.lhs.reg)];
    if (!reg.is_fs()) {
      // A non-structure register satisfies only *undefined*.
      if (eq.rhs_atom->name != kUndefined) return false;
      continue;
    }
    if (!constrain_eq(reg.fs(), eq.lhs.path, *eq.rhs_atom)) return false;
  }
  return true;
}

void run_equations(const Rule& rule, std::vector<Value>& regs) {
  auto mutable_fs = [&](const RegisterPath& rp) -> FeatureStructure& {
    Value& reg = regs[static_cast<size_t>(rp.reg)];
    if (!reg.is_fs()) {
      throw Error("path-through-atom",
                  "register x" + std::to_string(rp.reg) + " holds a non-structure value in rule <" +
                      rule.lhs + "> at line " + std::to_string(rule.line));
    }
    return reg.fs();
  };

  for (const auto& eq : rule.equations) {
    switch (eq.kind) {
      case Equation::Kind::constrain:
        break;  // hoisted; already checked
      case Equation::Kind::remove: {
        FeatureStructure& fs = mutable_fs(eq.lhs);
        fs = remove_at(std::move(fs), eq.lhs.path);
        break;
      }
      case Equation::Kind::assign: {
        std::optional<Value> v;
        if (eq.rhs_atom) {
          v = Value(*eq.rhs_atom);
        } else {
          const Value& src = regs[static_cast<size_t>(eq.rhs_ref->reg)];
          if (eq.rhs_ref->path.empty()) {
            v = src;
          } else if (src.is_fs()) {
            if (const Value* found = get(src.fs(), eq.rhs_ref->path)) v = *found;
          }
        }
        if (!v) break;  // assigning an absent value is a no-op
        if (eq.lhs.path.empty()) {
          regs[static_cast<size_t>(eq.lhs.reg)] = std::move(*v);
        } else {
          FeatureStructure& fs = mutable_fs(eq.lhs);
          fs = put(std::move(fs), eq.lhs.path, std::move(*v));
        }
        break;
      }
    }
  }
}

std::optional<Derivation::Node> try_derive(DeriveContext& ctx, const std::string& state,
                                           const FeatureStructure& input, size_t depth);

// Builds the children for a committed rule; nullopt = soft failure.
std::optional<std::vector<Derivation::Child>> build_children(DeriveContext& ctx,
                                                             const Rule& rule,
                                                             const std::vector<Value>& regs,
                                                             size_t depth) {
  std::vector<Derivation::Child> children;
  children.reserve(rule.rhs.size());
  for (size_t i = 0; i < rule.rhs.size(); ++i) {
    const std::string& sym = rule.rhs[i];
    const Value& reg = regs[i + 1];
    Derivation::Child child;
    child.symbol = sym;
    if (ctx.grammar->is_builtin(sym)) {
      child.is_builtin = true;
      auto hook = ctx.builtins->find(sym);
      if (hook == ctx.builtins->end()) {
        throw Error("builtin-failure", "no realizer bound for builtin <" + sym + ">");
      }
      std::optional<std::vector<std::string>> tokens;
      try {
        tokens = hook->second(reg);
      } catch (const Error& e) {
        throw Error(e.code(), e.message() + " (while realizing <" + sym + "> in state <" +
                                  rule.lhs + ">)");
      }
      if (!tokens) return std::nullopt;
      child.tokens = std::move(*tokens);
    } else {
      if (!reg.is_fs()) {
        throw Error("path-through-atom",
                    "register x" + std::to_string(i + 1) + " for nonterminal <" + sym +
                        "> holds a non-structure value (rule at line " +
                        std::to_string(rule.line) + ")");
      }
      auto sub = try_derive(ctx, sym, reg.fs(), depth + 1);
      if (!sub) return std::nullopt;
      child.sub.push_back(std::move(*sub));
    }
    children.push_back(std::move(child));
  }
  return children;
}

std::optional<Derivation::Node> try_derive(DeriveContext& ctx, const std::string& state,
                                           const FeatureStructure& input, size_t depth) {
  const std::vector<Rule>& candidates = ctx.grammar->rules_for(state);
  for (size_t idx = 0; idx < candidates.size(); ++idx) {
    const Rule& rule = candidates[idx];
    std::vector<Value> regs(rule.rhs.size() + 1);
    regs[0] = Value(input);
    if (!eval_constraints(rule, regs)) continue;
    run_equations(rule, regs);
    auto children = build_children(ctx, rule, regs, depth);
    if (!children) continue;  // chronological backtracking
    Derivation::Node node;
    node.state = state;
    node.rule_index = static_cast<int>(idx);
    node.rule_line = rule.line;
    node.input = input;
    node.registers = std::move(regs);
    node.children = std::move(*children);
    return node;
  }
  if (depth >= ctx.deepest_failure_depth) {
    ctx.deepest_failure_depth = depth;
    ctx.deepest_failure_state = state;
    ctx.deepest_failure_fs = print_fs_compact(input);
  }
  return std::nullopt;
}

}  // namespace

Derivation derive(const CompiledGrammar& grammar, std::string_view start,
                  const FeatureStructure& input, const BuiltinTable& builtins) {
  if (!grammar.has_nonterminal(start)) {
    throw Error("undefined-nonterminal", "start symbol <" + std::string(start) + "> not in grammar");
  }
  DeriveContext ctx;
  ctx.grammar = &grammar;
  ctx.builtins = &builtins;
  auto node = try_derive(ctx, std::string(start), input, 0);
  if (!node) {
    throw Error("no-applicable-rule",
                "every rule failed at <" + ctx.deepest_failure_state + "> for " +
                    ctx.deepest_failure_fs);
  }
  Derivation d;
  d.root = std::move(*node);
  return d;
}

namespace {

void collect_tokens(const Derivation::Node& node, std::vector<std::string>& out) {
  for (const auto& child : node.children) {
    if (child.is_builtin) {
      out.insert(out.end(), child.tokens.begin(), child.tokens.end());
    } else {
      collect_tokens(child.sub.front(), out);
    }
  }
}

size_t count_nodes(const Derivation::Node& node) {
  size_t n = 1;
  for (const auto& child : node.children) {
    if (!child.is_builtin) n += count_nodes(child.sub.front());
  }
  return n;
}

// Summarizes the constituents still pending in the continuation register:
// the feature names under "arguments" and "adjuncts", in structure order.
std::string summarize_remaining(const Derivation::Node& node) {
  const Value* cont = nullptr;
  for (size_t i = node.children.size(); i-- > 0;) {
    if (!node.children[i].is_builtin) {
      cont = &node.registers[i + 1];
      break;
    }
  }
  if (!cont && !node.registers.empty()) cont = &node.registers.back();
  if (!cont || !cont->is_fs()) return "-";
  std::string out;
  for (const char* bucket : {"arguments", "adjuncts"}) {
    if (const Value* v = cont->fs().find(bucket); v && v->is_fs()) {
      for (const auto& e : v->fs().entries()) {
        if (!out.empty()) out += ',';
        out += e.name;
      }
    }
  }
  return out.empty() ? "-" : out;
}

void collect_trace(const Derivation::Node& node, std::vector<TraceStep>& out) {
  TraceStep step;
  step.state = node.state;
  step.emission = "NIL";
  for (const auto& child : node.children) {
    if (child.is_builtin && !child.tokens.empty()) {
      step.emission = child.symbol;
      break;
    }
  }
  step.remaining = summarize_remaining(node);
  out.push_back(std::move(step));
  for (const auto& child : node.children) {
    if (!child.is_builtin) collect_trace(child.sub.front(), out);
  }
}

}  // namespace

std::vector<std::string> Derivation::tokens() const {
  std::vector<std::string> out;
  collect_tokens(root, out);
  return out;
}

size_t Derivation::step_count() const { return count_nodes(root); }

std::vector<TraceStep> trace_steps(const Derivation& d) {
  std::vector<TraceStep> out;
  collect_trace(d.root, out);
  return out;
}

std::string trace(const Derivation& d) {
  std::string out;
  for (const auto& step : trace_steps(d)) {
    out += step.state;
    out += '\t';
    out += step.emission;
    out += '\t';
    out += step.remaining;
    out += '\n';
  }
  return out;
}

}  // namespace serbest
