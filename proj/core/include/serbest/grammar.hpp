// Copyright 2026 the serbest authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SERBEST_GRAMMAR_HPP
#define SERBEST_GRAMMAR_HPP

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "serbest/feature_structure.hpp"

// Rule formalism and derivation engine. A rule file holds right-linear
// backbone rules with feature constraint equations:
//
//   (<lhs> <==> (<rhs1> ... <rhsN>)
//     ( ((x0 control topic) =c subject)
//       (x2 = x0)
//       ((x2 arguments subject) = *remove*)
//       (x1 = (x0 arguments subject)) ))
//
// Registers x0..xN name the lhs and rhs constituents. Rules compile into
// per-nonterminal dispatch tables; derivation tries rules in file order,
// commits when every =c constraint holds, and backtracks chronologically
// when a child fails. The three equation kinds:
//
//   assign     ((xK path) = (xJ path)) | ((xK path) = atom) | (xK = x0)
//   constrain  ((xK path) =c atom)     | ((xK path) =c *undefined*)
//   remove     ((xK path) = *remove*)
//
// Constraints are hoisted: they are all evaluated against the entry
// register state (x0 = input, x1..xN empty) before any assignment runs,
// so guard semantics do not depend on listing order.

namespace serbest {

/// Register plus optional feature path ("(x0 control topic)" or bare x0).
struct RegisterPath {
  int reg = 0;
  Path path;  // may be empty: the whole register
};

struct Equation {
  enum class Kind { assign, constrain, remove };
  Kind kind = Kind::assign;
  RegisterPath lhs;
  std::optional<RegisterPath> rhs_ref;  // assignment from a register path
  std::optional<Atom> rhs_atom;        // atom assignment / constraint target
};

struct Rule {
  std::string lhs;
  std::vector<std::string> rhs;  // nonterminal or builtin names
  std::vector<Equation> equations;
  int line = 0;
};

struct RuleSet {
  std::vector<Rule> rules;
};

/// Parses a rule file. Nonterminal names are normalized by stripping the
/// angle brackets. Throws syntax-error, or bad-register when an equation
/// references xK with K beyond the rhs length.
RuleSet parse_rule_file(std::string_view text);

/// A builtin realizer: receives the register value bound to its rhs slot
/// and returns surface tokens. Returning nullopt is a soft failure that
/// triggers backtracking (the next rule for the nonterminal is tried);
/// hard errors are thrown and propagate with context.
using Builtin = std::function<std::optional<std::vector<std::string>>(const Value&)>;
using BuiltinTable = std::map<std::string, Builtin, std::less<>>;

/// Immutable dispatch tables: lookup by nonterminal is O(1) in the total
/// rule count, so inert rules never affect a derivation.
class CompiledGrammar {
 public:
  const std::vector<Rule>& rules_for(std::string_view nonterminal) const;
  bool has_nonterminal(std::string_view name) const;
  bool is_builtin(std::string_view name) const;
  const std::set<std::string>& builtins() const { return builtins_; }
  size_t rule_count() const { return rule_count_; }

 private:
  friend CompiledGrammar compile(RuleSet rules, std::set<std::string> builtins);
  std::map<std::string, std::vector<Rule>, std::less<>> table_;
  std::set<std::string> builtins_;
  size_t rule_count_ = 0;
};

/// Builds the dispatch table, preserving file order within each
/// nonterminal. Throws undefined-nonterminal when a rhs symbol is neither
/// defined nor a registered builtin name.
CompiledGrammar compile(RuleSet rules, std::set<std::string> builtins);

/// Derivation tree: one node per committed rule; leaves are builtin
/// emissions (token strings) or NIL. Concatenating leaf emissions left to
/// right yields the output token sequence.
struct Derivation {
  struct Node;

  struct Child {
    std::string symbol;
    bool is_builtin = false;
    std::vector<std::string> tokens;  // builtin output (empty = NIL leaf)
    std::vector<Node> sub;            // exactly one node for nonterminals
  };

  struct Node {
    std::string state;                 // lhs nonterminal
    int rule_index = 0;                // position within the dispatch entry
    int rule_line = 0;
    FeatureStructure input;            // x0 on entry (constraint replay state)
    std::vector<Value> registers;      // x0..xN after the assignments ran
    std::vector<Child> children;       // parallel to the rule's rhs
  };

  Node root;

  /// Leaf emissions, left to right.
  std::vector<std::string> tokens() const;
  /// Number of committed rule applications.
  size_t step_count() const;
};

/// Runs the grammar from a start nonterminal over an input structure.
/// Deterministic for fixed (grammar, start, input, builtins). Throws
/// no-applicable-rule naming the nonterminal and carrying the structure
/// snapshot when every alternative is exhausted.
Derivation derive(const CompiledGrammar& grammar, std::string_view start,
                  const FeatureStructure& input, const BuiltinTable& builtins);

/// Per-node trace info in derivation order (one entry per committed rule).
struct TraceStep {
  std::string state;
  std::string emission;   // builtin symbol that produced tokens, or "NIL"
  std::string remaining;  // constituent summary of the continuation register
};

std::vector<TraceStep> trace_steps(const Derivation& d);

/// Stable text rendering: "state<TAB>emission<TAB>remaining" per line.
std::string trace(const Derivation& d);

}  // namespace serbest

#endif  // SERBEST_GRAMMAR_HPP
