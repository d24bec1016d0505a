// Copyright 2026 the serbest authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SERBEST_ORDER_HPP
#define SERBEST_ORDER_HPP

#include <optional>
#include <string>
#include <vector>

#include "serbest/case_frame.hpp"
#include "serbest/grammar.hpp"
#include "serbest/noun_phrase.hpp"

// Sentence-level ordering and realization. Both plan() and
// realize_sentence() drive the shipped sentence.rules machine; planning
// binds presence-checking hooks and reconstructs the slot sequence from
// the derivation trace, realization binds morphology-backed hooks. The
// information-structure positions: topic sentence-initial, focus
// immediately preverbal, background postverbal, with an indefinite
// direct object claiming the preverbal slot when no focus is set.

namespace serbest {

enum class SlotKind { topic, dflt, focus, verb, background };

std::string_view slot_kind_name(SlotKind k);

struct OrderSlot {
  std::optional<Role> role;  // nullopt only for the verb slot
  SlotKind kind = SlotKind::dflt;
  Value constituent;         // the constituent (or verb) structure
};

struct OrderPlan {
  std::vector<OrderSlot> slots;

  std::optional<size_t> index_of(Role r) const;
  size_t verb_index() const;
  std::vector<Role> role_sequence() const;  // roles in slot order, verb skipped
};

struct SentenceRealization {
  std::vector<std::string> tokens;        // raw tokens, no capitalization/punctuation
  std::vector<GeneratedWord> words;       // every word the morphology produced
  std::vector<TraceStep> trace;           // top-level derivation trace
  std::vector<std::string> warnings;      // subcategorization notes
};

struct TextRealization {
  std::string text;                       // capitalized, punctuated sentence
  std::vector<GeneratedWord> words;
  std::vector<std::string> warnings;
};

class OrderEngine {
 public:
  OrderEngine(const Lexicon& lexicon, const CompiledGrammar& sentence_grammar,
              const NpRealizer& np);

  /// Builtin names sentence.rules may reference.
  static std::set<std::string> builtin_names();

  /// Computes the constituent order for a validated frame. Throws
  /// control-overlap when topic/focus/backgr repeat a role, and
  /// focus-conflict when an indefinite direct object cannot reach the
  /// immediately preverbal position.
  OrderPlan plan(const CaseFrame& cf) const;

  /// Fully inflected token sequence. Requires s-form finite or
  /// infinitive; adverbial/participle forms raise unsupported-s-form.
  SentenceRealization realize_sentence(const CaseFrame& cf) const;

  /// Simple sentences gain capitalization and terminal punctuation; conj
  /// joins elements with ", " and the conjunction before the last;
  /// linked fills the relation's connective pattern from the lexicon.
  TextRealization realize_complex(const ComplexSentence& cs) const;

  const Lexicon& lexicon() const { return *lexicon_; }

 private:
  struct ClauseContext {
    bool infinitive = false;
    Case matrix_case = Case::nom;
  };

  void check_control(const CaseFrame& cf) const;
  FeatureStructure prepare(const CaseFrame& cf, const ClauseContext& ctx,
                           bool& wants_particle, std::vector<std::string>& warnings) const;
  SentenceRealization realize_clause(const CaseFrame& cf, const ClauseContext& ctx) const;
  std::optional<std::vector<std::string>> realize_verb(const Value& reg,
                                                       std::vector<GeneratedWord>& words) const;

  struct InnerText {
    std::string text;
    std::string speech_act;
    std::vector<GeneratedWord> words;
    std::vector<std::string> warnings;
  };
  InnerText realize_inner(const ComplexSentence& cs) const;

  const Lexicon* lexicon_;
  const CompiledGrammar* grammar_;
  const NpRealizer* np_;
};

}  // namespace serbest

#endif  // SERBEST_ORDER_HPP
