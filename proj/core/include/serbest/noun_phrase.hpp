// Copyright 2026 the serbest authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SERBEST_NOUN_PHRASE_HPP
#define SERBEST_NOUN_PHRASE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "serbest/case_frame.hpp"
#include "serbest/grammar.hpp"
#include "serbest/lexicon.hpp"
#include "serbest/morph.hpp"

// Noun-phrase linearization over the shipped np.rules machine:
// possessor, phrasal specifiers, determiner zone, set specifiers,
// phrasal modifiers, ordinal, lexical modifiers (emphasized kind next to
// the head), late indefinite article, classifier, head, scrambled
// possessor. Realization drives the same rules with morphology-backed
// realizer hooks, so the plan and the surface order cannot diverge.

namespace serbest {

enum class Case { nom, acc, dat, loc, abl, gen, ins };

std::string_view case_name(Case c);
std::optional<Case> parse_case(std::string_view token);

/// Sentence-layer case defaults: an explicit `case` feature on the
/// constituent wins; otherwise the role decides (subject nom, definite
/// object acc, source abl, goal dat, location loc, instrument ins,
/// beneficiary/value dat, duration loc, bare for the rest).
Case case_for_role(Role role, const Value& constituent);

enum class NpSlotKind {
  possessor, spec_rel, demons, det, set_spec, mod_rel, ordinal,
  quant_mod, qualy_mod, article, classifier, head, possessor_moved,
};

std::string_view np_slot_name(NpSlotKind k);

/// Person/number of a phrase: explicit ref.agr wins, then the pronoun's
/// lexical agreement, then third singular.
std::pair<int, bool> phrase_person_number(const Lexicon& lexicon, const FeatureStructure& np);

struct NpSlot {
  NpSlotKind kind;
};

struct NpRealization {
  std::vector<std::string> tokens;
  std::vector<GeneratedWord> words;  // every inflected word, for validators
};

class NpRealizer {
 public:
  NpRealizer(const Lexicon& lexicon, const CompiledGrammar& grammar);

  /// Builtin names np.rules may reference.
  static std::set<std::string> builtin_names();

  /// Slot order for a canonical noun phrase (validate_noun_phrase first).
  /// Throws roles-present for gapped sentential modifiers.
  std::vector<NpSlot> plan(const FeatureStructure& np) const;

  /// Inflected surface tokens for a canonical noun phrase.
  NpRealization realize(const FeatureStructure& np, Case kase) const;

  const Lexicon& lexicon() const { return *lexicon_; }

 private:
  FeatureStructure normalize(const FeatureStructure& np) const;
  std::optional<std::vector<std::string>> realize_head(const Value& reg,
                                                       std::vector<GeneratedWord>& words) const;
  NpRealization realize_normalized(const FeatureStructure& np) const;

  const Lexicon* lexicon_;
  const CompiledGrammar* grammar_;
};

}  // namespace serbest

#endif  // SERBEST_NOUN_PHRASE_HPP
