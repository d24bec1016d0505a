// Copyright 2026 the serbest authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SERBEST_ENGINE_HPP
#define SERBEST_ENGINE_HPP

#include <memory>
#include <string>

#include "serbest/order.hpp"

// Facade over the full pipeline: loads the grammar directory
// (sentence.rules, np.rules, lexicon.tlx), compiles the dispatch tables
// once, and exposes realization entry points. Immutable after
// construction; safe to share across threads.

namespace serbest {

class Engine {
 public:
  /// Loads and compiles a grammar directory.
  static Engine load(const std::string& grammar_dir);
  static Engine load(const std::string& grammar_dir, const std::string& lexicon_path);

  /// Builds an engine from already-parsed pieces (tests use this to
  /// splice in modified grammars).
  Engine(Lexicon lexicon, RuleSet sentence_rules, RuleSet np_rules);

  Engine(Engine&&) noexcept = default;
  Engine& operator=(Engine&&) noexcept = default;

  /// Validates a raw structure and realizes it end to end.
  TextRealization realize(const FeatureStructure& raw) const;

  /// Realization plus the sentence-level trace of the first simple
  /// clause encountered (the trace subject of a simple sentence).
  SentenceRealization realize_simple(const CaseFrame& cf) const { return order_->realize_sentence(cf); }

  const Lexicon& lexicon() const { return *lexicon_; }
  const CompiledGrammar& sentence_grammar() const { return *sentence_grammar_; }
  const CompiledGrammar& np_grammar() const { return *np_grammar_; }
  const NpRealizer& np() const { return *np_; }
  const OrderEngine& order() const { return *order_; }

 private:
  // unique_ptr keeps the cross-references stable under moves
  std::unique_ptr<Lexicon> lexicon_;
  std::unique_ptr<CompiledGrammar> sentence_grammar_;
  std::unique_ptr<CompiledGrammar> np_grammar_;
  std::unique_ptr<NpRealizer> np_;
  std::unique_ptr<OrderEngine> order_;
};

}  // namespace serbest

#endif  // SERBEST_ENGINE_HPP
