// Copyright 2026 the serbest authors
// SPDX-License-Identifier: Apache-2.0

#include "serbest/engine.hpp"

#include <fstream>
#include <sstream>

#include "serbest/error.hpp"

namespace serbest {

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("io-error", "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Engine::Engine(Lexicon lexicon, RuleSet sentence_rules, RuleSet np_rules)
    : lexicon_(std::make_unique<Lexicon>(std::move(lexicon))),
      sentence_grammar_(std::make_unique<CompiledGrammar>(
          compile(std::move(sentence_rules), OrderEngine::builtin_names()))),
      np_grammar_(std::make_unique<CompiledGrammar>(
          compile(std::move(np_rules), NpRealizer::builtin_names()))),
      np_(std::make_unique<NpRealizer>(*lexicon_, *np_grammar_)),
      order_(std::make_unique<OrderEngine>(*lexicon_, *sentence_grammar_, *np_)) {}

Engine Engine::load(const std::string& grammar_dir, const std::string& lexicon_path) {
  return Engine(Lexicon::load_file(lexicon_path),
                parse_rule_file(slurp(grammar_dir + "/sentence.rules")),
                parse_rule_file(slurp(grammar_dir + "/np.rules")));
}

Engine Engine::load(const std::string& grammar_dir) {
  return load(grammar_dir, grammar_dir + "/lexicon.tlx");
}

TextRealization Engine::realize(const FeatureStructure& raw) const {
  ComplexSentence cs = validate(raw);
  return order_->realize_complex(cs);
}

}  // namespace serbest
