// Copyright 2026 the serbest authors
// SPDX-License-Identifier: Apache-2.0

#include "serbest/noun_phrase.hpp"

#include <algorithm>

#include "serbest/error.hpp"
#include "serbest/turkish.hpp"

namespace serbest {

namespace {

struct CaseName {
  Case kase;
  std::string_view name;
  Tag tag;
};

constexpr CaseName kCaseNames[] = {
    {Case::nom, "nom", Tag::NOM}, {Case::acc, "acc", Tag::ACC},
    {Case::dat, "dat", Tag::DAT}, {Case::loc, "loc", Tag::LOC},
    {Case::abl, "abl", Tag::ABL}, {Case::gen, "gen", Tag::GEN},
    {Case::ins, "ins", Tag::INS},
};

struct SlotName {
  NpSlotKind kind;
  std::string_view builtin;
};

constexpr SlotName kSlotNames[] = {
    {NpSlotKind::possessor, "np-poss"},
    {NpSlotKind::spec_rel, "np-spec-rel"},
    {NpSlotKind::demons, "np-demons"},
    {NpSlotKind::det, "np-det"},
    {NpSlotKind::set_spec, "np-set-spec"},
    {NpSlotKind::mod_rel, "np-mod-rel"},
    {NpSlotKind::ordinal, "np-ordinal"},
    {NpSlotKind::quant_mod, "np-quant"},
    {NpSlotKind::qualy_mod, "np-qual"},
    {NpSlotKind::article, "np-article"},
    {NpSlotKind::classifier, "np-class"},
    {NpSlotKind::head, "np-head"},
    {NpSlotKind::possessor_moved, "np-poss-moved"},
};

const std::vector<Category> kHeadPreference = {
    Category::noun,   Category::pronoun, Category::proper_noun, Category::adverb,
    Category::adj,    Category::det,     Category::demons,      Category::wh,
};

const std::vector<Category> kModifierPreference = {
    Category::adj, Category::det, Category::noun, Category::adverb, Category::demons,
};

bool all_digits(std::string_view s) {
  return !s.empty() && s.find_first_not_of("0123456789") == std::string_view::npos;
}

// Registers left untouched by the rule's equations count as absent.
bool register_absent(const Value& reg) {
  if (reg.is_fs()) return reg.fs().empty();
  if (reg.is_list()) return reg.list().empty();
  if (reg.is_atom()) return reg.atom().name.empty();
  return false;
}

const Value* np_get(const FeatureStructure& np, std::initializer_list<std::string> segs) {
  return get(np, Path(std::vector<std::string>(segs)));
}

std::vector<std::string> split_tokens(std::string_view text) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && text[i] == ' ') ++i;
    size_t start = i;
    while (i < text.size() && text[i] != ' ') ++i;
    if (i > start) out.emplace_back(text.substr(start, i - start));
  }
  return out;
}

}  // namespace

std::string_view case_name(Case c) {
  for (const auto& cn : kCaseNames) {
    if (cn.kase == c) return cn.name;
  }
  return "?";
}

std::optional<Case> parse_case(std::string_view token) {
  for (const auto& cn : kCaseNames) {
    if (cn.name == token) return cn.kase;
  }
  return std::nullopt;
}

std::string_view np_slot_name(NpSlotKind k) {
  for (const auto& sn : kSlotNames) {
    if (sn.kind == k) return sn.builtin;
  }
  return "?";
}

Case case_for_role(Role role, const Value& constituent) {
  if (constituent.is_fs()) {
    if (const Value* c = constituent.fs().find("case"); c && c->is_atom()) {
      if (auto k = parse_case(c->atom().name)) return *k;
    }
  }
  switch (role) {
    case Role::subject: return Case::nom;
    case Role::dir_obj: {
      if (constituent.is_fs() && !CaseFrame::is_sentential(constituent)) {
        const Value* definite = get(constituent.fs(), Path{"spec", "det", "definite"});
        if (definite && definite->is_atom() && definite->atom().name == "-") {
          return Case::nom;  // indefinite objects stay unmarked
        }
      }
      return Case::acc;
    }
    case Role::source: return Case::abl;
    case Role::goal: return Case::dat;
    case Role::location: return Case::loc;
    case Role::instrument: return Case::ins;
    case Role::beneficiary: return Case::dat;
    case Role::value: return Case::dat;
    case Role::duration: return Case::loc;
    case Role::time: case Role::place: case Role::manner: case Role::path:
      return Case::nom;
  }
  return Case::nom;
}

std::pair<int, bool> phrase_person_number(const Lexicon& lexicon, const FeatureStructure& np) {
  if (const Value* agr = np_get(np, {"ref", "agr"}); agr && agr->is_fs()) {
    int person = 3;
    bool plural = false;
    if (const Value* p = agr->fs().find("person"); p && p->is_atom()) {
      person = p->atom().name == "1" ? 1 : p->atom().name == "2" ? 2 : 3;
    }
    if (const Value* n = agr->fs().find("number"); n && n->is_atom()) {
      plural = n->atom().name == "pl";
    }
    return {person, plural};
  }
  if (const Value* arg = np_get(np, {"ref", "arg"}); arg && arg->is_atom()) {
    if (const LexEntry* e = lexicon.try_lookup(arg->atom().name, Category::pronoun)) {
      if (e->agr) return *e->agr;
    }
  }
  return {3, false};
}

NpRealizer::NpRealizer(const Lexicon& lexicon, const CompiledGrammar& grammar)
    : lexicon_(&lexicon), grammar_(&grammar) {}

std::set<std::string> NpRealizer::builtin_names() {
  std::set<std::string> names;
  for (const auto& sn : kSlotNames) names.emplace(sn.builtin);
  names.emplace("np-end");
  return names;
}

// Lexical normalization ahead of the ordering machine: the determiner
// zone word, the late-article flag, and the determiner position class.
// The rules themselves only test atoms, so every lexicon-dependent
// decision is folded in here.
FeatureStructure NpRealizer::normalize(const FeatureStructure& np) const {
  FeatureStructure out = np;

  std::optional<std::string> quantifier;
  bool indefinite = false;
  if (const Value* det = np_get(np, {"spec", "det"}); det && det->is_fs()) {
    if (const Value* q = det->fs().find("quantifier"); q && q->is_atom()) {
      quantifier = q->atom().name;
    }
    if (const Value* d = det->fs().find("definite"); d && d->is_atom()) {
      indefinite = d->atom().name == "-";
    }
  }
  bool has_quals = false;
  if (const Value* quals = np_get(np, {"modf", "qualy-mod"})) {
    has_quals = quals->is_list() && !quals->list().empty();
  }

  std::optional<std::string> early, late;
  if (quantifier) {
    // The indefinite singular determiner follows any qualitative
    // modifier and precedes the classifier/head; every other
    // determiner keeps the specifier slot.
    if (*quantifier == "bir" && indefinite && has_quals) late = *quantifier;
    else early = *quantifier;
  }

  if (early) {
    out.set("np-det-word", Value(Atom{*early}));
    const LexEntry& entry = lexicon_->lookup(*early, Category::det);
    if (entry.flags.det_position_class == "det-first") {
      out.set("np-det-class", Value(Atom{"det-first"}));
    }
  }
  if (late) out.set("np-article-word", Value(Atom{*late}));
  return out;
}

namespace {

struct RealizeState {
  const NpRealizer* realizer = nullptr;
  const Lexicon* lexicon = nullptr;
  std::vector<GeneratedWord>* words = nullptr;
};

std::vector<std::string> realize_lexeme(const RealizeState& st, const std::string& name,
                                        const std::vector<Category>& preference) {
  const LexEntry& entry = st.lexicon->lookup_any(name, preference);
  return {entry.lemma};
}

// Phrase-valued slots: quoted text is a pre-built phrase, an atom a bare
// lexeme, a structure a nested noun phrase realized unmarked.
std::vector<std::string> realize_phrase_item(const RealizeState& st, const Value& item,
                                             Case kase) {
  if (item.is_text()) return split_tokens(item.text().text);
  if (item.is_atom()) return realize_lexeme(st, item.atom().name, kModifierPreference);
  if (item.is_fs()) {
    NpRealization sub = st.realizer->realize(item.fs(), kase);
    st.words->insert(st.words->end(), sub.words.begin(), sub.words.end());
    return sub.tokens;
  }
  throw Error("bad-enum-value", "unsupported phrase value " + print_value_compact(item));
}

}  // namespace

std::optional<std::vector<std::string>> NpRealizer::realize_head(
    const Value& reg, std::vector<GeneratedWord>& words) const {
  if (!reg.is_fs()) return std::nullopt;
  const FeatureStructure& np = reg.fs();
  const Value* arg = np_get(np, {"ref", "arg"});
  if (!arg || !arg->is_atom()) {
    throw Error("missing-entry", "noun phrase head has no ref.arg lexeme");
  }
  const LexEntry& entry = lexicon_->lookup_any(arg->atom().name, kHeadPreference);

  MorphRequest request;
  request.root = arg->atom().name;
  auto [person, plural] = phrase_person_number(*lexicon_, np);
  if (plural && entry.category == Category::noun) request.tags.push_back(Tag::PL);
  if (const Value* poss = np.find("poss"); poss && poss->is_fs()) {
    if (const Value* owner = poss->fs().find("argument"); owner && owner->is_fs()) {
      auto [operson, oplural] = phrase_person_number(*lexicon_, owner->fs());
      request.tags.push_back(possessive_tag(operson, oplural));
    }
  }
  (void)person;
  if (const Value* k = np.find("np-case"); k && k->is_atom()) {
    if (auto kase = parse_case(k->atom().name); kase && *kase != Case::nom) {
      for (const auto& cn : kCaseNames) {
        if (cn.kase == *kase) request.tags.push_back(cn.tag);
      }
    }
  }

  GeneratedWord word = generate_with_entry(entry, request);
  words.push_back(word);
  return std::vector<std::string>{word.surface};
}

NpRealization NpRealizer::realize_normalized(const FeatureStructure& np) const {
  NpRealization result;
  RealizeState st{this, lexicon_, &result.words};

  BuiltinTable builtins;
  auto soft = [](auto fn) {
    return [fn](const Value& reg) -> std::optional<std::vector<std::string>> {
      if (register_absent(reg)) return std::nullopt;
      return fn(reg);
    };
  };

  builtins["np-poss"] = builtins["np-poss-moved"] = soft([st](const Value& reg) {
    NpRealization sub = st.realizer->realize(reg.fs(), Case::gen);
    st.words->insert(st.words->end(), sub.words.begin(), sub.words.end());
    return std::optional(sub.tokens);
  });
  builtins["np-spec-rel"] = builtins["np-mod-rel"] = soft([st](const Value& reg) {
    std::vector<std::string> tokens;
    for (const auto& item : reg.list()) {
      auto t = realize_phrase_item(st, item, Case::nom);
      tokens.insert(tokens.end(), t.begin(), t.end());
    }
    return std::optional(tokens);
  });
  builtins["np-set-spec"] = soft([st](const Value& reg) {
    std::vector<std::string> tokens;
    for (const auto& item : reg.list()) {
      auto t = realize_phrase_item(st, item, Case::abl);
      tokens.insert(tokens.end(), t.begin(), t.end());
    }
    return std::optional(tokens);
  });
  builtins["np-demons"] = soft([st](const Value& reg) {
    return std::optional(realize_lexeme(st, reg.atom().name,
                                        {Category::demons, Category::det, Category::pronoun}));
  });
  builtins["np-det"] = builtins["np-article"] = soft([st](const Value& reg) {
    return std::optional(realize_lexeme(st, reg.atom().name, {Category::det}));
  });
  builtins["np-quant"] = soft([st](const Value& reg) {
    const std::string& q = reg.atom().name;
    if (all_digits(q)) return std::optional(std::vector<std::string>{q});
    return std::optional(realize_lexeme(st, q, {Category::det, Category::adj}));
  });
  builtins["np-qual"] = soft([st](const Value& reg) {
    std::vector<std::string> tokens;
    for (const auto& item : reg.list()) {
      auto t = realize_phrase_item(st, item, Case::nom);
      tokens.insert(tokens.end(), t.begin(), t.end());
    }
    return std::optional(tokens);
  });
  builtins["np-ordinal"] = soft([](const Value& reg) {
    const Value* pos = reg.fs().find("position");
    if (!pos || !pos->is_atom()) return std::optional<std::vector<std::string>>();
    // Digit orthography for ordinals: "3." kitap.
    return std::optional(std::vector<std::string>{pos->atom().name + "."});
  });
  builtins["np-class"] = soft([st](const Value& reg) {
    return std::optional(realize_lexeme(st, reg.atom().name,
                                        {Category::noun, Category::proper_noun}));
  });
  builtins["np-head"] = [this, &result](const Value& reg) {
    return realize_head(reg, result.words);
  };
  builtins["np-end"] = [](const Value&) {
    return std::optional<std::vector<std::string>>(std::vector<std::string>{});
  };

  Derivation d = derive(*grammar_, "n0", np, builtins);
  result.tokens = d.tokens();
  return result;
}

NpRealization NpRealizer::realize(const FeatureStructure& np, Case kase) const {
  if (np.find("roles")) {
    throw Error("roles-present",
                "gapped sentential modifiers (ROLES) are accepted in the schema but cannot "
                "be realized");
  }
  FeatureStructure normalized = normalize(np);
  normalized.set("np-case", Value(Atom{std::string(case_name(kase))}));
  return realize_normalized(normalized);
}

std::vector<NpSlot> NpRealizer::plan(const FeatureStructure& np) const {
  if (np.find("roles")) {
    throw Error("roles-present",
                "gapped sentential modifiers (ROLES) are accepted in the schema but cannot "
                "be realized");
  }
  FeatureStructure normalized = normalize(np);

  BuiltinTable builtins;
  for (const auto& sn : kSlotNames) {
    builtins[std::string(sn.builtin)] = [](const Value& reg)
        -> std::optional<std::vector<std::string>> {
      if (register_absent(reg)) return std::nullopt;
      return std::vector<std::string>{"*"};
    };
  }
  builtins["np-end"] = [](const Value&) {
    return std::optional<std::vector<std::string>>(std::vector<std::string>{});
  };

  Derivation d = derive(*grammar_, "n0", normalized, builtins);
  std::vector<NpSlot> slots;
  for (const auto& step : trace_steps(d)) {
    if (step.emission == "NIL") continue;
    for (const auto& sn : kSlotNames) {
      if (sn.builtin == step.emission) {
        slots.push_back(NpSlot{sn.kind});
        break;
      }
    }
  }
  return slots;
}

}  // namespace serbest
