// Copyright 2026 the serbest authors
// SPDX-License-Identifier: Apache-2.0

#include "serbest/order.hpp"

#include <algorithm>

#include "serbest/error.hpp"
#include "serbest/turkish.hpp"

namespace serbest {

namespace {

constexpr std::string_view kStart = "s0";

SlotKind kind_of_state(const std::string& state) {
  if (state == "s0") return SlotKind::topic;
  if (state == "s14") return SlotKind::focus;
  if (state == "s15") return SlotKind::verb;
  if (state == "s16") return SlotKind::background;
  return SlotKind::dflt;
}

bool register_absent(const Value& reg) {
  if (reg.is_fs()) return reg.fs().empty();
  if (reg.is_list()) return reg.list().empty();
  if (reg.is_atom()) return reg.atom().name.empty();
  return false;
}

// Token span emitted by the first builtin child named `symbol`, scanning
// the derivation left to right.
bool find_emission_end(const Derivation::Node& node, std::string_view symbol, size_t& offset,
                       size_t* end) {
  for (const auto& child : node.children) {
    if (child.is_builtin) {
      offset += child.tokens.size();
      if (child.symbol == symbol && !child.tokens.empty()) {
        *end = offset;
        return true;
      }
    } else if (find_emission_end(child.sub.front(), symbol, offset, end)) {
      return true;
    }
  }
  return false;
}

}  // namespace

std::string_view slot_kind_name(SlotKind k) {
  switch (k) {
    case SlotKind::topic: return "topic";
    case SlotKind::dflt: return "default";
    case SlotKind::focus: return "focus";
    case SlotKind::verb: return "verb";
    case SlotKind::background: return "background";
  }
  return "?";
}

std::optional<size_t> OrderPlan::index_of(Role r) const {
  for (size_t i = 0; i < slots.size(); ++i) {
    if (slots[i].role == r) return i;
  }
  return std::nullopt;
}

size_t OrderPlan::verb_index() const {
  for (size_t i = 0; i < slots.size(); ++i) {
    if (slots[i].kind == SlotKind::verb) return i;
  }
  throw Error("internal-error", "plan has no verb slot");
}

std::vector<Role> OrderPlan::role_sequence() const {
  std::vector<Role> out;
  for (const auto& s : slots) {
    if (s.role) out.push_back(*s.role);
  }
  return out;
}

OrderEngine::OrderEngine(const Lexicon& lexicon, const CompiledGrammar& sentence_grammar,
                         const NpRealizer& np)
    : lexicon_(&lexicon), grammar_(&sentence_grammar), np_(&np) {}

std::set<std::string> OrderEngine::builtin_names() {
  std::set<std::string> names;
  for (Role r : kDefaultOrder) names.emplace(role_name(r));
  names.emplace("verb");
  names.emplace("end");
  return names;
}

void OrderEngine::check_control(const CaseFrame& cf) const {
  auto topic = cf.topic();
  auto focus = cf.focus();
  auto backgr = cf.backgr();
  if ((topic && focus && *topic == *focus) || (topic && backgr && *topic == *backgr) ||
      (focus && backgr && *focus == *backgr)) {
    throw Error("control-overlap", "topic, focus and backgr must name pairwise distinct roles");
  }
  if (!cf.is_indefinite_dirobj()) return;
  // An unmarked object must stay immediately preverbal.
  if (focus && *focus != Role::dir_obj) {
    throw Error("focus-conflict",
                "indefinite direct object requires the preverbal slot, but focus names '" +
                    std::string(role_name(*focus)) + "'");
  }
  if (backgr && *backgr == Role::dir_obj) {
    throw Error("focus-conflict",
                "indefinite direct object cannot be backgrounded behind the verb");
  }
  if (topic && *topic == Role::dir_obj) {
    size_t preverbal = cf.present_roles().size() - (backgr ? 1 : 0);
    if (preverbal > 1) {
      throw Error("focus-conflict",
                  "indefinite direct object as topic cannot be separated from the verb");
    }
  }
}

OrderPlan OrderEngine::plan(const CaseFrame& cf) const {
  check_control(cf);

  BuiltinTable builtins;
  for (const auto& name : builtin_names()) {
    builtins[name] = [](const Value& reg) -> std::optional<std::vector<std::string>> {
      if (register_absent(reg)) return std::nullopt;
      return std::vector<std::string>{"*"};
    };
  }
  builtins["end"] = [](const Value&) {
    return std::optional<std::vector<std::string>>(std::vector<std::string>{});
  };

  Derivation d = derive(*grammar_, kStart, cf.fs(), builtins);

  OrderPlan plan;
  for (const auto& step : trace_steps(d)) {
    if (step.emission == "NIL") continue;
    OrderSlot slot;
    slot.kind = kind_of_state(step.state);
    if (step.emission == "verb") {
      slot.kind = SlotKind::verb;
      if (const Value* v = cf.fs().find("verb")) slot.constituent = *v;
    } else {
      auto r = parse_role(step.emission);
      if (!r) throw Error("internal-error", "unknown emission '" + step.emission + "'");
      slot.role = *r;
      if (const Value* c = cf.constituent(*r)) slot.constituent = *c;
    }
    plan.slots.push_back(std::move(slot));
  }

  // Every present constituent must surface exactly once.
  auto seq = plan.role_sequence();
  auto present = cf.present_roles();
  if (seq.size() != present.size()) {
    throw Error("internal-error", "plan lost or duplicated constituents");
  }
  for (Role r : present) {
    if (std::count(seq.begin(), seq.end(), r) != 1) {
      throw Error("internal-error",
                  "role '" + std::string(role_name(r)) + "' planned " +
                      std::to_string(std::count(seq.begin(), seq.end(), r)) + " times");
    }
  }
  return plan;
}

// Rewrites the frame for derivation: wh replacement, agreement binding,
// pro-drop removal, verb enrichment, embedded-subject genitive.
FeatureStructure OrderEngine::prepare(const CaseFrame& cf, const ClauseContext& ctx,
                                      bool& wants_particle,
                                      std::vector<std::string>& warnings) const {
  FeatureStructure fs = cf.fs();
  wants_particle = false;

  // Question handling applies to finite clauses only.
  if (!ctx.infinitive) {
    if (auto ques = cf.ques()) {
      if (ques->type == "yes-no") {
        wants_particle = true;
      } else if (ques->type == "wh") {
        bool first = true;
        for (Role r : ques->constituents) {
          const LexEntry& wh = lexicon_->lookup_wh_by_role(role_name(r));
          FeatureStructure ref;
          ref.set("arg", Value(Atom{turkish::to_lower(wh.lemma)}));
          FeatureStructure np;
          np.set("ref", Value(std::move(ref)));
          // Pro-forms are already inflected; suppress the role case.
          np.set("case", Value(Atom{"nom"}));
          std::string bucket = is_argument_role(r) ? "arguments" : "adjuncts";
          fs = put(std::move(fs), Path{bucket, std::string(role_name(r))},
                   Value(std::move(np)));
          if (first) {
            first = false;
            auto focus = cf.focus();
            if (focus && *focus != r) {
              throw Error("focus-conflict",
                          "wh constituent '" + std::string(role_name(r)) +
                              "' claims the focus slot already held by '" +
                              std::string(role_name(*focus)) + "'");
            }
            fs = put(std::move(fs), Path{"control", "focus"},
                     Value(Atom{std::string(role_name(r))}));
          }
        }
      }
    }
  }

  // Agreement binds before pro-drop removes the subject.
  int person = 3;
  bool plural = false;
  if (const Value* subject = get(fs, Path{"arguments", "subject"});
      subject && subject->is_fs() && !CaseFrame::is_sentential(*subject)) {
    std::tie(person, plural) = phrase_person_number(*lexicon_, subject->fs());
  }

  for (Role r : kDefaultOrder) {
    std::string bucket = is_argument_role(r) ? "arguments" : "adjuncts";
    Path path{bucket, std::string(role_name(r))};
    const Value* c = get(fs, path);
    if (!c || !c->is_fs()) continue;
    const Value* drop = get(c->fs(), Path{"ref", "control", "drop"});
    if (drop && drop->is_atom() && drop->atom().name == "+") {
      fs = remove_at(std::move(fs), path);
      // Control naming a dropped constituent has nothing to place.
      for (const char* which : {"topic", "focus", "backgr"}) {
        const Value* ctl = get(fs, Path{"control", which});
        if (ctl && ctl->is_atom() && ctl->atom().name == role_name(r)) {
          fs = remove_at(std::move(fs), Path{"control", which});
        }
      }
    }
  }

  // The embedded subject of a nominalized clause surfaces genitive.
  if (ctx.infinitive) {
    if (const Value* subject = get(fs, Path{"arguments", "subject"});
        subject && subject->is_fs()) {
      fs = put(std::move(fs), Path{"arguments", "subject", "case"}, Value(Atom{"gen"}));
    }
  }

  // Everything the verb realizer needs rides on the verb structure.
  VerbSpec verb = cf.verb();
  Path vp{"verb"};
  fs = put(std::move(fs), Path{"verb", "s-form"},
           Value(Atom{ctx.infinitive ? "infinitive" : "finite"}));
  fs = put(std::move(fs), Path{"verb", "clause-type"}, Value(Atom{cf.clause_type()}));
  fs = put(std::move(fs), Path{"verb", "speech-act"}, Value(Atom{cf.speech_act()}));
  fs = put(std::move(fs), Path{"verb", "voice"}, Value(Atom{cf.voice()}));
  FeatureStructure agr;
  agr.set("person", Value(Atom{std::string(1, static_cast<char>('0' + person))}));
  agr.set("number", Value(Atom{plural ? "pl" : "sg"}));
  fs = put(std::move(fs), Path{"verb", "agr"}, Value(std::move(agr)));
  if (ctx.infinitive) {
    fs = put(std::move(fs), Path{"verb", "case"},
             Value(Atom{std::string(case_name(ctx.matrix_case))}));
    std::string nominalizer = "ma";
    if (const LexEntry* e = lexicon_->try_lookup(verb.root, Category::verb);
        e && e->flags.nominalizer) {
      nominalizer = *e->flags.nominalizer;
    }
    if (verb.nominalizer) nominalizer = *verb.nominalizer;  // frame override wins
    fs = put(std::move(fs), Path{"verb", "nominalizer"}, Value(Atom{nominalizer}));
  }

  // Subcategorization is advisory: report, never reject.
  if (const LexEntry* e = lexicon_->try_lookup(verb.root, Category::verb)) {
    for (const auto& required : e->subcat.required_roles) {
      auto r = parse_role(required);
      if (r && !cf.constituent(*r)) {
        warnings.push_back("verb '" + verb.root + "' usually takes a " + required +
                           " constituent");
      }
    }
  }
  return fs;
}

std::optional<std::vector<std::string>> OrderEngine::realize_verb(
    const Value& reg, std::vector<GeneratedWord>& words) const {
  if (!reg.is_fs()) return std::nullopt;
  const FeatureStructure& v = reg.fs();
  auto atom_of = [&](std::string_view name, std::string_view fallback) {
    const Value* x = v.find(name);
    return (x && x->is_atom()) ? x->atom().name : std::string(fallback);
  };
  std::string root = atom_of("root", "");
  std::string clause_type = atom_of("clause-type", "predicative");
  std::string polarity = atom_of("polarity", "positive");

  if (clause_type == "attributive") {
    // Zero copula: the predicate complement surfaces bare.
    const LexEntry& e = lexicon_->lookup_any(
        root, {Category::adj, Category::noun, Category::adverb, Category::verb});
    return std::vector<std::string>{e.lemma};
  }
  if (clause_type == "existential") {
    const char* form = polarity == "negative" ? "yok" : "var";
    const LexEntry& e = lexicon_->lookup(form, Category::verb);
    return std::vector<std::string>{e.lemma};
  }

  MorphRequest request;
  request.root = root;
  std::string voice = atom_of("voice", "active");
  if (voice == "passive") request.tags.push_back(Tag::PASS);
  else if (voice == "causative") request.tags.push_back(Tag::CAUS);
  else if (voice == "reflexive") request.tags.push_back(Tag::REFL);
  else if (voice == "reciprocal") request.tags.push_back(Tag::RECIP);

  int person = 3;
  bool plural = false;
  if (const Value* agr = v.find("agr"); agr && agr->is_fs()) {
    if (const Value* p = agr->fs().find("person"); p && p->is_atom()) {
      person = p->atom().name[0] - '0';
    }
    if (const Value* n = agr->fs().find("number"); n && n->is_atom()) {
      plural = n->atom().name == "pl";
    }
  }

  if (atom_of("s-form", "finite") == "infinitive") {
    if (polarity == "negative") request.tags.push_back(Tag::NEG);
    request.tags.push_back(atom_of("nominalizer", "ma") == "is" ? Tag::INF_IS : Tag::INF_MA);
    request.tags.push_back(possessive_tag(person, plural));
    if (auto kase = parse_case(atom_of("case", "nom")); kase && *kase != Case::nom) {
      switch (*kase) {
        case Case::acc: request.tags.push_back(Tag::ACC); break;
        case Case::dat: request.tags.push_back(Tag::DAT); break;
        case Case::loc: request.tags.push_back(Tag::LOC); break;
        case Case::abl: request.tags.push_back(Tag::ABL); break;
        case Case::gen: request.tags.push_back(Tag::GEN); break;
        case Case::ins: request.tags.push_back(Tag::INS); break;
        default: break;
      }
    }
  } else {
    if (atom_of("modality", "") == "potentiality") request.tags.push_back(Tag::ABIL);
    if (polarity == "negative") request.tags.push_back(Tag::NEG);

    std::string speech_act = atom_of("speech-act", "declarative");
    std::string tense = atom_of("tense", "present");
    std::string aspect = atom_of("aspect", "");
    Tag tns;
    if (speech_act == "imperative") {
      tns = Tag::IMP;
    } else if (speech_act == "optative" || speech_act == "wish") {
      tns = Tag::OPT;
    } else if (speech_act == "necessitative") {
      tns = Tag::NEC;
    } else if (tense == "past") {
      if (!aspect.empty() && aspect != "perfect") {
        throw Error("unsupported-combination",
                    "compound tense past+" + aspect + " is not supported");
      }
      tns = Tag::PAST;  // past+perfect lowers to the simple past morpheme
    } else if (tense == "future") {
      if (!aspect.empty() && aspect != "perfect") {
        throw Error("unsupported-combination",
                    "compound tense future+" + aspect + " is not supported");
      }
      tns = Tag::FUT;
    } else {
      if (aspect == "perfect") {
        throw Error("unsupported-combination", "present+perfect is not supported");
      }
      tns = Tag::PROG;  // plain present and habitual both surface as -Iyor
    }
    request.tags.push_back(tns);
    request.tags.push_back(agreement_tag(person, plural));
  }

  GeneratedWord word = generate(*lexicon_, request, Category::verb);
  words.push_back(word);
  return std::vector<std::string>{word.surface};
}

SentenceRealization OrderEngine::realize_clause(const CaseFrame& cf,
                                                const ClauseContext& ctx) const {
  check_control(cf);
  SentenceRealization result;
  bool wants_particle = false;
  FeatureStructure prepared = prepare(cf, ctx, wants_particle, result.warnings);

  BuiltinTable builtins;
  for (Role r : kDefaultOrder) {
    builtins[std::string(role_name(r))] =
        [this, r, &result](const Value& reg) -> std::optional<std::vector<std::string>> {
      if (register_absent(reg)) return std::nullopt;
      if (!reg.is_fs()) {
        throw Error("bad-enum-value", "constituent register must hold a structure");
      }
      Case kase = case_for_role(r, reg);
      if (CaseFrame::is_sentential(reg)) {
        CaseFrame sub = CaseFrame::from_fs(reg.fs());
        SentenceRealization inner =
            realize_clause(sub, ClauseContext{/*infinitive=*/true, kase});
        result.words.insert(result.words.end(), inner.words.begin(), inner.words.end());
        result.warnings.insert(result.warnings.end(), inner.warnings.begin(),
                               inner.warnings.end());
        return inner.tokens;
      }
      NpRealization np = np_->realize(reg.fs(), kase);
      result.words.insert(result.words.end(), np.words.begin(), np.words.end());
      return np.tokens;
    };
  }
  builtins["verb"] = [this, &result](const Value& reg) {
    return realize_verb(reg, result.words);
  };
  builtins["end"] = [](const Value&) {
    return std::optional<std::vector<std::string>>(std::vector<std::string>{});
  };

  Derivation d = derive(*grammar_, kStart, prepared, builtins);
  result.tokens = d.tokens();
  result.trace = trace_steps(d);

  if (wants_particle) {
    size_t offset = 0, end = 0;
    if (find_emission_end(d.root, "verb", offset, &end) && end > 0) {
      result.tokens.insert(result.tokens.begin() + static_cast<long>(end),
                           harmonize_particle(result.tokens[end - 1]));
    }
  }
  return result;
}

SentenceRealization OrderEngine::realize_sentence(const CaseFrame& cf) const {
  std::string form = cf.s_form();
  if (form != "finite" && form != "infinitive") {
    throw Error("unsupported-s-form",
                "s-form '" + form + "' is accepted by the schema but cannot be realized");
  }
  ClauseContext ctx;
  ctx.infinitive = (form == "infinitive");
  return realize_clause(cf, ctx);
}

namespace {

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

}  // namespace

OrderEngine::InnerText OrderEngine::realize_inner(const ComplexSentence& cs) const {
  InnerText out;
  switch (cs.type) {
    case ComplexSentence::Type::simple: {
      SentenceRealization r = realize_sentence(*cs.arg);
      out.text = join_tokens(r.tokens);
      out.speech_act = cs.arg->speech_act();
      out.words = std::move(r.words);
      out.warnings = std::move(r.warnings);
      break;
    }
    case ComplexSentence::Type::conj: {
      const LexEntry* conj = lexicon_->try_lookup(cs.conj, Category::conj);
      if (!conj) {
        throw Error("unknown-conjunction", "no conjunction entry for '" + cs.conj + "'");
      }
      std::vector<std::string> parts;
      for (const auto& element : cs.elements) {
        InnerText inner = realize_inner(element);
        parts.push_back(inner.text);
        out.words.insert(out.words.end(), inner.words.begin(), inner.words.end());
        out.warnings.insert(out.warnings.end(), inner.warnings.begin(), inner.warnings.end());
        out.speech_act = inner.speech_act;
      }
      for (size_t i = 0; i + 1 < parts.size(); ++i) {
        if (i > 0) out.text += ", ";
        out.text += parts[i];
      }
      out.text += " " + conj->connective_word.value_or(conj->lemma) + " " + parts.back();
      break;
    }
    case ComplexSentence::Type::linked: {
      const LexEntry* rel = lexicon_->try_lookup(cs.link_relation, Category::conj);
      if (!rel || !rel->connective_pattern) {
        throw Error("unknown-link-relation",
                    "no connective pattern for relation '" + cs.link_relation + "'");
      }
      InnerText a = realize_inner(cs.linked_args.at(0));
      InnerText b = realize_inner(cs.linked_args.at(1));
      std::string text = *rel->connective_pattern;
      auto replace = [&text](std::string_view ph, const std::string& with) {
        size_t pos = text.find(ph);
        if (pos != std::string::npos) text.replace(pos, ph.size(), with);
      };
      replace("{1}", a.text);
      replace("{2}", b.text);
      out.text = std::move(text);
      out.speech_act = b.speech_act;
      out.words = std::move(a.words);
      out.words.insert(out.words.end(), b.words.begin(), b.words.end());
      out.warnings = std::move(a.warnings);
      out.warnings.insert(out.warnings.end(), b.warnings.begin(), b.warnings.end());
      break;
    }
  }
  return out;
}

TextRealization OrderEngine::realize_complex(const ComplexSentence& cs) const {
  InnerText inner = realize_inner(cs);
  TextRealization out;
  out.text = turkish::capitalize_first(inner.text);
  out.text += (inner.speech_act == "interrogative") ? "?" : ".";
  out.words = std::move(inner.words);
  out.warnings = std::move(inner.warnings);
  return out;
}

}  // namespace serbest
