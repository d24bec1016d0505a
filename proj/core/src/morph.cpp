// Copyright 2026 the serbest authors
// SPDX-License-Identifier: Apache-2.0

#include "serbest/morph.hpp"

#include <algorithm>

#include "serbest/error.hpp"
#include "serbest/turkish.hpp"

namespace serbest {

namespace {

namespace tk = turkish;

// ---------------------------------------------------------------------
// Morphotactics: slot classes and templates.

enum class Slot {
  plural, possessive, kase,
  voice, ability, negation, tense_mood, agreement,
  infinitive,
};

Slot slot_of(Tag t) {
  if (t == Tag::PL) return Slot::plural;
  if (is_possessive_tag(t)) return Slot::possessive;
  if (is_case_tag(t)) return Slot::kase;
  if (is_voice_tag(t)) return Slot::voice;
  if (t == Tag::ABIL) return Slot::ability;
  if (t == Tag::NEG) return Slot::negation;
  if (is_tense_mood_tag(t)) return Slot::tense_mood;
  if (is_agreement_tag(t)) return Slot::agreement;
  return Slot::infinitive;  // INF-MA / INF-IS
}

// slot orderings per word class; each slot at most once
const std::vector<Slot> kNominalTemplate = {Slot::plural, Slot::possessive, Slot::kase};
const std::vector<Slot> kVerbalTemplate = {Slot::voice, Slot::ability, Slot::negation,
                                           Slot::tense_mood, Slot::agreement};
const std::vector<Slot> kNominalizationTemplate = {Slot::voice, Slot::negation, Slot::infinitive,
                                                   Slot::possessive, Slot::kase};

bool matches_template(const std::vector<Slot>& slots, const std::vector<Slot>& tmpl,
                      bool ordered) {
  if (ordered) {
    size_t pos = 0;
    for (Slot s : slots) {
      while (pos < tmpl.size() && tmpl[pos] != s) ++pos;
      if (pos == tmpl.size()) return false;
      ++pos;  // each slot fillable once
    }
    return true;
  }
  // unordered feasibility: every slot appears in the template, at most once
  std::vector<Slot> seen;
  for (Slot s : slots) {
    if (std::find(tmpl.begin(), tmpl.end(), s) == tmpl.end()) return false;
    if (std::find(seen.begin(), seen.end(), s) != seen.end()) return false;
    seen.push_back(s);
  }
  return true;
}

void check_morphotactics(const MorphRequest& request) {
  std::vector<Slot> slots;
  slots.reserve(request.tags.size());
  for (Tag t : request.tags) slots.push_back(slot_of(t));

  const bool nominalized =
      std::find(slots.begin(), slots.end(), Slot::infinitive) != slots.end();
  const std::vector<const std::vector<Slot>*> templates =
      nominalized ? std::vector<const std::vector<Slot>*>{&kNominalizationTemplate}
                  : std::vector<const std::vector<Slot>*>{&kNominalTemplate, &kVerbalTemplate};

  for (const auto* tmpl : templates) {
    if (matches_template(slots, *tmpl, /*ordered=*/true)) return;
  }
  for (const auto* tmpl : templates) {
    if (matches_template(slots, *tmpl, /*ordered=*/false)) {
      throw Error("tag-order-violation",
                  "tags " + tags_to_string(request.tags) + " for '" + request.root +
                      "' are out of template order");
    }
  }
  throw Error("unsupported-combination",
              "tags " + tags_to_string(request.tags) + " for '" + request.root +
                  "' fit no morphotactic template");
}

// ---------------------------------------------------------------------
// Concrete morpheme selection.

bool follows_third_person_possessive(const std::vector<Tag>& tags, size_t idx) {
  return idx > 0 && (tags[idx - 1] == Tag::P3SG || tags[idx - 1] == Tag::P3PL);
}

std::string case_shape(Tag t, bool n_variant) {
  switch (t) {
    case Tag::NOM: return "";
    case Tag::ACC: return n_variant ? "nI" : "(y)I";
    case Tag::DAT: return n_variant ? "nA" : "(y)A";
    case Tag::LOC: return n_variant ? "nDA" : "DA";
    case Tag::ABL: return n_variant ? "nDAn" : "DAn";
    case Tag::GEN: return "(n)In";
    case Tag::INS: return "(y)lA";
    default: return "";
  }
}

std::string possessive_shape(Tag t) {
  switch (t) {
    case Tag::P1SG: return "(I)m";
    case Tag::P2SG: return "(I)n";
    case Tag::P3SG: return "(s)I";
    case Tag::P1PL: return "(I)mIz";
    case Tag::P2PL: return "(I)nIz";
    case Tag::P3PL: return "lArI";
    default: return "";
  }
}

// Two finite agreement paradigms keyed by the preceding tense/mood:
// past and conditional take the clitic k-paradigm, the rest the copular
// z-paradigm; optative and imperative carry their own endings.
std::string agreement_shape(Tag agr, std::optional<Tag> tense, const MorphRequest& request) {
  enum class Paradigm { k, z, opt, imp };
  Paradigm p = Paradigm::z;
  if (tense == Tag::PAST || tense == Tag::COND) p = Paradigm::k;
  else if (tense == Tag::OPT) p = Paradigm::opt;
  else if (tense == Tag::IMP) p = Paradigm::imp;

  switch (p) {
    case Paradigm::k:
      switch (agr) {
        case Tag::A1SG: return "m";
        case Tag::A2SG: return "n";
        case Tag::A3SG: return "";
        case Tag::A1PL: return "k";
        case Tag::A2PL: return "nIz";
        case Tag::A3PL: return "lAr";
        default: break;
      }
      break;
    case Paradigm::z:
      switch (agr) {
        case Tag::A1SG: return "(y)Im";
        case Tag::A2SG: return "sIn";
        case Tag::A3SG: return "";
        case Tag::A1PL: return "(y)Iz";
        case Tag::A2PL: return "sInIz";
        case Tag::A3PL: return "lAr";
        default: break;
      }
      break;
    case Paradigm::opt:
      switch (agr) {
        case Tag::A1SG: return "(y)Im";
        case Tag::A2SG: return "sIn";
        case Tag::A3SG: return "";
        case Tag::A1PL: return "lIm";
        case Tag::A2PL: return "sInIz";
        case Tag::A3PL: return "lAr";
        default: break;
      }
      break;
    case Paradigm::imp:
      switch (agr) {
        case Tag::A2SG: return "";
        case Tag::A2PL: return "(y)In";
        case Tag::A3SG: return "sIn";
        case Tag::A3PL: return "sInlAr";
        default:
          throw Error("unsupported-combination",
                      "imperative has no agreement form for " +
                          std::string(tag_name(agr)) + " ('" + request.root + "')");
      }
      break;
  }
  return "";
}

std::string passive_shape(const std::string& root) {
  char32_t final = tk::last_codepoint(root);
  if (tk::is_vowel(final)) return "n";
  if (final == U'l') return "In";
  return "Il";
}

}  // namespace

std::vector<SuffixForm> select_morphemes(const MorphRequest& request, const LexFlags& flags) {
  check_morphotactics(request);

  std::vector<SuffixForm> out;
  out.reserve(request.tags.size());
  std::optional<Tag> tense;
  for (size_t i = 0; i < request.tags.size(); ++i) {
    Tag t = request.tags[i];
    SuffixForm form;
    form.tag = t;
    if (is_tense_mood_tag(t)) tense = t;
    switch (t) {
      case Tag::PL: form.shape = "lAr"; break;
      case Tag::P1SG: case Tag::P2SG: case Tag::P3SG:
      case Tag::P1PL: case Tag::P2PL: case Tag::P3PL:
        form.shape = possessive_shape(t);
        break;
      case Tag::NOM: case Tag::ACC: case Tag::DAT: case Tag::LOC:
      case Tag::ABL: case Tag::GEN: case Tag::INS: {
        // The n-variant surfaces after third-person possessives and at
        // demonstrative-pronoun junctions (bu -> bunu, bunda).
        bool n_variant = follows_third_person_possessive(request.tags, i) ||
                         (i == 0 && flags.n_junction && t != Tag::GEN && t != Tag::INS);
        if (i == 0 && flags.n_junction && t == Tag::GEN) {
          form.shape = "nIn";  // bu -> bunun even though (n)In would drop the n
        } else {
          form.shape = case_shape(t, n_variant);
        }
        break;
      }
      case Tag::NEG: form.shape = "mA"; break;
      case Tag::PAST: form.shape = "DI"; break;
      case Tag::PROG: form.shape = "Iyor"; break;
      case Tag::FUT: form.shape = "(y)AcAk"; form.soften_final = true; break;
      case Tag::NEC: form.shape = "mAlI"; break;
      case Tag::OPT: form.shape = "(y)A"; break;
      case Tag::COND: form.shape = "sA"; break;
      case Tag::IMP: form.shape = ""; break;
      case Tag::ABIL: form.shape = "(y)Abil"; break;
      case Tag::PASS: form.shape = passive_shape(request.root); break;
      case Tag::CAUS: form.shape = "DIr"; break;
      case Tag::REFL: form.shape = "(I)n"; break;
      case Tag::RECIP: form.shape = "(I)ş"; break;
      case Tag::INF_MA: form.shape = "mA"; break;
      case Tag::INF_IS: form.shape = "(y)Iş"; form.soften_final = false; break;
      case Tag::A1SG: case Tag::A2SG: case Tag::A3SG:
      case Tag::A1PL: case Tag::A2PL: case Tag::A3PL:
        form.shape = agreement_shape(t, tense, request);
        break;
    }
    out.push_back(std::move(form));
  }
  return out;
}

PhonContext PhonContext::of(std::string_view word, const LexFlags& flags) {
  PhonContext ctx;
  ctx.last_vowel = tk::last_vowel(word);
  char32_t final = tk::last_codepoint(word);
  if (tk::is_vowel(final)) ctx.final_class = FinalClass::vowel;
  else if (tk::is_voiceless_consonant(final)) ctx.final_class = FinalClass::voiceless;
  else ctx.final_class = FinalClass::voiced;
  ctx.front_override = flags.harmony_front;
  return ctx;
}

namespace {

struct Builder {
  std::vector<CharInfo> chars;
  char32_t last_vowel = 0;
  std::optional<bool> front_override;  // active until a suffix vowel lands

  char32_t final_cp() const { return chars.empty() ? 0 : chars.back().cp; }

  bool ends_in_vowel() const { return tk::is_vowel(final_cp()); }

  bool frontness() const {
    if (front_override) return *front_override;
    return tk::is_front_vowel(last_vowel);
  }

  void push(char32_t cp, CharOrigin origin, int suffix) {
    chars.push_back({cp, origin, suffix});
    if (tk::is_vowel(cp)) {
      last_vowel = cp;
      if (suffix >= 0) front_override.reset();
    }
  }

  char32_t resolve_a() const { return frontness() ? U'e' : U'a'; }

  char32_t resolve_i() const {
    bool front = frontness();
    bool round = tk::is_rounded_vowel(last_vowel);
    if (front) return round ? char32_t(0x00FC) : U'i';  // ü / i
    return round ? U'u' : char32_t(0x0131);             // u / ı
  }
};

constexpr char32_t kSoftG = 0x011F;    // ğ
constexpr char32_t kCCedilla = 0x00E7; // ç

char32_t soften(char32_t cp) {
  switch (cp) {
    case U'p': return U'b';
    case U't': return U'd';
    case U'k': return kSoftG;
    case kCCedilla: return U'c';
    default: return cp;
  }
}

struct ShapeParts {
  char32_t buffer = 0;            // y, s, n or I; 0 = none
  std::vector<char32_t> body;
};

ShapeParts split_shape(const std::string& shape) {
  ShapeParts parts;
  auto cps = tk::decode_utf8(shape);
  size_t start = 0;
  if (cps.size() >= 3 && cps[0] == U'(' && cps[2] == U')') {
    parts.buffer = cps[1];
    start = 3;
  }
  parts.body.assign(cps.begin() + static_cast<long>(start), cps.end());
  return parts;
}

// First codepoint the suffix will actually contribute, after buffer
// resolution and archiphoneme classing (A/I are vowels, D a consonant).
bool suffix_starts_with_vowel(const ShapeParts& parts, bool stem_ends_vowel) {
  if (parts.buffer != 0) {
    bool buffer_kept = (parts.buffer == U'I') ? !stem_ends_vowel : stem_ends_vowel;
    if (buffer_kept) return parts.buffer == U'I';
  }
  if (parts.body.empty()) return false;
  char32_t first = parts.body.front();
  return first == U'A' || first == U'I' || tk::is_vowel(first);
}

}  // namespace

GeneratedWord surface(std::string_view root_form, const std::vector<SuffixForm>& suffixes,
                      PhonContext ctx, const LexFlags& flags) {
  Builder b;
  for (char32_t cp : tk::decode_utf8(root_form)) b.push(cp, CharOrigin::root, -1);
  if (ctx.last_vowel != 0) b.last_vowel = ctx.last_vowel;
  b.front_override = ctx.front_override;

  bool final_softens = flags.soften && !flags.proper_noun;
  bool first_suffix_pending = true;
  int suffix_index = 0;

  for (const auto& sf : suffixes) {
    if (sf.shape.empty()) { ++suffix_index; continue; }  // zero morphs leave no trace
    ShapeParts parts = split_shape(sf.shape);

    // Pre--Iyor ellipsis: a stem-final vowel drops before the suffix.
    if (sf.tag == Tag::PROG && b.ends_in_vowel()) {
      b.chars.pop_back();
      b.last_vowel = 0;
      for (auto it = b.chars.rbegin(); it != b.chars.rend(); ++it) {
        if (tk::is_vowel(it->cp)) { b.last_vowel = it->cp; break; }
      }
    }

    bool stem_ends_vowel = b.ends_in_vowel();
    bool starts_with_vowel = suffix_starts_with_vowel(parts, stem_ends_vowel);

    // Lexicon-flagged stem-internal vowel drop (oğul -> oğlu).
    if (first_suffix_pending && flags.vowel_drop && starts_with_vowel && !stem_ends_vowel) {
      for (size_t i = b.chars.size(); i-- > 0;) {
        if (tk::is_vowel(b.chars[i].cp)) {
          b.chars.erase(b.chars.begin() + static_cast<long>(i));
          break;
        }
      }
      b.last_vowel = 0;
      for (auto it = b.chars.rbegin(); it != b.chars.rend(); ++it) {
        if (tk::is_vowel(it->cp)) { b.last_vowel = it->cp; break; }
      }
    }

    // Stem-final softening before a vowel-initial suffix.
    if (starts_with_vowel && final_softens && !b.chars.empty()) {
      b.chars.back().cp = soften(b.chars.back().cp);
    }

    if (first_suffix_pending && flags.proper_noun) {
      b.push(U'\'', CharOrigin::apostrophe, suffix_index);
    }
    first_suffix_pending = false;

    if (parts.buffer != 0) {
      if (parts.buffer == U'I') {
        if (!stem_ends_vowel) b.push(b.resolve_i(), CharOrigin::harmonized_i, suffix_index);
      } else if (stem_ends_vowel) {
        CharOrigin origin = parts.buffer == U'y'   ? CharOrigin::buffer_y
                            : parts.buffer == U's' ? CharOrigin::buffer_s
                                                   : CharOrigin::buffer_n;
        b.push(parts.buffer, origin, suffix_index);
      }
    }

    for (char32_t cp : parts.body) {
      if (cp == U'A') {
        b.push(b.resolve_a(), CharOrigin::harmonized_a, suffix_index);
      } else if (cp == U'I') {
        b.push(b.resolve_i(), CharOrigin::harmonized_i, suffix_index);
      } else if (cp == U'D') {
        char32_t resolved = tk::is_voiceless_consonant(b.final_cp()) ? U't' : U'd';
        b.push(resolved, CharOrigin::alternating_d, suffix_index);
      } else {
        b.push(cp, CharOrigin::literal, suffix_index);
      }
    }

    final_softens = sf.soften_final;
    ++suffix_index;
  }

  GeneratedWord word;
  word.chars = std::move(b.chars);
  std::vector<char32_t> cps;
  cps.reserve(word.chars.size());
  for (const auto& ci : word.chars) cps.push_back(ci.cp);
  word.surface = tk::encode_utf8(cps);
  word.root_used = std::string(root_form);
  word.harmony_override = flags.harmony_front.has_value();
  return word;
}

namespace {

const std::vector<Category> kVerbPreference = {Category::verb};
const std::vector<Category> kNominalPreference = {
    Category::noun,   Category::pronoun, Category::proper_noun, Category::adverb,
    Category::adj,    Category::det,     Category::demons,      Category::wh,
};

bool looks_verbal(const std::vector<Tag>& tags) {
  for (Tag t : tags) {
    if (is_voice_tag(t) || is_tense_mood_tag(t) || is_agreement_tag(t) ||
        t == Tag::NEG || t == Tag::ABIL || t == Tag::INF_MA || t == Tag::INF_IS) {
      return true;
    }
  }
  return false;
}

}  // namespace

GeneratedWord generate_with_entry(const LexEntry& entry, const MorphRequest& request) {
  if (const std::string* irregular = entry.irregular_for(request.tags)) {
    GeneratedWord word;
    word.surface = *irregular;
    word.root_used = entry.lemma;
    word.tags = request.tags;
    word.irregular = true;
    for (char32_t cp : turkish::decode_utf8(*irregular)) {
      word.chars.push_back({cp, CharOrigin::root, -1});
    }
    return word;
  }
  auto suffixes = select_morphemes(request, entry.flags);
  GeneratedWord word =
      surface(entry.lemma, suffixes, PhonContext::of(entry.lemma, entry.flags), entry.flags);
  word.tags = request.tags;
  return word;
}

GeneratedWord generate(const Lexicon& lexicon, const MorphRequest& request, Category category) {
  return generate_with_entry(lexicon.lookup(request.root, category), request);
}

GeneratedWord generate(const Lexicon& lexicon, const MorphRequest& request) {
  const auto& preference = looks_verbal(request.tags) ? kVerbPreference : kNominalPreference;
  const LexEntry* entry = lexicon.try_lookup_any(request.root, preference);
  if (!entry && !looks_verbal(request.tags)) {
    entry = lexicon.try_lookup(request.root, Category::verb);
  }
  if (!entry) {
    throw Error("missing-entry", "no lexicon entry for root '" + request.root + "'");
  }
  return generate_with_entry(*entry, request);
}

MorphRequest parse_tag_string(std::string_view text) {
  MorphRequest req;
  size_t plus = text.find('+');
  req.root = std::string(text.substr(0, plus));
  if (req.root.empty()) throw Error("syntax-error", "tag string is missing a root");
  while (plus != std::string_view::npos) {
    size_t start = plus + 1;
    plus = text.find('+', start);
    std::string_view token = text.substr(
        start, plus == std::string_view::npos ? std::string_view::npos : plus - start);
    auto tag = parse_tag(token);
    if (!tag) {
      throw Error("syntax-error", "unknown tag '" + std::string(token) + "' in tag string");
    }
    req.tags.push_back(*tag);
  }
  return req;
}

std::string harmonize_particle(std::string_view prev_word) {
  char32_t v = tk::last_vowel(prev_word);
  bool front = tk::is_front_vowel(v);
  bool round = tk::is_rounded_vowel(v);
  std::string out = "m";
  if (front) {
    out += round ? tk::encode_utf8(char32_t(0x00FC)) : "i";   // mü / mi
  } else {
    out += round ? "u" : tk::encode_utf8(char32_t(0x0131));   // mu / mı
  }
  return out;
}

}  // namespace serbest
