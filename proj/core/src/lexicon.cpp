// Copyright 2026 the serbest authors
// SPDX-License-Identifier: Apache-2.0

#include "serbest/lexicon.hpp"

#include <fstream>
#include <sstream>

#include "serbest/error.hpp"
#include "serbest/turkish.hpp"
#include "sexpr_lexer.hpp"

namespace serbest {

namespace {

using detail::SexprLexer;
using detail::TokKind;
using detail::Token;

struct CategoryName {
  Category cat;
  std::string_view name;
};

constexpr CategoryName kCategoryNames[] = {
    {Category::noun, "noun"},
    {Category::proper_noun, "proper-noun"},
    {Category::pronoun, "pronoun"},
    {Category::verb, "verb"},
    {Category::adj, "adj"},
    {Category::det, "det"},
    {Category::demons, "demons"},
    {Category::conj, "conj"},
    {Category::wh, "wh"},
    {Category::adverb, "adverb"},
};

bool parse_sign(const std::string& text, SexprLexer& lex, const Token& at) {
  if (text == "+") return true;
  if (text == "-") return false;
  lex.fail(at, "expected + or -");
}

// (agr 1sg) or (agr (person 1) (number sg))
std::pair<int, bool> parse_agr(SexprLexer& lex) {
  const Token& t = lex.peek();
  if (t.kind == TokKind::Atom) {
    Token a = lex.next();
    std::string v = turkish::to_lower(a.text);
    if (v.size() == 3 && v[0] >= '1' && v[0] <= '3') {
      bool plural = v.substr(1) == "pl";
      if (plural || v.substr(1) == "sg") return {v[0] - '0', plural};
    }
    lex.fail(a, "expected agreement like 1sg or 3pl");
  }
  int person = 3;
  bool plural = false;
  while (lex.peek().kind == TokKind::LParen) {
    lex.next();
    Token name = lex.next();
    Token val = lex.next();
    if (name.kind != TokKind::Atom || val.kind != TokKind::Atom) {
      lex.fail(name, "expected (person N) or (number sg|pl)");
    }
    std::string n = turkish::to_lower(name.text);
    std::string v = turkish::to_lower(val.text);
    if (n == "person") {
      person = v == "1" ? 1 : v == "2" ? 2 : 3;
    } else if (n == "number") {
      plural = (v == "pl");
    } else {
      lex.fail(name, "unknown agr field");
    }
    Token close = lex.next();
    if (close.kind != TokKind::RParen) lex.fail(close, "expected ')'");
  }
  return {person, plural};
}

void parse_flags(SexprLexer& lex, LexFlags& flags) {
  while (lex.peek().kind == TokKind::LParen) {
    lex.next();
    Token name = lex.next();
    if (name.kind != TokKind::Atom) lex.fail(name, "expected flag name");
    Token val = lex.next();
    if (val.kind != TokKind::Atom) lex.fail(val, "expected flag value");
    std::string n = turkish::to_lower(name.text);
    std::string v = turkish::to_lower(val.text);
    if (n == "soften") {
      flags.soften = parse_sign(v, lex, val);
    } else if (n == "harmony-override") {
      if (v == "front") flags.harmony_front = true;
      else if (v == "back") flags.harmony_front = false;
      else lex.fail(val, "harmony-override must be front or back");
    } else if (n == "nominalizer") {
      if (v != "ma" && v != "is") lex.fail(val, "nominalizer must be ma or is");
      flags.nominalizer = v;
    } else if (n == "det-position-class") {
      flags.det_position_class = v;
    } else if (n == "vowel-drop") {
      flags.vowel_drop = parse_sign(v, lex, val);
    } else if (n == "n-junction") {
      flags.n_junction = parse_sign(v, lex, val);
    } else {
      lex.fail(name, "unknown flag '" + n + "'");
    }
    Token close = lex.next();
    if (close.kind != TokKind::RParen) lex.fail(close, "expected ')' closing flag");
  }
}

// (irregular ((GEN) "benim") ((DAT) "bana"))
void parse_irregular(SexprLexer& lex, LexEntry& entry) {
  while (lex.peek().kind == TokKind::LParen) {
    lex.next();
    Token tags_open = lex.next();
    if (tags_open.kind != TokKind::LParen) lex.fail(tags_open, "expected '(' tag list");
    std::vector<Tag> tags;
    while (lex.peek().kind == TokKind::Atom) {
      Token t = lex.next();
      auto tag = parse_tag(t.text);
      if (!tag) lex.fail(t, "unknown tag '" + t.text + "'");
      tags.push_back(*tag);
    }
    Token tags_close = lex.next();
    if (tags_close.kind != TokKind::RParen) lex.fail(tags_close, "expected ')' after tags");
    Token surf = lex.next();
    if (surf.kind != TokKind::String) lex.fail(surf, "expected quoted surface form");
    Token close = lex.next();
    if (close.kind != TokKind::RParen) lex.fail(close, "expected ')' closing irregular form");
    entry.irregular.emplace_back(std::move(tags), surf.text);
  }
}

// (subcat (required-roles dir-obj goal) (object-lexeme can))
void parse_subcat(SexprLexer& lex, LexEntry& entry) {
  while (lex.peek().kind == TokKind::LParen) {
    lex.next();
    Token name = lex.next();
    if (name.kind != TokKind::Atom) lex.fail(name, "expected subcat field");
    std::string n = turkish::to_lower(name.text);
    if (n == "required-roles") {
      while (lex.peek().kind == TokKind::Atom) {
        entry.subcat.required_roles.insert(turkish::to_lower(lex.next().text));
      }
    } else if (n == "object-lexeme") {
      Token v = lex.next();
      if (v.kind != TokKind::Atom && v.kind != TokKind::String) {
        lex.fail(v, "expected lexeme");
      }
      entry.subcat.obligatory_object_lexeme = turkish::to_lower(v.text);
    } else {
      lex.fail(name, "unknown subcat field");
    }
    Token close = lex.next();
    if (close.kind != TokKind::RParen) lex.fail(close, "expected ')'");
  }
}

LexEntry parse_entry(SexprLexer& lex, const Token& open) {
  Token kw = lex.next();
  if (kw.kind != TokKind::Atom || turkish::to_lower(kw.text) != "entry") {
    lex.fail(kw, "expected 'entry'");
  }
  Token lemma = lex.next();
  if (lemma.kind != TokKind::String && lemma.kind != TokKind::Atom) {
    lex.fail(lemma, "expected lemma");
  }
  LexEntry entry;
  entry.lemma = lemma.text;

  bool saw_cat = false;
  while (lex.peek().kind == TokKind::LParen) {
    lex.next();
    Token field = lex.next();
    if (field.kind != TokKind::Atom) lex.fail(field, "expected entry field");
    std::string n = turkish::to_lower(field.text);
    if (n == "cat") {
      Token v = lex.next();
      if (v.kind != TokKind::Atom) lex.fail(v, "expected category");
      auto cat = parse_category(turkish::to_lower(v.text));
      if (!cat) lex.fail(v, "unknown category '" + v.text + "'");
      entry.category = *cat;
      saw_cat = true;
    } else if (n == "flags") {
      parse_flags(lex, entry.flags);
    } else if (n == "irregular") {
      parse_irregular(lex, entry);
    } else if (n == "subcat") {
      parse_subcat(lex, entry);
    } else if (n == "wh-role") {
      Token v = lex.next();
      if (v.kind != TokKind::Atom) lex.fail(v, "expected role name");
      entry.wh_role = turkish::to_lower(v.text);
    } else if (n == "pattern") {
      Token v = lex.next();
      if (v.kind != TokKind::String) lex.fail(v, "expected quoted pattern");
      entry.connective_pattern = v.text;
    } else if (n == "word") {
      Token v = lex.next();
      if (v.kind != TokKind::String && v.kind != TokKind::Atom) lex.fail(v, "expected word");
      entry.connective_word = v.text;
    } else if (n == "agr") {
      entry.agr = parse_agr(lex);
    } else {
      lex.fail(field, "unknown entry field '" + n + "'");
    }
    Token close = lex.next();
    if (close.kind != TokKind::RParen) lex.fail(close, "expected ')' closing field");
  }
  Token close = lex.next();
  if (close.kind != TokKind::RParen) lex.fail(close, "expected ')' closing entry");

  if (!saw_cat) lex.fail(open, "entry '" + entry.lemma + "' is missing (cat ...)");
  if (entry.category == Category::wh && !entry.wh_role) {
    lex.fail(open, "wh entry '" + entry.lemma + "' is missing (wh-role ...)");
  }
  entry.flags.proper_noun = (entry.category == Category::proper_noun);
  return entry;
}

}  // namespace

std::string_view category_name(Category c) {
  for (const auto& cn : kCategoryNames) {
    if (cn.cat == c) return cn.name;
  }
  return "?";
}

std::optional<Category> parse_category(std::string_view token) {
  for (const auto& cn : kCategoryNames) {
    if (cn.name == token) return cn.cat;
  }
  return std::nullopt;
}

const std::string* LexEntry::irregular_for(const std::vector<Tag>& tags) const {
  for (const auto& [seq, surface] : irregular) {
    if (seq == tags) return &surface;
  }
  return nullptr;
}

Lexicon Lexicon::load(std::string_view text) {
  SexprLexer lex(text);
  Lexicon out;
  while (lex.peek().kind != TokKind::End) {
    Token open = lex.next();
    if (open.kind != TokKind::LParen) lex.fail(open, "expected '(' starting an entry");
    LexEntry entry = parse_entry(lex, open);
    std::string folded = turkish::to_lower(entry.lemma);
    auto key = std::make_pair(folded, entry.category);
    if (out.entries_.count(key)) {
      throw Error("duplicate-entry",
                  "entry (" + entry.lemma + ", " + std::string(category_name(entry.category)) +
                      ") defined twice (line " + std::to_string(open.line) + ")");
    }
    if (entry.wh_role) out.wh_by_role_[*entry.wh_role] = folded;
    out.entries_.emplace(std::move(key), std::move(entry));
  }
  return out;
}

Lexicon Lexicon::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("io-error", "cannot open lexicon file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return load(ss.str());
}

const LexEntry* Lexicon::try_lookup(std::string_view lemma, Category category) const {
  auto it = entries_.find(std::make_pair(turkish::to_lower(lemma), category));
  return it == entries_.end() ? nullptr : &it->second;
}

const LexEntry& Lexicon::lookup(std::string_view lemma, Category category) const {
  if (const LexEntry* e = try_lookup(lemma, category)) return *e;
  throw Error("missing-entry", "no lexicon entry for (" + std::string(lemma) + ", " +
                                   std::string(category_name(category)) + ")");
}

const LexEntry* Lexicon::try_lookup_any(std::string_view lemma,
                                        const std::vector<Category>& preference) const {
  for (Category c : preference) {
    if (const LexEntry* e = try_lookup(lemma, c)) return e;
  }
  return nullptr;
}

const LexEntry& Lexicon::lookup_any(std::string_view lemma,
                                    const std::vector<Category>& preference) const {
  if (const LexEntry* e = try_lookup_any(lemma, preference)) return *e;
  throw Error("missing-entry",
              "no lexicon entry for '" + std::string(lemma) + "' in any tried category");
}

const LexEntry& Lexicon::lookup_wh_by_role(std::string_view role) const {
  auto it = wh_by_role_.find(std::string(role));
  if (it == wh_by_role_.end()) {
    throw Error("missing-entry", "no wh pro-form registered for role '" + std::string(role) + "'");
  }
  return lookup(it->second, Category::wh);
}

}  // namespace serbest
