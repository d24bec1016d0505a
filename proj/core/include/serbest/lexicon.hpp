// Copyright 2026 the serbest authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SERBEST_LEXICON_HPP
#define SERBEST_LEXICON_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "serbest/tags.hpp"

// Lexical knowledge base: roots with phonological flags, determiner
// position classes, wh pro-forms, conjunctions and linking connectives,
// and verb subcategorization notes. Entry file format (one entry per
// parenthesized form, ';' comments):
//
//   (entry "kitap" (cat noun) (flags (soften +)))
//   (entry "ben" (cat pronoun) (agr 1sg) (irregular ((GEN) "benim")))
//   (entry "nereye" (cat wh) (wh-role goal))
//   (entry "so" (cat conj) (pattern "{1}, bu yüzden {2}"))
//   (entry "bitir" (cat verb) (subcat (required-roles dir-obj)))

namespace serbest {

enum class Category {
  noun, proper_noun, pronoun, verb, adj, det, demons, conj, wh, adverb,
};

std::string_view category_name(Category c);
std::optional<Category> parse_category(std::string_view token);

/// Phonological and positional behavior of one root.
struct LexFlags {
  bool soften = false;                       // p/ç/t/k voice before vowels
  std::optional<bool> harmony_front;         // lexical harmony override
  std::optional<std::string> nominalizer;    // "ma" or "is" preference
  std::string det_position_class;            // determiner slot class; "" = default
  bool vowel_drop = false;                   // stem-internal drop (oğul -> oğl-)
  bool n_junction = false;                   // demonstrative case buffer (bu -> bunu)
  bool proper_noun = false;                  // apostrophe before suffixes
};

struct Subcat {
  std::set<std::string> required_roles;
  std::optional<std::string> obligatory_object_lexeme;
};

struct LexEntry {
  std::string lemma;  // surface spelling, case preserved
  Category category = Category::noun;
  LexFlags flags;
  std::vector<std::pair<std::vector<Tag>, std::string>> irregular;
  Subcat subcat;
  std::optional<std::string> wh_role;             // wh entries
  std::optional<std::string> connective_pattern;  // "{1} ... {2}" templates
  std::optional<std::string> connective_word;     // surface word for conj joining
  std::optional<std::pair<int, bool>> agr;        // pronoun person/plural

  /// Irregular surface for an exact tag sequence, if registered.
  const std::string* irregular_for(const std::vector<Tag>& tags) const;
};

class Lexicon {
 public:
  /// Parses an entry file. Throws syntax-error or duplicate-entry.
  static Lexicon load(std::string_view text);
  static Lexicon load_file(const std::string& path);

  /// Exact-match retrieval; throws missing-entry.
  const LexEntry& lookup(std::string_view lemma, Category category) const;

  /// nullptr instead of throwing.
  const LexEntry* try_lookup(std::string_view lemma, Category category) const;

  /// First match over a category preference order; throws missing-entry.
  const LexEntry& lookup_any(std::string_view lemma,
                             const std::vector<Category>& preference) const;
  const LexEntry* try_lookup_any(std::string_view lemma,
                                 const std::vector<Category>& preference) const;

  /// Wh pro-form serving a grammatical role (goal -> nereye).
  const LexEntry& lookup_wh_by_role(std::string_view role) const;

  size_t size() const { return entries_.size(); }

 private:
  // Keyed by (Turkish-folded lemma, category).
  std::map<std::pair<std::string, Category>, LexEntry> entries_;
  std::map<std::string, std::string> wh_by_role_;  // role -> folded lemma
};

}  // namespace serbest

#endif  // SERBEST_LEXICON_HPP
