// Copyright 2026 the serbest authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SERBEST_MORPH_HPP
#define SERBEST_MORPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "serbest/lexicon.hpp"
#include "serbest/tags.hpp"

// Agglutinative word-form generation in three steps: morphotactic
// validation of the abstract tag sequence, concrete (archiphonemic)
// morpheme selection, and morphographemic surfacing — vowel harmony,
// consonant voicing, stem-final softening, buffer consonants/vowels, and
// the pre--Iyor stem vowel drop.
//
// Suffix shapes use the archiphonemes A (a/e), I (ı/i/u/ü) and D (d/t),
// plus an optional leading buffer: parenthesized consonants (y, s, n)
// surface only after vowels, the parenthesized vowel (I) only after
// consonants.

namespace serbest {

/// One abstract morpheme bundle for a single word.
struct MorphRequest {
  std::string root;        // lexeme reference
  std::vector<Tag> tags;   // ordered per the morphotactic templates
};

/// Selected concrete suffix, still archiphonemic.
struct SuffixForm {
  Tag tag;
  std::string shape;          // e.g. "(y)I", "DAn", "lAr"; "" = zero morph
  bool soften_final = false;  // suffix-final k voices before vowels (FUT)
};

/// Phonological state at a morpheme boundary.
struct PhonContext {
  enum class FinalClass : std::uint8_t { vowel, voiced, voiceless };
  char32_t last_vowel = 0;  // 0 when the stem has no vowel
  FinalClass final_class = FinalClass::voiced;
  std::optional<bool> front_override;  // lexical harmony override

  static PhonContext of(std::string_view word, const LexFlags& flags = {});
};

/// Provenance of each surface codepoint, for the morphographemic
/// validators: which vowels were harmonized, where buffers landed, which
/// consonants alternate.
enum class CharOrigin : std::uint8_t {
  root,          // root material (possibly softened in place)
  literal,       // fixed suffix letter
  harmonized_a,  // resolved from archiphoneme A
  harmonized_i,  // resolved from archiphoneme I (includes the (I) buffer)
  buffer_y,
  buffer_s,
  buffer_n,
  alternating_d, // resolved from archiphoneme D
  apostrophe,
};

struct CharInfo {
  char32_t cp = 0;
  CharOrigin origin = CharOrigin::root;
  int suffix = -1;  // index into the suffix sequence; -1 = root
};

struct GeneratedWord {
  std::string surface;
  std::vector<CharInfo> chars;
  std::string root_used;
  std::vector<Tag> tags;
  bool harmony_override = false;
  bool irregular = false;  // surfaced from the lexicon irregular map

  std::string to_string() const { return surface; }
};

/// Validates tag order against the three morphotactic templates
/// (nominal, finite verbal, nominalization) and picks archiphonemic
/// shapes. Throws tag-order-violation when a reordering of the tags
/// would be well-formed, unsupported-combination otherwise.
std::vector<SuffixForm> select_morphemes(const MorphRequest& request,
                                         const LexFlags& flags = {});

/// Applies the morphographemic cascade. Total on valid input.
GeneratedWord surface(std::string_view root_form, const std::vector<SuffixForm>& suffixes,
                      PhonContext ctx, const LexFlags& flags);

/// Full pipeline: lexicon lookup (irregular forms shadow the cascade),
/// selection, surfacing. The entry is found by searching verb-like or
/// noun-like categories according to the tag set; pass a category to
/// disambiguate.
GeneratedWord generate(const Lexicon& lexicon, const MorphRequest& request);
GeneratedWord generate(const Lexicon& lexicon, const MorphRequest& request, Category category);
GeneratedWord generate_with_entry(const LexEntry& entry, const MorphRequest& request);

/// Parses "kitap+P1SG+NOM" (tags case-insensitive) into a request.
MorphRequest parse_tag_string(std::string_view text);

/// Yes/no question particle: mı/mi/mu/mü by 4-way harmony with the last
/// vowel of the preceding word. Emitted as a separate token.
std::string harmonize_particle(std::string_view prev_word);

}  // namespace serbest

#endif  // SERBEST_MORPH_HPP
