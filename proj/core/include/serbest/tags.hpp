// Copyright 2026 the serbest authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SERBEST_TAGS_HPP
#define SERBEST_TAGS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace serbest {

/// Abstract morpheme inventory. Nominal suffixes: plural, possessive
/// agreement, case. Verbal suffixes: voice, ability, negation,
/// tense/mood, subject agreement. INF-MA / INF-IS nominalize a verb stem.
enum class Tag {
  PL,
  P1SG, P2SG, P3SG, P1PL, P2PL, P3PL,
  NOM, ACC, DAT, LOC, ABL, GEN, INS,
  NEG,
  PAST, PROG, FUT, NEC, OPT, COND, IMP,
  ABIL,
  PASS, CAUS, REFL, RECIP,
  INF_MA, INF_IS,
  A1SG, A2SG, A3SG, A1PL, A2PL, A3PL,
};

/// Canonical spelling, e.g. "P3SG", "INF-MA".
std::string_view tag_name(Tag tag);

/// Case-insensitive parse of a tag token; nullopt for unknown spellings.
std::optional<Tag> parse_tag(std::string_view token);

std::string tags_to_string(const std::vector<Tag>& tags);

/// Possessive tag for a person/number pair (person 1..3, plural flag).
Tag possessive_tag(int person, bool plural);

/// Subject-agreement tag for a person/number pair.
Tag agreement_tag(int person, bool plural);

bool is_case_tag(Tag tag);
bool is_possessive_tag(Tag tag);
bool is_agreement_tag(Tag tag);
bool is_voice_tag(Tag tag);
bool is_tense_mood_tag(Tag tag);

}  // namespace serbest

#endif  // SERBEST_TAGS_HPP
