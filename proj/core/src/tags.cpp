// Copyright 2026 the serbest authors
// SPDX-License-Identifier: Apache-2.0

#include "serbest/tags.hpp"

#include <array>

#include "serbest/error.hpp"
#include "serbest/turkish.hpp"

namespace serbest {

namespace {

struct TagName {
  Tag tag;
  std::string_view name;
};

constexpr std::array<TagName, 35> kTagNames{{
    {Tag::PL, "PL"},
    {Tag::P1SG, "P1SG"}, {Tag::P2SG, "P2SG"}, {Tag::P3SG, "P3SG"},
    {Tag::P1PL, "P1PL"}, {Tag::P2PL, "P2PL"}, {Tag::P3PL, "P3PL"},
    {Tag::NOM, "NOM"}, {Tag::ACC, "ACC"}, {Tag::DAT, "DAT"},
    {Tag::LOC, "LOC"}, {Tag::ABL, "ABL"}, {Tag::GEN, "GEN"}, {Tag::INS, "INS"},
    {Tag::NEG, "NEG"},
    {Tag::PAST, "PAST"}, {Tag::PROG, "PROG"}, {Tag::FUT, "FUT"},
    {Tag::NEC, "NEC"}, {Tag::OPT, "OPT"}, {Tag::COND, "COND"}, {Tag::IMP, "IMP"},
    {Tag::ABIL, "ABIL"},
    {Tag::PASS, "PASS"}, {Tag::CAUS, "CAUS"}, {Tag::REFL, "REFL"}, {Tag::RECIP, "RECIP"},
    {Tag::INF_MA, "INF-MA"}, {Tag::INF_IS, "INF-IS"},
    {Tag::A1SG, "A1SG"}, {Tag::A2SG, "A2SG"}, {Tag::A3SG, "A3SG"},
    {Tag::A1PL, "A1PL"}, {Tag::A2PL, "A2PL"}, {Tag::A3PL, "A3PL"},
}};

}  // namespace

std::string_view tag_name(Tag tag) {
  for (const auto& tn : kTagNames) {
    if (tn.tag == tag) return tn.name;
  }
  return "?";
}

std::optional<Tag> parse_tag(std::string_view token) {
  std::string upper;
  upper.reserve(token.size());
  for (char c : token) {
    upper += (c >= 'a' && c <= 'z') ? static_cast<char>(c - 32) : c;
  }
  for (const auto& tn : kTagNames) {
    if (tn.name == upper) return tn.tag;
  }
  return std::nullopt;
}

std::string tags_to_string(const std::vector<Tag>& tags) {
  std::string out;
  for (Tag t : tags) {
    if (!out.empty()) out += '+';
    out += tag_name(t);
  }
  return out;
}

Tag possessive_tag(int person, bool plural) {
  switch (person) {
    case 1: return plural ? Tag::P1PL : Tag::P1SG;
    case 2: return plural ? Tag::P2PL : Tag::P2SG;
    case 3: return plural ? Tag::P3PL : Tag::P3SG;
    default: throw Error("bad-enum-value", "person must be 1, 2 or 3");
  }
}

Tag agreement_tag(int person, bool plural) {
  switch (person) {
    case 1: return plural ? Tag::A1PL : Tag::A1SG;
    case 2: return plural ? Tag::A2PL : Tag::A2SG;
    case 3: return plural ? Tag::A3PL : Tag::A3SG;
    default: throw Error("bad-enum-value", "person must be 1, 2 or 3");
  }
}

bool is_case_tag(Tag tag) {
  switch (tag) {
    case Tag::NOM: case Tag::ACC: case Tag::DAT: case Tag::LOC:
    case Tag::ABL: case Tag::GEN: case Tag::INS:
      return true;
    default:
      return false;
  }
}

bool is_possessive_tag(Tag tag) {
  switch (tag) {
    case Tag::P1SG: case Tag::P2SG: case Tag::P3SG:
    case Tag::P1PL: case Tag::P2PL: case Tag::P3PL:
      return true;
    default:
      return false;
  }
}

bool is_agreement_tag(Tag tag) {
  switch (tag) {
    case Tag::A1SG: case Tag::A2SG: case Tag::A3SG:
    case Tag::A1PL: case Tag::A2PL: case Tag::A3PL:
      return true;
    default:
      return false;
  }
}

bool is_voice_tag(Tag tag) {
  switch (tag) {
    case Tag::PASS: case Tag::CAUS: case Tag::REFL: case Tag::RECIP:
      return true;
    default:
      return false;
  }
}

bool is_tense_mood_tag(Tag tag) {
  switch (tag) {
    case Tag::PAST: case Tag::PROG: case Tag::FUT: case Tag::NEC:
    case Tag::OPT: case Tag::COND: case Tag::IMP:
      return true;
    default:
      return false;
  }
}

}  // namespace serbest
