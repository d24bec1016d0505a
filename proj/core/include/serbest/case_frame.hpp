// Copyright 2026 the serbest authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SERBEST_CASE_FRAME_HPP
#define SERBEST_CASE_FRAME_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "serbest/feature_structure.hpp"

// Typed schema over raw feature structures for sentences and complex
// sentences. validate() canonicalizes aliases (args/arguments,
// adjn/adjuncts, sense/polarity, background/backgr), expands atom
// constituents to noun-phrase structures, orders roles canonically, and
// reports every violation with its feature path.

namespace serbest {

/// Grammatical roles a constituent can fill, in default linear order.
/// The verb is not a role; it closes the preverbal field.
enum class Role {
  subject, time, place, dir_obj, beneficiary, source, goal, location,
  instrument, value, path, duration, manner,
};

inline constexpr std::array<Role, 13> kDefaultOrder = {
    Role::subject, Role::time, Role::place, Role::dir_obj, Role::beneficiary,
    Role::source,  Role::goal, Role::location, Role::instrument, Role::value,
    Role::path,    Role::duration, Role::manner,
};

std::string_view role_name(Role r);
std::optional<Role> parse_role(std::string_view token);

/// True for roles housed under `arguments` (vs `adjuncts`).
bool is_argument_role(Role r);

struct VerbSpec {
  std::string root;
  std::string polarity = "positive";
  std::string tense = "present";
  std::optional<std::string> aspect;
  std::optional<std::string> modality;
  std::optional<std::string> nominalizer;  // frame-level -mA/-Iş override
};

struct QuesSpec {
  std::string type;  // yes-no | wh
  std::vector<Role> constituents;
};

namespace detail {
struct CaseFrameAccess;  // internal canonical-structure constructor hook
}

/// Validated, canonicalized view of one clause. All accessors read the
/// canonical structure, which remains the single source of truth.
class CaseFrame {
 public:
  /// Validates and canonicalizes a raw structure. Throws SchemaError
  /// listing every violation.
  static CaseFrame from_fs(const FeatureStructure& raw);

  const FeatureStructure& fs() const { return fs_; }

  std::string s_form() const;       // finite | infinitive | adverbial | participle
  std::string clause_type() const;  // predicative | attributive | existential
  std::string voice() const;
  std::string speech_act() const;
  std::optional<QuesSpec> ques() const;
  VerbSpec verb() const;

  std::optional<Role> topic() const;
  std::optional<Role> focus() const;
  std::optional<Role> backgr() const;

  /// Present constituents in the fixed default sequence (verb excluded).
  std::vector<std::pair<Role, const Value*>> constituents() const;
  std::vector<Role> present_roles() const;
  const Value* constituent(Role r) const;

  /// A constituent with a verb feature is an embedded clause.
  static bool is_sentential(const Value& constituent);

  /// True iff the direct object is a noun phrase marked definite -.
  bool is_indefinite_dirobj() const;

 private:
  friend struct detail::CaseFrameAccess;
  explicit CaseFrame(FeatureStructure fs) : fs_(std::move(fs)) {}
  FeatureStructure fs_;
};

/// Simple sentence, conjunction of sentences, or two sentences linked by
/// a named relation.
struct ComplexSentence {
  enum class Type { simple, conj, linked };
  Type type = Type::simple;
  std::optional<CaseFrame> arg;           // simple
  std::string conj;                        // conj: connective lexeme
  std::vector<ComplexSentence> elements;   // conj: two or more
  std::string link_relation;               // linked
  std::vector<ComplexSentence> linked_args;  // linked: exactly arg1, arg2
};

/// Typed view construction. A structure with a `type` feature is read as
/// a complex sentence; anything else is taken as a bare case-frame and
/// wrapped as Type::simple. Throws SchemaError with the full violation
/// list.
ComplexSentence validate(const FeatureStructure& raw);

/// Validates and canonicalizes a standalone noun-phrase structure.
FeatureStructure validate_noun_phrase(const FeatureStructure& raw);

}  // namespace serbest

#endif  // SERBEST_CASE_FRAME_HPP
