// Copyright 2026 the serbest authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SERBEST_FEATURE_STRUCTURE_HPP
#define SERBEST_FEATURE_STRUCTURE_HPP

#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "serbest/error.hpp"

// Recursive attribute-value structures with the operation set every
// grammar rule runs on: path lookup, assignment, removal, equality
// constraints, and a non-reentrant (pseudo) unification. All values are
// value-semantic copies; operations return modified structures, so rule
// execution is order-independent within a rule and thread-safe.

namespace serbest {

class Value;

/// Bare token value. Canonical form is Turkish-lowercase; the parser
/// folds on input, so two atoms are equal iff their names are equal.
struct Atom {
  std::string name;
  bool operator==(const Atom&) const = default;
};

/// Quoted string value; preserves case and UTF-8 exactly.
struct Text {
  std::string text;
  bool operator==(const Text&) const = default;
};

/// Ordered map from feature name to Value. Feature names are unique;
/// insertion order is preserved and significant for printing.
class FeatureStructure {
 public:
  struct Entry;

  FeatureStructure();
  ~FeatureStructure();
  FeatureStructure(const FeatureStructure&);
  FeatureStructure(FeatureStructure&&) noexcept;
  FeatureStructure& operator=(const FeatureStructure&);
  FeatureStructure& operator=(FeatureStructure&&) noexcept;

  bool empty() const;
  size_t size() const;
  const std::vector<Entry>& entries() const;

  /// Direct child lookup; nullptr when absent.
  const Value* find(std::string_view name) const;
  Value* find(std::string_view name);

  /// Sets (or replaces) a direct child.
  void set(std::string_view name, Value v);

  /// Removes a direct child; no-op when absent.
  void erase(std::string_view name);

  bool operator==(const FeatureStructure&) const;

 private:
  std::vector<Entry> entries_;
};

using ValueList = std::vector<Value>;

/// One of: Atom, Text, nested FeatureStructure, or ordered ValueList.
class Value {
 public:
  using Variant = std::variant<Atom, Text, FeatureStructure, ValueList>;

  Value() : v_(FeatureStructure{}) {}
  Value(Atom a) : v_(std::move(a)) {}
  Value(Text t) : v_(std::move(t)) {}
  Value(FeatureStructure fs) : v_(std::move(fs)) {}
  Value(ValueList l) : v_(std::move(l)) {}

  bool is_atom() const { return std::holds_alternative<Atom>(v_); }
  bool is_text() const { return std::holds_alternative<Text>(v_); }
  bool is_fs() const { return std::holds_alternative<FeatureStructure>(v_); }
  bool is_list() const { return std::holds_alternative<ValueList>(v_); }

  const Atom& atom() const { return std::get<Atom>(v_); }
  const Text& text() const { return std::get<Text>(v_); }
  const FeatureStructure& fs() const { return std::get<FeatureStructure>(v_); }
  FeatureStructure& fs() { return std::get<FeatureStructure>(v_); }
  const ValueList& list() const { return std::get<ValueList>(v_); }

  /// Atom name if this is an atom, else nullopt.
  std::optional<std::string> atom_name() const {
    if (is_atom()) return atom().name;
    return std::nullopt;
  }

  bool operator==(const Value&) const = default;

 private:
  Variant v_;
};

struct FeatureStructure::Entry {
  std::string name;
  Value value;
  bool operator==(const Entry&) const = default;
};

/// Nonempty chain of feature names, e.g. control.topic.
struct Path {
  std::vector<std::string> segments;

  Path() = default;
  Path(std::initializer_list<std::string> segs) : segments(segs) {}
  explicit Path(std::vector<std::string> segs) : segments(std::move(segs)) {}

  /// Parses a dotted path ("control.topic"). Throws on an empty path.
  static Path parse(std::string_view dotted);

  bool empty() const { return segments.empty(); }
  std::string dotted() const;
  bool operator==(const Path&) const = default;
};

/// Atom spelling that matches any absent path in =c constraints.
inline constexpr std::string_view kUndefined = "*undefined*";
/// Atom spelling that deletes the target path when assigned.
inline constexpr std::string_view kRemove = "*remove*";

/// Value reached by following the path; nullptr when any segment is
/// missing or the walk runs into a non-structure. Absence is a value,
/// not an error.
const Value* get(const FeatureStructure& fs, const Path& path);

/// Copy of fs with v stored at path; intermediate structures are created
/// as needed. Throws path-through-atom when a non-final segment lands on
/// an atom, text, or list.
FeatureStructure put(FeatureStructure fs, const Path& path, Value v);

/// Copy of fs with the entry at path deleted; deleting an absent path is
/// a no-op.
FeatureStructure remove_at(FeatureStructure fs, const Path& path);

/// Equality constraint: true iff the expected atom is *undefined* and the
/// path is absent, or the path holds an atom equal to expected. A present
/// non-atom value never satisfies the constraint.
bool constrain_eq(const FeatureStructure& fs, const Path& path, const Atom& expected);

/// Recursive merge. Equal atoms merge; distinct atoms, or a structure
/// meeting an atom, clash. Throws Error("clash") naming the first
/// conflicting path.
FeatureStructure unify(const FeatureStructure& a, const FeatureStructure& b);

/// Structural equality ignoring feature order (unify is commutative only
/// up to ordering).
bool equivalent(const FeatureStructure& a, const FeatureStructure& b);

/// Parses the textual format; see format notes in fs_io.cpp. Throws
/// Error("syntax-error") with line/column, or Error("duplicate-feature").
FeatureStructure parse_fs(std::string_view text);

/// Parses a sequence of top-level structures from one document.
std::vector<FeatureStructure> parse_fs_stream(std::string_view text);

/// Canonical printer: one pair per line, two-space indent per depth.
/// parse_fs(print_fs(x)) == x for every x.
std::string print_fs(const FeatureStructure& fs);

/// Single-line rendering for diagnostics and traces.
std::string print_fs_compact(const FeatureStructure& fs);
std::string print_value_compact(const Value& v);

}  // namespace serbest

#endif  // SERBEST_FEATURE_STRUCTURE_HPP
