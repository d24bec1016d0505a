// Copyright 2026 the serbest authors
// SPDX-License-Identifier: Apache-2.0

// Textual feature-structure format:
//
//   structure   ::=  '(' pair* ')'
//   pair        ::=  '(' name value ')'
//   value       ::=  atom | '"' text '"' | structure | '[' value* ']'
//
// ';' starts a comment running to end of line. Atoms and feature names
// fold to Turkish lowercase; quoted text is preserved byte for byte.
// The canonical printer emits one pair per line with two-space
// indentation per depth, so parse(print(x)) == x.

#include "serbest/feature_structure.hpp"
#include "serbest/turkish.hpp"
#include "sexpr_lexer.hpp"

namespace serbest {

namespace {

using detail::SexprLexer;
using detail::TokKind;
using detail::Token;

Value parse_value(SexprLexer& lex);

FeatureStructure parse_structure(SexprLexer& lex) {
  Token open = lex.next();
  if (open.kind != TokKind::LParen) lex.fail(open, "expected '('");
  FeatureStructure fs;
  while (true) {
    const Token& t = lex.peek();
    if (t.kind == TokKind::RParen) {
      lex.next();
      return fs;
    }
    if (t.kind != TokKind::LParen) lex.fail(t, "expected '(' starting a pair or ')'");
    Token pair_open = lex.next();
    Token name = lex.next();
    if (name.kind != TokKind::Atom) lex.fail(name, "expected feature name");
    std::string folded = turkish::to_lower(name.text);
    if (fs.find(folded)) {
      throw Error("duplicate-feature", "feature '" + folded + "' repeated at line " +
                                           std::to_string(name.line) + ", column " +
                                           std::to_string(name.col));
    }
    Value v = parse_value(lex);
    Token close = lex.next();
    if (close.kind != TokKind::RParen) lex.fail(close, "expected ')' closing pair");
    fs.set(folded, std::move(v));
    (void)pair_open;
  }
}

Value parse_value(SexprLexer& lex) {
  const Token& t = lex.peek();
  switch (t.kind) {
    case TokKind::Atom: {
      Token a = lex.next();
      return Value(Atom{turkish::to_lower(a.text)});
    }
    case TokKind::String: {
      Token s = lex.next();
      return Value(Text{s.text});
    }
    case TokKind::LParen:
      return Value(parse_structure(lex));
    case TokKind::LBracket: {
      lex.next();
      ValueList items;
      while (lex.peek().kind != TokKind::RBracket) {
        if (lex.peek().kind == TokKind::End) lex.fail(lex.peek(), "unterminated list");
        items.push_back(parse_value(lex));
      }
      lex.next();
      return Value(std::move(items));
    }
    default:
      lex.fail(t, "expected a value");
  }
}

std::string quote_text(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

void print_value(const Value& v, int depth, std::string& out);

void print_structure(const FeatureStructure& fs, int depth, std::string& out) {
  if (fs.empty()) {
    out += "()";
    return;
  }
  std::string indent(static_cast<size_t>(depth + 1) * 2, ' ');
  out += "(\n";
  for (const auto& e : fs.entries()) {
    out += indent;
    out += '(';
    out += e.name;
    out += ' ';
    print_value(e.value, depth + 1, out);
    out += ")\n";
  }
  out += std::string(static_cast<size_t>(depth) * 2, ' ');
  out += ')';
}

void print_value(const Value& v, int depth, std::string& out) {
  if (v.is_atom()) {
    out += v.atom().name;
  } else if (v.is_text()) {
    out += quote_text(v.text().text);
  } else if (v.is_fs()) {
    print_structure(v.fs(), depth, out);
  } else {
    out += '[';
    bool first = true;
    for (const auto& item : v.list()) {
      if (!first) out += ' ';
      first = false;
      print_value(item, depth, out);
    }
    out += ']';
  }
}

void print_value_flat(const Value& v, std::string& out);

void print_structure_flat(const FeatureStructure& fs, std::string& out) {
  out += '(';
  bool first = true;
  for (const auto& e : fs.entries()) {
    if (!first) out += ' ';
    first = false;
    out += '(';
    out += e.name;
    out += ' ';
    print_value_flat(e.value, out);
    out += ')';
  }
  out += ')';
}

void print_value_flat(const Value& v, std::string& out) {
  if (v.is_atom()) {
    out += v.atom().name;
  } else if (v.is_text()) {
    out += quote_text(v.text().text);
  } else if (v.is_fs()) {
    print_structure_flat(v.fs(), out);
  } else {
    out += '[';
    bool first = true;
    for (const auto& item : v.list()) {
      if (!first) out += ' ';
      first = false;
      print_value_flat(item, out);
    }
    out += ']';
  }
}

}  // namespace

FeatureStructure parse_fs(std::string_view text) {
  SexprLexer lex(text);
  FeatureStructure fs = parse_structure(lex);
  const Token& rest = lex.peek();
  if (rest.kind != TokKind::End) lex.fail(rest, "trailing content after structure");
  return fs;
}

std::vector<FeatureStructure> parse_fs_stream(std::string_view text) {
  SexprLexer lex(text);
  std::vector<FeatureStructure> out;
  while (lex.peek().kind != TokKind::End) {
    out.push_back(parse_structure(lex));
  }
  return out;
}

std::string print_fs(const FeatureStructure& fs) {
  std::string out;
  print_structure(fs, 0, out);
  out += '\n';
  return out;
}

std::string print_fs_compact(const FeatureStructure& fs) {
  std::string out;
  print_structure_flat(fs, out);
  return out;
}

std::string print_value_compact(const Value& v) {
  std::string out;
  print_value_flat(v, out);
  return out;
}

}  // namespace serbest
