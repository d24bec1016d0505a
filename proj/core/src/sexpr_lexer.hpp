// Copyright 2026 the serbest authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SERBEST_SRC_SEXPR_LEXER_HPP
#define SERBEST_SRC_SEXPR_LEXER_HPP

#include <string>
#include <string_view>

#include "serbest/error.hpp"

// Shared tokenizer for the parenthesized file formats (feature
// structures, rule files, lexicon entries). Tokens are parens, brackets,
// quoted strings, and bare atoms; ';' comments run to end of line.

namespace serbest::detail {

enum class TokKind { LParen, RParen, LBracket, RBracket, String, Atom, End };

struct Token {
  TokKind kind = TokKind::End;
  std::string text;  // atom spelling or unescaped string contents
  int line = 1;
  int col = 1;
};

class SexprLexer {
 public:
  explicit SexprLexer(std::string_view input) : in_(input) {}

  const Token& peek() {
    if (!has_peek_) {
      peeked_ = lex();
      has_peek_ = true;
    }
    return peeked_;
  }

  Token next() {
    if (has_peek_) {
      has_peek_ = false;
      return peeked_;
    }
    return lex();
  }

  [[noreturn]] void fail(const Token& at, const std::string& message) const {
    throw Error("syntax-error", message + " at line " + std::to_string(at.line) +
                                    ", column " + std::to_string(at.col));
  }

 private:
  static bool is_atom_char(char c) {
    switch (c) {
      case '(': case ')': case '[': case ']': case '"': case ';':
      case ' ': case '\t': case '\r': case '\n':
        return false;
      default:
        return true;
    }
  }

  void advance() {
    if (pos_ < in_.size()) {
      if (in_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
  }

  void skip_space_and_comments() {
    while (pos_ < in_.size()) {
      char c = in_[pos_];
      if (c == ';') {
        while (pos_ < in_.size() && in_[pos_] != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else {
        break;
      }
    }
  }

  Token lex() {
    skip_space_and_comments();
    Token t;
    t.line = line_;
    t.col = col_;
    if (pos_ >= in_.size()) {
      t.kind = TokKind::End;
      return t;
    }
    char c = in_[pos_];
    if (c == '(') { advance(); t.kind = TokKind::LParen; return t; }
    if (c == ')') { advance(); t.kind = TokKind::RParen; return t; }
    if (c == '[') { advance(); t.kind = TokKind::LBracket; return t; }
    if (c == ']') { advance(); t.kind = TokKind::RBracket; return t; }
    if (c == '"') {
      advance();
      std::string out;
      while (true) {
        if (pos_ >= in_.size()) fail(t, "unterminated string");
        char d = in_[pos_];
        if (d == '"') { advance(); break; }
        if (d == '\\') {
          advance();
          if (pos_ >= in_.size()) fail(t, "unterminated escape");
          char e = in_[pos_];
          if (e != '"' && e != '\\') fail(t, "unknown escape character");
          out += e;
          advance();
        } else {
          out += d;
          advance();
        }
      }
      t.kind = TokKind::String;
      t.text = std::move(out);
      return t;
    }
    std::string out;
    while (pos_ < in_.size() && is_atom_char(in_[pos_])) {
      out += in_[pos_];
      advance();
    }
    t.kind = TokKind::Atom;
    t.text = std::move(out);
    return t;
  }

  std::string_view in_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token peeked_;
  bool has_peek_ = false;
};

}  // namespace serbest::detail

#endif  // SERBEST_SRC_SEXPR_LEXER_HPP
