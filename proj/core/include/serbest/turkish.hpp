// Copyright 2026 the serbest authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SERBEST_TURKISH_HPP
#define SERBEST_TURKISH_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

// Codepoint-level text utilities for Turkish orthography: UTF-8
// encode/decode, the Turkish case mapping (dotted/dotless i), and the
// vowel/consonant classifications the morphology needs.

namespace serbest::turkish {

/// Decodes UTF-8 into codepoints. Invalid bytes pass through as U+FFFD.
std::vector<char32_t> decode_utf8(std::string_view text);

/// Encodes codepoints back to UTF-8.
std::string encode_utf8(const std::vector<char32_t>& cps);

std::string encode_utf8(char32_t cp);

/// Turkish-aware lowercase: I -> ı, İ -> i, plus ASCII and the Turkish
/// letter set. Other codepoints are left unchanged.
char32_t to_lower(char32_t cp);
std::string to_lower(std::string_view text);

/// Turkish-aware uppercase of a single codepoint: i -> İ, ı -> I, ...
char32_t to_upper(char32_t cp);

/// Uppercases the first letter of a UTF-8 string (sentence-initial rule).
std::string capitalize_first(std::string_view text);

bool is_vowel(char32_t cp);

/// Frontness for harmony: e, i, ö, ü are front; a, ı, o, u are back.
bool is_front_vowel(char32_t cp);

/// Rounding for I-type harmony: o, ö, u, ü are rounded.
bool is_rounded_vowel(char32_t cp);

/// Voiceless consonants (p, ç, t, k, f, h, s, ş) condition suffix-initial
/// D -> t and block stem-final voicing.
bool is_voiceless_consonant(char32_t cp);

/// Last vowel of a word, or 0 when the word has none.
char32_t last_vowel(std::string_view word);

/// Last codepoint, or 0 for an empty string.
char32_t last_codepoint(std::string_view word);

}  // namespace serbest::turkish

#endif  // SERBEST_TURKISH_HPP
