// Copyright 2026 the serbest authors
// SPDX-License-Identifier: Apache-2.0

#include "serbest/turkish.hpp"

namespace serbest::turkish {

namespace {

constexpr char32_t kReplacement = 0xFFFD;

// Turkish letters outside ASCII, as codepoints.
constexpr char32_t C_CEDILLA = 0x00E7;        // ç
constexpr char32_t C_CEDILLA_UP = 0x00C7;     // Ç
constexpr char32_t G_BREVE = 0x011F;          // ğ
constexpr char32_t G_BREVE_UP = 0x011E;       // Ğ
constexpr char32_t DOTLESS_I = 0x0131;        // ı
constexpr char32_t DOTTED_I_UP = 0x0130;      // İ
constexpr char32_t O_DIAERESIS = 0x00F6;      // ö
constexpr char32_t O_DIAERESIS_UP = 0x00D6;   // Ö
constexpr char32_t S_CEDILLA = 0x015F;        // ş
constexpr char32_t S_CEDILLA_UP = 0x015E;     // Ş
constexpr char32_t U_DIAERESIS = 0x00FC;      // ü
constexpr char32_t U_DIAERESIS_UP = 0x00DC;   // Ü

}  // namespace

std::vector<char32_t> decode_utf8(std::string_view text) {
  std::vector<char32_t> out;
  out.reserve(text.size());
  size_t i = 0;
  while (i < text.size()) {
    unsigned char b = static_cast<unsigned char>(text[i]);
    char32_t cp = kReplacement;
    size_t len = 1;
    if (b < 0x80) {
      cp = b;
    } else if ((b & 0xE0) == 0xC0) {
      len = 2;
      cp = b & 0x1F;
    } else if ((b & 0xF0) == 0xE0) {
      len = 3;
      cp = b & 0x0F;
    } else if ((b & 0xF8) == 0xF0) {
      len = 4;
      cp = b & 0x07;
    }
    if (i + len > text.size()) {
      out.push_back(kReplacement);
      break;
    }
    bool ok = true;
    for (size_t k = 1; k < len; ++k) {
      unsigned char c = static_cast<unsigned char>(text[i + k]);
      if ((c & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (c & 0x3F);
    }
    out.push_back(ok ? cp : kReplacement);
    i += len;
  }
  return out;
}

std::string encode_utf8(char32_t cp) {
  std::string out;
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
  return out;
}

std::string encode_utf8(const std::vector<char32_t>& cps) {
  std::string out;
  out.reserve(cps.size() * 2);
  for (char32_t cp : cps) out += encode_utf8(cp);
  return out;
}

char32_t to_lower(char32_t cp) {
  // Turkish pairs first: I/ı and İ/i cross the ASCII mapping.
  switch (cp) {
    case U'I': return DOTLESS_I;
    case DOTTED_I_UP: return U'i';
    case C_CEDILLA_UP: return C_CEDILLA;
    case G_BREVE_UP: return G_BREVE;
    case O_DIAERESIS_UP: return O_DIAERESIS;
    case S_CEDILLA_UP: return S_CEDILLA;
    case U_DIAERESIS_UP: return U_DIAERESIS;
    default: break;
  }
  if (cp >= U'A' && cp <= U'Z') return cp + 32;
  return cp;
}

std::string to_lower(std::string_view text) {
  auto cps = decode_utf8(text);
  for (auto& cp : cps) cp = to_lower(cp);
  return encode_utf8(cps);
}

char32_t to_upper(char32_t cp) {
  switch (cp) {
    case U'i': return DOTTED_I_UP;
    case DOTLESS_I: return U'I';
    case C_CEDILLA: return C_CEDILLA_UP;
    case G_BREVE: return G_BREVE_UP;
    case O_DIAERESIS: return O_DIAERESIS_UP;
    case S_CEDILLA: return S_CEDILLA_UP;
    case U_DIAERESIS: return U_DIAERESIS_UP;
    default: break;
  }
  if (cp >= U'a' && cp <= U'z') return cp - 32;
  return cp;
}

std::string capitalize_first(std::string_view text) {
  auto cps = decode_utf8(text);
  if (!cps.empty()) cps[0] = to_upper(cps[0]);
  return encode_utf8(cps);
}

bool is_vowel(char32_t cp) {
  switch (cp) {
    case U'a': case U'e': case U'o': case U'u': case U'i':
    case DOTLESS_I: case O_DIAERESIS: case U_DIAERESIS:
      return true;
    default:
      return false;
  }
}

bool is_front_vowel(char32_t cp) {
  return cp == U'e' || cp == U'i' || cp == O_DIAERESIS || cp == U_DIAERESIS;
}

bool is_rounded_vowel(char32_t cp) {
  return cp == U'o' || cp == U'u' || cp == O_DIAERESIS || cp == U_DIAERESIS;
}

bool is_voiceless_consonant(char32_t cp) {
  switch (cp) {
    case U'p': case U't': case U'k': case U'f': case U'h': case U's':
    case C_CEDILLA: case S_CEDILLA:
      return true;
    default:
      return false;
  }
}

char32_t last_vowel(std::string_view word) {
  auto cps = decode_utf8(word);
  for (auto it = cps.rbegin(); it != cps.rend(); ++it) {
    if (is_vowel(*it)) return *it;
  }
  return 0;
}

char32_t last_codepoint(std::string_view word) {
  auto cps = decode_utf8(word);
  return cps.empty() ? 0 : cps.back();
}

}  // namespace serbest::turkish
