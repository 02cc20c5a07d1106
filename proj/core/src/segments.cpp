// Copyright 2026 The mapudungun-morph Authors
// SPDX-License-Identifier: Apache-2.0
#include "mapumorph/segments.hpp"

#include <array>

namespace mapu {

namespace {

constexpr std::array<std::string_view, 4> kDigraphs = {"ch", "ll", "ng", "tr"};
constexpr std::array<std::string_view, 20> kLetters = {
    "a", "d", "e", "f", "g", "i", "k", "l", "m", "n",
    "o", "p", "r", "s", "t", "u", "w", "y", "ñ", "ü"};

size_t code_point_length(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead >> 5) == 0x6) return 2;
  if ((lead >> 4) == 0xE) return 3;
  if ((lead >> 3) == 0x1E) return 4;
  return 1;
}

}  // namespace

AlphabetError::AlphabetError(std::string offending, std::string word)
    : std::invalid_argument("unknown character '" + offending + "' in '" + word + "'"),
      offending_(std::move(offending)),
      word_(std::move(word)) {}

std::string normalise(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (size_t i = 0; i < text.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c >= 'A' && c <= 'Z') {
      out.push_back(static_cast<char>(c - 'A' + 'a'));
      continue;
    }
    // Ü (C3 9C) and Ñ (C3 91) to lowercase.
    if (c == 0xC3 && i + 1 < text.size()) {
      unsigned char d = static_cast<unsigned char>(text[i + 1]);
      if (d == 0x9C || d == 0x91) {
        out.push_back(static_cast<char>(0xC3));
        out.push_back(static_cast<char>(d + 0x20));
        ++i;
        continue;
      }
    }
    // Combining diaeresis (CC 88) after u, combining tilde (CC 83) after n.
    if (c == 0xCC && i + 1 < text.size() && !out.empty()) {
      unsigned char d = static_cast<unsigned char>(text[i + 1]);
      if (d == 0x88 && out.back() == 'u') {
        out.back() = static_cast<char>(0xC3);
        out.push_back(static_cast<char>(0xBC));
        ++i;
        continue;
      }
      if (d == 0x83 && out.back() == 'n') {
        out.back() = static_cast<char>(0xC3);
        out.push_back(static_cast<char>(0xB1));
        ++i;
        continue;
      }
    }
    out.push_back(static_cast<char>(c));
  }
  return out;
}

std::vector<std::string> segment(std::string_view word) {
  std::vector<std::string> segs;
  size_t i = 0;
  while (i < word.size()) {
    bool matched = false;
    for (auto dg : kDigraphs) {
      if (word.substr(i, dg.size()) == dg) {
        segs.emplace_back(dg);
        i += dg.size();
        matched = true;
        break;
      }
    }
    if (matched) continue;
    for (auto letter : kLetters) {
      if (word.substr(i, letter.size()) == letter) {
        segs.emplace_back(letter);
        i += letter.size();
        matched = true;
        break;
      }
    }
    if (!matched) {
      size_t len = code_point_length(static_cast<unsigned char>(word[i]));
      throw AlphabetError(std::string(word.substr(i, len)), std::string(word));
    }
  }
  return segs;
}

bool is_alphabetic(std::string_view word) {
  try {
    segment(word);
    return true;
  } catch (const AlphabetError&) {
    return false;
  }
}

bool is_vowel_segment(std::string_view seg) {
  return seg == "a" || seg == "e" || seg == "i" || seg == "o" || seg == "u" || seg == "ü";
}

std::string last_letter(std::string_view text) {
  if (text.empty()) return {};
  size_t i = text.size() - 1;
  while (i > 0 && (static_cast<unsigned char>(text[i]) & 0xC0) == 0x80) --i;
  return std::string(text.substr(i));
}

bool ends_in_vowel(std::string_view text) { return is_vowel_segment(last_letter(text)); }

}  // namespace mapu
