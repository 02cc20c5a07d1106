// Copyright 2026 The mapudungun-morph Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mapu {

/// Thrown when a word contains a character outside the AMU alphabet.
class AlphabetError : public std::invalid_argument {
 public:
  AlphabetError(std::string offending, std::string word);
  const std::string& offending() const { return offending_; }
  const std::string& word() const { return word_; }

 private:
  std::string offending_;
  std::string word_;
};

// Lowercases and folds the decomposed spellings of ü and ñ.
std::string normalise(std::string_view text);

// Greedy left-to-right segmentation; digraphs ch, ll, ng, tr are one segment.
// Throws AlphabetError.
std::vector<std::string> segment(std::string_view word);

bool is_alphabetic(std::string_view word);
bool is_vowel_segment(std::string_view seg);

// Last code point of text, or "" when empty. Enough for V/C decisions:
// every digraph ends in a consonant letter.
std::string last_letter(std::string_view text);
bool ends_in_vowel(std::string_view text);

}  // namespace mapu
