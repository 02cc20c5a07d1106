// Copyright 2026 The mapudungun-morph Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mapu::cli {

enum class Command { analyse, generate, validate_lexicon, classify };
enum class Format { gloss_text, json_lines, tsv };

struct RunConfig {
  std::string lexicon_path;
  std::string suffix_path;
  std::string ruleset_path;
  std::string slot_path;
  Command command = Command::analyse;
  Format output = Format::gloss_text;
  int threshold = 1;
  bool all_analyses = false;
  std::vector<std::string> inputs;  // files; empty or "-" reads the input stream
  std::vector<std::string> words;   // analyse: words given on the command line
};

// Exit codes.
constexpr int kOk = 0;
constexpr int kConfigError = 1;  // bad flags, unreadable files, malformed corpus JSON
constexpr int kDataError = 2;    // lexicon or table fails to load, or validate-lexicon finds problems

// Directory holding the shipped lexicon.tsv, suffixes.tsv, rules.tsv, slots.tsv.
std::string default_data_dir();

RunConfig default_config();

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

// Parses argv (CLI11) and calls run.
int main_entry(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace mapu::cli
