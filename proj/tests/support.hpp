// Copyright 2026 The mapudungun-morph Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mapumorph/analyzer.hpp"
#include "mapumorph/lexicon.hpp"
#include "mapumorph/phonology.hpp"
#include "mapumorph/segments.hpp"

namespace mapu::testing {

inline std::filesystem::path data_dir() { return MAPUMORPH_TEST_DATADIR; }
inline std::filesystem::path test_data_dir() { return MAPUMORPH_TEST_LOCAL_DATADIR; }

// Shipped data, loaded once per process.
struct Shipped {
  Lexicon lex;
  RuleTable rules;
  Analyzer analyzer;

  Shipped()
      : lex(load_lexicon(data_dir() / "lexicon.tsv", data_dir() / "suffixes.tsv")),
        rules(load_rules(data_dir() / "rules.tsv")),
        analyzer(lex, rules) {}

  static const Shipped& get() {
    static const Shipped s;
    return s;
  }
};

struct Mini {
  Lexicon lex;
  RuleTable rules;
  Analyzer analyzer;

  Mini()
      : lex(load_lexicon(test_data_dir() / "mini_lexicon.tsv", test_data_dir() / "mini_suffixes.tsv")),
        rules(load_rules(test_data_dir() / "mini_rules.tsv")),
        analyzer(lex, rules) {}

  static const Mini& get() {
    static const Mini m;
    return m;
  }
};

inline std::set<std::string> glosses(const Analyzer& an, std::string_view word) {
  std::set<std::string> out;
  for (const auto& a : an.analyse(word)) out.insert(gloss_render(a));
  return out;
}

inline std::set<std::string> glosses(std::string_view word) { return glosses(Shipped::get().analyzer, word); }

// "word<TAB>gloss" lines, comments skipped.
inline std::vector<std::pair<std::string, std::string>> gloss_fixtures() {
  std::vector<std::pair<std::string, std::string>> out;
  std::istringstream in(read_text_file(data_dir() / "fixtures" / "gloss_corpus.tsv"));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) continue;
    out.emplace_back(line.substr(0, tab), line.substr(tab + 1));
  }
  return out;
}

inline const Analysis* find_gloss(const std::vector<Analysis>& as, std::string_view gloss) {
  for (const auto& a : as)
    if (gloss_render(a) == gloss) return &a;
  return nullptr;
}

}  // namespace mapu::testing
