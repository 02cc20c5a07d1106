// Copyright 2026 The mapudungun-morph Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mapumorph/lexicon.hpp"
#include "mapumorph/morphotactics.hpp"
#include "mapumorph/phonology.hpp"

namespace mapu {

struct AnalysisPiece {
  std::string surface;  // realized span; empty for zero morphs and fused pieces
  std::string id;       // suffix id, or root key for roots
  std::string tag;      // suffix tag, or the root's display label (IV, TV, NN, ...)
  std::string gloss;    // sense gloss, roots only
  bool root = false;
  bool joined = false;  // portmanteau with the previous piece
  bool variant = false; // allomorph accepted in analysis only
  Context frame = Context::IV;  // valency frame the root was analysed in
};

struct Analysis {
  std::vector<AnalysisPiece> pieces;
  std::vector<FormItem> form;  // same length as pieces
  ValencyTrace trace;

  std::vector<std::string> ids() const;
  std::string surface() const;
};

// Lexicographic order of (piece count, analysis-only variants, ids, sense
// glosses, frames).
bool ranks_before(const Analysis& a, const Analysis& b);

// Interlinear gloss line, e.g. "IV.come +CA +IND1SG".
std::string gloss_render(const Analysis& a);

class GenerationError : public std::runtime_error {
 public:
  explicit GenerationError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

struct AnalyzerOptions {
  int max_roots = 3;  // roots per compound stem
};

class Analyzer {
 public:
  Analyzer(const Lexicon& lex, const RuleTable& rules, AnalyzerOptions opts = {});

  // All licit analyses, best first. Throws AlphabetError; no parse gives {}.
  std::vector<Analysis> analyse(std::string_view word) const;

  // Throws GenerationError (violations), AllomorphError or UnknownMorpheme.
  std::string generate(const RootEntry& root, Context sense, const std::vector<std::string>& suffix_ids) const;
  Realization generate_form(const std::vector<FormItem>& items) const;

  const Lexicon& lexicon() const { return lex_; }
  const RuleTable& rules() const { return rules_; }

 private:
  const Lexicon& lex_;
  const RuleTable& rules_;
  AnalyzerOptions opts_;
  std::vector<const SuffixEntry*> generic_;  // suffixes the search proposes directly
  std::vector<const RootEntry*> members_;    // roots allowed as later compound members
};

std::vector<Analysis> analyse(std::string_view word, const Lexicon& lex, const RuleTable& rules);

}  // namespace mapu
