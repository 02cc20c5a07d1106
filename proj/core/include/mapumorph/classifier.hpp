// Copyright 2026 The mapudungun-morph Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mapumorph/analyzer.hpp"

namespace mapu {

enum class Label { TV, IV, labile, undetermined };

std::string_view to_string(Label l);
std::optional<Label> parse_label(std::string_view s);

// One analysed corpus form and the corpus it came from.
struct CorpusEntry {
  std::string source;
  Analysis analysis;
};

struct Evidence {
  std::string root;
  int iv_hits = 0;      // causative directly on the root, root in IV frame
  int tv_hits = 0;      // -fi / -e with nothing valency-increasing in between
  int kle_hits = 0;     // stative -(kü)le; soft
  int ke_tv_hits = 0;   // habitual -ke in a transitive reading; soft
  int total = 0;
  std::map<std::string, int> sources;
};

struct Verdict {
  Label label = Label::undetermined;
  std::vector<std::string> rationale;
  std::optional<std::pair<std::string, std::string>> discrepancy;  // "source:label" of each side
};

struct SourcedVerdict {
  std::string source;
  Verdict verdict;
};

// Only the first root of an analysis counts; compound members are skipped.
Evidence collect_evidence(std::string_view root_form, const std::vector<CorpusEntry>& corpus);

struct ClassifyOptions {
  int threshold = 1;
  bool soft_features = true;  // listed in the rationale only
};

Verdict classify(const Evidence& e, ClassifyOptions opts = {});

// Labile absorbs single labels, undetermined defers, IV wins an IV/TV split.
Verdict reconcile(const SourcedVerdict& a, const SourcedVerdict& b);

struct ClassifierRow {
  std::string root;
  Verdict verdict;  // pooled evidence
  Evidence evidence;
  std::optional<std::string> discrepancy;  // e.g. "smeets:TV/kona:IV"
  bool asserted = false;                   // labile by lexicon entry, no corpus evidence
};

// Rows sorted by root form: every root with corpus evidence, plus lexicon
// labile roots the corpus never attests.
std::vector<ClassifierRow> classify_corpus(const std::vector<CorpusEntry>& corpus, const Lexicon& lex,
                                           ClassifyOptions opts = {});

}  // namespace mapu
