// Copyright 2026 The mapudungun-morph Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mapumorph/analyzer.hpp"
#include "mapumorph/classifier.hpp"

namespace mapu {

// {"gloss": ..., "pieces": [...], "trace": [...]}
std::string analysis_json(const Analysis& a);
// {"word": ..., "analyses": [...]}
std::string analyses_line(std::string_view word, const std::vector<Analysis>& analyses);
// {"word": ..., "error": ..., "analyses": []}
std::string error_line(std::string_view word, std::string_view message);
// {"input": ..., "code": ..., "at": ..., "message": ...}
std::string violation_line(std::string_view input, const Violation& v);

class CorpusError : public std::runtime_error {
 public:
  CorpusError(std::size_t line, const std::string& message)
      : std::runtime_error("corpus line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// One corpus line: a word with its source, optionally pinned to a gloss,
// a frame and a morpheme id sequence. Full analysis objects (as written by
// `analyse --format json-lines`) are accepted through their "gloss" and
// "pieces" fields.
struct CorpusRecord {
  std::size_t line = 0;
  std::string source;
  std::string word;
  std::optional<std::string> gloss;
  std::optional<Context> frame;
  std::vector<std::string> ids;
};

std::vector<CorpusRecord> parse_corpus(std::string_view jsonl);  // throws CorpusError

struct ResolvedCorpus {
  std::vector<CorpusEntry> entries;
  std::vector<Diagnostic> unresolved;  // records no analysis matched
};

// Re-analyses each word and keeps the best analysis matching the record.
ResolvedCorpus resolve_corpus(const std::vector<CorpusRecord>& records, const Analyzer& analyzer);

}  // namespace mapu
