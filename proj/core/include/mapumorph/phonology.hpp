// Copyright 2026 The mapudungun-morph Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mapumorph/lexicon.hpp"

namespace mapu {

enum class RuleKind { prothesis, sandhi, allomorph_selection, epenthesis, fusion };

struct Pattern {
  enum class Type { vowel, consonant, any, literal, whole };
  Type type = Type::any;
  std::string text;               // literal / whole only
  std::vector<std::string> segs;  // segmentation of text

  static Pattern parse(std::string_view spec);
  std::string str() const;
  bool is_literal() const { return type == Type::literal || type == Type::whole; }
};

struct BoundaryRule {
  std::string id;
  RuleKind kind = RuleKind::sandhi;
  Pattern left;
  Pattern right;
  std::optional<std::string> left_rewrite;   // nullopt keeps the matched material
  std::optional<std::string> right_rewrite;
  std::optional<std::string> fused;          // portmanteau: one span for both pieces
  std::vector<std::string> exceptions;       // "form" or "form/category"
};

class RuleTable {
 public:
  RuleTable() = default;
  explicit RuleTable(std::vector<BoundaryRule> rules) : rules_(std::move(rules)) {}
  const std::vector<BoundaryRule>& rules() const { return rules_; }
  const BoundaryRule* find(std::string_view id) const;

 private:
  std::vector<BoundaryRule> rules_;
};

RuleTable load_rules(const std::filesystem::path& path);
RuleTable parse_rules(std::string_view text, std::string_view origin = "<memory>");
std::string_view to_string(RuleKind k);

// Rewrites stay inside the alphabet; exceptions name lexicon roots.
std::vector<Diagnostic> validate_rules(const RuleTable& rules, const Lexicon& lex);

struct MorphPiece {
  std::string form;    // underlying (pre-rule) surface
  bool is_root = false;
  std::string lexeme;  // root key "form/category", for exception lists
  std::string id;      // morpheme id, informational

  static MorphPiece root(std::string form, std::string lexeme = {});
  static MorphPiece suffix(std::string form, std::string id = {});
};

using MorphBoundarySeq = std::vector<MorphPiece>;

struct RealizeOptions {
  bool fusion = true;
};

struct BoundaryOutcome {
  const BoundaryRule* rule = nullptr;  // nullptr: plain concatenation
  std::string left;                    // new text of the left piece
  std::string right;                   // text of the right piece
  bool fused = false;                  // right piece shares the left span
};

// First rule that fires at the boundary, or identity.
BoundaryOutcome apply_boundary(const MorphPiece& left, std::string_view left_text,
                               const MorphPiece& right, const RuleTable& rules,
                               RealizeOptions opts = {});

// Every outcome analysis must consider: the obligatory one, plus the
// unfused alternative when the firing rule is a fusion.
std::vector<BoundaryOutcome> boundary_alternatives(const MorphPiece& left, std::string_view left_text,
                                                   const MorphPiece& right, const RuleTable& rules);

// Bytes at the end of left_text that a rule could still rewrite once the
// next piece is known. Analysis only trusts the text before them.
std::size_t rewritable_tail(const MorphPiece& left, std::string_view left_text, const RuleTable& rules);

struct Realization {
  std::vector<std::string> spans;         // one per piece, may be empty
  std::vector<bool> joined;               // piece shares the previous span (portmanteau)
  std::vector<const BoundaryRule*> fired; // per boundary, nullptr when none
  std::string surface;
};

Realization realize_spans(const MorphBoundarySeq& seq, const RuleTable& rules, RealizeOptions opts = {});
std::string realize(const MorphBoundarySeq& seq, const RuleTable& rules, RealizeOptions opts = {});

class AllomorphError : public std::runtime_error {
 public:
  AllomorphError(const std::string& suffix_id, std::size_t boundary);
  const std::string& suffix_id() const { return suffix_id_; }
  std::size_t boundary() const { return boundary_; }

 private:
  std::string suffix_id_;
  std::size_t boundary_;
};

// Generated allomorph for a preceding segment: V/C-specific first, then the fallback.
std::string select_allomorph(const SuffixEntry& suffix, std::string_view stem_final);

// Allomorph named by a prothesis/selection rule for this left piece, if any
// (la + -(ü)m takes -üm even after a vowel).
std::optional<std::string> designated_allomorph(const SuffixEntry& suffix, const MorphPiece& left,
                                                std::string_view left_text, const RuleTable& rules);

// Allomorphs admissible after the given left piece. Generation yields exactly
// one; analysis adds the analysis-only variants whose context matches.
std::vector<std::string> admissible_allomorphs(const SuffixEntry& suffix, const MorphPiece& left,
                                               std::string_view left_text, std::string_view realized_so_far,
                                               const RuleTable& rules, bool analysis);

struct UnderlyingPair {
  std::string left;
  std::string right;
  std::string rule_id;  // empty for the identity candidate
  bool operator==(const UnderlyingPair&) const = default;
};

// Underlying (left, right) candidates for a surface split at boundary.
std::vector<UnderlyingPair> unrealize(std::string_view surface, std::size_t boundary, const RuleTable& rules);

// Applies only the fusion rules; fused-away pieces keep their ids with an empty form.
MorphBoundarySeq fuse_agreement(const MorphBoundarySeq& seq, const RuleTable& rules);

}  // namespace mapu
