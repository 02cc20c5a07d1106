// Copyright 2026 The mapudungun-morph Authors
// SPDX-License-Identifier: Apache-2.0
#include "mapumorph/phonology.hpp"

#include <algorithm>

#include "mapumorph/segments.hpp"
#include "text_util.hpp"

namespace mapu {

namespace {

bool is_vowel_letter(std::string_view letter) { return is_vowel_segment(letter); }

std::string first_letter(std::string_view text) {
  if (text.empty()) return {};
  std::size_t len = 1;
  while (len < text.size() && (static_cast<unsigned char>(text[len]) & 0xC0) == 0x80) ++len;
  return std::string(text.substr(0, len));
}

bool ends_with_segs(const std::vector<std::string>& segs, const std::vector<std::string>& tail) {
  if (tail.size() > segs.size()) return false;
  return std::equal(tail.rbegin(), tail.rend(), segs.rbegin());
}

bool starts_with_segs(const std::vector<std::string>& segs, const std::vector<std::string>& head) {
  if (head.size() > segs.size()) return false;
  return std::equal(head.begin(), head.end(), segs.begin());
}

std::string lexeme_form(std::string_view lexeme) {
  auto slash = lexeme.find('/');
  return std::string(lexeme.substr(0, slash));
}

bool excepted(const BoundaryRule& rule, const MorphPiece& piece) {
  if (piece.lexeme.empty()) return false;
  for (const auto& ex : rule.exceptions) {
    if (ex == piece.lexeme) return true;
    if (ex.find('/') == std::string::npos && ex == lexeme_form(piece.lexeme)) return true;
  }
  return false;
}

// Bytes of text matched by a left (stem-final) pattern, or npos.
std::size_t match_left(const Pattern& p, std::string_view text) {
  if (text.empty()) return std::string::npos;
  switch (p.type) {
    case Pattern::Type::any:
      return 0;
    case Pattern::Type::vowel:
    case Pattern::Type::consonant: {
      std::string last = last_letter(text);
      bool v = is_vowel_letter(last);
      if (v != (p.type == Pattern::Type::vowel)) return std::string::npos;
      return last.size();
    }
    case Pattern::Type::whole:
      return text == p.text ? text.size() : std::string::npos;
    case Pattern::Type::literal:
      if (text.size() < p.text.size() || text.substr(text.size() - p.text.size()) != p.text)
        return std::string::npos;
      return ends_with_segs(segment(text), p.segs) ? p.text.size() : std::string::npos;
  }
  return std::string::npos;
}

std::size_t match_right(const Pattern& p, std::string_view text) {
  if (text.empty()) return std::string::npos;
  switch (p.type) {
    case Pattern::Type::any:
      return 0;
    case Pattern::Type::vowel:
    case Pattern::Type::consonant: {
      std::string first = first_letter(text);
      bool v = is_vowel_letter(first);
      if (v != (p.type == Pattern::Type::vowel)) return std::string::npos;
      return first.size();
    }
    case Pattern::Type::whole:
      return text == p.text ? text.size() : std::string::npos;
    case Pattern::Type::literal:
      if (text.substr(0, p.text.size()) != p.text) return std::string::npos;
      return starts_with_segs(segment(text), p.segs) ? p.text.size() : std::string::npos;
  }
  return std::string::npos;
}

bool kind_applies(const BoundaryRule& rule, const MorphPiece& right) {
  if (rule.kind == RuleKind::epenthesis) return right.is_root;
  return !right.is_root;
}

std::optional<BoundaryOutcome> try_rule(const BoundaryRule& rule, const MorphPiece& left,
                                        std::string_view left_text, const MorphPiece& right) {
  if (!kind_applies(rule, right)) return std::nullopt;
  if (excepted(rule, left) || excepted(rule, right)) return std::nullopt;
  std::size_t ml = match_left(rule.left, left_text);
  if (ml == std::string::npos) return std::nullopt;
  std::size_t mr = match_right(rule.right, right.form);
  if (mr == std::string::npos) return std::nullopt;

  std::string_view left_keep = left_text.substr(0, left_text.size() - ml);
  std::string_view right_keep = std::string_view(right.form).substr(mr);
  BoundaryOutcome out;
  out.rule = &rule;
  if (rule.fused) {
    out.left = std::string(left_keep) + *rule.fused + std::string(right_keep);
    out.fused = true;
    return out;
  }
  out.left = rule.left_rewrite ? std::string(left_keep) + *rule.left_rewrite : std::string(left_text);
  out.right = rule.right_rewrite ? *rule.right_rewrite + std::string(right_keep) : right.form;
  return out;
}

BoundaryOutcome identity(std::string_view left_text, const MorphPiece& right) {
  BoundaryOutcome out;
  out.left = std::string(left_text);
  out.right = right.form;
  return out;
}

bool context_matches(const Allomorph& a, std::string_view stem_final) {
  switch (a.context.requires_preceding) {
    case Preceding::any:
      return true;
    case Preceding::vowel:
      return !stem_final.empty() && ends_in_vowel(stem_final);
    case Preceding::consonant:
      return !stem_final.empty() && !ends_in_vowel(stem_final);
  }
  return false;
}

std::optional<std::string> parse_rewrite_side(std::string_view s) {
  if (s == "$") return std::nullopt;
  return std::string(s);
}

}  // namespace

Pattern Pattern::parse(std::string_view spec) {
  Pattern p;
  if (spec == "V") {
    p.type = Type::vowel;
  } else if (spec == "C") {
    p.type = Type::consonant;
  } else if (spec == "*") {
    p.type = Type::any;
  } else if (!spec.empty() && spec.front() == '=') {
    p.type = Type::whole;
    p.text = std::string(spec.substr(1));
    p.segs = segment(p.text);
  } else {
    p.type = Type::literal;
    p.text = std::string(spec);
    p.segs = segment(p.text);
  }
  if (p.is_literal() && p.text.empty()) throw std::invalid_argument("empty literal pattern");
  return p;
}

std::string Pattern::str() const {
  switch (type) {
    case Type::vowel:
      return "V";
    case Type::consonant:
      return "C";
    case Type::any:
      return "*";
    case Type::whole:
      return "=" + text;
    case Type::literal:
      return text;
  }
  return {};
}

const BoundaryRule* RuleTable::find(std::string_view id) const {
  for (const auto& r : rules_)
    if (r.id == id) return &r;
  return nullptr;
}

std::string_view to_string(RuleKind k) {
  switch (k) {
    case RuleKind::prothesis:
      return "prothesis";
    case RuleKind::sandhi:
      return "sandhi";
    case RuleKind::allomorph_selection:
      return "allomorph_selection";
    case RuleKind::epenthesis:
      return "epenthesis";
    case RuleKind::fusion:
      return "fusion";
  }
  return "?";
}

RuleTable parse_rules(std::string_view text, std::string_view origin) {
  std::vector<BoundaryRule> rules;
  const std::string org(origin);
  detail::for_each_data_line(text, [&](std::size_t lineno, std::string_view line) {
    auto fields = detail::split_fields(line);
    auto fail = [&](std::size_t col, const std::string& msg) {
      throw LexiconError(LexiconError::Kind::parse, org, lineno, col, msg);
    };
    if (fields.size() < 5 || fields.size() > 6)
      fail(1, "expected 5 or 6 tab-separated fields, got " + std::to_string(fields.size()));
    BoundaryRule rule;
    rule.id = std::string(detail::trim(fields[0].text));
    if (rule.id.empty()) fail(fields[0].column, "empty rule id");
    std::string_view kind = detail::trim(fields[1].text);
    if (kind == "prothesis") rule.kind = RuleKind::prothesis;
    else if (kind == "sandhi") rule.kind = RuleKind::sandhi;
    else if (kind == "allomorph_selection") rule.kind = RuleKind::allomorph_selection;
    else if (kind == "epenthesis") rule.kind = RuleKind::epenthesis;
    else if (kind == "fusion") rule.kind = RuleKind::fusion;
    else fail(fields[1].column, "unknown rule kind '" + std::string(kind) + "'");
    try {
      rule.left = Pattern::parse(detail::trim(fields[2].text));
    } catch (const std::exception& e) {
      fail(fields[2].column, std::string("bad left pattern: ") + e.what());
    }
    try {
      rule.right = Pattern::parse(detail::trim(fields[3].text));
    } catch (const std::exception& e) {
      fail(fields[3].column, std::string("bad right pattern: ") + e.what());
    }
    std::string_view rw = detail::trim(fields[4].text);
    auto bar = rw.find('|');
    if (bar == std::string_view::npos) {
      if (rw.empty()) fail(fields[4].column, "empty rewrite");
      if (!rule.left.is_literal() || !rule.right.is_literal())
        fail(fields[4].column, "a fused rewrite needs literal patterns on both sides");
      rule.fused = std::string(rw);
    } else {
      rule.left_rewrite = parse_rewrite_side(rw.substr(0, bar));
      rule.right_rewrite = parse_rewrite_side(rw.substr(bar + 1));
    }
    if (fields.size() == 6) {
      for (auto ex : detail::split(detail::trim(fields[5].text), ','))
        if (!detail::trim(ex).empty()) rule.exceptions.emplace_back(detail::trim(ex));
    }
    for (const auto& r : rules)
      if (r.id == rule.id) fail(fields[0].column, "duplicate rule id '" + rule.id + "'");
    rules.push_back(std::move(rule));
  });
  return RuleTable(std::move(rules));
}

RuleTable load_rules(const std::filesystem::path& path) {
  return parse_rules(read_text_file(path), path.string());
}

std::vector<Diagnostic> validate_rules(const RuleTable& rules, const Lexicon& lex) {
  std::vector<Diagnostic> out;
  for (const auto& r : rules.rules()) {
    for (const auto* rw : {&r.left_rewrite, &r.right_rewrite, &r.fused})
      if (*rw && !is_alphabetic(**rw)) out.push_back({r.id, "rewrite '" + **rw + "' leaves the alphabet"});
    for (const auto& ex : r.exceptions)
      if (!lex.find_root_key(ex)) out.push_back({r.id, "exception '" + ex + "' is not a lexicon root"});
  }
  return out;
}

MorphPiece MorphPiece::root(std::string form, std::string lexeme) {
  return MorphPiece{std::move(form), true, std::move(lexeme), {}};
}

MorphPiece MorphPiece::suffix(std::string form, std::string id) {
  return MorphPiece{std::move(form), false, {}, std::move(id)};
}

BoundaryOutcome apply_boundary(const MorphPiece& left, std::string_view left_text, const MorphPiece& right,
                               const RuleTable& rules, RealizeOptions opts) {
  for (const auto& rule : rules.rules()) {
    if (!opts.fusion && rule.kind == RuleKind::fusion) continue;
    if (auto out = try_rule(rule, left, left_text, right)) return *out;
  }
  return identity(left_text, right);
}

std::vector<BoundaryOutcome> boundary_alternatives(const MorphPiece& left, std::string_view left_text,
                                                   const MorphPiece& right, const RuleTable& rules) {
  std::vector<BoundaryOutcome> out;
  for (const auto& rule : rules.rules()) {
    auto o = try_rule(rule, left, left_text, right);
    if (!o) continue;
    out.push_back(std::move(*o));
    if (rule.kind != RuleKind::fusion) return out;
  }
  out.push_back(identity(left_text, right));
  return out;
}

std::size_t rewritable_tail(const MorphPiece& left, std::string_view left_text, const RuleTable& rules) {
  std::size_t tail = 0;
  for (const auto& rule : rules.rules()) {
    if (!rule.left_rewrite && !rule.fused) continue;
    if (excepted(rule, left)) continue;
    std::size_t ml = match_left(rule.left, left_text);
    if (ml != std::string::npos) tail = std::max(tail, ml);
  }
  return tail;
}

Realization realize_spans(const MorphBoundarySeq& seq, const RuleTable& rules, RealizeOptions opts) {
  Realization r;
  if (seq.empty()) return r;
  r.spans.reserve(seq.size());
  r.spans.push_back(seq.front().form);
  r.joined.push_back(false);
  for (std::size_t i = 1; i < seq.size(); ++i) {
    BoundaryOutcome o = apply_boundary(seq[i - 1], r.spans.back(), seq[i], rules, opts);
    r.spans.back() = std::move(o.left);
    r.spans.push_back(std::move(o.right));
    r.joined.push_back(o.fused);
    r.fired.push_back(o.rule);
  }
  for (const auto& s : r.spans) r.surface += s;
  return r;
}

std::string realize(const MorphBoundarySeq& seq, const RuleTable& rules, RealizeOptions opts) {
  return realize_spans(seq, rules, opts).surface;
}

AllomorphError::AllomorphError(const std::string& suffix_id, std::size_t boundary)
    : std::runtime_error("no allomorph of " + suffix_id + " fits at boundary " + std::to_string(boundary)),
      suffix_id_(suffix_id),
      boundary_(boundary) {}

std::string select_allomorph(const SuffixEntry& suffix, std::string_view stem_final) {
  const Allomorph* fallback = nullptr;
  for (const auto& a : suffix.allomorphs) {
    if (a.analysis_only) continue;
    if (a.context.requires_preceding == Preceding::any) {
      if (!fallback) fallback = &a;
      continue;
    }
    if (context_matches(a, stem_final)) return a.surface;
  }
  if (fallback) return fallback->surface;
  throw AllomorphError(suffix.id, 0);
}

std::optional<std::string> designated_allomorph(const SuffixEntry& suffix, const MorphPiece& left,
                                                std::string_view left_text, const RuleTable& rules) {
  for (const auto& rule : rules.rules()) {
    if (rule.kind != RuleKind::prothesis && rule.kind != RuleKind::allomorph_selection) continue;
    if (!rule.right.is_literal() || excepted(rule, left)) continue;
    if (match_left(rule.left, left_text) == std::string::npos) continue;
    for (const auto& a : suffix.allomorphs)
      if (!a.analysis_only && a.surface == rule.right.text) return a.surface;
  }
  return std::nullopt;
}

std::vector<std::string> admissible_allomorphs(const SuffixEntry& suffix, const MorphPiece& left,
                                               std::string_view left_text, std::string_view realized_so_far,
                                               const RuleTable& rules, bool analysis) {
  if (auto d = designated_allomorph(suffix, left, left_text, rules)) return {*d};
  std::vector<std::string> out;
  std::string final_letter = last_letter(realized_so_far);
  try {
    out.push_back(select_allomorph(suffix, final_letter));
  } catch (const AllomorphError&) {
    if (!analysis) throw;
  }
  if (analysis) {
    for (const auto& a : suffix.allomorphs) {
      if (!a.analysis_only || !context_matches(a, final_letter)) continue;
      if (std::find(out.begin(), out.end(), a.surface) == out.end()) out.push_back(a.surface);
    }
  }
  return out;
}

std::vector<UnderlyingPair> unrealize(std::string_view surface, std::size_t boundary, const RuleTable& rules) {
  boundary = std::min(boundary, surface.size());
  std::string_view lhs = surface.substr(0, boundary);
  std::string_view rhs = surface.substr(boundary);
  std::vector<UnderlyingPair> out{{std::string(lhs), std::string(rhs), {}}};
  auto add = [&](UnderlyingPair p) {
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
  };
  for (const auto& rule : rules.rules()) {
    if (rule.fused) {
      const std::string& f = *rule.fused;
      if (lhs.size() < f.size() || lhs.substr(lhs.size() - f.size()) != f) continue;
      add({std::string(lhs.substr(0, lhs.size() - f.size())) + rule.left.text, rule.right.text + std::string(rhs),
           rule.id});
      continue;
    }
    std::string left = std::string(lhs);
    std::string right = std::string(rhs);
    if (rule.left_rewrite) {
      const std::string& rw = *rule.left_rewrite;
      if (!rule.left.is_literal()) continue;
      if (lhs.size() < rw.size() || lhs.substr(lhs.size() - rw.size()) != rw) continue;
      left = std::string(lhs.substr(0, lhs.size() - rw.size())) + rule.left.text;
    }
    if (rule.right_rewrite) {
      const std::string& rw = *rule.right_rewrite;
      if (!rule.right.is_literal()) continue;
      if (rhs.substr(0, rw.size()) != rw) continue;
      right = rule.right.text + std::string(rhs.substr(rw.size()));
    }
    if (!rule.left_rewrite && !rule.right_rewrite) continue;
    add({std::move(left), std::move(right), rule.id});
  }
  return out;
}

MorphBoundarySeq fuse_agreement(const MorphBoundarySeq& seq, const RuleTable& rules) {
  MorphBoundarySeq out = seq;
  for (std::size_t i = 1; i < out.size(); ++i) {
    for (const auto& rule : rules.rules()) {
      if (rule.kind != RuleKind::fusion) continue;
      auto o = try_rule(rule, out[i - 1], out[i - 1].form, out[i]);
      if (!o) continue;
      out[i - 1].form = o->left;
      out[i].form = o->right;
      break;
    }
  }
  return out;
}

}  // namespace mapu
