// Copyright 2026 The mapudungun-morph Authors
// SPDX-License-Identifier: Apache-2.0
#include "mapumorph/analyzer.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_set>

#include "mapumorph/segments.hpp"
#include "text_util.hpp"

namespace mapu {

namespace {

std::vector<Context> frames_of(const RootEntry& r) {
  std::vector<Context> out;
  for (const auto& s : r.senses)
    if (std::find(out.begin(), out.end(), s.context) == out.end()) out.push_back(s.context);
  if (out.empty()) out.push_back(Context::IV);
  std::sort(out.begin(), out.end());
  return out;
}

// A labile root used transitively may still be printed with its IV sense
// (IV.laugh +CONT +3P ...).
bool sense_fits(const RootEntry& r, Context frame, const Sense& s) {
  if (s.context == frame) return true;
  return r.valency == LexValency::labile && frame == Context::TV && s.context == Context::IV;
}

bool is_search_excluded(const SuffixEntry& s) { return s.tag == "FORCE" || s.tag == "ADJDO" || s.tag == "DP"; }

// Zero variants accepted only in analysis (IND -ø) must be followed by
// overt material; otherwise every bare stem would gain a silent mood.
bool is_silent_variant(const SuffixEntry& s, std::string_view surface) {
  if (!surface.empty()) return false;
  for (const auto& a : s.allomorphs)
    if (a.surface.empty() && !a.analysis_only) return false;
  return true;
}

// Allomorph the lexicon lists for analysis only.
bool is_variant(const SuffixEntry& s, std::string_view form) {
  bool variant = false;
  for (const auto& a : s.allomorphs) {
    if (a.surface != form) continue;
    if (!a.analysis_only) return false;
    variant = true;
  }
  return variant;
}

struct RawPath {
  std::vector<FormItem> items;
  std::vector<std::string> spans;
  std::vector<bool> joined;
  std::vector<bool> variant;
};

class Search {
 public:
  Search(const Lexicon& lex, const RuleTable& rules, const std::vector<const SuffixEntry*>& generic,
         const std::vector<const RootEntry*>& members, int max_roots, std::string word)
      : lex_(lex), rules_(rules), generic_(generic), members_(members), max_roots_(max_roots), word_(std::move(word)) {}

  std::vector<RawPath> run() {
    for (const auto& r : lex_.roots()) {
      MorphPiece piece = MorphPiece::root(r.form, r.key());
      std::size_t stable = r.form.size() - rewritable_tail(piece, r.form, rules_);
      if (word_.compare(0, stable, r.form, 0, stable) != 0) continue;
      for (Context frame : frames_of(r)) {
        pieces_ = {piece};
        items_ = {FormItem::of_root(r, frame)};
        spans_ = {r.form};
        joined_ = {false};
        pos_ = 0;
        roots_ = 1;
        dfs(ConstraintState(r, frame));
      }
    }
    return std::move(results_);
  }

 private:
  using Next = std::function<bool(const ConstraintState&)>;

  std::string realized() const { return word_.substr(0, pos_) + spans_.back(); }

  bool dfs(const ConstraintState& st) {
    const std::string pending = spans_.back();
    std::string key = std::to_string(pos_) + '\x1f' + pending + '\x1f' + pieces_.back().lexeme + '\x1f' +
                      std::to_string(roots_) + (silent_ ? "s" : "") + '\x1f' + st.signature();
    if (failed_.count(key)) return false;
    bool found = false;

    if (!silent_ && word_.compare(pos_, std::string::npos, pending) == 0) {
      std::vector<Violation> v;
      st.finish(v);
      if (v.empty()) {
        std::vector<bool> variant(items_.size(), false);
        for (std::size_t i = 0; i < items_.size(); ++i)
          variant[i] = !items_[i].is_root() && is_variant(*items_[i].suffix, pieces_[i].form);
        results_.push_back({items_, spans_, joined_, std::move(variant)});
        found = true;
      }
    }

    const std::string so_far = realized();
    for (const SuffixEntry* s : generic_) {
      if (s->slot >= st.last_slot()) continue;
      for (const auto& allo : admissible_allomorphs(*s, pieces_.back(), pending, so_far, rules_, true)) {
        found |= extend(st, MorphPiece::suffix(allo, s->id), FormItem::of_suffix(*s),
                        [this](const ConstraintState& next) { return dfs(next); });
      }
    }

    if (word_.compare(pos_, pending.size(), pending) == 0) {
      std::string tail = word_.substr(pos_ + pending.size());
      for (const auto& seg : fal_segmentations(st.state(), tail)) found |= chain(st, seg, 0);
    }

    if (roots_ < max_roots_ && st.last_slot() >= 33 && !st.after_determiner()) {
      for (const RootEntry* r : members_) {
        MorphPiece piece = MorphPiece::root(r->form, r->key());
        const std::size_t stable = r->form.size() - rewritable_tail(piece, r->form, rules_);
        if (word_.find(std::string_view(r->form).substr(0, stable), pos_) == std::string::npos) continue;
        for (Context frame : frames_of(*r)) {
          ++roots_;
          found |= extend(st, piece, FormItem::of_root(*r, frame),
                          [this](const ConstraintState& next) { return dfs(next); });
          --roots_;
        }
      }
    }

    if (!found) failed_.insert(std::move(key));
    return found;
  }

  bool chain(const ConstraintState& st, const FalSegmentation& seg, std::size_t i) {
    if (i == seg.size()) return dfs(st);
    const SuffixEntry* s = lex_.find_suffix(seg[i].id);
    if (!s) return false;
    auto allos = admissible_allomorphs(*s, pieces_.back(), spans_.back(), realized(), rules_, true);
    if (std::find(allos.begin(), allos.end(), seg[i].surface) == allos.end()) return false;
    return extend(st, MorphPiece::suffix(seg[i].surface, s->id), FormItem::of_suffix(*s),
                  [&, i](const ConstraintState& next) { return chain(next, seg, i + 1); });
  }

  bool extend(const ConstraintState& st, const MorphPiece& piece, const FormItem& item, const Next& next) {
    ConstraintState st2 = st;
    std::vector<Violation> v;
    st2.push(item, v);
    if (!v.empty()) return false;

    bool found = false;
    for (auto& o : boundary_alternatives(pieces_.back(), spans_.back(), piece, rules_)) {
      if (word_.compare(pos_, o.left.size(), o.left) != 0) continue;
      const std::size_t newpos = pos_ + o.left.size();
      std::string pending = o.fused ? std::string() : o.right;
      const std::size_t stable = pending.size() - rewritable_tail(piece, pending, rules_);
      if (word_.compare(newpos, stable, pending, 0, stable) != 0) continue;

      const std::size_t old_pos = pos_;
      const bool old_silent = silent_;
      if (!item.is_root() && is_silent_variant(*item.suffix, piece.form)) silent_ = true;
      else if (!piece.form.empty()) silent_ = false;
      std::string old_span = spans_.back();
      spans_.back() = o.left;
      spans_.push_back(std::move(pending));
      joined_.push_back(o.fused);
      pieces_.push_back(piece);
      items_.push_back(item);
      pos_ = newpos;

      found |= next(st2);

      pos_ = old_pos;
      silent_ = old_silent;
      items_.pop_back();
      pieces_.pop_back();
      joined_.pop_back();
      spans_.pop_back();
      spans_.back() = std::move(old_span);
    }
    return found;
  }

  const Lexicon& lex_;
  const RuleTable& rules_;
  const std::vector<const SuffixEntry*>& generic_;
  const std::vector<const RootEntry*>& members_;
  int max_roots_;
  std::string word_;

  std::vector<MorphPiece> pieces_;
  std::vector<FormItem> items_;
  std::vector<std::string> spans_;  // spans_.back() is still open to rewriting
  std::vector<bool> joined_;
  std::size_t pos_ = 0;  // where spans_.back() starts in the word
  int roots_ = 0;
  bool silent_ = false;  // a silent variant still waits for overt material

  std::unordered_set<std::string> failed_;
  std::vector<RawPath> results_;
};

// One analysis per combination of root senses.
void expand_senses(const RawPath& path, std::vector<Analysis>& out) {
  Analysis base;
  base.form = path.items;
  base.trace = compute_trace(path.items);
  std::vector<std::size_t> root_idx;
  for (std::size_t i = 0; i < path.items.size(); ++i) {
    const FormItem& it = path.items[i];
    AnalysisPiece p;
    p.surface = path.spans[i];
    p.joined = path.joined[i];
    p.variant = path.variant[i];
    p.id = it.id();
    if (it.is_root()) {
      p.root = true;
      p.frame = it.frame;
      root_idx.push_back(i);
    } else {
      p.tag = it.suffix->tag;
    }
    base.pieces.push_back(std::move(p));
  }

  std::vector<std::vector<const Sense*>> choices;
  for (std::size_t i : root_idx) {
    const FormItem& it = path.items[i];
    std::vector<const Sense*> fit;
    for (const auto& s : it.root->senses)
      if (sense_fits(*it.root, it.frame, s)) fit.push_back(&s);
    if (fit.empty()) return;
    choices.push_back(std::move(fit));
  }

  std::vector<std::size_t> pick(choices.size(), 0);
  while (true) {
    Analysis a = base;
    for (std::size_t k = 0; k < root_idx.size(); ++k) {
      const Sense& s = *choices[k][pick[k]];
      AnalysisPiece& p = a.pieces[root_idx[k]];
      p.tag = root_label(*path.items[root_idx[k]].root, s);
      p.gloss = s.gloss;
    }
    out.push_back(std::move(a));
    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == choices[k].size()) pick[k++] = 0;
    if (k == pick.size()) break;
  }
}

std::string dedupe_key(const Analysis& a) {
  std::string key;
  for (const auto& p : a.pieces) {
    key += p.id;
    if (p.root) key += '=' + p.tag + '.' + p.gloss;
    key += '\x1f';
  }
  return key;
}

}  // namespace

std::vector<std::string> Analysis::ids() const {
  std::vector<std::string> out;
  out.reserve(pieces.size());
  for (const auto& p : pieces) out.push_back(p.id);
  return out;
}

std::string Analysis::surface() const {
  std::string s;
  for (const auto& p : pieces) s += p.surface;
  return s;
}

bool ranks_before(const Analysis& a, const Analysis& b) {
  if (a.pieces.size() != b.pieces.size()) return a.pieces.size() < b.pieces.size();
  auto variants = [](const Analysis& x) {
    return std::count_if(x.pieces.begin(), x.pieces.end(), [](const AnalysisPiece& p) { return p.variant; });
  };
  if (variants(a) != variants(b)) return variants(a) < variants(b);
  for (std::size_t i = 0; i < a.pieces.size(); ++i)
    if (a.pieces[i].id != b.pieces[i].id) return a.pieces[i].id < b.pieces[i].id;
  for (std::size_t i = 0; i < a.pieces.size(); ++i) {
    const auto& pa = a.pieces[i];
    const auto& pb = b.pieces[i];
    if (pa.tag != pb.tag) return pa.tag < pb.tag;
    if (pa.gloss != pb.gloss) return pa.gloss < pb.gloss;
  }
  for (std::size_t i = 0; i < a.pieces.size(); ++i)
    if (a.pieces[i].frame != b.pieces[i].frame) return a.pieces[i].frame < b.pieces[i].frame;
  return false;
}

std::string gloss_render(const Analysis& a) {
  std::vector<std::size_t> roots;
  for (std::size_t i = 0; i < a.pieces.size(); ++i)
    if (a.pieces[i].root) roots.push_back(i);

  // Compound marker: after the last member and the causatives on it.
  std::size_t cr_at = a.pieces.size();
  std::string cr_label;
  if (roots.size() >= 2) {
    std::size_t last = roots.back();
    if (a.form[last].root->compound != CompoundMark::nomark) {
      cr_at = last;
      while (cr_at + 1 < a.pieces.size() && a.pieces[cr_at + 1].tag == "CA") ++cr_at;
      bool any_tv = false;
      bool all_ca = true;
      for (std::size_t k = 0; k < roots.size(); ++k) {
        if (a.pieces[roots[k]].frame == Context::TV) any_tv = true;
        std::size_t end = k + 1 < roots.size() ? roots[k + 1] : a.pieces.size();
        bool ca = false;
        for (std::size_t j = roots[k] + 1; j < end; ++j)
          if (!a.pieces[j].root && a.pieces[j].tag == "CA") ca = true;
        all_ca = all_ca && ca;
      }
      cr_label = any_tv || all_ca ? "TV" : "IV";
    }
  }

  std::string out;
  for (std::size_t i = 0; i < a.pieces.size(); ++i) {
    const AnalysisPiece& p = a.pieces[i];
    if (p.root) {
      if (i == 0) {
        out += p.tag + "." + p.gloss;
      } else {
        switch (a.form[i].root->compound) {
          case CompoundMark::bare:
            out += " +" + p.tag;
            break;
          case CompoundMark::dash:
            out += " -" + p.tag + "." + p.gloss;
            break;
          default:
            out += " +" + p.tag + "." + p.gloss;
        }
      }
    } else if (p.id == "DP.this") {
      std::string before = i > 0 && i - 1 < a.trace.size() ? std::string(to_string(a.trace[i - 1].state)) : "IV";
      out += " +DP.this -CR." + before;
    } else {
      out += (p.joined ? "+" : " +") + p.tag;
    }
    if (i == cr_at) out += " -CR." + cr_label;
  }
  return out;
}

GenerationError::GenerationError(std::vector<Violation> violations)
    : std::runtime_error([&] {
        std::string msg = "invalid sequence:";
        for (const auto& v : violations) msg += " " + std::string(to_string(v.code)) + "@" + std::to_string(v.at);
        return msg;
      }()),
      violations_(std::move(violations)) {}

Analyzer::Analyzer(const Lexicon& lex, const RuleTable& rules, AnalyzerOptions opts)
    : lex_(lex), rules_(rules), opts_(opts) {
  for (const auto& s : lex_.suffixes())
    if (!is_search_excluded(s)) generic_.push_back(&s);
  for (const auto& r : lex_.roots())
    if (r.compound != CompoundMark::none) members_.push_back(&r);
}

std::vector<Analysis> Analyzer::analyse(std::string_view word) const {
  std::string w = normalise(word);
  segment(w);
  if (w.empty()) return {};
  Search search(lex_, rules_, generic_, members_, opts_.max_roots, w);
  std::vector<Analysis> all;
  for (const auto& path : search.run()) expand_senses(path, all);
  std::stable_sort(all.begin(), all.end(), ranks_before);
  std::vector<Analysis> out;
  std::unordered_set<std::string> seen;
  for (auto& a : all)
    if (seen.insert(dedupe_key(a)).second) out.push_back(std::move(a));
  return out;
}

Realization Analyzer::generate_form(const std::vector<FormItem>& items) const {
  auto violations = validate_form(items);
  if (!violations.empty()) throw GenerationError(std::move(violations));

  const RootEntry& first = *items.front().root;
  std::vector<MorphPiece> pieces{MorphPiece::root(first.form, first.key())};
  Realization r;
  r.spans.push_back(first.form);
  r.joined.push_back(false);
  for (std::size_t i = 1; i < items.size(); ++i) {
    const FormItem& it = items[i];
    MorphPiece piece;
    if (it.is_root()) {
      piece = MorphPiece::root(it.root->form, it.root->key());
    } else {
      std::string so_far = detail::join(r.spans, "");
      try {
        auto allos = admissible_allomorphs(*it.suffix, pieces.back(), r.spans.back(), so_far, rules_, false);
        piece = MorphPiece::suffix(allos.front(), it.suffix->id);
      } catch (const AllomorphError&) {
        throw AllomorphError(it.suffix->id, i - 1);  // boundary before item i
      }
    }
    BoundaryOutcome o = apply_boundary(pieces.back(), r.spans.back(), piece, rules_);
    r.spans.back() = std::move(o.left);
    r.spans.push_back(o.fused ? std::string() : std::move(o.right));
    r.joined.push_back(o.fused);
    r.fired.push_back(o.rule);
    pieces.push_back(std::move(piece));
  }
  for (const auto& s : r.spans) r.surface += s;
  return r;
}

std::string Analyzer::generate(const RootEntry& root, Context sense, const std::vector<std::string>& suffix_ids) const {
  std::vector<FormItem> items{FormItem::of_root(root, sense)};
  for (const SuffixEntry* s : resolve_suffixes(lex_, suffix_ids)) items.push_back(FormItem::of_suffix(*s));
  return generate_form(items).surface;
}

std::vector<Analysis> analyse(std::string_view word, const Lexicon& lex, const RuleTable& rules) {
  return Analyzer(lex, rules).analyse(word);
}

}  // namespace mapu
