// Copyright 2026 The mapudungun-morph Authors
// SPDX-License-Identifier: Apache-2.0
#include "mapumorph/classifier.hpp"

#include <algorithm>
#include <set>

namespace mapu {

namespace {

struct Hits {
  bool iv = false;
  bool tv = false;
  bool kle = false;
  bool ke_tv = false;
};

Hits hits_of(const Analysis& a) {
  Hits h;
  if (a.pieces.empty() || a.form.empty() || !a.form.front().is_root()) return h;
  const RootEntry& root = *a.form.front().root;
  const TraceState first = a.trace.empty() ? to_state(a.form.front().frame) : a.trace.front().state;

  if (a.form.size() > 1 && !a.form[1].is_root() && a.form[1].suffix->tag == "CA" && first == TraceState::IV)
    h.iv = true;

  bool blocked = false;
  bool agreement = false;
  for (std::size_t i = 1; i < a.form.size(); ++i) {
    const FormItem& it = a.form[i];
    if (it.is_root()) {
      blocked = true;
      continue;
    }
    const SuffixEntry& s = *it.suffix;
    if (s.tag == "3P" || s.tag == "INV") {
      agreement = true;
      if (!blocked) h.tv = true;
    }
    if (effective_effect(s, root) == ValencyEffect::increase) blocked = true;
    if (s.tag == "ST") h.kle = true;
  }
  for (const auto& it : a.form)
    if (!it.is_root() && it.suffix->tag == "HAB" && (agreement || a.form.front().frame == Context::TV)) h.ke_tv = true;
  return h;
}

std::string cite(std::string_view what, int n) { return std::string(what) + "=" + std::to_string(n); }

}  // namespace

std::string_view to_string(Label l) {
  switch (l) {
    case Label::TV:
      return "TV";
    case Label::IV:
      return "IV";
    case Label::labile:
      return "labile";
    case Label::undetermined:
      return "undetermined";
  }
  return "?";
}

std::optional<Label> parse_label(std::string_view s) {
  for (Label l : {Label::TV, Label::IV, Label::labile, Label::undetermined})
    if (to_string(l) == s) return l;
  return std::nullopt;
}

Evidence collect_evidence(std::string_view root_form, const std::vector<CorpusEntry>& corpus) {
  Evidence e;
  e.root = std::string(root_form);
  for (const auto& entry : corpus) {
    const Analysis& a = entry.analysis;
    if (a.form.empty() || !a.form.front().is_root() || a.form.front().root->form != root_form) continue;
    Hits h = hits_of(a);
    e.iv_hits += h.iv;
    e.tv_hits += h.tv;
    e.kle_hits += h.kle;
    e.ke_tv_hits += h.ke_tv;
    ++e.total;
    ++e.sources[entry.source];
  }
  return e;
}

Verdict classify(const Evidence& e, ClassifyOptions opts) {
  Verdict v;
  const bool iv = e.iv_hits >= opts.threshold;
  const bool tv = e.tv_hits >= opts.threshold;
  if (iv && tv) v.label = Label::labile;
  else if (iv) v.label = Label::IV;
  else if (tv) v.label = Label::TV;
  v.rationale.push_back(cite("iv_hits", e.iv_hits));
  v.rationale.push_back(cite("tv_hits", e.tv_hits));
  if (opts.soft_features) {
    if (e.kle_hits) v.rationale.push_back(cite("kle_hits", e.kle_hits) + " (soft)");
    if (e.ke_tv_hits) v.rationale.push_back(cite("ke_tv_hits", e.ke_tv_hits) + " (soft)");
  }
  return v;
}

Verdict reconcile(const SourcedVerdict& a, const SourcedVerdict& b) {
  const Label la = a.verdict.label;
  const Label lb = b.verdict.label;
  Verdict out;
  out.rationale = a.verdict.rationale;
  out.rationale.insert(out.rationale.end(), b.verdict.rationale.begin(), b.verdict.rationale.end());
  if (a.verdict.discrepancy) out.discrepancy = a.verdict.discrepancy;
  else if (b.verdict.discrepancy) out.discrepancy = b.verdict.discrepancy;

  if (la == lb) {
    out.label = la;
  } else if (la == Label::undetermined) {
    out.label = lb;
  } else if (lb == Label::undetermined) {
    out.label = la;
  } else if (la == Label::labile || lb == Label::labile) {
    out.label = Label::labile;
  } else {
    out.label = Label::IV;
    out.discrepancy = std::make_pair(a.source + ":" + std::string(to_string(la)),
                                     b.source + ":" + std::string(to_string(lb)));
    out.rationale.push_back("IV preferred over TV");
  }
  return out;
}

std::vector<ClassifierRow> classify_corpus(const std::vector<CorpusEntry>& corpus, const Lexicon& lex,
                                           ClassifyOptions opts) {
  std::set<std::string> roots;
  std::set<std::string> sources;
  for (const auto& entry : corpus) {
    if (!entry.analysis.form.empty() && entry.analysis.form.front().is_root())
      roots.insert(entry.analysis.form.front().root->form);
    sources.insert(entry.source);
  }

  std::vector<ClassifierRow> rows;
  for (const auto& root : roots) {
    ClassifierRow row;
    row.root = root;
    row.evidence = collect_evidence(root, corpus);
    row.verdict = classify(row.evidence, opts);

    std::optional<SourcedVerdict> folded;
    for (const auto& src : sources) {
      std::vector<CorpusEntry> part;
      for (const auto& entry : corpus)
        if (entry.source == src) part.push_back(entry);
      Evidence e = collect_evidence(root, part);
      if (e.total == 0) continue;
      SourcedVerdict sv{src, classify(e, opts)};
      folded = folded ? SourcedVerdict{folded->source + "+" + src, reconcile(*folded, sv)} : sv;
    }
    // The label stays on pooled evidence: a root attested IV in one source and
    // TV in another is labile (yewe). The fold only reports the disagreement.
    if (folded && folded->verdict.discrepancy)
      row.discrepancy = folded->verdict.discrepancy->first + "/" + folded->verdict.discrepancy->second;
    rows.push_back(std::move(row));
  }

  for (const auto& r : lex.roots()) {
    if (r.valency != LexValency::labile || roots.count(r.form)) continue;
    if (std::any_of(rows.begin(), rows.end(), [&](const ClassifierRow& x) { return x.root == r.form; })) continue;
    ClassifierRow row;
    row.root = r.form;
    row.evidence.root = r.form;
    row.verdict.label = Label::labile;
    row.verdict.rationale.push_back("lexicon assertion");
    row.asserted = true;
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const ClassifierRow& a, const ClassifierRow& b) { return a.root < b.root; });
  return rows;
}

}  // namespace mapu
