// Copyright 2026 The mapudungun-morph Authors
// SPDX-License-Identifier: Apache-2.0
#include "mapumorph/morphotactics.hpp"

#include <algorithm>
#include <charconv>

#include "text_util.hpp"

namespace mapu {

namespace {

bool is_finite_mood(std::string_view tag) { return tag == "IND" || tag == "IND1SG" || tag == "SJI"; }

bool is_nominal_mood(std::string_view tag) {
  return tag == "OVN" || tag == "SVN" || tag == "PVN" || tag == "IVN" || tag == "NOM" || tag == "ADJDO";
}

std::string template_for(ViolationCode code) {
  switch (code) {
    case ViolationCode::CA_on_TV:
      return "causative needs an intransitive stem";
    case ViolationCode::AGR_on_IV:
      return "needs a transitive stem";
    case ViolationCode::slot_order:
      return "out of slot order";
    case ViolationCode::slot_conflict:
      return "conflicts with another suffix";
    case ViolationCode::missing_mood:
      return "finite form without a mood";
    case ViolationCode::missing_person:
      return "missing person marking";
    case ViolationCode::um_on_loan:
      return "-(ü)m does not attach to loan roots";
  }
  return {};
}

Violation make(ViolationCode code, std::size_t at, std::string_view subject, std::string_view detail = {}) {
  std::string msg = std::string(subject) + ": " + template_for(code);
  if (!detail.empty()) msg += " (" + std::string(detail) + ")";
  return {code, at, std::move(msg)};
}

}  // namespace

std::string_view to_string(TraceState s) {
  switch (s) {
    case TraceState::IV:
      return "IV";
    case TraceState::TV:
      return "TV";
    case TraceState::TV2:
      return "TV2";
  }
  return "?";
}

TraceState to_state(Context c) { return c == Context::TV ? TraceState::TV : TraceState::IV; }

TraceState valency_step(TraceState state, ValencyEffect effect) {
  switch (effect) {
    case ValencyEffect::increase:
      return state == TraceState::IV ? TraceState::TV : TraceState::TV2;
    case ValencyEffect::decrease:
      return state == TraceState::TV2 ? TraceState::TV : TraceState::IV;
    case ValencyEffect::neutral:
    case ValencyEffect::agreement_tv_only:
      return state;
  }
  return state;
}

std::string_view to_string(ViolationCode c) {
  switch (c) {
    case ViolationCode::CA_on_TV:
      return "CA_on_TV";
    case ViolationCode::AGR_on_IV:
      return "AGR_on_IV";
    case ViolationCode::slot_order:
      return "slot_order";
    case ViolationCode::slot_conflict:
      return "slot_conflict";
    case ViolationCode::missing_mood:
      return "missing_mood";
    case ViolationCode::missing_person:
      return "missing_person";
    case ViolationCode::um_on_loan:
      return "um_on_loan";
  }
  return "?";
}

void SlotTable::assign(std::string id, int slot) {
  if (slot < 1 || slot > 36) throw std::invalid_argument("slot " + std::to_string(slot) + " out of range for " + id);
  auto it = slots_.find(id);
  if (it != slots_.end() && it->second != slot) throw std::invalid_argument(id + " assigned to two slots");
  slots_[std::move(id)] = slot;
}

std::optional<int> SlotTable::slot_of(std::string_view id) const {
  auto it = slots_.find(id);
  if (it == slots_.end()) return std::nullopt;
  return it->second;
}

SlotTable parse_slots(std::string_view text, std::string_view origin) {
  SlotTable table;
  const std::string org(origin);
  detail::for_each_data_line(text, [&](std::size_t lineno, std::string_view line) {
    auto fields = detail::split_fields(line);
    if (fields.size() != 2)
      throw LexiconError(LexiconError::Kind::parse, org, lineno, 1, "expected suffix-id<TAB>slot");
    std::string_view num = detail::trim(fields[1].text);
    int slot = 0;
    auto [p, ec] = std::from_chars(num.data(), num.data() + num.size(), slot);
    if (ec != std::errc() || p != num.data() + num.size())
      throw LexiconError(LexiconError::Kind::parse, org, lineno, fields[1].column, "slot is not an integer");
    try {
      table.assign(std::string(detail::trim(fields[0].text)), slot);
    } catch (const std::invalid_argument& e) {
      throw LexiconError(LexiconError::Kind::invariant, org, lineno, fields[0].column, e.what());
    }
  });
  return table;
}

SlotTable load_slots(const std::filesystem::path& path) { return parse_slots(read_text_file(path), path.string()); }

SlotTable slots_from_lexicon(const Lexicon& lex) {
  SlotTable t;
  for (const auto& s : lex.suffixes()) t.assign(s.id, s.slot);
  return t;
}

std::vector<Diagnostic> validate_slots(const SlotTable& slots, const Lexicon& lex) {
  std::vector<Diagnostic> out;
  for (const auto& s : lex.suffixes()) {
    auto slot = slots.slot_of(s.id);
    if (!slot) {
      out.push_back({s.id, "suffix has no slot assignment"});
      continue;
    }
    if (*slot != s.slot)
      out.push_back({s.id, "slot table says " + std::to_string(*slot) + ", suffix file says " + std::to_string(s.slot)});
    if (is_finite_mood(s.tag) && *slot != SlotTable::mood_slot) out.push_back({s.id, "mood outside slot 4"});
  }
  for (const auto& [id, slot] : slots.assignments())
    if (!lex.find_suffix(id)) out.push_back({id, "slot assigned to an unknown suffix"});
  return out;
}

ValencyEffect effective_effect(const SuffixEntry& s, const RootEntry& current_root) {
  if (s.tag == "TR" && current_root.tu_increase) return ValencyEffect::increase;
  return s.effect;
}

ConstraintState::ConstraintState(const RootEntry& root, Context frame)
    : state_(to_state(frame)), current_root_(&root), first_is_verb_(root.category == Category::verb) {}

void ConstraintState::push(const FormItem& item, std::vector<Violation>& out) {
  const std::size_t at = count_++;
  if (item.is_root()) {
    const std::string id = item.root->key();
    if (last_slot_ < 33) out.push_back(make(ViolationCode::slot_order, at, id, "compound member after inflection"));
    if (prev_dp_) out.push_back(make(ViolationCode::slot_conflict, at, id, "determiner fa- must be followed by -l or -le"));
    current_root_ = item.root;
    state_ = to_state(item.frame);
    last_slot_ = 37;
    ++members_;
    prev_dp_ = false;
    last_is_stem_item_ = true;
    return;
  }

  const SuffixEntry& s = *item.suffix;
  if (prev_dp_ && s.id != "CA.l" && s.id != "ST.küle")
    out.push_back(make(ViolationCode::slot_conflict, at, s.id, "determiner fa- must be followed by -l or -le"));
  if (s.slot == last_slot_)
    out.push_back(make(ViolationCode::slot_conflict, at, s.id, "slot " + std::to_string(s.slot) + " already filled"));
  else if (s.slot > last_slot_)
    out.push_back(make(ViolationCode::slot_order, at, s.id,
                       "slot " + std::to_string(s.slot) + " after slot " + std::to_string(last_slot_)));
  last_slot_ = std::min(last_slot_, s.slot);

  // C1, with the fa-l construction allowed on transitive stems.
  if (s.attach == AttachConstraint::iv_stem_only && state_ != TraceState::IV && !(prev_dp_ && s.id == "CA.l"))
    out.push_back(make(ViolationCode::CA_on_TV, at, s.id, "stem is " + std::string(to_string(state_))));
  if (s.id == "CA.m" && current_root_->loan) out.push_back(make(ViolationCode::um_on_loan, at, s.id));
  // C3; -fal and the adjectiviser use the same stem requirement.
  if (s.attach == AttachConstraint::tv_stem_only && state_ == TraceState::IV)
    out.push_back(make(ViolationCode::AGR_on_IV, at, s.id, "stem is IV"));
  if ((s.tag == "ST" && has_3p_) || (s.slot == 6 && has_st_))
    out.push_back(make(ViolationCode::slot_conflict, at, s.id, "-(kü)le excludes slot 6"));

  state_ = valency_step(state_, effective_effect(s, *current_root_));

  if (s.slot == SlotTable::mood_slot) mood_ = s.tag;
  if (s.slot == SlotTable::person_slot) person_ = s.tag;
  if (s.slot == 2) number_ = s.tag;
  if (s.slot == 1) has_agent_ = true;
  if (s.tag == "INV") has_inv_ = true;
  if (s.slot == 6) has_3p_ = true;
  if (s.tag == "ST") has_st_ = true;
  prev_dp_ = s.id == "DP.this";
  last_is_stem_item_ = s.slot >= 33;
}

void ConstraintState::finish(std::vector<Violation>& out) const {
  const std::size_t at = count_;
  const std::string subject = "form";
  if (prev_dp_) out.push_back(make(ViolationCode::slot_conflict, at, "DP.this", "determiner fa- must be followed by -l or -le"));

  if (is_finite_mood(mood_)) {
    if (mood_ == "IND1SG" && !person_.empty())
      out.push_back(make(ViolationCode::slot_conflict, at, subject, "IND1SG already marks the person"));
    if (mood_ != "IND1SG" && person_.empty()) out.push_back(make(ViolationCode::missing_person, at, subject));
    // First singular indicative is the -(ü)n portmanteau.
    if (mood_ == "IND" && person_ == "1" && number_ != "DL" && number_ != "PL")
      out.push_back(make(ViolationCode::slot_conflict, at, subject, "IND +1 singular is IND1SG"));
  } else if (is_nominal_mood(mood_)) {
    if (!person_.empty() || !number_.empty() || has_agent_)
      out.push_back(make(ViolationCode::slot_conflict, at, subject, mood_ + " takes no person"));
  } else if (count_ == 1) {
    if (first_is_verb_) out.push_back(make(ViolationCode::missing_mood, at, subject, "bare verb root"));
  } else if (!last_is_stem_item_) {
    out.push_back(make(ViolationCode::missing_mood, at, subject));
  }

  // Number rides on person; the zero singular only shows up with 1st/2nd person.
  if (!number_.empty() && person_.empty())
    out.push_back(make(ViolationCode::slot_conflict, at, subject, "number without person"));
  else if (number_ == "SG" && person_ != "1" && person_ != "2")
    out.push_back(make(ViolationCode::slot_conflict, at, subject, "singular marked with third person"));

  if (has_inv_ && !has_agent_) out.push_back(make(ViolationCode::missing_person, at, subject, "inverse without agent"));
  if (has_agent_ && !has_inv_) out.push_back(make(ViolationCode::slot_conflict, at, subject, "agent without inverse"));
}

std::string ConstraintState::signature() const {
  std::string sig;
  sig += current_root_->key();
  sig += '|';
  sig += to_string(state_);
  sig += '|' + std::to_string(last_slot_) + '|' + std::to_string(count_ == 1) + std::to_string(members_ > 1);
  sig += prev_dp_ ? 'D' : '-';
  sig += last_is_stem_item_ ? 'S' : '-';
  sig += has_st_ ? 'K' : '-';
  sig += has_3p_ ? 'F' : '-';
  sig += has_inv_ ? 'E' : '-';
  sig += has_agent_ ? 'A' : '-';
  sig += '|' + mood_ + '|' + person_ + '|' + number_;
  return sig;
}

std::vector<Violation> validate_form(const std::vector<FormItem>& items) {
  std::vector<Violation> out;
  if (items.empty() || !items.front().is_root()) {
    out.push_back(make(ViolationCode::slot_order, 0, "form", "a form starts with a root"));
    return out;
  }
  ConstraintState st(*items.front().root, items.front().frame);
  for (std::size_t i = 1; i < items.size(); ++i) st.push(items[i], out);
  st.finish(out);
  return out;
}

std::vector<const SuffixEntry*> resolve_suffixes(const Lexicon& lex, const std::vector<std::string>& ids) {
  std::vector<const SuffixEntry*> out;
  out.reserve(ids.size());
  for (const auto& id : ids) {
    const SuffixEntry* s = lex.find_suffix(id);
    if (!s) throw UnknownMorpheme(id);
    out.push_back(s);
  }
  return out;
}

std::vector<Violation> validate_sequence(const RootEntry& root, Context sense,
                                         const std::vector<const SuffixEntry*>& suffixes) {
  std::vector<FormItem> items{FormItem::of_root(root, sense)};
  for (const auto* s : suffixes) items.push_back(FormItem::of_suffix(*s));
  return validate_form(items);
}

std::vector<Violation> validate_sequence(const Lexicon& lex, const RootEntry& root, Context sense,
                                         const std::vector<std::string>& suffix_ids) {
  return validate_sequence(root, sense, resolve_suffixes(lex, suffix_ids));
}

ValencyTrace compute_trace(const std::vector<FormItem>& items) {
  ValencyTrace trace;
  if (items.empty() || !items.front().is_root()) return trace;
  const RootEntry* current = items.front().root;
  TraceState state = to_state(items.front().frame);
  trace.push_back({current->key(), state});
  for (std::size_t i = 1; i < items.size(); ++i) {
    const auto& it = items[i];
    if (it.is_root()) {
      current = it.root;
      state = to_state(it.frame);
    } else {
      state = valency_step(state, effective_effect(*it.suffix, *current));
    }
    trace.push_back({it.id(), state});
  }
  return trace;
}

Context compound_valency(const std::vector<CompoundMember>& members) {
  if (members.empty()) throw std::invalid_argument("compound_valency needs members");
  const auto& last = members.back();
  if (last.suffix && last.suffix->tag == "CA") return Context::TV;
  return last.frame;
}

std::vector<FalSegmentation> fal_segmentations(TraceState stem_state, std::string_view tail) {
  std::vector<FalSegmentation> out;
  const bool fal = tail.substr(0, 3) == "fal";
  const bool transitive = stem_state != TraceState::IV;
  if (fal && transitive) out.push_back({{"fal", "FORCE.fal"}});
  if (tail == "fal" && transitive) out.push_back({{"fal", "ADJDO.fal"}});
  if (fal) out.push_back({{"fa", "DP.this"}, {"l", "CA.l"}});
  if (tail.substr(0, 4) == "fale") out.push_back({{"fa", "DP.this"}, {"le", "ST.küle"}});
  return out;
}

}  // namespace mapu
