// Copyright 2026 The mapudungun-morph Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mapumorph/lexicon.hpp"

namespace mapu {

// TV2: a second object on an already transitive stem. Growth stops there.
enum class TraceState { IV, TV, TV2 };

std::string_view to_string(TraceState s);
TraceState to_state(Context c);

TraceState valency_step(TraceState state, ValencyEffect effect);

struct TraceStep {
  std::string id;  // root key or suffix id
  TraceState state;
  bool operator==(const TraceStep&) const = default;
};
using ValencyTrace = std::vector<TraceStep>;

enum class ViolationCode { CA_on_TV, AGR_on_IV, slot_order, slot_conflict, missing_mood, missing_person, um_on_loan };

std::string_view to_string(ViolationCode c);

struct Violation {
  ViolationCode code;
  std::size_t at;  // index into the form items; the last index + 1 for form-level checks
  std::string message;
  bool operator==(const Violation&) const = default;
};

class UnknownMorpheme : public std::invalid_argument {
 public:
  explicit UnknownMorpheme(const std::string& id) : std::invalid_argument("unknown suffix id '" + id + "'") {}
};

class SlotTable {
 public:
  void assign(std::string id, int slot);  // throws std::invalid_argument on a second slot or a bad range
  std::optional<int> slot_of(std::string_view id) const;
  const std::map<std::string, int, std::less<>>& assignments() const { return slots_; }

  static constexpr int mood_slot = 4;
  static constexpr int person_slot = 3;

 private:
  std::map<std::string, int, std::less<>> slots_;
};

SlotTable load_slots(const std::filesystem::path& path);
SlotTable parse_slots(std::string_view text, std::string_view origin = "<memory>");
SlotTable slots_from_lexicon(const Lexicon& lex);

// Slot table against the suffix inventory: every suffix assigned, the same
// slot on both sides, moods only in slot 4.
std::vector<Diagnostic> validate_slots(const SlotTable& slots, const Lexicon& lex);

// One element of a word form: the root, a later compound member, or a suffix.
struct FormItem {
  const RootEntry* root = nullptr;
  Context frame = Context::IV;
  const SuffixEntry* suffix = nullptr;

  static FormItem of_root(const RootEntry& r, Context frame) { return {&r, frame, nullptr}; }
  static FormItem of_suffix(const SuffixEntry& s) { return {nullptr, Context::IV, &s}; }
  bool is_root() const { return root != nullptr; }
  std::string id() const { return root ? root->key() : suffix->id; }
};

// Incremental checker. The analyzer copies it along search paths, so it is a
// plain value; equal states accept equal continuations.
class ConstraintState {
 public:
  ConstraintState(const RootEntry& root, Context frame);

  // Attaches the next item and appends what it breaks.
  void push(const FormItem& item, std::vector<Violation>& out);
  // Form-level checks: mood, person, agents.
  void finish(std::vector<Violation>& out) const;

  TraceState state() const { return state_; }
  int last_slot() const { return last_slot_; }
  std::size_t size() const { return count_; }
  bool after_determiner() const { return prev_dp_; }

  // Compact key for memoisation.
  std::string signature() const;

 private:
  TraceState state_;
  const RootEntry* current_root_;
  int last_slot_ = 37;
  std::size_t count_ = 1;
  std::size_t members_ = 1;
  bool first_is_verb_;
  bool prev_dp_ = false;
  bool last_is_stem_item_ = true;  // last item is a root or a slot 33-36 suffix
  bool has_st_ = false;
  bool has_3p_ = false;
  bool has_inv_ = false;
  bool has_agent_ = false;
  std::string mood_;    // tag of the slot-4 item
  std::string person_;  // tag of the slot-3 item
  std::string number_;  // tag of the slot-2 item
};

std::vector<Violation> validate_form(const std::vector<FormItem>& items);
std::vector<Violation> validate_sequence(const RootEntry& root, Context sense,
                                         const std::vector<const SuffixEntry*>& suffixes);
// Resolves ids through the lexicon first; throws UnknownMorpheme.
std::vector<Violation> validate_sequence(const Lexicon& lex, const RootEntry& root, Context sense,
                                         const std::vector<std::string>& suffix_ids);
std::vector<const SuffixEntry*> resolve_suffixes(const Lexicon& lex, const std::vector<std::string>& ids);

ValencyTrace compute_trace(const std::vector<FormItem>& items);

// Slot 1-36 suffixes whose valency effect depends on the root: -tu increases
// on roots marked tu=increase.
ValencyEffect effective_effect(const SuffixEntry& s, const RootEntry& current_root);

struct CompoundMember {
  const RootEntry* root = nullptr;
  Context frame = Context::IV;
  const SuffixEntry* suffix = nullptr;  // attached slot 33-35 suffix, if any
};

Context compound_valency(const std::vector<CompoundMember>& members);

struct FalPiece {
  std::string surface;
  std::string id;
  bool operator==(const FalPiece&) const = default;
};
using FalSegmentation = std::vector<FalPiece>;

// Readings of a -fal / fa- tail: FORCE -fal and ADJDO -fal on transitive
// stems, and the incorporated determiner fa- followed by CA -l or ST -le.
std::vector<FalSegmentation> fal_segmentations(TraceState stem_state, std::string_view tail);

}  // namespace mapu
