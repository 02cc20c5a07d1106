// Copyright 2026 The mapudungun-morph Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <deque>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mapu {

enum class Category { verb, noun, adjective, adverb, demonstrative, numeral, other };
enum class LexValency { TV, IV, labile, unknown };
enum class Context { IV, TV };
enum class Source { smeets, kona, augusta, corlexim, user };

// How a root is displayed when it is a later member of a compound stem.
enum class CompoundMark {
  marked,  // "+IV.go-up", followed by a -CR marker
  none,    // never a compound member
  bare,    // category only: "+NN"
  dash,    // "-TV.take"
  nomark,  // "+TV.put", no -CR marker
};

struct Sense {
  Context context = Context::IV;
  std::string gloss;
  bool operator==(const Sense&) const = default;
};

struct RootEntry {
  std::string form;
  Category category = Category::verb;
  LexValency valency = LexValency::unknown;
  std::vector<Sense> senses;
  Source source = Source::user;
  bool loan = false;
  CompoundMark compound = CompoundMark::marked;
  bool tu_increase = false;

  // "form/category"; unique within a lexicon.
  std::string key() const;
  bool operator==(const RootEntry&) const = default;
};

enum class Preceding { vowel, consonant, any };

struct AllomorphContext {
  Preceding requires_preceding = Preceding::any;
  std::string notes;
  bool operator==(const AllomorphContext&) const = default;
};

struct Allomorph {
  std::string surface;  // may be empty (zero morph)
  AllomorphContext context;
  bool analysis_only = false;
  bool operator==(const Allomorph&) const = default;
};

enum class ValencyEffect { increase, decrease, neutral, agreement_tv_only };
enum class AttachConstraint { iv_stem_only, tv_stem_only, any };

struct SuffixEntry {
  std::string id;
  std::vector<Allomorph> allomorphs;
  int slot = 0;
  std::string tag;
  ValencyEffect effect = ValencyEffect::neutral;
  AttachConstraint attach = AttachConstraint::any;
  bool operator==(const SuffixEntry&) const = default;
};

struct Diagnostic {
  std::string subject;  // root key, suffix id or file position
  std::string message;
  bool operator==(const Diagnostic&) const = default;
};

class LexiconError : public std::runtime_error {
 public:
  enum class Kind { io, parse, invariant, duplicate };
  LexiconError(Kind kind, std::string origin, std::size_t line, std::size_t column,
               const std::string& message);
  Kind kind() const { return kind_; }
  const std::string& origin() const { return origin_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  Kind kind_;
  std::string origin_;
  std::size_t line_;
  std::size_t column_;
};

/// Root and suffix inventories. Entries live in deques so pointers handed
/// out by the lookups stay valid while the lexicon is alive.
class Lexicon {
 public:
  // No invariant checks here (tests build broken lexicons on purpose);
  // duplicates of (form, category) or suffix id still throw.
  const RootEntry& add_root(RootEntry root);
  const SuffixEntry& add_suffix(SuffixEntry suffix);

  const std::deque<RootEntry>& roots() const { return roots_; }
  const std::deque<SuffixEntry>& suffixes() const { return suffixes_; }

  const RootEntry* find_root(std::string_view form, Category category) const;
  const RootEntry* find_root_key(std::string_view key) const;  // "form/category" or bare form
  std::vector<const RootEntry*> find_roots(std::string_view form) const;
  const SuffixEntry* find_suffix(std::string_view id) const;

  std::size_t root_count() const { return roots_.size(); }
  std::size_t suffix_count() const { return suffixes_.size(); }

 private:
  std::deque<RootEntry> roots_;
  std::deque<SuffixEntry> suffixes_;
  std::map<std::string, const RootEntry*, std::less<>> root_index_;
  std::map<std::string, const SuffixEntry*, std::less<>> suffix_index_;
};

// Root file: form, category, valency, senses[, source[, attributes]].
Lexicon load_lexicon(const std::filesystem::path& roots_path);
Lexicon load_lexicon(const std::filesystem::path& roots_path,
                     const std::filesystem::path& suffixes_path);
void load_suffixes(Lexicon& lex, const std::filesystem::path& suffixes_path);

Lexicon parse_lexicon(std::string_view text, std::string_view origin = "<memory>");
void parse_suffixes(Lexicon& lex, std::string_view text, std::string_view origin = "<memory>");

std::string serialise(const Lexicon& lex);           // roots, load_lexicon format
std::string serialise_suffixes(const Lexicon& lex);  // suffix file format

// Order-insensitive equality of both inventories.
bool same_entries(const Lexicon& a, const Lexicon& b);

std::vector<Diagnostic> validate_lexicon(const Lexicon& lex);

// Roots whose form is a prefix of word, longest first.
std::vector<const RootEntry*> lookup_roots(const Lexicon& lex, std::string_view word);

std::string_view to_string(Category c);
std::string_view to_string(LexValency v);
std::string_view to_string(Context c);
std::string_view to_string(Source s);
std::string_view to_string(ValencyEffect e);
std::string_view to_string(AttachConstraint a);
std::optional<Category> parse_category(std::string_view s);
std::optional<Context> parse_context(std::string_view s);

// Display label of a root under a sense: IV/TV for verbs, NN/AJ/AV/DP/NU otherwise.
std::string root_label(const RootEntry& root, const Sense& sense);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace mapu
