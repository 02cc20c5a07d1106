// Copyright 2026 The mapudungun-morph Authors
// SPDX-License-Identifier: Apache-2.0
#include "mapumorph/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "mapumorph/gloss_tags.hpp"
#include "mapumorph/segments.hpp"
#include "text_util.hpp"

namespace mapu {

using detail::Field;

namespace {

constexpr const char* kAnalysisOnlyNote = "analysis only";

template <typename E, std::size_t N>
std::optional<E> enum_from(std::string_view s, const std::pair<E, std::string_view> (&table)[N]) {
  for (const auto& [e, name] : table)
    if (name == s) return e;
  return std::nullopt;
}

template <typename E, std::size_t N>
std::string_view enum_name(E e, const std::pair<E, std::string_view> (&table)[N]) {
  for (const auto& [v, name] : table)
    if (v == e) return name;
  return "?";
}

const std::pair<Category, std::string_view> kCategories[] = {
    {Category::verb, "verb"},         {Category::noun, "noun"},
    {Category::adjective, "adjective"}, {Category::adverb, "adverb"},
    {Category::demonstrative, "demonstrative"}, {Category::numeral, "numeral"},
    {Category::other, "other"}};
const std::pair<LexValency, std::string_view> kValencies[] = {
    {LexValency::TV, "TV"}, {LexValency::IV, "IV"}, {LexValency::labile, "labile"},
    {LexValency::unknown, "unknown"}};
const std::pair<Context, std::string_view> kContexts[] = {{Context::IV, "IV"}, {Context::TV, "TV"}};
const std::pair<Source, std::string_view> kSources[] = {
    {Source::smeets, "smeets"}, {Source::kona, "kona"}, {Source::augusta, "augusta"},
    {Source::corlexim, "corlexim"}, {Source::user, "user"}};
const std::pair<ValencyEffect, std::string_view> kEffects[] = {
    {ValencyEffect::increase, "increase"}, {ValencyEffect::decrease, "decrease"},
    {ValencyEffect::neutral, "neutral"}, {ValencyEffect::agreement_tv_only, "agreement_tv_only"}};
const std::pair<AttachConstraint, std::string_view> kAttach[] = {
    {AttachConstraint::iv_stem_only, "iv_stem_only"}, {AttachConstraint::tv_stem_only, "tv_stem_only"},
    {AttachConstraint::any, "any"}};
const std::pair<Preceding, std::string_view> kPreceding[] = {
    {Preceding::vowel, "V"}, {Preceding::consonant, "C"}, {Preceding::any, "any"}};
const std::pair<CompoundMark, std::string_view> kMarks[] = {
    {CompoundMark::none, "none"}, {CompoundMark::bare, "bare"}, {CompoundMark::dash, "dash"},
    {CompoundMark::nomark, "nomark"}};

[[noreturn]] void fail(LexiconError::Kind kind, std::string_view origin, std::size_t line,
                       std::size_t column, const std::string& msg) {
  throw LexiconError(kind, std::string(origin), line, column, msg);
}

// Invariant problems of a single root; shared by load and validate.
std::vector<std::string> root_problems(const RootEntry& r) {
  std::vector<std::string> out;
  if (r.form.empty()) out.push_back("empty form");
  else if (!is_alphabetic(r.form)) out.push_back("form '" + r.form + "' is outside the alphabet");
  if (r.senses.empty()) out.push_back("no senses");
  bool has_iv = false, has_tv = false;
  for (const auto& s : r.senses) {
    (s.context == Context::IV ? has_iv : has_tv) = true;
    if (s.gloss.empty()) out.push_back("empty gloss");
  }
  if (r.valency == LexValency::labile && !(has_iv && has_tv))
    out.push_back("labile root '" + r.form + "' needs both an IV and a TV sense");
  if (r.valency == LexValency::IV && has_tv)
    out.push_back("IV root '" + r.form + "' lists a TV sense");
  if (r.valency == LexValency::TV && has_iv)
    out.push_back("TV root '" + r.form + "' lists an IV sense");
  return out;
}

std::vector<std::string> suffix_problems(const SuffixEntry& s) {
  std::vector<std::string> out;
  if (s.id.empty()) out.push_back("empty id");
  if (s.slot < 1 || s.slot > 36) out.push_back("slot " + std::to_string(s.slot) + " outside 1..36");
  if (!is_registered_tag(s.tag)) out.push_back("unregistered tag '" + s.tag + "'");
  if (s.effect == ValencyEffect::agreement_tv_only && s.attach != AttachConstraint::tv_stem_only)
    out.push_back("agreement_tv_only requires tv_stem_only");
  if (s.allomorphs.empty()) out.push_back("no allomorphs");
  int fallbacks = 0, generated = 0;
  std::set<Preceding> seen;
  for (const auto& a : s.allomorphs) {
    if (!a.surface.empty() && !is_alphabetic(a.surface))
      out.push_back("allomorph '" + a.surface + "' is outside the alphabet");
    if (a.analysis_only) continue;
    ++generated;
    if (a.context.requires_preceding == Preceding::any) ++fallbacks;
    if (!seen.insert(a.context.requires_preceding).second)
      out.push_back("two generated allomorphs share a context");
  }
  if (!s.allomorphs.empty() && generated == 0) out.push_back("no generated allomorph");
  if (fallbacks > 1) out.push_back("more than one fallback allomorph");
  return out;
}

RootEntry parse_root_line(std::string_view origin, std::size_t lineno, std::string_view line) {
  auto fields = detail::split_fields(line);
  if (fields.size() < 4 || fields.size() > 6)
    fail(LexiconError::Kind::parse, origin, lineno, 1,
         "expected 4 to 6 tab-separated fields, found " + std::to_string(fields.size()));
  RootEntry r;
  r.form = normalise(detail::trim(fields[0].text));
  auto cat = enum_from(detail::trim(fields[1].text), kCategories);
  if (!cat) fail(LexiconError::Kind::parse, origin, lineno, fields[1].column, "unknown category");
  r.category = *cat;
  auto val = enum_from(detail::trim(fields[2].text), kValencies);
  if (!val) fail(LexiconError::Kind::parse, origin, lineno, fields[2].column, "unknown valency");
  r.valency = *val;
  std::size_t col = fields[3].column;
  for (auto part : detail::split(fields[3].text, '|')) {
    auto colon = part.find(':');
    if (colon == std::string_view::npos)
      fail(LexiconError::Kind::parse, origin, lineno, col, "sense must be CTX:gloss");
    auto ctx = parse_context(part.substr(0, colon));
    if (!ctx) fail(LexiconError::Kind::parse, origin, lineno, col, "sense context must be IV or TV");
    r.senses.push_back({*ctx, std::string(detail::trim(part.substr(colon + 1)))});
    col += part.size() + 1;
  }
  if (fields.size() >= 5 && !detail::trim(fields[4].text).empty()) {
    auto src = enum_from(detail::trim(fields[4].text), kSources);
    if (!src) fail(LexiconError::Kind::parse, origin, lineno, fields[4].column, "unknown source");
    r.source = *src;
  }
  if (fields.size() == 6) {
    col = fields[5].column;
    for (auto attr : detail::split(fields[5].text, ',')) {
      attr = detail::trim(attr);
      if (attr.empty() || attr == "-") {
      } else if (attr == "loan") {
        r.loan = true;
      } else if (attr == "tu=increase") {
        r.tu_increase = true;
      } else if (attr.starts_with("cmp=")) {
        auto mark = enum_from(attr.substr(4), kMarks);
        if (!mark) fail(LexiconError::Kind::parse, origin, lineno, col, "unknown compound mark");
        r.compound = *mark;
      } else {
        fail(LexiconError::Kind::parse, origin, lineno, col, "unknown attribute '" + std::string(attr) + "'");
      }
      col += attr.size() + 1;
    }
  }
  auto problems = root_problems(r);
  if (!problems.empty())
    fail(LexiconError::Kind::invariant, origin, lineno, 1, r.key() + ": " + problems.front());
  return r;
}

SuffixEntry parse_suffix_line(std::string_view origin, std::size_t lineno, std::string_view line) {
  auto fields = detail::split_fields(line);
  if (fields.size() != 6)
    fail(LexiconError::Kind::parse, origin, lineno, 1,
         "expected 6 tab-separated fields, found " + std::to_string(fields.size()));
  SuffixEntry s;
  s.id = std::string(detail::trim(fields[0].text));
  try {
    std::size_t used = 0;
    s.slot = std::stoi(std::string(fields[1].text), &used);
    if (used != fields[1].text.size()) throw std::invalid_argument("slot");
  } catch (const std::exception&) {
    fail(LexiconError::Kind::parse, origin, lineno, fields[1].column, "slot must be an integer");
  }
  s.tag = std::string(detail::trim(fields[2].text));
  if (!is_registered_tag(s.tag))
    fail(LexiconError::Kind::invariant, origin, lineno, fields[2].column, "unregistered tag '" + s.tag + "'");
  auto eff = enum_from(detail::trim(fields[3].text), kEffects);
  if (!eff) fail(LexiconError::Kind::parse, origin, lineno, fields[3].column, "unknown valency effect");
  s.effect = *eff;
  auto att = enum_from(detail::trim(fields[4].text), kAttach);
  if (!att) fail(LexiconError::Kind::parse, origin, lineno, fields[4].column, "unknown attach constraint");
  s.attach = *att;
  std::size_t col = fields[5].column;
  for (auto part : detail::split(fields[5].text, '|')) {
    auto at = part.rfind('@');
    if (at == std::string_view::npos)
      fail(LexiconError::Kind::parse, origin, lineno, col, "allomorph must be surface@context");
    Allomorph a;
    std::string_view ctx = part.substr(at + 1);
    if (ctx.ends_with('*')) {
      a.analysis_only = true;
      a.context.notes = kAnalysisOnlyNote;
      ctx.remove_suffix(1);
    }
    auto pre = enum_from(ctx, kPreceding);
    if (!pre) fail(LexiconError::Kind::parse, origin, lineno, col + at + 1, "context must be V, C or any");
    a.context.requires_preceding = *pre;
    std::string surface = normalise(part.substr(0, at));
    a.surface = (surface == "ø") ? std::string() : surface;
    s.allomorphs.push_back(std::move(a));
    col += part.size() + 1;
  }
  auto problems = suffix_problems(s);
  if (!problems.empty())
    fail(LexiconError::Kind::invariant, origin, lineno, 1, s.id + ": " + problems.front());
  return s;
}

}  // namespace

LexiconError::LexiconError(Kind kind, std::string origin, std::size_t line, std::size_t column,
                           const std::string& message)
    : std::runtime_error(origin + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      kind_(kind),
      origin_(std::move(origin)),
      line_(line),
      column_(column) {}

std::string RootEntry::key() const { return form + "/" + std::string(to_string(category)); }

const RootEntry& Lexicon::add_root(RootEntry root) {
  std::string key = root.key();
  if (root_index_.count(key))
    throw LexiconError(LexiconError::Kind::duplicate, "<lexicon>", 0, 0, "duplicate root " + key);
  roots_.push_back(std::move(root));
  root_index_.emplace(key, &roots_.back());
  return roots_.back();
}

const SuffixEntry& Lexicon::add_suffix(SuffixEntry suffix) {
  if (suffix_index_.count(suffix.id))
    throw LexiconError(LexiconError::Kind::duplicate, "<lexicon>", 0, 0, "duplicate suffix " + suffix.id);
  suffixes_.push_back(std::move(suffix));
  suffix_index_.emplace(suffixes_.back().id, &suffixes_.back());
  return suffixes_.back();
}

const RootEntry* Lexicon::find_root(std::string_view form, Category category) const {
  std::string key = std::string(form) + "/" + std::string(to_string(category));
  auto it = root_index_.find(key);
  return it == root_index_.end() ? nullptr : it->second;
}

const RootEntry* Lexicon::find_root_key(std::string_view key) const {
  auto it = root_index_.find(key);
  if (it != root_index_.end()) return it->second;
  auto all = find_roots(key);
  return all.size() == 1 ? all.front() : nullptr;
}

std::vector<const RootEntry*> Lexicon::find_roots(std::string_view form) const {
  std::vector<const RootEntry*> out;
  for (const auto& r : roots_)
    if (r.form == form) out.push_back(&r);
  return out;
}

const SuffixEntry* Lexicon::find_suffix(std::string_view id) const {
  auto it = suffix_index_.find(id);
  return it == suffix_index_.end() ? nullptr : it->second;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw LexiconError(LexiconError::Kind::io, path.string(), 0, 0, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Lexicon parse_lexicon(std::string_view text, std::string_view origin) {
  Lexicon lex;
  detail::for_each_data_line(text, [&](std::size_t lineno, std::string_view line) {
    RootEntry r = parse_root_line(origin, lineno, line);
    if (lex.find_root(r.form, r.category))
      fail(LexiconError::Kind::duplicate, origin, lineno, 1, "duplicate (form, category) " + r.key());
    lex.add_root(std::move(r));
  });
  return lex;
}

void parse_suffixes(Lexicon& lex, std::string_view text, std::string_view origin) {
  detail::for_each_data_line(text, [&](std::size_t lineno, std::string_view line) {
    SuffixEntry s = parse_suffix_line(origin, lineno, line);
    if (lex.find_suffix(s.id)) fail(LexiconError::Kind::duplicate, origin, lineno, 1, "duplicate suffix " + s.id);
    lex.add_suffix(std::move(s));
  });
}

Lexicon load_lexicon(const std::filesystem::path& roots_path) {
  return parse_lexicon(read_text_file(roots_path), roots_path.string());
}

Lexicon load_lexicon(const std::filesystem::path& roots_path, const std::filesystem::path& suffixes_path) {
  Lexicon lex = load_lexicon(roots_path);
  load_suffixes(lex, suffixes_path);
  return lex;
}

void load_suffixes(Lexicon& lex, const std::filesystem::path& suffixes_path) {
  parse_suffixes(lex, read_text_file(suffixes_path), suffixes_path.string());
}

std::string serialise(const Lexicon& lex) {
  std::ostringstream out;
  for (const auto& r : lex.roots()) {
    std::vector<std::string> senses;
    for (const auto& s : r.senses) senses.push_back(std::string(to_string(s.context)) + ":" + s.gloss);
    std::vector<std::string> attrs;
    if (r.loan) attrs.push_back("loan");
    if (r.tu_increase) attrs.push_back("tu=increase");
    if (r.compound != CompoundMark::marked) attrs.push_back("cmp=" + std::string(enum_name(r.compound, kMarks)));
    out << r.form << '\t' << to_string(r.category) << '\t' << to_string(r.valency) << '\t'
        << detail::join(senses, "|") << '\t' << to_string(r.source);
    if (!attrs.empty()) out << '\t' << detail::join(attrs, ",");
    out << '\n';
  }
  return out.str();
}

std::string serialise_suffixes(const Lexicon& lex) {
  std::ostringstream out;
  for (const auto& s : lex.suffixes()) {
    std::vector<std::string> allos;
    for (const auto& a : s.allomorphs) {
      std::string item = (a.surface.empty() ? "ø" : a.surface) + "@" +
                         std::string(enum_name(a.context.requires_preceding, kPreceding));
      if (a.analysis_only) item += "*";
      allos.push_back(item);
    }
    out << s.id << '\t' << s.slot << '\t' << s.tag << '\t' << to_string(s.effect) << '\t'
        << to_string(s.attach) << '\t' << detail::join(allos, "|") << '\n';
  }
  return out.str();
}

bool same_entries(const Lexicon& a, const Lexicon& b) {
  if (a.root_count() != b.root_count() || a.suffix_count() != b.suffix_count()) return false;
  for (const auto& r : a.roots()) {
    const RootEntry* other = b.find_root(r.form, r.category);
    if (!other || !(*other == r)) return false;
  }
  for (const auto& s : a.suffixes()) {
    const SuffixEntry* other = b.find_suffix(s.id);
    if (!other || !(*other == s)) return false;
  }
  return true;
}

std::vector<Diagnostic> validate_lexicon(const Lexicon& lex) {
  std::vector<Diagnostic> out;
  for (const auto& r : lex.roots())
    for (auto& p : root_problems(r)) out.push_back({r.key(), p});
  for (const auto& s : lex.suffixes())
    for (auto& p : suffix_problems(s)) out.push_back({s.id, p});
  // Mood and person are the obligatory slots; their suffixes must not stray.
  static const std::set<std::string, std::less<>> moods = {"IND", "IND1SG", "SJI"};
  static const std::set<std::string, std::less<>> persons = {"1", "2", "3"};
  for (const auto& s : lex.suffixes()) {
    if (moods.count(s.tag) && s.slot != 4)
      out.push_back({s.id, "mood suffix outside slot 4"});
    if (persons.count(s.tag) && s.slot != 3)
      out.push_back({s.id, "person suffix outside slot 3"});
    if (s.slot == 4 && persons.count(s.tag))
      out.push_back({s.id, "person suffix collides with the mood slot"});
    if (s.slot == 3 && moods.count(s.tag))
      out.push_back({s.id, "mood suffix collides with the person slot"});
  }
  return out;
}

std::vector<const RootEntry*> lookup_roots(const Lexicon& lex, std::string_view word) {
  std::vector<const RootEntry*> out;
  if (word.empty()) return out;
  for (const auto& r : lex.roots())
    if (!r.form.empty() && word.starts_with(r.form)) out.push_back(&r);
  std::stable_sort(out.begin(), out.end(), [](const RootEntry* a, const RootEntry* b) {
    if (a->form.size() != b->form.size()) return a->form.size() > b->form.size();
    if (a->form != b->form) return a->form < b->form;
    return a->category < b->category;
  });
  return out;
}

std::string_view to_string(Category c) { return enum_name(c, kCategories); }
std::string_view to_string(LexValency v) { return enum_name(v, kValencies); }
std::string_view to_string(Context c) { return enum_name(c, kContexts); }
std::string_view to_string(Source s) { return enum_name(s, kSources); }
std::string_view to_string(ValencyEffect e) { return enum_name(e, kEffects); }
std::string_view to_string(AttachConstraint a) { return enum_name(a, kAttach); }
std::optional<Category> parse_category(std::string_view s) { return enum_from(s, kCategories); }
std::optional<Context> parse_context(std::string_view s) { return enum_from(s, kContexts); }

std::string root_label(const RootEntry& root, const Sense& sense) {
  switch (root.category) {
    case Category::noun: return "NN";
    case Category::adjective: return "AJ";
    case Category::adverb: return "AV";
    case Category::demonstrative: return "DP";
    case Category::numeral: return "NU";
    default: return std::string(to_string(sense.context));
  }
}

}  // namespace mapu
