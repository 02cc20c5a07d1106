// Copyright 2026 The mapudungun-morph Authors
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <algorithm>

#include "mapumorph/gloss_tags.hpp"
#include "mapumorph/lexicon.hpp"
#include "mapumorph/morphotactics.hpp"
#include "mapumorph/segments.hpp"
#include "support.hpp"

namespace mapu {
namespace {

using testing::Shipped;

TEST(Segments, DigraphsAreSingleSegments) {
  EXPECT_EQ(segment("chaw"), (std::vector<std::string>{"ch", "a", "w"}));
  EXPECT_EQ(segment("llüka"), (std::vector<std::string>{"ll", "ü", "k", "a"}));
  EXPECT_EQ(segment("ngülüm"), (std::vector<std::string>{"ng", "ü", "l", "ü", "m"}));
  EXPECT_EQ(segment("trongo"), (std::vector<std::string>{"tr", "o", "ng", "o"}));
}

TEST(Segments, NormaliseFoldsDecomposedLetters) {
  EXPECT_EQ(normalise("Ku\xCC\x88pa"), "küpa");
  EXPECT_EQ(normalise("n\xCC\x83ma"), "ñma");
}

TEST(Segments, RejectsForeignLetters) {
  EXPECT_THROW(segment("küpax"), AlphabetError);
  EXPECT_THROW(segment("pü2"), AlphabetError);
  EXPECT_FALSE(is_alphabetic("hola!"));
  try {
    segment("küpaq");
    FAIL();
  } catch (const AlphabetError& e) {
    EXPECT_EQ(e.offending(), "q");
  }
}

TEST(Segments, VowelFinal) {
  EXPECT_TRUE(ends_in_vowel("küpa"));
  EXPECT_TRUE(ends_in_vowel("tofkü"));
  EXPECT_FALSE(ends_in_vowel("lleg"));
  EXPECT_FALSE(ends_in_vowel("reng"));
  EXPECT_EQ(last_letter("reng"), "g");
  EXPECT_EQ(last_letter(""), "");
}

TEST(Lexicon, ShippedDataHasNoDiagnostics) {
  const auto& s = Shipped::get();
  auto diags = validate_lexicon(s.lex);
  for (const auto& d : diags) ADD_FAILURE() << d.subject << ": " << d.message;
  auto slot_diags = validate_slots(load_slots(testing::data_dir() / "slots.tsv"), s.lex);
  for (const auto& d : slot_diags) ADD_FAILURE() << d.subject << ": " << d.message;
  auto rule_diags = validate_rules(s.rules, s.lex);
  for (const auto& d : rule_diags) ADD_FAILURE() << d.subject << ": " << d.message;
}

TEST(Lexicon, SerialiseRoundTrip) {
  const auto& lex = Shipped::get().lex;
  Lexicon again = parse_lexicon(serialise(lex));
  parse_suffixes(again, serialise_suffixes(lex));
  EXPECT_TRUE(same_entries(lex, again));
  EXPECT_EQ(serialise(again), serialise(lex));
  EXPECT_EQ(serialise_suffixes(again), serialise_suffixes(lex));
}

TEST(Lexicon, LabileRootsCarryBothSenses) {
  const auto& lex = Shipped::get().lex;
  for (const char* form : {"aye", "kewa", "llüka", "meke", "monge", "nge", "püna", "waychüf", "yewe"}) {
    const RootEntry* r = lex.find_root(form, Category::verb);
    ASSERT_NE(r, nullptr) << form;
    EXPECT_EQ(r->valency, LexValency::labile) << form;
    auto has = [&](Context c) {
      return std::any_of(r->senses.begin(), r->senses.end(), [&](const Sense& s) { return s.context == c; });
    };
    EXPECT_TRUE(has(Context::IV)) << form;
    EXPECT_TRUE(has(Context::TV)) << form;
  }
}

TEST(Lexicon, EverySuffixTagIsRegistered) {
  for (const auto& s : Shipped::get().lex.suffixes()) EXPECT_TRUE(is_registered_tag(s.tag)) << s.id;
  EXPECT_FALSE(is_registered_tag("XYZ"));
  EXPECT_FALSE(is_registered_tag("ca"));
}

TEST(Lexicon, UnregisteredTagIsReported) {
  Lexicon lex;
  try {
    parse_suffixes(lex, "FOO.a\t20\tFOO\tneutral\tany\ta@any\n");
    FAIL();
  } catch (const LexiconError& e) {
    EXPECT_NE(std::string(e.what()).find("unregistered tag 'FOO'"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find(":1:10:"), std::string::npos);
  }
}

TEST(Lexicon, LabileWithoutTvSenseFailsToLoad) {
  try {
    parse_lexicon("# header\nkewa\tverb\tlabile\tIV:fight\n", "t.tsv");
    FAIL();
  } catch (const LexiconError& e) {
    EXPECT_EQ(e.kind(), LexiconError::Kind::invariant);
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(Lexicon, LabileWithoutTvSenseIsDiagnosedWhenBuiltInMemory) {
  Lexicon lex;
  RootEntry r;
  r.form = "kewa";
  r.valency = LexValency::labile;
  r.senses = {{Context::IV, "fight"}};
  lex.add_root(r);
  auto diags = validate_lexicon(lex);
  ASSERT_EQ(diags.size(), 1u);
  EXPECT_EQ(diags[0].subject, "kewa/verb");
}

TEST(Lexicon, ParseErrorsCarryPosition) {
  try {
    parse_lexicon("küpa\tverb\tIV\tXX:come\n", "t.tsv");
    FAIL();
  } catch (const LexiconError& e) {
    EXPECT_EQ(e.kind(), LexiconError::Kind::parse);
    EXPECT_EQ(e.line(), 1u);
    EXPECT_GT(e.column(), 1u);
  }
  EXPECT_THROW(parse_lexicon("küpa\tverb\n"), LexiconError);
  EXPECT_THROW(parse_lexicon("küpa\tverb\tIV\tIV:come\tsmeets\tbogus\n"), LexiconError);
}

TEST(Lexicon, DuplicateKeyThrows) {
  try {
    parse_lexicon("küpa\tverb\tIV\tIV:come\nküpa\tverb\tIV\tIV:arrive\n");
    FAIL();
  } catch (const LexiconError& e) {
    EXPECT_EQ(e.kind(), LexiconError::Kind::duplicate);
  }
  // Same form, different category is fine.
  EXPECT_NO_THROW(parse_lexicon("nag\tverb\tIV\tIV:go-down\nnag\tadverb\tIV\tIV:down\n"));
}

TEST(Lexicon, MissingFileIsIoError) {
  try {
    load_lexicon("/nonexistent/lexicon.tsv");
    FAIL();
  } catch (const LexiconError& e) {
    EXPECT_EQ(e.kind(), LexiconError::Kind::io);
  }
}

TEST(Lexicon, LookupRootsLongestFirst) {
  const auto& lex = Shipped::get().lex;
  auto hits = lookup_roots(lex, "ngelmefiñ");
  ASSERT_FALSE(hits.empty());
  for (std::size_t i = 1; i < hits.size(); ++i) EXPECT_GE(hits[i - 1]->form.size(), hits[i]->form.size());
  EXPECT_TRUE(std::any_of(hits.begin(), hits.end(), [](const RootEntry* r) { return r->form == "nge"; }));
}

TEST(Lexicon, AttributesRoundTrip) {
  Lexicon lex = parse_lexicon("kafe\tnoun\tIV\tIV:coffee\tuser\tloan,cmp=bare\nkim\tverb\tIV\tIV:know\tuser\ttu=increase\n");
  EXPECT_TRUE(lex.find_root("kafe", Category::noun)->loan);
  EXPECT_EQ(lex.find_root("kafe", Category::noun)->compound, CompoundMark::bare);
  EXPECT_TRUE(lex.find_root("kim", Category::verb)->tu_increase);
  EXPECT_TRUE(same_entries(lex, parse_lexicon(serialise(lex))));
}

}  // namespace
}  // namespace mapu
