// Copyright 2026 The mapudungun-morph Authors
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "mapumorph/morphotactics.hpp"
#include "support.hpp"

namespace mapu {
namespace {

using testing::Shipped;

const Lexicon& lex() { return Shipped::get().lex; }
const RootEntry& root(const char* form, Category c = Category::verb) { return *lex().find_root(form, c); }

std::vector<ViolationCode> codes(const RootEntry& r, Context frame, const std::vector<std::string>& ids) {
  std::vector<ViolationCode> out;
  for (const auto& v : validate_sequence(lex(), r, frame, ids)) out.push_back(v.code);
  return out;
}

bool has(const std::vector<ViolationCode>& cs, ViolationCode c) { return std::find(cs.begin(), cs.end(), c) != cs.end(); }

TEST(Valency, StepTable) {
  using enum TraceState;
  EXPECT_EQ(valency_step(IV, ValencyEffect::increase), TV);
  EXPECT_EQ(valency_step(TV, ValencyEffect::increase), TV2);
  EXPECT_EQ(valency_step(TV2, ValencyEffect::increase), TV2);
  EXPECT_EQ(valency_step(TV, ValencyEffect::decrease), IV);
  EXPECT_EQ(valency_step(TV2, ValencyEffect::decrease), TV);
  EXPECT_EQ(valency_step(IV, ValencyEffect::decrease), IV);
  for (TraceState s : {IV, TV, TV2}) {
    EXPECT_EQ(valency_step(s, ValencyEffect::neutral), s);
    EXPECT_EQ(valency_step(s, ValencyEffect::agreement_tv_only), s);
  }
}

TEST(Validate, CausativeOnIntransitive) {
  EXPECT_TRUE(codes(root("küpa"), Context::IV, {"CA.l", "IND1SG.n"}).empty());
  EXPECT_TRUE(codes(root("püra"), Context::IV, {"CA.m", "IND1SG.n"}).empty());
}

TEST(Validate, CausativeOnTransitiveIsRejected) {
  auto cs = codes(root("pi"), Context::TV, {"CA.m", "IND1SG.n"});
  EXPECT_TRUE(has(cs, ViolationCode::CA_on_TV));
  // A labile root takes the causative only in its IV sense.
  EXPECT_TRUE(codes(root("monge"), Context::IV, {"CA.l", "HAB.ke", "3P.fi", "IND.y", "1.ø", "PL.iñ"}).empty());
  EXPECT_TRUE(has(codes(root("monge"), Context::TV, {"CA.l", "HAB.ke", "3P.fi", "IND.y", "1.ø", "PL.iñ"}),
                  ViolationCode::CA_on_TV));
}

TEST(Validate, AgreementNeedsTransitiveStem) {
  EXPECT_TRUE(has(codes(root("küpa"), Context::IV, {"3P.fi", "IND1SG.n"}), ViolationCode::AGR_on_IV));
  EXPECT_TRUE(codes(root("küpa"), Context::IV, {"CA.l", "3P.fi", "IND1SG.n"}).empty());
  EXPECT_TRUE(codes(root("pi"), Context::TV, {"3P.fi", "IND1SG.n"}).empty());
  // Passive takes the object away again.
  EXPECT_TRUE(has(codes(root("pi"), Context::TV, {"PASS.nge", "3P.fi", "IND1SG.n"}), ViolationCode::AGR_on_IV));
}

TEST(Validate, StativeIsNotAConstraint) {
  EXPECT_TRUE(codes(root("elu"), Context::TV, {"REF.w", "ST.küle", "RI.fu", "IND1SG.n"}).empty());
  EXPECT_TRUE(codes(root("pi"), Context::TV, {"ST.küle", "IND.y", "3.ø"}).empty());
  EXPECT_TRUE(codes(root("küpa"), Context::IV, {"ST.küle", "IND.y", "3.ø"}).empty());
}

TEST(Validate, SlotOrder) {
  auto cs = codes(root("küpa"), Context::IV, {"IND1SG.n", "CA.l"});
  EXPECT_TRUE(has(cs, ViolationCode::slot_order));
  EXPECT_TRUE(has(codes(root("küpa"), Context::IV, {"CA.l", "CA.m", "IND1SG.n"}), ViolationCode::slot_conflict));
  EXPECT_TRUE(has(codes(root("küpa"), Context::IV, {"IND.y", "IND1SG.n"}), ViolationCode::slot_conflict));
}

TEST(Validate, MoodAndPerson) {
  EXPECT_TRUE(has(codes(root("küpa"), Context::IV, {}), ViolationCode::missing_mood));
  EXPECT_TRUE(has(codes(root("küpa"), Context::IV, {"HAB.ke"}), ViolationCode::missing_mood));
  EXPECT_TRUE(has(codes(root("küpa"), Context::IV, {"IND.y"}), ViolationCode::missing_person));
  EXPECT_TRUE(has(codes(root("küpa"), Context::IV, {"IND1SG.n", "1.ø"}), ViolationCode::slot_conflict));
  EXPECT_TRUE(codes(root("küpa"), Context::IV, {"PVN.n"}).empty());
  // Non-verbal roots stand alone; a causative stem is a complete form.
  EXPECT_TRUE(codes(root("kawell", Category::noun), Context::IV, {}).empty());
  EXPECT_TRUE(codes(root("la", Category::adjective), Context::IV, {"CA.m"}).empty());
}

TEST(Validate, InverseNeedsAgent) {
  EXPECT_TRUE(codes(root("kewa"), Context::TV, {"INV.e", "IND.y", "3.ø", "3A.ew"}).empty());
  EXPECT_TRUE(has(codes(root("kewa"), Context::TV, {"INV.e", "IND.y", "3.ø"}), ViolationCode::missing_person));
  EXPECT_TRUE(has(codes(root("kewa"), Context::TV, {"IND.y", "3.ø", "3A.ew"}), ViolationCode::slot_conflict));
}

TEST(Validate, LoanRootRejectsUm) {
  Lexicon l = parse_lexicon("kafe\tverb\tIV\tIV:drink-coffee\tuser\tloan\n");
  parse_suffixes(l, serialise_suffixes(lex()));
  const RootEntry& r = *l.find_root("kafe", Category::verb);
  auto cs = validate_sequence(l, r, Context::IV, {"CA.m", "IND1SG.n"});
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_EQ(cs[0].code, ViolationCode::um_on_loan);
  EXPECT_EQ(cs[0].at, 1u);
  EXPECT_TRUE(validate_sequence(l, r, Context::IV, {"CA.l", "IND1SG.n"}).empty());
}

TEST(Validate, TuIncreasesOnMarkedRoots) {
  Lexicon l = parse_lexicon("kim\tverb\tIV\tIV:know\tuser\ttu=increase\nkewü\tverb\tIV\tIV:fight\tuser\n");
  parse_suffixes(l, serialise_suffixes(lex()));
  const RootEntry& marked = *l.find_root("kim", Category::verb);
  const RootEntry& plain = *l.find_root("kewü", Category::verb);
  EXPECT_TRUE(validate_sequence(l, marked, Context::IV, {"TR.tu", "3P.fi", "IND1SG.n"}).empty());
  EXPECT_FALSE(validate_sequence(l, plain, Context::IV, {"TR.tu", "3P.fi", "IND1SG.n"}).empty());
  EXPECT_EQ(effective_effect(*l.find_suffix("TR.tu"), marked), ValencyEffect::increase);
  EXPECT_EQ(effective_effect(*l.find_suffix("TR.tu"), plain), ValencyEffect::neutral);
}

TEST(Validate, UnknownIdThrows) {
  EXPECT_THROW(validate_sequence(lex(), root("küpa"), Context::IV, {"NOPE.x"}), UnknownMorpheme);
}

TEST(Trace, FollowsValencyEffects) {
  std::vector<FormItem> items{FormItem::of_root(root("küpa"), Context::IV)};
  for (const char* id : {"CA.l", "REF.w", "IND1SG.n"}) items.push_back(FormItem::of_suffix(*lex().find_suffix(id)));
  auto t = compute_trace(items);
  ASSERT_EQ(t.size(), 4u);
  EXPECT_EQ(t[0].state, TraceState::IV);
  EXPECT_EQ(t[1].state, TraceState::TV);
  EXPECT_EQ(t[2].state, TraceState::IV);
  EXPECT_EQ(t[3].state, TraceState::IV);
  EXPECT_EQ(t[1].id, "CA.l");
}

TEST(Compound, ValencyFromLastMember) {
  CompoundMember tofkü{&root("tofkü"), Context::IV, nullptr};
  CompoundMember püra{&root("püra"), Context::IV, nullptr};
  CompoundMember püra_ca{&root("püra"), Context::IV, lex().find_suffix("CA.m")};
  CompoundMember tu{&root("tu"), Context::TV, nullptr};
  EXPECT_EQ(compound_valency({tofkü, püra}), Context::IV);
  EXPECT_EQ(compound_valency({tofkü, püra_ca}), Context::TV);
  EXPECT_EQ(compound_valency({püra, tu}), Context::TV);
  EXPECT_THROW(compound_valency({}), std::invalid_argument);
}

TEST(Fal, Segmentations) {
  auto tv = fal_segmentations(TraceState::TV, "faleymün");
  std::vector<FalSegmentation> want{{{"fal", "FORCE.fal"}}, {{"fa", "DP.this"}, {"l", "CA.l"}},
                                    {{"fa", "DP.this"}, {"le", "ST.küle"}}};
  EXPECT_EQ(tv, want);
  auto iv = fal_segmentations(TraceState::IV, "faleymün");
  EXPECT_EQ(iv.size(), 2u);
  auto word_final = fal_segmentations(TraceState::TV, "fal");
  EXPECT_EQ(word_final.size(), 3u);
  EXPECT_TRUE(fal_segmentations(TraceState::TV, "fey").empty());
}

TEST(Slots, TableMatchesInventory) {
  SlotTable t = load_slots(testing::data_dir() / "slots.tsv");
  for (const auto& s : lex().suffixes()) EXPECT_EQ(t.slot_of(s.id), std::optional<int>(s.slot)) << s.id;
  EXPECT_THROW(t.assign("CA.l", 20), std::invalid_argument);
  EXPECT_THROW(SlotTable().assign("X", 40), std::invalid_argument);
  EXPECT_EQ(slots_from_lexicon(lex()).assignments(), t.assignments());
  SlotTable wrong;
  wrong.assign("CA.l", 33);
  EXPECT_FALSE(validate_slots(wrong, lex()).empty());
}

// The incremental checker and the whole-form validator are two views of the
// same rules: pushing items one at a time must report what validate_form does.
TEST(ConstraintStateProperty, IncrementalMatchesWholeForm) {
  std::mt19937 rng(20260415);
  std::vector<const RootEntry*> roots;
  for (const auto& r : lex().roots()) roots.push_back(&r);
  std::vector<const SuffixEntry*> sufs;
  for (const auto& s : lex().suffixes()) sufs.push_back(&s);
  for (int n = 0; n < 5000; ++n) {
    const RootEntry& r = *roots[rng() % roots.size()];
    Context frame = r.senses[rng() % r.senses.size()].context;
    std::vector<FormItem> items{FormItem::of_root(r, frame)};
    int len = static_cast<int>(rng() % 7);
    for (int i = 0; i < len; ++i) items.push_back(FormItem::of_suffix(*sufs[rng() % sufs.size()]));

    ConstraintState st(r, frame);
    std::vector<Violation> inc;
    for (std::size_t i = 1; i < items.size(); ++i) st.push(items[i], inc);
    st.finish(inc);
    ASSERT_EQ(inc, validate_form(items));
  }
}

TEST(ConstraintStateProperty, EqualSignaturesAcceptEqualContinuations) {
  // küpa-ka-ke and küpa-ke differ only in material later suffixes cannot see.
  const auto& r = root("küpa");
  ConstraintState a(r, Context::IV), b(r, Context::IV);
  std::vector<Violation> sink;
  a.push(FormItem::of_suffix(*lex().find_suffix("CONT.ka")), sink);
  a.push(FormItem::of_suffix(*lex().find_suffix("HAB.ke")), sink);
  b.push(FormItem::of_suffix(*lex().find_suffix("HAB.ke")), sink);
  ASSERT_TRUE(sink.empty());
  ASSERT_EQ(a.signature(), b.signature());
  for (const auto& s : lex().suffixes()) {
    ConstraintState x = a, y = b;
    std::vector<Violation> vx, vy;
    x.push(FormItem::of_suffix(s), vx);
    y.push(FormItem::of_suffix(s), vy);
    x.finish(vx);
    y.finish(vy);
    EXPECT_EQ(vx.size(), vy.size()) << s.id;
  }
}

}  // namespace
}  // namespace mapu
