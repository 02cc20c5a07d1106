// Copyright 2026 The mapudungun-morph Authors
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "support.hpp"

namespace mapu::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "mapumorph");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = main_entry(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const char* name) { return (testing::data_dir() / "fixtures" / name).string(); }

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
  auto p = std::filesystem::temp_directory_path() / ("mapumorph_test_" + name);
  std::ofstream(p) << text;
  return p;
}

TEST(Cli, AnalyseBestLine) {
  auto r = call({"analyse"}, "küpalün\n");
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "küpalün\tIV.come +CA +IND1SG\n");
  EXPECT_EQ(r.err, "");
}

TEST(Cli, AnalyseWordsFlagAndAlias) {
  auto a = call({"analyse", "-w", "küpan", "-w", "küpalün"});
  auto b = call({"analyze", "-w", "küpan", "-w", "küpalün"});
  EXPECT_EQ(a.code, kOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, "küpan\tIV.come +IND1SG\nküpalün\tIV.come +CA +IND1SG\n");
}

TEST(Cli, NoParseAndBadLettersStillExitZero) {
  auto r = call({"analyse"}, "ttt\nküpax\nküpan\n");
  EXPECT_EQ(r.code, kOk);
  std::istringstream lines(r.out);
  std::string l1, l2, l3;
  std::getline(lines, l1);
  std::getline(lines, l2);
  std::getline(lines, l3);
  EXPECT_EQ(l1, "ttt\t*");
  EXPECT_EQ(l2.rfind("küpax\t!", 0), 0u);
  EXPECT_EQ(l3, "küpan\tIV.come +IND1SG");
  EXPECT_NE(r.err.find("küpax"), std::string::npos);
}

TEST(Cli, AllAnalysesIsSuperset) {
  auto best = call({"--best", "analyse"}, "mongekefiiñ\n");
  auto all = call({"--all-analyses", "analyse"}, "mongekefiiñ\n");
  EXPECT_EQ(std::count(best.out.begin(), best.out.end(), '\n'), 1);
  EXPECT_GT(std::count(all.out.begin(), all.out.end(), '\n'), 1);
  EXPECT_NE(all.out.find(best.out), std::string::npos);
}

TEST(Cli, JsonLines) {
  auto r = call({"--format", "json-lines", "analyse"}, "küpan\nttt\n");
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("{\"word\":\"küpan\",\"analyses\":[{\"gloss\":\"IV.come +IND1SG\""), std::string::npos);
  EXPECT_NE(r.out.find("{\"word\":\"ttt\",\"analyses\":[]}"), std::string::npos);
}

TEST(Cli, Generate) {
  auto r = call({"generate"}, "küpa IV CA.l IND1SG.n\nla/adjective IV CA.m\npi TV CA.m IND1SG.n\n");
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "küpalün\nlangüm\n!\n");
  EXPECT_NE(r.err.find("\"code\":\"CA_on_TV\""), std::string::npos);
}

TEST(Cli, ValidateShippedData) {
  auto r = call({"validate-lexicon"});
  EXPECT_EQ(r.code, kOk) << r.out << r.err;
}

TEST(Cli, ValidateLabileMissingSenseExitsTwo) {
  auto lex = temp_file("bad_lexicon.tsv", "kewa\tverb\tlabile\tIV:fight\tsmeets\n");
  auto r = call({"--lexicon", lex.string(), "validate-lexicon"});
  EXPECT_EQ(r.code, kDataError);
  EXPECT_NE(r.out.find("kewa"), std::string::npos);
}

TEST(Cli, ValidateReportsSlotMismatch) {
  auto slots = temp_file("bad_slots.tsv", "CA.l\t20\n");
  auto r = call({"--slots", slots.string(), "validate-lexicon"});
  EXPECT_EQ(r.code, kDataError);
  EXPECT_FALSE(r.out.empty());
}

TEST(Cli, MissingFileExitsOne) {
  auto r = call({"--lexicon", "/nonexistent.tsv", "analyse"}, "küpan\n");
  EXPECT_EQ(r.code, kConfigError);
  EXPECT_EQ(r.out, "");
  EXPECT_FALSE(r.err.empty());
  EXPECT_EQ(call({"analyse", "/nonexistent-input.txt"}).code, kConfigError);
}

TEST(Cli, BadFlagsExitOne) {
  EXPECT_EQ(call({"--format", "xml", "analyse"}).code, kConfigError);
  EXPECT_EQ(call({"--threshold", "0", "classify"}).code, kConfigError);
}

TEST(Cli, ClassifyFixtureCorpus) {
  auto r = call({"classify", fixture("classifier_corpus.jsonl")});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("monge\tlabile\t"), std::string::npos);
  EXPECT_NE(r.out.find("yewe\tlabile\t1\t1\tkona:IV/smeets:TV\n"), std::string::npos);
  EXPECT_NE(r.out.find("waychüf\tlabile\t0\t0\t-\n"), std::string::npos);
}

TEST(Cli, ClassifyMalformedCorpusExitsOne) {
  auto r = call({"classify"}, "{\"word\": \n");
  EXPECT_EQ(r.code, kConfigError);
  EXPECT_EQ(r.out, "");
}

TEST(Cli, ByteIdenticalReruns) {
  std::string words;
  for (const auto& [w, g] : testing::gloss_fixtures()) words += w + "\n";
  for (const char* fmt : {"gloss-text", "json-lines", "tsv"}) {
    auto a = call({"--all-analyses", "--format", fmt, "analyse"}, words);
    auto b = call({"--all-analyses", "--format", fmt, "analyse"}, words);
    EXPECT_EQ(a.code, kOk);
    EXPECT_EQ(a.out, b.out) << fmt;
    EXPECT_EQ(a.err, b.err) << fmt;
  }
  auto c1 = call({"classify", fixture("classifier_corpus.jsonl")});
  auto c2 = call({"classify", fixture("classifier_corpus.jsonl")});
  EXPECT_EQ(c1.out, c2.out);
}

TEST(Cli, RunWithConfigStruct) {
  RunConfig cfg = default_config();
  cfg.command = Command::analyse;
  cfg.words = {"küpalün"};
  std::istringstream in;
  std::ostringstream out, err;
  EXPECT_EQ(run(cfg, in, out, err), kOk);
  EXPECT_EQ(out.str(), "küpalün\tIV.come +CA +IND1SG\n");
}

}  // namespace
}  // namespace mapu::cli
