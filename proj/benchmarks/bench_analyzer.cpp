// Copyright 2026 The mapudungun-morph Authors
// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "mapumorph/analyzer.hpp"
#include "mapumorph/lexicon.hpp"
#include "mapumorph/phonology.hpp"

namespace {

using namespace mapu;

struct Data {
  Lexicon lex;
  RuleTable rules;
  Analyzer analyzer;
  std::vector<std::string> corpus;

  Data()
      : lex(load_lexicon(dir() / "lexicon.tsv", dir() / "suffixes.tsv")),
        rules(load_rules(dir() / "rules.tsv")),
        analyzer(lex, rules) {
    std::istringstream in(read_text_file(dir() / "fixtures" / "gloss_corpus.tsv"));
    std::string line;
    while (std::getline(in, line))
      if (!line.empty() && line[0] != '#') corpus.push_back(line.substr(0, line.find('\t')));
  }
  static std::filesystem::path dir() { return MAPUMORPH_BENCH_DATADIR; }
  static const Data& get() {
    static const Data d;
    return d;
  }
};

void BM_AnalyseShort(benchmark::State& state) {
  const auto& d = Data::get();
  for (auto _ : state) benchmark::DoNotOptimize(d.analyzer.analyse("küpalün"));
}
BENCHMARK(BM_AnalyseShort);

void BM_AnalyseAmbiguous(benchmark::State& state) {
  const auto& d = Data::get();
  for (auto _ : state) benchmark::DoNotOptimize(d.analyzer.analyse("mongelkefiiñ"));
}
BENCHMARK(BM_AnalyseAmbiguous);

void BM_Generate(benchmark::State& state) {
  const auto& d = Data::get();
  const RootEntry& yewe = *d.lex.find_root("yewe", Category::verb);
  const std::vector<std::string> ids{"HAB.ke", "RI.fu", "3P.fi", "IND1SG.n"};
  for (auto _ : state) benchmark::DoNotOptimize(d.analyzer.generate(yewe, Context::TV, ids));
}
BENCHMARK(BM_Generate);

void BM_GlossCorpus(benchmark::State& state) {
  const auto& d = Data::get();
  for (auto _ : state)
    for (const auto& w : d.corpus) benchmark::DoNotOptimize(d.analyzer.analyse(w));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(d.corpus.size()));
}
BENCHMARK(BM_GlossCorpus)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
