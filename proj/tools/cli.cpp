// Copyright 2026 The mapudungun-morph Authors
// SPDX-License-Identifier: Apache-2.0
#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "mapumorph/analyzer.hpp"
#include "mapumorph/classifier.hpp"
#include "mapumorph/json_io.hpp"
#include "mapumorph/lexicon.hpp"
#include "mapumorph/morphotactics.hpp"
#include "mapumorph/phonology.hpp"
#include "mapumorph/segments.hpp"

#ifndef MAPUMORPH_SOURCE_DATADIR
#define MAPUMORPH_SOURCE_DATADIR ""
#endif
#ifndef MAPUMORPH_INSTALL_DATADIR
#define MAPUMORPH_INSTALL_DATADIR ""
#endif

namespace mapu::cli {

namespace fs = std::filesystem;

namespace {

struct Tables {
  Lexicon lex;
  RuleTable rules;
  SlotTable slots;
};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Reads every input line, from files or the stream.
bool read_lines(const RunConfig& cfg, std::istream& in, std::ostream& err, std::vector<std::string>& lines) {
  auto slurp = [&](std::istream& is) {
    std::string line;
    while (std::getline(is, line)) lines.push_back(line);
  };
  if (cfg.inputs.empty()) {
    slurp(in);
    return true;
  }
  for (const auto& path : cfg.inputs) {
    if (path == "-") {
      slurp(in);
      continue;
    }
    std::ifstream f(path);
    if (!f) {
      err << "error: cannot read input '" << path << "'\n";
      return false;
    }
    slurp(f);
  }
  return true;
}

std::string join_ids(const std::vector<std::string>& ids) {
  std::string s;
  for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? " " : "") + ids[i];
  return s;
}

int cmd_analyse(const RunConfig& cfg, const Tables& t, std::istream& in, std::ostream& out, std::ostream& err) {
  std::vector<std::string> lines = cfg.words;
  if (cfg.words.empty() && !read_lines(cfg, in, err, lines)) return kConfigError;
  Analyzer analyzer(t.lex, t.rules);
  for (const auto& raw : lines) {
    const std::string word = normalise(trim(raw));
    if (word.empty()) continue;
    std::vector<Analysis> as;
    try {
      as = analyzer.analyse(word);
    } catch (const AlphabetError& e) {
      err << "error: " << e.what() << '\n';
      switch (cfg.output) {
        case Format::json_lines:
          out << error_line(word, e.what()) << '\n';
          break;
        default:
          out << word << "\t!" << e.what() << '\n';
      }
      continue;
    }
    if (!cfg.all_analyses && as.size() > 1) as.resize(1);
    switch (cfg.output) {
      case Format::json_lines:
        out << analyses_line(word, as) << '\n';
        break;
      case Format::gloss_text:
        if (as.empty()) out << word << "\t*\n";
        for (const auto& a : as) out << word << '\t' << gloss_render(a) << '\n';
        break;
      case Format::tsv:
        if (as.empty()) out << word << "\t0\t*\t\n";
        for (std::size_t i = 0; i < as.size(); ++i)
          out << word << '\t' << i + 1 << '\t' << gloss_render(as[i]) << '\t' << join_ids(as[i].ids()) << '\n';
        break;
    }
  }
  return kOk;
}

// "root[/category] CTX id id ..."
int cmd_generate(const RunConfig& cfg, const Tables& t, std::istream& in, std::ostream& out, std::ostream& err) {
  std::vector<std::string> lines;
  if (!read_lines(cfg, in, err, lines)) return kConfigError;
  Analyzer analyzer(t.lex, t.rules);
  for (const auto& raw : lines) {
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    std::istringstream ss(line);
    std::string root_key, ctx_text, id;
    ss >> root_key >> ctx_text;
    root_key = normalise(root_key);
    std::vector<std::string> ids;
    while (ss >> id) ids.push_back(id);

    auto fail = [&](const std::string& msg) {
      err << "error: " << line << ": " << msg << '\n';
      if (cfg.output == Format::json_lines)
        out << nlohmann::ordered_json{{"input", line}, {"error", msg}}.dump() << '\n';
      else
        out << "!\n";
    };
    const RootEntry* root = t.lex.find_root_key(root_key);
    auto ctx = parse_context(ctx_text);
    if (!root) {
      fail("unknown or ambiguous root '" + root_key + "'");
      continue;
    }
    if (!ctx) {
      fail("context must be IV or TV");
      continue;
    }
    std::string surface;
    try {
      surface = analyzer.generate(*root, *ctx, ids);
    } catch (const GenerationError& e) {
      for (const auto& v : e.violations()) err << violation_line(line, v) << '\n';
      out << "!\n";
      continue;
    } catch (const std::exception& e) {
      fail(e.what());
      continue;
    }
    switch (cfg.output) {
      case Format::json_lines:
        out << nlohmann::ordered_json{{"input", line}, {"surface", surface}}.dump() << '\n';
        break;
      case Format::tsv:
        out << line << '\t' << surface << '\n';
        break;
      case Format::gloss_text:
        out << surface << '\n';
        break;
    }
  }
  return kOk;
}

int cmd_validate(const Tables& t, std::ostream& out) {
  std::vector<Diagnostic> diags = validate_lexicon(t.lex);
  for (auto& d : validate_rules(t.rules, t.lex)) diags.push_back(std::move(d));
  for (auto& d : validate_slots(t.slots, t.lex)) diags.push_back(std::move(d));
  for (const auto& d : diags) out << d.subject << '\t' << d.message << '\n';
  return diags.empty() ? kOk : kDataError;
}

int cmd_classify(const RunConfig& cfg, const Tables& t, std::istream& in, std::ostream& out, std::ostream& err) {
  std::vector<std::string> lines;
  if (!read_lines(cfg, in, err, lines)) return kConfigError;
  std::string text;
  for (const auto& l : lines) text += l + '\n';
  std::vector<CorpusRecord> records;
  try {
    records = parse_corpus(text);
  } catch (const CorpusError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }
  Analyzer analyzer(t.lex, t.rules);
  ResolvedCorpus corpus = resolve_corpus(records, analyzer);
  for (const auto& d : corpus.unresolved) err << "warning: " << d.subject << ": " << d.message << '\n';

  ClassifyOptions opts;
  opts.threshold = cfg.threshold;
  for (const auto& row : classify_corpus(corpus.entries, t.lex, opts)) {
    if (cfg.output == Format::json_lines) {
      nlohmann::ordered_json j{{"root", row.root},
                               {"label", std::string(to_string(row.verdict.label))},
                               {"iv_hits", row.evidence.iv_hits},
                               {"tv_hits", row.evidence.tv_hits},
                               {"kle_hits", row.evidence.kle_hits},
                               {"ke_tv_hits", row.evidence.ke_tv_hits},
                               {"discrepancy", nullptr},
                               {"rationale", row.verdict.rationale}};
      if (row.discrepancy) j["discrepancy"] = *row.discrepancy;
      out << j.dump() << '\n';
    } else {
      out << row.root << '\t' << to_string(row.verdict.label) << '\t' << row.evidence.iv_hits << '\t'
          << row.evidence.tv_hits << '\t' << row.discrepancy.value_or("-") << '\n';
    }
  }
  return kOk;
}

}  // namespace

std::string default_data_dir() {
  if (const char* env = std::getenv("MAPUMORPH_DATA_DIR"); env && *env) return env;
  for (const char* dir : {MAPUMORPH_SOURCE_DATADIR, MAPUMORPH_INSTALL_DATADIR}) {
    std::error_code ec;
    if (*dir && fs::exists(fs::path(dir) / "lexicon.tsv", ec)) return dir;
  }
  return "data";
}

RunConfig default_config() {
  const fs::path dir = default_data_dir();
  RunConfig c;
  c.lexicon_path = (dir / "lexicon.tsv").string();
  c.suffix_path = (dir / "suffixes.tsv").string();
  c.ruleset_path = (dir / "rules.tsv").string();
  c.slot_path = (dir / "slots.tsv").string();
  return c;
}

int run(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  if (cfg.threshold < 1) {
    err << "error: --threshold must be at least 1\n";
    return kConfigError;
  }
  for (const auto* p : {&cfg.lexicon_path, &cfg.suffix_path, &cfg.ruleset_path, &cfg.slot_path}) {
    std::error_code ec;
    if (!fs::is_regular_file(*p, ec)) {
      err << "error: cannot read '" << *p << "'\n";
      return kConfigError;
    }
  }

  Tables t;
  try {
    t.lex = load_lexicon(cfg.lexicon_path, cfg.suffix_path);
    t.rules = load_rules(cfg.ruleset_path);
    t.slots = load_slots(cfg.slot_path);
  } catch (const LexiconError& e) {
    if (e.kind() == LexiconError::Kind::io) {
      err << "error: " << e.what() << '\n';
      return kConfigError;
    }
    // validate-lexicon reports data problems as its output.
    (cfg.command == Command::validate_lexicon ? out : err) << e.what() << '\n';
    return kDataError;
  }

  switch (cfg.command) {
    case Command::validate_lexicon:
      return cmd_validate(t, out);
    case Command::analyse:
    case Command::generate:
    case Command::classify: {
      auto slot_diags = validate_slots(t.slots, t.lex);
      if (!slot_diags.empty()) {
        for (const auto& d : slot_diags) err << "error: " << d.subject << ": " << d.message << '\n';
        return kDataError;
      }
      break;
    }
  }
  switch (cfg.command) {
    case Command::analyse:
      return cmd_analyse(cfg, t, in, out, err);
    case Command::generate:
      return cmd_generate(cfg, t, in, out, err);
    case Command::classify:
      return cmd_classify(cfg, t, in, out, err);
    case Command::validate_lexicon:
      break;
  }
  return kOk;
}

int main_entry(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  RunConfig cfg = default_config();
  CLI::App app{"Mapudungun verb morphology: analyse, generate, validate, classify", "mapumorph"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--lexicon", cfg.lexicon_path, "root inventory TSV")->capture_default_str();
  app.add_option("--suffixes", cfg.suffix_path, "suffix inventory TSV")->capture_default_str();
  app.add_option("--rules", cfg.ruleset_path, "boundary rule TSV")->capture_default_str();
  app.add_option("--slots", cfg.slot_path, "slot table TSV")->capture_default_str();
  std::string format = "gloss-text";
  app.add_option("--format", format, "gloss-text, json-lines or tsv")
      ->check(CLI::IsMember({"gloss-text", "json-lines", "tsv"}))
      ->capture_default_str();
  app.add_option("--threshold", cfg.threshold, "classifier hits per class")->check(CLI::PositiveNumber);
  auto* all = app.add_flag("--all-analyses", cfg.all_analyses, "print every analysis");
  app.add_flag("--best", [&](std::int64_t) { cfg.all_analyses = false; }, "print only the best analysis")
      ->excludes(all);

  auto* analyse = app.add_subcommand("analyse", "analyse words (one per line, or given with -w)");
  analyse->alias("analyze");
  analyse->add_option("-w,--word", cfg.words, "word to analyse");
  analyse->add_option("inputs", cfg.inputs, "input files ('-' for stdin)");
  auto* generate = app.add_subcommand("generate", "generate from lines 'root[/category] IV|TV suffix-id...'");
  generate->add_option("inputs", cfg.inputs, "input files ('-' for stdin)");
  app.add_subcommand("validate-lexicon", "check the lexicon, rule and slot tables");
  auto* classify = app.add_subcommand("classify", "classify root valency from a JSON-lines corpus");
  classify->add_option("inputs", cfg.inputs, "corpus files ('-' for stdin)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  if (*analyse) cfg.command = Command::analyse;
  else if (*generate) cfg.command = Command::generate;
  else if (*classify) cfg.command = Command::classify;
  else cfg.command = Command::validate_lexicon;
  cfg.output = format == "json-lines" ? Format::json_lines : format == "tsv" ? Format::tsv : Format::gloss_text;
  return run(cfg, in, out, err);
}

}  // namespace mapu::cli
