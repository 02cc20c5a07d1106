// Copyright 2026 The mapudungun-morph Authors
// SPDX-License-Identifier: Apache-2.0
#include "mapumorph/json_io.hpp"

#include <json.hpp>

#include "mapumorph/segments.hpp"
#include "text_util.hpp"

namespace mapu {

namespace {

using json = nlohmann::ordered_json;

json to_json(const Analysis& a) {
  json pieces = json::array();
  for (const auto& p : a.pieces) {
    json j = {{"surface", p.surface}, {"id", p.id}, {"tag", p.tag}};
    if (p.root) {
      j["gloss"] = p.gloss;
      j["frame"] = std::string(to_string(p.frame));
    }
    if (p.joined) j["joined"] = true;
    pieces.push_back(std::move(j));
  }
  json trace = json::array();
  for (const auto& s : a.trace) trace.push_back({{"id", s.id}, {"state", std::string(to_string(s.state))}});
  return {{"gloss", gloss_render(a)}, {"pieces", std::move(pieces)}, {"trace", std::move(trace)}};
}

std::string dump(const json& j) { return j.dump(-1, ' ', false, json::error_handler_t::replace); }

}  // namespace

std::string analysis_json(const Analysis& a) { return dump(to_json(a)); }

std::string analyses_line(std::string_view word, const std::vector<Analysis>& analyses) {
  json arr = json::array();
  for (const auto& a : analyses) arr.push_back(to_json(a));
  return dump({{"word", std::string(word)}, {"analyses", std::move(arr)}});
}

std::string error_line(std::string_view word, std::string_view message) {
  return dump({{"word", std::string(word)}, {"error", std::string(message)}, {"analyses", json::array()}});
}

std::string violation_line(std::string_view input, const Violation& v) {
  return dump({{"input", std::string(input)},
               {"code", std::string(to_string(v.code))},
               {"at", v.at},
               {"message", v.message}});
}

std::vector<CorpusRecord> parse_corpus(std::string_view jsonl) {
  std::vector<CorpusRecord> out;
  detail::for_each_data_line(jsonl, [&](std::size_t lineno, std::string_view line) {
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw CorpusError(lineno, e.what());
    }
    if (!j.is_object()) throw CorpusError(lineno, "expected a JSON object");
    auto str = [&](const json& obj, const char* key) -> std::optional<std::string> {
      auto it = obj.find(key);
      if (it == obj.end() || it->is_null()) return std::nullopt;
      if (!it->is_string()) throw CorpusError(lineno, std::string("field '") + key + "' must be a string");
      return it->get<std::string>();
    };
    CorpusRecord r;
    r.line = lineno;
    r.source = str(j, "source").value_or("user");
    auto word = str(j, "word");
    if (!word || word->empty()) throw CorpusError(lineno, "missing 'word'");
    r.word = normalise(*word);

    const json* body = &j;
    if (auto it = j.find("analysis"); it != j.end() && it->is_object()) body = &*it;
    r.gloss = str(*body, "gloss");
    if (auto f = str(*body, "frame")) {
      r.frame = parse_context(*f);
      if (!r.frame) throw CorpusError(lineno, "frame must be IV or TV");
    }
    if (auto it = body->find("pieces"); it != body->end()) {
      if (!it->is_array()) throw CorpusError(lineno, "'pieces' must be an array");
      for (const auto& p : *it) {
        if (!p.is_object() || !p.contains("id") || !p["id"].is_string())
          throw CorpusError(lineno, "every piece needs a string 'id'");
        r.ids.push_back(p["id"].get<std::string>());
      }
    }
    out.push_back(std::move(r));
  });
  return out;
}

ResolvedCorpus resolve_corpus(const std::vector<CorpusRecord>& records, const Analyzer& analyzer) {
  ResolvedCorpus out;
  for (const auto& r : records) {
    std::vector<Analysis> as;
    try {
      as = analyzer.analyse(r.word);
    } catch (const AlphabetError& e) {
      out.unresolved.push_back({"line " + std::to_string(r.line), e.what()});
      continue;
    }
    const Analysis* hit = nullptr;
    for (const auto& a : as) {
      if (r.gloss && gloss_render(a) != *r.gloss) continue;
      if (r.frame && (a.pieces.empty() || a.pieces.front().frame != *r.frame)) continue;
      if (!r.ids.empty() && a.ids() != r.ids) continue;
      hit = &a;
      break;
    }
    if (!hit) {
      out.unresolved.push_back({"line " + std::to_string(r.line),
                                "no analysis of '" + r.word + "' matches" + (r.gloss ? " '" + *r.gloss + "'" : "")});
      continue;
    }
    out.entries.push_back({r.source, *hit});
  }
  return out;
}

}  // namespace mapu
