// Copyright 2026 The mapudungun-morph Authors
// SPDX-License-Identifier: Apache-2.0
#include "mapumorph/gloss_tags.hpp"

#include <algorithm>

namespace mapu {

const std::vector<std::string_view>& registered_tags() {
  static const std::vector<std::string_view> tags = [] {
    std::vector<std::string_view> t = {
        "1",    "2",     "3",   "1t2A", "3A",   "3P",   "ADJ",    "ADJDO", "AJ",
        "AV",   "BEN",   "CA",  "CJ",   "COLL", "CONT", "DL",     "DP",    "EXP",
        "FAC",  "FORCE", "FUT", "HAB",  "IND",  "IND1SG", "INST", "INV",   "IO",
        "IP",   "IV",    "IVN", "LOC",  "MIO",  "NEG",  "NN",     "NOM",   "NU",
        "OO",   "OVN",   "PASS", "PFPS", "PL",  "PLR",  "PRPS",   "PVN",   "RE",
        "REF",  "RI",    "SFR", "SG",   "SJI",  "SP",   "ST",     "SVN",   "TH",
        "TR",   "TV"};
    std::sort(t.begin(), t.end());
    return t;
  }();
  return tags;
}

bool is_registered_tag(std::string_view code) {
  const auto& tags = registered_tags();
  return std::binary_search(tags.begin(), tags.end(), code);
}

}  // namespace mapu
