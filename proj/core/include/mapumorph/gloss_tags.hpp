// Copyright 2026 The mapudungun-morph Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string_view>
#include <vector>

namespace mapu {

// Closed inventory of gloss abbreviations. Anything else is rejected at load.
bool is_registered_tag(std::string_view code);
const std::vector<std::string_view>& registered_tags();

}  // namespace mapu
