// Copyright 2026 The MorphAlign Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Byte premiums between content-matched texts and byte-budgeted corpus
// scaling. Byte counts are UTF-8 bytes of the lines themselves; line
// terminators are never counted.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "morphalign/dataset.hpp"

namespace morphalign::bp {

struct BytePremium {
  std::string lang;
  std::string pivot_lang;
  double ratio = 1.0;
  std::size_t lang_bytes = 0;
  std::size_t pivot_bytes = 0;
};

std::size_t byte_count(std::span<const std::string> lines);

/// ratio = bytes(lang) / bytes(pivot). Throws InputError for an unknown
/// language or a pivot with zero bytes.
BytePremium compute_byte_premium(const data::ParallelCorpus& corpus, std::string_view lang,
                                 std::string_view pivot);

/// Greedy prefix under target = round(base_budget_bytes * ratio): lines are
/// taken in order until the next one would overshoot. With `shuffle` the
/// lines are first permuted by a seeded shuffle. Throws InputError on empty
/// input and ConfigError unless the budget and ratio are positive.
std::vector<std::string> scale_corpus(std::span<const std::string> lines, double ratio,
                                      std::int64_t base_budget_bytes, std::uint64_t seed,
                                      bool shuffle);

/// round(base_budget_bytes * ratio).
std::int64_t scaled_target(double ratio, std::int64_t base_budget_bytes);

}  // namespace morphalign::bp
