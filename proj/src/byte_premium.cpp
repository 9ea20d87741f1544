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


#include "morphalign/byte_premium.hpp"

#include <cmath>

#include "morphalign/errors.hpp"
#include "morphalign/rng.hpp"

namespace morphalign::bp {

std::size_t byte_count(std::span<const std::string> lines) {
  std::size_t n = 0;
  for (const auto& line : lines) n += line.size();
  return n;
}

BytePremium compute_byte_premium(const data::ParallelCorpus& corpus, std::string_view lang,
                                 std::string_view pivot) {
  BytePremium bp;
  bp.lang = std::string(lang);
  bp.pivot_lang = std::string(pivot);
  bp.lang_bytes = byte_count(corpus.of(lang));
  bp.pivot_bytes = byte_count(corpus.of(pivot));
  if (bp.pivot_bytes == 0) {
    throw InputError("byte premium: pivot '" + bp.pivot_lang + "' has no bytes");
  }
  bp.ratio = static_cast<double>(bp.lang_bytes) / static_cast<double>(bp.pivot_bytes);
  return bp;
}

std::int64_t scaled_target(double ratio, std::int64_t base_budget_bytes) {
  if (base_budget_bytes <= 0) throw ConfigError("scale_corpus: budget must be positive");
  if (!(ratio > 0.0) || !std::isfinite(ratio)) {
    throw ConfigError("scale_corpus: premium ratio must be a positive finite number");
  }
  return std::llround(static_cast<double>(base_budget_bytes) * ratio);
}

std::vector<std::string> scale_corpus(std::span<const std::string> lines, double ratio,
                                      std::int64_t base_budget_bytes, std::uint64_t seed,
                                      bool shuffle) {
  const std::int64_t target = scaled_target(ratio, base_budget_bytes);
  if (lines.empty()) throw InputError("scale_corpus: empty input");
  std::vector<std::size_t> order(lines.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  if (shuffle) {
    Rng rng(seed);
    rng.shuffle(order);
  }
  std::vector<std::string> out;
  std::int64_t used = 0;
  for (const std::size_t i : order) {
    const auto n = static_cast<std::int64_t>(lines[i].size());
    if (used + n > target) break;
    used += n;
    out.push_back(lines[i]);
  }
  return out;
}

}  // namespace morphalign::bp
