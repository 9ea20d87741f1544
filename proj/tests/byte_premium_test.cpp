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

#include <gtest/gtest.h>

#include <algorithm>

#include "morphalign/errors.hpp"
#include "morphalign/rng.hpp"

namespace morphalign::bp {
namespace {

using data::ParallelCorpus;

// Byte width oracle from the UTF-8 lead byte alone.
std::size_t Utf8Bytes(const std::string& s) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < s.size();) {
    const auto c = static_cast<unsigned char>(s[i]);
    const std::size_t w = c < 0x80 ? 1 : c < 0xE0 ? 2 : c < 0xF0 ? 3 : 4;
    n += w;
    i += w;
  }
  return n;
}

TEST(BytePremium, GreekVersusLatin) {
  const ParallelCorpus c{{"lat", "grk"}, {{"ab"}, {"αβ"}}};
  const auto a = compute_byte_premium(c, "lat", "grk");
  EXPECT_EQ(a.ratio, 0.5);
  EXPECT_EQ(a.lang_bytes, 2u);
  EXPECT_EQ(a.pivot_bytes, 4u);
  EXPECT_EQ(compute_byte_premium(c, "grk", "lat").ratio, 2.0);
}

TEST(BytePremium, ThreeByteScript) {
  const std::string cjk = "漢字文化圏";
  const ParallelCorpus c{{"eng", "zho"}, {{"abcde"}, {cjk}}};
  const auto r = compute_byte_premium(c, "zho", "eng");
  EXPECT_EQ(r.lang_bytes, Utf8Bytes(cjk));
  EXPECT_EQ(r.ratio, 3.0);
}

TEST(BytePremium, SelfAndAntisymmetry) {
  Rng rng(5);
  const std::vector<std::string> pieces = {"a", "ß", "ж", "漢", "😀", " "};
  for (int trial = 0; trial < 50; ++trial) {
    ParallelCorpus c{{"x", "y"}, {{}, {}}};
    for (int line = 0; line < 5; ++line) {
      for (auto& side : c.lines) {
        std::string s = "q";
        const std::size_t n = rng.below(12);
        for (std::size_t i = 0; i < n; ++i) s += pieces[rng.below(pieces.size())];
        side.push_back(s);
      }
    }
    EXPECT_EQ(compute_byte_premium(c, "x", "x").ratio, 1.0);
    const double xy = compute_byte_premium(c, "x", "y").ratio;
    const double yx = compute_byte_premium(c, "y", "x").ratio;
    EXPECT_NEAR(xy * yx, 1.0, 1e-12);
    std::size_t oracle = 0;
    for (const auto& l : c.lines[0]) oracle += Utf8Bytes(l);
    EXPECT_EQ(compute_byte_premium(c, "x", "y").lang_bytes, oracle);
  }
}

TEST(BytePremium, Errors) {
  const ParallelCorpus c{{"a", "b"}, {{""}, {"x"}}};
  EXPECT_THROW(compute_byte_premium(c, "b", "a"), InputError);
  EXPECT_THROW(compute_byte_premium(c, "b", "zzz"), InputError);
}

TEST(ScaleCorpus, Fixture) {
  const std::vector<std::string> lines(3, std::string(10, 'x'));
  EXPECT_EQ(scaled_target(1.5, 18), 27);
  const auto out = scale_corpus(lines, 1.5, 18, 0, false);
  EXPECT_EQ(out.size(), 2u);
  EXPECT_EQ(byte_count(out), 20u);
}

TEST(ScaleCorpus, WholeCorpusUnderBudget) {
  const std::vector<std::string> lines = {"one", "two", "three"};
  EXPECT_EQ(scale_corpus(lines, 1.0, 1000, 0, false), lines);
}

TEST(ScaleCorpus, BudgetContract) {
  Rng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::string> lines;
    std::size_t max_line = 0;
    for (std::size_t i = 0, n = 1 + rng.below(40); i < n; ++i) {
      lines.push_back(std::string(1 + rng.below(30), 'a'));
      max_line = std::max(max_line, lines.back().size());
    }
    const double ratio = 0.25 + 3.0 * rng.uniform();
    const std::int64_t budget = 1 + static_cast<std::int64_t>(rng.below(400));
    const bool shuffle = rng.below(2) == 1;
    const auto target = scaled_target(ratio, budget);
    const auto out = scale_corpus(lines, ratio, budget, 17, shuffle);
    const auto bytes = static_cast<std::int64_t>(byte_count(out));
    EXPECT_LE(bytes, target);
    if (byte_count(lines) > static_cast<std::size_t>(target)) {
      EXPECT_GT(bytes, target - static_cast<std::int64_t>(max_line));
    } else {
      EXPECT_EQ(out.size(), lines.size());
    }
    EXPECT_EQ(out, scale_corpus(lines, ratio, budget, 17, shuffle));
  }
}

TEST(ScaleCorpus, ShuffleIsSeededSubsequence) {
  std::vector<std::string> lines;
  for (int i = 0; i < 50; ++i) lines.push_back("line" + std::to_string(i));
  const auto a = scale_corpus(lines, 1.0, 120, 3, true);
  const auto b = scale_corpus(lines, 1.0, 120, 4, true);
  EXPECT_NE(a, b);
  EXPECT_EQ(a, scale_corpus(lines, 1.0, 120, 3, true));
  for (const auto& l : a) EXPECT_NE(std::find(lines.begin(), lines.end(), l), lines.end());
  const auto ordered = scale_corpus(lines, 1.0, 120, 3, false);
  EXPECT_EQ(ordered.front(), "line0");
}

TEST(ScaleCorpus, Errors) {
  EXPECT_THROW(scale_corpus(std::vector<std::string>{}, 1.0, 10, 0, false), InputError);
  const std::vector<std::string> lines = {"a"};
  EXPECT_THROW(scale_corpus(lines, 1.0, 0, 0, false), ConfigError);
  EXPECT_THROW(scale_corpus(lines, 0.0, 10, 0, false), ConfigError);
}

}  // namespace
}  // namespace morphalign::bp
