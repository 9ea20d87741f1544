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


#include "morphalign/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "json.hpp"
#include "morphalign/stats.hpp"
#include "morphalign/textio.hpp"

namespace morphalign::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("morphalign_cli_" +
            std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int Run(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return run(args, out_, err_);
  }
  std::string P(const std::string& name) const { return (dir_ / name).string(); }
  void Write(const std::string& name, const std::string& body) const {
    textio::write_file(dir_ / name, body);
  }
  std::string Read(const std::string& name) const { return textio::read_file(dir_ / name); }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, Table1Golden) {
  for (const std::string t : {"1", "2"}) {
    ASSERT_EQ(Run({"morphscore", "--model", "data/table1/tokenizer" + t + ".json", "--dataset",
                   "data/table1/dataset.tsv", "--out", P("r" + t + ".csv")}),
              kExitOk)
        << err_.str();
    EXPECT_EQ(Read("r" + t + ".csv"),
              textio::read_file("data/table1/expected_tokenizer" + t + ".csv"));
    EXPECT_TRUE(fs::exists(P("r" + t + ".csv.manifest.json")));
  }
}

TEST_F(CliTest, SynthIsDeterministic) {
  const std::vector<std::string> base = {"synth", "--typology", "agglutinative", "--seed", "1",
                                         "--n-words", "500"};
  auto a = base, b = base;
  a.insert(a.end(), {"--out-dir", P("a")});
  b.insert(b.end(), {"--out-dir", P("b"), "--threads", "3"});
  ASSERT_EQ(Run(a), kExitOk) << err_.str();
  ASSERT_EQ(Run(b), kExitOk) << err_.str();
  const auto ma = json::parse(Read("a/manifest.json"));
  const auto mb = json::parse(Read("b/manifest.json"));
  ASSERT_EQ(ma["outputs"].size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(ma["outputs"][i]["fnv1a64"], mb["outputs"][i]["fnv1a64"]);
  }
  EXPECT_EQ(ma["config_hash"], mb["config_hash"]);
  EXPECT_EQ(ma["seed"], 1);
  EXPECT_EQ(ma["subcommand"], "synth");

  ASSERT_EQ(Run({"synth", "--typology", "agglutinative", "--seed", "2", "--n-words", "500",
                 "--out-dir", P("c")}),
            kExitOk);
  EXPECT_NE(Read("a/corpus.txt"), Read("c/corpus.txt"));
  EXPECT_NE(ma["config_hash"], json::parse(Read("c/manifest.json"))["config_hash"]);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(Run({"synth", "--out-dir", P("x"), "--no-such-flag"}), kExitUsage);
  EXPECT_NE(err_.str().find("Usage"), std::string::npos) << err_.str();
  EXPECT_EQ(Run({"frobnicate"}), kExitUsage);
  EXPECT_EQ(Run({}), kExitUsage);
  EXPECT_EQ(Run({"--help"}), kExitOk);
  EXPECT_NE(out_.str().find("morphscore"), std::string::npos);
}

TEST_F(CliTest, ErrorExitCodes) {
  Write("bad.tsv", "word\tboundary\tlang\tsource\nabc\tx\teng\tUD\n");
  EXPECT_EQ(Run({"morphscore", "--model", "data/table1/tokenizer1.json", "--dataset", P("bad.tsv"),
                 "--out", P("o.csv")}),
            kExitInput);
  Write("tiny.txt", "ab ab\n");
  EXPECT_EQ(Run({"train-tokenizer", "--corpus", P("tiny.txt"), "--vocab-size", "3", "--out",
                 P("m.json")}),
            kExitStat);
  EXPECT_EQ(Run({"synth", "--n-slots", "0", "--out-dir", P("s")}), kExitStat);
  Write("profile.csv", "lang,morph_type\neus_latn,agglutinative\nhrv_latn,fusional\n"
                       "isl_latn,fusional\nell_grek,fusional\n");
  EXPECT_EQ(Run({"morphscore", "--model", "data/table1/tokenizer1.json", "--dataset",
                 "data/table1/dataset.tsv", "--profile", P("profile.csv"), "--compare-out",
                 P("c.json"), "--out", P("o.csv")}),
            kExitStat);
}

TEST_F(CliTest, ConfigFileAndFlagPrecedence) {
  Write("cfg.ini", "[synth]\nseed=5\nn-words=40\ntypology=fusional\n");
  ASSERT_EQ(Run({"--config", P("cfg.ini"), "synth", "--out-dir", P("a")}), kExitOk) << err_.str();
  ASSERT_EQ(Run({"synth", "--seed", "5", "--n-words", "40", "--typology", "fusional",
                 "--out-dir", P("b")}),
            kExitOk);
  EXPECT_EQ(Read("a/corpus.txt"), Read("b/corpus.txt"));
  ASSERT_EQ(Run({"--config", P("cfg.ini"), "synth", "--seed", "6", "--out-dir", P("c")}), kExitOk);
  EXPECT_NE(Read("a/corpus.txt"), Read("c/corpus.txt"));
  EXPECT_EQ(json::parse(Read("c/spec.json"))["seed"], 6);
}

TEST_F(CliTest, TrainTokenizeAndMetricsAcrossThreads) {
  ASSERT_EQ(Run({"synth", "--seed", "3", "--n-words", "3000", "--out-dir", P("s")}), kExitOk);
  ASSERT_EQ(Run({"train-tokenizer", "--corpus", P("s/corpus.txt"), "--vocab-size", "300",
                 "--out", P("m.json")}),
            kExitOk)
      << err_.str();
  ASSERT_EQ(Run({"train-tokenizer", "--corpus", P("s/corpus.txt"), "--vocab-size", "300",
                 "--out", P("m2.json")}),
            kExitOk);
  EXPECT_EQ(Read("m.json"), Read("m2.json"));
  for (const std::string threads : {"1", "3"}) {
    ASSERT_EQ(Run({"--threads", threads, "metrics", "--model", P("m.json"), "--corpus",
                   "syn=" + P("s/corpus.txt"), "--out", P("met" + threads + ".csv")}),
              kExitOk)
        << err_.str();
    ASSERT_EQ(Run({"--threads", threads, "tokenize", "--model", P("m.json"), "--input",
                   P("s/corpus.txt"), "--out", P("tok" + threads + ".txt")}),
              kExitOk);
  }
  EXPECT_EQ(Read("met1.csv"), Read("met3.csv"));
  EXPECT_EQ(Read("tok1.txt"), Read("tok3.txt"));
  const auto table = textio::parse_csv(Read("met1.csv"), "met");
  ASSERT_EQ(table.rows.size(), 1u);
  EXPECT_EQ(table.rows[0][0], "m.json");
  EXPECT_EQ(table.rows[0][*table.column("renyi_alpha")], "2.5");
}

TEST_F(CliTest, BytePremiumAndScaling) {
  Write("lat.txt", "ab\n");
  Write("grk.txt", "αβ\n");
  ASSERT_EQ(Run({"byte-premium", "--corpus", "grk=" + P("grk.txt"), "--corpus",
                 "lat=" + P("lat.txt"), "--pivot", "lat", "--out", P("bp.csv")}),
            kExitOk)
      << err_.str();
  EXPECT_EQ(Read("bp.csv"), "lang,ratio,bytes\ngrk,2,4\nlat,1,2\n");

  Write("ten.txt", "aaaaaaaaaa\nbbbbbbbbbb\ncccccccccc\n");
  ASSERT_EQ(Run({"scale-corpus", "--input", P("ten.txt"), "--budget-bytes", "18", "--premium",
                 "1.5", "--out", P("scaled.txt")}),
            kExitOk);
  EXPECT_EQ(Read("scaled.txt"), "aaaaaaaaaa\nbbbbbbbbbb\n");
  Write("empty.txt", "");
  EXPECT_EQ(Run({"scale-corpus", "--input", P("empty.txt"), "--budget-bytes", "18", "--out",
                 P("x.txt")}),
            kExitInput);
  Write("short.txt", "x\n");
  EXPECT_EQ(Run({"byte-premium", "--corpus", "a=" + P("lat.txt"), "--corpus",
                 "b=" + P("ten.txt"), "--out", P("bad.csv"), "--pivot", "a"}),
            kExitInput);
}

TEST_F(CliTest, BuildDataset) {
  std::string conllu;
  for (int i = 0; i < 150; ++i) {
    const std::string lemma = "w" + std::to_string(i);
    conllu += "1\t" + lemma + "s\t" + lemma + "\tNOUN\t_\t_\t0\troot\t_\t_\n\n";
  }
  Write("t.conllu", conllu);
  ASSERT_EQ(Run({"build-dataset", "--lang", "eng_latn", "--conllu", P("t.conllu"), "--seed", "1",
                 "--out", P("d.tsv")}),
            kExitOk)
      << err_.str();
  EXPECT_EQ(textio::split_lines(Read("d.tsv")).size(), 151u);
  Write("small.conllu", "1\tbooks\tbook\tNOUN\t_\t_\t0\troot\t_\t_\n");
  EXPECT_EQ(Run({"build-dataset", "--lang", "eng_latn", "--conllu", P("small.conllu"), "--out",
                 P("e.tsv")}),
            kExitInput);
  EXPECT_NE(err_.str().find("1"), std::string::npos);
}

TEST_F(CliTest, AnalyzeMatchesStatsModule) {
  Write("langs.csv",
        "lang,morph_type,family,score,x\n"
        "a1,agglutinative,f1,0.9,1\na2,agglutinative,f2,0.8,2\na3,agglutinative,f1,0.7,4\n"
        "f1,fusional,f3,0.1,3\nf2,fusional,f3,0.2,5\nf3,fusional,f2,NA,6\n");
  ASSERT_EQ(Run({"analyze", "--data", P("langs.csv"), "--formula", "score ~ x + morph_type",
                 "--drop", "morph_type", "--ttest", "score", "--pearson", "x:score", "--out",
                 P("res.json")}),
            kExitOk)
      << err_.str();
  const auto j = json::parse(Read("res.json"));
  EXPECT_EQ(j["n"], 5);
  EXPECT_EQ(j["n_dropped_missing"], 1);
  const std::vector<double> a = {0.9, 0.8, 0.7}, b = {0.1, 0.2};
  const auto t = stats::welch_t(a, b);
  EXPECT_DOUBLE_EQ(j["ttest"]["t"].get<double>(), t.t);
  EXPECT_DOUBLE_EQ(j["ttest"]["p"].get<double>(), t.p);
  EXPECT_EQ(j["ttest"]["group_a"], "agglutinative");
  EXPECT_TRUE(j["coefficients"].contains("morph_type[fusional]"));
  EXPECT_TRUE(j.contains("nested"));
  EXPECT_EQ(j["pearson"]["n"], 5);

  EXPECT_EQ(Run({"analyze", "--data", P("langs.csv"), "--formula", "score ~ nope", "--out",
                 P("r2.json")}),
            kExitInput);
  EXPECT_EQ(Run({"analyze", "--data", P("langs.csv"), "--out", P("r3.json")}), kExitStat);
}

TEST_F(CliTest, ReportChartsAndMeans) {
  Write("two.csv", "lang,morph_type,ctc\neng_latn,fusional,120\ntur_latn,agglutinative,150.5\n");
  ASSERT_EQ(Run({"report", "--input", P("two.csv"), "--out-dir", P("rep")}), kExitOk)
      << err_.str();
  const std::string svg = Read("rep/ctc.svg");
  std::size_t bars = 0;
  for (std::size_t pos = 0; (pos = svg.find("<rect", pos)) != std::string::npos; ++pos) ++bars;
  EXPECT_EQ(bars, 2u);
  EXPECT_NE(svg.find("data-value=\"120\""), std::string::npos);
  EXPECT_NE(svg.find("data-value=\"150.5\""), std::string::npos);
  ASSERT_EQ(Run({"report", "--input", P("two.csv"), "--out-dir", P("rep2")}), kExitOk);
  EXPECT_EQ(svg, Read("rep2/ctc.svg"));

  Write("groups.csv",
        "lang,morph_type,score\na,agg,0.61\nb,agg,0.73\nc,agg,0.7\nd,fus,0.35\ne,fus,0.52\n");
  ASSERT_EQ(Run({"report", "--input", P("groups.csv"), "--out-dir", P("rep3")}), kExitOk);
  const auto j = json::parse(Read("rep3/summary.json"));
  const auto& m = j["metrics"][0];
  EXPECT_EQ(m["metric"], "score");
  const std::vector<double> agg = {0.61, 0.73, 0.7}, fus = {0.35, 0.52};
  EXPECT_NEAR(m["groups"][0]["mean"].get<double>(), stats::mean(agg), 1e-12);
  EXPECT_NEAR(m["groups"][1]["mean"].get<double>(), stats::mean(fus), 1e-12);
  EXPECT_NEAR(m["welch"]["t"].get<double>(), stats::welch_t(agg, fus).t, 1e-12);

  Write("empty.csv", "");
  EXPECT_EQ(Run({"report", "--input", P("empty.csv"), "--out-dir", P("rep4")}), kExitInput);
  Write("header.csv", "lang,morph_type,ctc\n");
  EXPECT_EQ(Run({"report", "--input", P("header.csv"), "--out-dir", P("rep5")}), kExitInput);
  Write("nogroup.csv", "lang,ctc\nx,1\n");
  EXPECT_EQ(Run({"report", "--input", P("nogroup.csv"), "--out-dir", P("rep6")}), kExitInput);
}

}  // namespace
}  // namespace morphalign::cli
