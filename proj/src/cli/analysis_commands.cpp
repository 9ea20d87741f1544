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


#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <map>
#include <set>

#include "commands.hpp"
#include "json.hpp"
#include "morphalign/errors.hpp"
#include "morphalign/rng.hpp"
#include "morphalign/stats.hpp"
#include "morphalign/textio.hpp"

namespace morphalign::cli {
namespace {

using nlohmann::ordered_json;

bool is_missing(const std::string& v) {
  return v.empty() || v == "NA" || v == "NaN" || v == "nan" || v == "null";
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

struct Term {
  std::string label;  // as written
  std::string column;
  bool force_factor = false;
};

Term parse_term(const std::string& raw) {
  const std::string t = trim(raw);
  if (t.empty()) throw ConfigError("formula has an empty term");
  if (t.size() > 3 && t.starts_with("C(") && t.back() == ')') {
    return {t, trim(t.substr(2, t.size() - 3)), true};
  }
  return {t, t, false};
}

struct Formula {
  std::string response;
  std::vector<Term> terms;
};

Formula parse_formula(const std::string& text) {
  const auto tilde = text.find('~');
  if (tilde == std::string::npos) throw ConfigError("formula must look like 'y ~ a + b'");
  Formula f;
  f.response = trim(std::string_view(text).substr(0, tilde));
  if (f.response.empty()) throw ConfigError("formula has no response");
  const std::string rhs = trim(std::string_view(text).substr(tilde + 1));
  if (rhs == "1") return f;
  for (const auto& part : textio::split(rhs, '+')) f.terms.push_back(parse_term(part));
  return f;
}

std::size_t require_column(const textio::Table& t, const std::string& name,
                           const std::string& origin) {
  const auto c = t.column(name);
  if (!c) throw FormatError(origin + ": no column '" + name + "'");
  return *c;
}

std::vector<double> numeric_column(const textio::Table& t, std::size_t col,
                                   const std::vector<std::size_t>& rows, const std::string& name) {
  std::vector<double> out;
  out.reserve(rows.size());
  for (const std::size_t r : rows) {
    const auto v = textio::try_parse_double(t.rows[r][col]);
    if (!v) throw FormatError("column '" + name + "' value '" + t.rows[r][col] + "' is not a number");
    out.push_back(*v);
  }
  return out;
}

bool all_numeric(const textio::Table& t, std::size_t col, const std::vector<std::size_t>& rows) {
  for (const std::size_t r : rows) {
    if (!textio::try_parse_double(t.rows[r][col])) return false;
  }
  return true;
}

stats::Design build_design(const textio::Table& t, const std::vector<Term>& terms,
                           const std::vector<std::size_t>& rows, const std::string& origin) {
  stats::Design d(rows.size());
  for (const auto& term : terms) {
    const std::size_t col = require_column(t, term.column, origin);
    if (!term.force_factor && all_numeric(t, col, rows)) {
      d.add_numeric(term.column, numeric_column(t, col, rows, term.column));
    } else {
      std::vector<std::string> levels;
      for (const std::size_t r : rows) levels.push_back(t.rows[r][col]);
      d.add_factor(term.column, levels);
    }
  }
  return d;
}

ordered_json ftest_json(const stats::FTestResult& f) {
  return {{"F", f.F}, {"df_num", f.df_num}, {"df_den", f.df_den}, {"p", f.p}};
}

ordered_json ttest_json(const stats::TTestResult& t) {
  return {{"mean_a", t.mean_a}, {"mean_b", t.mean_b}, {"t", t.t}, {"df", t.df}, {"p", t.p}};
}

struct Groups {
  std::vector<std::string> names;  // sorted
  std::map<std::string, std::vector<double>> values;
};

Groups split_groups(const textio::Table& t, std::size_t group_col, std::size_t value_col) {
  Groups g;
  for (const auto& row : t.rows) {
    if (is_missing(row[group_col]) || is_missing(row[value_col])) continue;
    const auto v = textio::try_parse_double(row[value_col]);
    if (!v) continue;
    g.values[row[group_col]].push_back(*v);
  }
  for (const auto& [name, v] : g.values) g.names.push_back(name);
  return g;
}

std::optional<stats::TTestResult> two_group_test(const Groups& g, bool pooled) {
  if (g.names.size() != 2) return std::nullopt;
  const auto& a = g.values.at(g.names[0]);
  const auto& b = g.values.at(g.names[1]);
  if (a.size() < 2 || b.size() < 2) return std::nullopt;
  return pooled ? stats::pooled_t(a, b) : stats::welch_t(a, b);
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (const char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string file_stem_for(const std::string& metric) {
  std::string out;
  for (const char c : metric) {
    const auto u = static_cast<unsigned char>(c);
    out += (std::isalnum(u) || c == '-' || c == '_') ? c : '_';
  }
  return out.empty() ? "metric" : out;
}

struct Bar {
  std::string lang;
  std::string group;
  double value;
};

// Bars grouped by group name (sorted), input order within a group. Height
// is proportional to |value| on a shared scale; negative bars hang below
// the zero line.
std::string render_svg(const std::string& metric, const std::vector<Bar>& bars) {
  constexpr double kBarW = 24, kGap = 6, kGroupGap = 18, kPlotH = 200, kLeft = 48, kTop = 32;
  const std::vector<std::string> palette = {"#4c72b0", "#dd8452", "#55a868", "#c44e52",
                                            "#8172b3", "#937860", "#da8bc3", "#8c8c8c"};
  double max_pos = 0, max_neg = 0;
  for (const auto& b : bars) {
    max_pos = std::max(max_pos, b.value);
    max_neg = std::max(max_neg, -b.value);
  }
  const double span = max_pos + max_neg > 0 ? max_pos + max_neg : 1.0;
  const double scale = kPlotH / span;
  const double zero_y = kTop + max_pos * scale;

  std::vector<std::string> groups;
  for (const auto& b : bars) {
    if (std::find(groups.begin(), groups.end(), b.group) == groups.end()) groups.push_back(b.group);
  }
  std::sort(groups.begin(), groups.end());

  std::string body;
  double x = kLeft;
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const std::string& colour = palette[gi % palette.size()];
    const double group_x = x;
    for (const auto& b : bars) {
      if (b.group != groups[gi]) continue;
      const double h = std::abs(b.value) * scale;
      const double y = b.value >= 0 ? zero_y - h : zero_y;
      body += "  <rect x=\"" + fixed(x, 2) + "\" y=\"" + fixed(y, 2) + "\" width=\"" +
              fixed(kBarW, 2) + "\" height=\"" + fixed(h, 2) + "\" fill=\"" + colour +
              "\" data-lang=\"" + xml_escape(b.lang) + "\" data-group=\"" +
              xml_escape(b.group) + "\" data-value=\"" + textio::format_double(b.value) +
              "\"><title>" + xml_escape(b.lang) + ": " + textio::format_double(b.value) +
              "</title></rect>\n";
      body += "  <text x=\"" + fixed(x + kBarW / 2, 2) + "\" y=\"" +
              fixed(kTop + kPlotH + 14, 2) + "\" font-size=\"9\" text-anchor=\"end\" " +
              "transform=\"rotate(-60 " + fixed(x + kBarW / 2, 2) + " " +
              fixed(kTop + kPlotH + 14, 2) + ")\">" + xml_escape(b.lang) + "</text>\n";
      x += kBarW + kGap;
    }
    body += "  <text x=\"" + fixed((group_x + x - kGap) / 2, 2) + "\" y=\"" +
            fixed(kTop + kPlotH + 70, 2) + "\" font-size=\"12\" text-anchor=\"middle\">" +
            xml_escape(groups[gi]) + "</text>\n";
    x += kGroupGap;
  }
  const double width = x + kLeft;
  const double height = kTop + kPlotH + 90;
  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fixed(width, 0) +
                    "\" height=\"" + fixed(height, 0) + "\" viewBox=\"0 0 " + fixed(width, 0) +
                    " " + fixed(height, 0) + "\">\n";
  svg += "  <text x=\"" + fixed(kLeft, 2) + "\" y=\"20\" font-size=\"14\">" +
         xml_escape(metric) + "</text>\n";
  svg += "  <line x1=\"" + fixed(kLeft - 4, 2) + "\" y1=\"" + fixed(zero_y, 2) + "\" x2=\"" +
         fixed(width - kLeft + 4, 2) + "\" y2=\"" + fixed(zero_y, 2) +
         "\" stroke=\"#333\" stroke-width=\"1\"/>\n";
  svg += body;
  svg += "</svg>\n";
  return svg;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

CommandResult analyze(const AnalyzeOptions& o) {
  if (o.formula.empty() && o.ttest.empty() && o.pearson.empty()) {
    throw ConfigError("analyze needs --formula, --ttest or --pearson");
  }
  if (!o.drop.empty() && o.formula.empty()) throw ConfigError("--drop needs --formula");
  const auto table = textio::read_csv(o.data);
  if (table.rows.empty()) throw InputError(o.data + ": no rows");

  ordered_json j;
  j["data"] = o.data;
  if (!o.formula.empty()) {
    const Formula f = parse_formula(o.formula);
    std::vector<std::size_t> cols = {require_column(table, f.response, o.data)};
    for (const auto& term : f.terms) cols.push_back(require_column(table, term.column, o.data));
    std::vector<std::size_t> rows;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
      bool ok = true;
      for (const std::size_t c : cols) ok = ok && !is_missing(table.rows[r][c]);
      if (ok) rows.push_back(r);
    }
    const auto y = numeric_column(table, cols.front(), rows, f.response);
    const auto full = stats::ols_fit(y, build_design(table, f.terms, rows, o.data));

    j["formula"] = o.formula;
    j["n"] = rows.size();
    j["n_dropped_missing"] = table.rows.size() - rows.size();
    ordered_json coef = ordered_json::object();
    for (std::size_t k = 0; k < full.names.size(); ++k) coef[full.names[k]] = full.coefficients[k];
    j["coefficients"] = coef;
    j["r2"] = full.r2;
    j["adj_r2"] = full.adj_r2;
    j["rss"] = full.rss;
    j["df_resid"] = full.df_resid;
    j["F_vs_intercept"] = ftest_json(full.vs_reduced);

    if (!o.drop.empty()) {
      std::vector<Term> kept;
      std::set<std::string> dropped;
      for (const auto& d : o.drop) dropped.insert(trim(d));
      std::size_t matched = 0;
      for (const auto& term : f.terms) {
        if (dropped.contains(term.label) || dropped.contains(term.column)) {
          ++matched;
        } else {
          kept.push_back(term);
        }
      }
      if (matched != dropped.size()) throw ConfigError("--drop names a term not in the formula");
      const auto reduced = stats::ols_fit(y, build_design(table, kept, rows, o.data));
      ordered_json nested = ftest_json(stats::nested_f(full, reduced));
      nested["dropped"] = o.drop;
      nested["reduced_r2"] = reduced.r2;
      j["nested"] = nested;
    }
  }
  if (!o.ttest.empty()) {
    const auto g = split_groups(table, require_column(table, o.group, o.data),
                                require_column(table, o.ttest, o.data));
    if (g.names.size() != 2) {
      throw StatError("--ttest needs exactly 2 levels of '" + o.group + "', found " +
                      std::to_string(g.names.size()));
    }
    const auto& a = g.values.at(g.names[0]);
    const auto& b = g.values.at(g.names[1]);
    ordered_json t = ttest_json(o.pooled ? stats::pooled_t(a, b) : stats::welch_t(a, b));
    t["metric"] = o.ttest;
    t["group"] = o.group;
    t["group_a"] = g.names[0];
    t["group_b"] = g.names[1];
    t["n_a"] = a.size();
    t["n_b"] = b.size();
    t["method"] = o.pooled ? "pooled" : "welch";
    j["ttest"] = t;
  }
  if (!o.pearson.empty()) {
    const auto colon = o.pearson.find(':');
    if (colon == std::string::npos) throw ConfigError("--pearson expects X:Y");
    const std::string xn = trim(o.pearson.substr(0, colon));
    const std::string yn = trim(o.pearson.substr(colon + 1));
    const std::size_t xc = require_column(table, xn, o.data);
    const std::size_t yc = require_column(table, yn, o.data);
    std::vector<std::size_t> rows;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
      if (!is_missing(table.rows[r][xc]) && !is_missing(table.rows[r][yc])) rows.push_back(r);
    }
    const auto pr = stats::pearson_r(numeric_column(table, xc, rows, xn),
                                     numeric_column(table, yc, rows, yn));
    j["pearson"] = {{"x", xn}, {"y", yn},          {"n", rows.size()},   {"r", pr.r},
                    {"F", pr.F}, {"df_num", pr.df_num}, {"df_den", pr.df_den}, {"p", pr.p}};
  }
  const fs::path out(o.out);
  if (out.has_parent_path()) fs::create_directories(out.parent_path());
  textio::write_file(out, j.dump(2) + "\n");
  CommandResult r;
  r.inputs.emplace_back(o.data);
  r.outputs.push_back(out);
  r.manifest = fs::path(o.out + ".manifest.json");
  return r;
}

CommandResult report(const ReportOptions& o) {
  CommandResult r;
  textio::Table table;
  for (const auto& path : o.inputs) {
    auto t = textio::read_csv(path);
    r.inputs.emplace_back(path);
    if (table.header.empty()) {
      table.header = t.header;
    } else if (t.header != table.header) {
      throw FormatError(path + ": header differs from " + o.inputs.front());
    }
    for (auto& row : t.rows) table.rows.push_back(std::move(row));
  }
  const std::size_t lang_col = require_column(table, "lang", o.inputs.front());
  const std::size_t group_col = require_column(table, o.group, o.inputs.front());
  if (table.rows.empty()) throw InputError("report: no data rows");

  std::vector<std::size_t> all(table.rows.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  const fs::path dir(o.out_dir);
  fs::create_directories(dir);

  ordered_json summary;
  summary["group_column"] = o.group;
  summary["n_rows"] = table.rows.size();
  ordered_json metrics = ordered_json::array();
  for (std::size_t c = 0; c < table.header.size(); ++c) {
    if (c == lang_col || c == group_col) continue;
    std::vector<std::size_t> present;
    for (const std::size_t i : all) {
      if (!is_missing(table.rows[i][c])) present.push_back(i);
    }
    if (present.empty() || !all_numeric(table, c, present)) continue;
    const std::string& name = table.header[c];

    const Groups g = split_groups(table, group_col, c);
    ordered_json m;
    m["metric"] = name;
    ordered_json groups = ordered_json::array();
    for (const auto& gname : g.names) {
      const auto& v = g.values.at(gname);
      groups.push_back({{"name", gname}, {"n", v.size()}, {"mean", stats::mean(v)}});
    }
    m["groups"] = groups;
    std::optional<stats::TTestResult> test;
    try {
      test = two_group_test(g, false);
    } catch (const StatError&) {
      test.reset();
    }
    m["welch"] = test ? ttest_json(*test) : ordered_json(nullptr);

    std::vector<Bar> bars;
    for (const std::size_t i : present) {
      if (is_missing(table.rows[i][group_col])) continue;
      bars.push_back({table.rows[i][lang_col], table.rows[i][group_col],
                      *textio::try_parse_double(table.rows[i][c])});
    }
    const std::string chart = file_stem_for(name) + ".svg";
    textio::write_file(dir / chart, render_svg(name, bars));
    r.outputs.push_back(dir / chart);
    m["chart"] = chart;
    metrics.push_back(m);
  }
  if (metrics.empty()) throw FormatError("report: no numeric metric columns");
  summary["metrics"] = metrics;
  textio::write_file(dir / "summary.json", summary.dump(2) + "\n");
  r.outputs.insert(r.outputs.begin(), dir / "summary.json");
  r.manifest = dir / "manifest.json";
  return r;
}

void write_manifest(const CommandResult& result, const std::string& subcommand,
                    const std::string& config_hash) {
  auto files = [](const std::vector<fs::path>& paths) {
    ordered_json arr = ordered_json::array();
    for (const auto& p : paths) {
      arr.push_back({{"path", p.string()}, {"fnv1a64", textio::fnv1a64_hex(textio::read_file(p))}});
    }
    return arr;
  };
  ordered_json j;
  j["subcommand"] = subcommand;
  j["toolkit_version"] = MORPHALIGN_VERSION;
  j["config_hash"] = config_hash;
  j["seed"] = result.seed ? ordered_json(*result.seed) : ordered_json(nullptr);
  j["sampler"] = kSamplerAlgorithm;
  j["inputs"] = files(result.inputs);
  j["outputs"] = files(result.outputs);
  j["timestamp"] = utc_timestamp();
  if (result.manifest.has_parent_path()) fs::create_directories(result.manifest.parent_path());
  textio::write_file(result.manifest, j.dump(2) + "\n");
}

}  // namespace morphalign::cli
