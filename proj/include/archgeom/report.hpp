// Copyright 2026 The archgeom Authors.
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

// Structured reports (key-sorted JSON), locale-independent number formatting,
// and the tabular text forms printed by the command-line tool.

#pragma once

#include <charconv>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "archgeom/boxcount.hpp"
#include "archgeom/errors.hpp"
#include "archgeom/stats.hpp"
#include "json.hpp"

namespace archgeom {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// Fixed-point text with `decimals` digits, '.' separator, no negative zero.
inline std::string format_fixed(double v, int decimals) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, decimals);
  if (res.ec != std::errc{}) return "nan";
  std::string s(buf, res.ptr);
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

/// Shortest text that parses back to the same double.
inline std::string format_shortest(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

/// Strict parse of a whole token as a double (no locale, no trailing junk).
inline std::optional<double> parse_double(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) text.remove_suffix(1);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return std::nullopt;
  double v = 0.0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

// ---------------------------------------------------------------------------
// JSON mapping

inline nlohmann::json to_json(const BoxCountSeries& s) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : s.records) records.push_back({{"delta", r.delta}, {"count", r.count}});
  return {{"image_id", s.image_id}, {"records", records}};
}

inline nlohmann::json to_json(const DimensionReport& r) {
  nlohmann::json pairwise = nlohmann::json::array();
  for (const auto& p : r.pairwise) {
    pairwise.push_back({{"delta_large", p.delta_large}, {"delta_small", p.delta_small}, {"dim", p.dim}});
  }
  return {{"kind", "dimension_report"},
          {"series", to_json(r.series)},
          {"pairwise", pairwise},
          {"average_dim", r.average_dim},
          {"lsq_dim", r.lsq_dim},
          {"in_preferred_band", r.in_preferred_band}};
}

inline nlohmann::json to_json(const SeriesStats& s) {
  return {{"mean", s.mean}, {"sample_std", s.sample_std}, {"n", s.n}};
}

/// Reads the box-count series out of a dimension report (bare or wrapped in a
/// report document).
inline BoxCountSeries series_from_json(const nlohmann::json& doc) {
  try {
    const nlohmann::json& rep = doc.contains("report") ? doc.at("report") : doc;
    const auto& js = rep.at("series");
    BoxCountSeries s;
    s.image_id = js.value("image_id", std::string{});
    for (const auto& r : js.at("records")) {
      s.records.push_back({r.at("delta").get<double>(), r.at("count").get<long long>()});
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("report: ") + e.what());
  }
}

/// Envelope written by every command. nlohmann::json objects keep keys sorted,
/// so dump() is stable and re-serialization is byte-identical.
struct ReportDocument {
  std::string tool_version{kToolVersion};
  std::string command;
  std::vector<std::string> inputs;
  nlohmann::json report;

  nlohmann::json to_json() const {
    return {{"tool_version", tool_version}, {"command", command}, {"inputs", inputs}, {"report", report}};
  }

  std::string dump() const { return to_json().dump(2) + "\n"; }

  static ReportDocument parse(std::string_view text) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
      ReportDocument d;
      d.tool_version = j.at("tool_version").get<std::string>();
      d.command = j.at("command").get<std::string>();
      d.inputs = j.at("inputs").get<std::vector<std::string>>();
      d.report = j.at("report");
      return d;
    } catch (const nlohmann::json::exception& e) {
      throw InputError(std::string("report: ") + e.what());
    }
  }
};

// ---------------------------------------------------------------------------
// Text forms

/// "delta,count,pairwise_dim" rows; the first row has no pairwise value.
inline std::string boxcount_csv(const DimensionReport& r) {
  std::string out = "delta,count,pairwise_dim\n";
  for (std::size_t k = 0; k < r.series.records.size(); ++k) {
    const auto& rec = r.series.records[k];
    out += format_shortest(rec.delta) + "," + std::to_string(rec.count) + ",";
    if (k > 0) out += format_shortest(r.pairwise[k - 1].dim);
    out += "\n";
  }
  return out;
}

/// Tab-separated dimension table: one row per scale
/// pair, dims to 2 decimals, the average to 3.
inline std::string boxcount_table(const DimensionReport& r) {
  std::string out = "large grid\tsmall grid\tdimension\n";
  for (const auto& p : r.pairwise) {
    out += format_shortest(p.delta_large) + "\t" + format_shortest(p.delta_small) + "\t" +
           format_fixed(p.dim, 2) + "\n";
  }
  out += "average fractal dimension\t\t" + format_fixed(r.average_dim, 3) + "\n";
  out += "least-squares dimension\t\t" + format_fixed(r.lsq_dim, 3) + "\n";
  out += std::string("preferred band [1.1, 1.5]\t\t") + (r.in_preferred_band ? "yes" : "no") + "\n";
  return out;
}

}  // namespace archgeom
