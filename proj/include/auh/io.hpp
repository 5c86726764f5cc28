#pragma once

#include <charconv>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>
#include <variant>
#include <vector>

#include <json.hpp>

#include "auh/bounds.hpp"
#include "auh/classify.hpp"
#include "auh/distribution.hpp"
#include "auh/error.hpp"
#include "auh/metrics.hpp"
#include "auh/rational.hpp"
#include "auh/search.hpp"

namespace auh {

using Json = nlohmann::ordered_json;

/// Shortest representation that reads back to the same double.
inline std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  if (res.ec != std::errc{}) throw DomainError("cannot format double");
  return std::string(buf, res.ptr);
}

// ---------------------------------------------------------------- distributions

inline Json to_json(const Distribution<Rational>& dist) {
  Json probs = Json::array();
  for (const auto& p : dist.probs()) probs.push_back(to_string(p));
  return Json{{"probs", std::move(probs)}};
}

inline Json to_json(const Distribution<double>& dist) {
  Json probs = Json::array();
  for (double p : dist.probs()) probs.push_back(p);
  return Json{{"probs", std::move(probs)}};
}

/// Either representation, as read from a file.
using AnyDistribution = std::variant<Distribution<Rational>, Distribution<double>>;

/// {"probs": ["3/8", ...]} gives an exact distribution, {"probs": [0.375, ...]}
/// a floating one. Mixing strings and numbers is an error.
inline AnyDistribution distribution_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("probs") || !j.at("probs").is_array()) {
    throw ParseError("expected an object with a \"probs\" array");
  }
  const auto& probs = j.at("probs");
  if (probs.empty()) throw InvalidDistribution("empty \"probs\" array");
  const bool strings = probs.front().is_string();
  std::vector<Rational> exact;
  std::vector<double> floating;
  for (const auto& v : probs) {
    if (strings && v.is_string()) {
      exact.push_back(parse_rational(v.get<std::string>()));
    } else if (!strings && v.is_number()) {
      floating.push_back(v.get<double>());
    } else {
      throw ParseError("\"probs\" mixes strings and numbers or holds another type");
    }
  }
  if (strings) return Distribution<Rational>::from_values(std::move(exact));
  return Distribution<double>::from_values(std::move(floating));
}

inline AnyDistribution distribution_from_json_text(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return distribution_from_json(j);
}

// ---------------------------------------------------------------- metrics

template <class T>
Json metrics_to_json(const Distribution<T>& dist, const Metrics<T>& m) {
  Json j;
  j["n"] = dist.size();
  if constexpr (is_exact_v<T>) {
    j["L_exact"] = to_string(m.average_length);
  }
  j["L"] = to_double(m.average_length);
  j["H"] = m.entropy;
  j["R"] = m.redundancy;
  j["auh"] = is_auh(dist);
  return j;
}

// ---------------------------------------------------------------- search reports

inline Json to_json(const SearchReport& r) {
  Json j;
  j["objective"] = std::string(to_string(r.objective));
  j["method"] = r.method;
  j["n"] = r.n;
  if (r.method == "grid") {
    j["resolution"] = r.resolution;
  } else {
    j["seed"] = r.seed;
  }
  if (!r.best_exact.empty()) {
    Json exact = Json::array();
    for (const auto& p : r.best_exact) exact.push_back(to_string(p));
    j["best_dist_exact"] = std::move(exact);
  }
  j["best_dist"] = r.best;
  if (r.best_value_exact) j["best_value_exact"] = to_string(*r.best_value_exact);
  j["best_value"] = r.best_value;
  if (r.bound_exact) j["bound_exact"] = to_string(*r.bound_exact);
  j["bound"] = r.bound;
  if (r.gap_exact) j["gap_exact"] = to_string(*r.gap_exact);
  j["gap"] = r.gap;
  j["within_bound"] = r.within_bound();
  j["evaluated"] = r.evaluated;
  if (r.method == "grid") {
    j["maximizers"] = r.maximizers;
  } else {
    j["iterations"] = r.iterations;
    j["termination"] = r.termination;
  }
  return j;
}

// ---------------------------------------------------------------- bounds table

enum class OutputFormat { json, csv, tsv };

inline OutputFormat parse_output_format(std::string_view name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "tsv") return OutputFormat::tsv;
  throw BadParam("unknown format '" + std::string(name) + "'");
}

struct BoundsRow {
  std::optional<std::size_t> n;  // empty for the n -> infinity row
  std::optional<Rational> l_max_exact;
  double l_max = 0.0;
  double h_max = 0.0;
};

/// Rows n = 2..n_max followed by the limit row.
inline std::vector<BoundsRow> bounds_table(std::size_t n_max) {
  if (n_max < 2) throw BadParam("n_max must be at least 2");
  std::vector<BoundsRow> rows;
  rows.reserve(n_max);
  for (std::size_t n = 2; n <= n_max; ++n) {
    const Rational l = l_max(n);
    rows.push_back({n, l, to_double(l), h_max(n)});
  }
  const auto a = asymptotics();
  rows.push_back({std::nullopt, std::nullopt, a.l_max_inf, a.h_max_inf});
  return rows;
}

/// JSON rows carry r_gap = l_max - h_max as well; the delimited formats keep
/// to the four-column header.
inline std::string render_bounds(const std::vector<BoundsRow>& rows, OutputFormat format) {
  if (format == OutputFormat::json) {
    Json out = Json::array();
    for (const auto& row : rows) {
      Json j;
      if (row.n) {
        j["n"] = *row.n;
      } else {
        j["n"] = "inf";
      }
      j["l_max_exact"] = row.l_max_exact ? Json(to_string(*row.l_max_exact)) : Json(nullptr);
      j["l_max"] = row.l_max;
      j["h_max"] = row.h_max;
      j["r_gap"] = row.l_max - row.h_max;
      out.push_back(std::move(j));
    }
    return out.dump(2) + "\n";
  }
  const char sep = format == OutputFormat::csv ? ',' : '\t';
  std::string out = std::string("n") + sep + "l_max_exact" + sep + "l_max" + sep + "h_max\n";
  for (const auto& row : rows) {
    out += row.n ? std::to_string(*row.n) : std::string("inf");
    out += sep;
    if (row.l_max_exact) out += to_string(*row.l_max_exact);
    out += sep;
    out += format_double(row.l_max);
    out += sep;
    out += format_double(row.h_max);
    out += '\n';
  }
  return out;
}

}  // namespace auh
