#include <gtest/gtest.h>

#include <string>
#include <variant>

#include "auh/families.hpp"
#include "auh/io.hpp"

using auh::Distribution;
using auh::Rational;

TEST(Io, ExactDistributionRoundTrip) {
  const auto d = auh::fibonacci_dist(5);
  const auto j = auh::to_json(d);
  EXPECT_EQ(j.dump(), R"({"probs":["3/8","1/4","1/8","1/8","1/8"]})");
  const auto back = auh::distribution_from_json(j);
  ASSERT_TRUE(std::holds_alternative<Distribution<Rational>>(back));
  EXPECT_EQ(std::get<Distribution<Rational>>(back), d);
}

TEST(Io, SpecExampleFile) {
  const auto any = auh::distribution_from_json_text(R"({"probs": ["3/8","2/8","1/8","1/8","1/8"]})");
  EXPECT_EQ(std::get<Distribution<Rational>>(any), auh::fibonacci_dist(5));
}

TEST(Io, FloatDistribution) {
  const auto any = auh::distribution_from_json_text(R"({"probs": [0.25, 0.375, 0.125, 0.125, 0.125]})");
  ASSERT_TRUE(std::holds_alternative<Distribution<double>>(any));
  const auto& d = std::get<Distribution<double>>(any);
  EXPECT_EQ(d[0], 0.375);
  EXPECT_EQ(auh::to_json(d).dump(), R"({"probs":[0.375,0.25,0.125,0.125,0.125]})");
}

TEST(Io, MalformedInput) {
  EXPECT_THROW(auh::distribution_from_json_text("{"), auh::ParseError);
  EXPECT_THROW(auh::distribution_from_json_text(R"({"p": [1]})"), auh::ParseError);
  EXPECT_THROW(auh::distribution_from_json_text(R"({"probs": ["1/2", 0.5]})"), auh::ParseError);
  EXPECT_THROW(auh::distribution_from_json_text(R"({"probs": [true, false]})"), auh::ParseError);
  EXPECT_THROW(auh::distribution_from_json_text(R"({"probs": []})"), auh::InvalidDistribution);
  EXPECT_THROW(auh::distribution_from_json_text(R"({"probs": ["1/2", "1/3"]})"), auh::InvalidDistribution);
}

TEST(Io, MetricsJson) {
  const auto d = auh::fibonacci_dist(4);
  const auto j = auh::metrics_to_json(d, auh::huffman_metrics(d));
  EXPECT_EQ(j["L_exact"], "2/1");
  EXPECT_EQ(j["L"], 2.0);
  EXPECT_NEAR(j["H"].get<double>(), 1.921928, 1e-6);
  EXPECT_NEAR(j["R"].get<double>(), 0.078072, 1e-6);
  EXPECT_EQ(j["auh"], true);
}

TEST(Io, SearchReportFieldOrderIsFixed) {
  const auto r = auh::brute_force_max({3, 9}, auh::Objective::avg_length);
  const auto j = auh::to_json(r);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"objective", "method", "n", "resolution", "best_dist_exact", "best_dist",
                                            "best_value_exact", "best_value", "bound_exact", "bound", "gap_exact",
                                            "gap", "within_bound", "evaluated", "maximizers"}));
  EXPECT_EQ(j["best_dist_exact"][0], "1/3");
  EXPECT_EQ(j["gap_exact"], "0/1");
  EXPECT_EQ(j.dump(), auh::to_json(auh::brute_force_max({3, 9}, auh::Objective::avg_length, 4)).dump());
}

TEST(Io, BoundsCsv) {
  const auto text = auh::render_bounds(auh::bounds_table(3), auh::OutputFormat::csv);
  EXPECT_EQ(text.substr(0, text.find('\n')), "n,l_max_exact,l_max,h_max");
  EXPECT_NE(text.find("\n2,1/1,1,1\n"), std::string::npos);
  EXPECT_NE(text.find("\n3,5/3,1.6666666666666667,1.584962500721156"), std::string::npos);
  EXPECT_NE(text.find("\ninf,,2.618033988749895,2.51"), std::string::npos);
}

TEST(Io, BoundsTsvAndJson) {
  const auto tsv = auh::render_bounds(auh::bounds_table(2), auh::OutputFormat::tsv);
  EXPECT_EQ(tsv.substr(0, tsv.find('\n')), "n\tl_max_exact\tl_max\th_max");
  const auto j = auh::Json::parse(auh::render_bounds(auh::bounds_table(3), auh::OutputFormat::json));
  ASSERT_EQ(j.size(), 3U);
  EXPECT_EQ(j[1]["l_max_exact"], "5/3");
  EXPECT_NEAR(j[1]["r_gap"].get<double>(), 5.0 / 3.0 - std::log2(3.0), 1e-15);
  EXPECT_EQ(j[2]["n"], "inf");
  EXPECT_TRUE(j[2]["l_max_exact"].is_null());
  EXPECT_THROW(auh::bounds_table(1), auh::BadParam);
  EXPECT_THROW(auh::parse_output_format("xml"), auh::BadParam);
}

TEST(Io, FormatDoubleRoundTrips) {
  EXPECT_EQ(auh::format_double(0.1), "0.1");
  EXPECT_EQ(auh::format_double(2.0), "2");
  EXPECT_EQ(std::stod(auh::format_double(1.0 / 3.0)), 1.0 / 3.0);
}
