// auh: command-line front end for the anti-uniform Huffman library.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.
// Data goes to stdout (or --out), diagnostics to stderr.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "auh/auh.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& data, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout.write(data.data(), static_cast<std::streamsize>(data.size()));
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
}

unsigned worker_count() { return std::max(1U, std::thread::hardware_concurrency()); }

// "3..5" or "4".
std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const auto n = std::stoul(text);
      return {n, n};
    }
    return {std::stoul(text.substr(0, dots)), std::stoul(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("bad range '" + text + "', expected N or LO..HI");
  }
}

struct Options {
  std::size_t n = 0;
  std::size_t n_max = 0;
  std::string n_range = "3..5";
  std::string kind;
  std::string eps;
  std::string q;
  std::string lambda;
  std::uint32_t grid = 0;
  std::string objective = "length";
  std::uint64_t trials = 1000;
  std::optional<std::uint64_t> seed;
  std::string format = "json";
  std::string out;
  std::string dist;
  std::string in;
};

int cmd_bounds(const Options& o) {
  if (o.n_max < 2) throw UsageError("--n-max must be at least 2");
  write_output(auh::render_bounds(auh::bounds_table(o.n_max), auh::parse_output_format(o.format)), o.out);
  return kOk;
}

int cmd_family(const Options& o) {
  if (o.format != "json") throw UsageError("family output is JSON only");
  auh::FamilySpec spec;
  spec.kind = auh::parse_family_kind(o.kind);
  spec.n = o.n;
  if (!o.eps.empty()) spec.params["eps"] = auh::parse_rational(o.eps);
  if (!o.q.empty()) spec.params["q"] = auh::parse_rational(o.q);
  if (!o.lambda.empty()) spec.params["lambda"] = auh::parse_rational(o.lambda);
  // The Poisson tail has no exact form; everything else is written exactly.
  const auto j = spec.kind == auh::FamilyKind::poisson_tail ? auh::to_json(auh::make_family<double>(spec))
                                                             : auh::to_json(auh::make_family<auh::Rational>(spec));
  write_output(j.dump() + "\n", o.out);
  return kOk;
}

int cmd_metrics(const Options& o) {
  if (o.dist.empty()) throw UsageError("metrics needs --dist FILE");
  const auto any = auh::distribution_from_json_text(read_file(o.dist));
  const auto format = auh::parse_output_format(o.format);
  const auto j = std::visit([](const auto& d) { return auh::metrics_to_json(d, auh::huffman_metrics(d)); }, any);
  if (format == auh::OutputFormat::json) {
    write_output(j.dump(2) + "\n", o.out);
    return kOk;
  }
  const char sep = format == auh::OutputFormat::csv ? ',' : '\t';
  std::string text = std::string("n") + sep + "L_exact" + sep + "L" + sep + "H" + sep + "R" + sep + "auh\n";
  text += std::to_string(j["n"].get<std::size_t>()) + sep + (j.contains("L_exact") ? j["L_exact"].get<std::string>() : "") +
          sep + auh::format_double(j["L"].get<double>()) + sep + auh::format_double(j["H"].get<double>()) + sep +
          auh::format_double(j["R"].get<double>()) + sep + (j["auh"].get<bool>() ? "true" : "false") + "\n";
  write_output(text, o.out);
  return kOk;
}

int cmd_verify(const Options& o) {
  auh::VerifyOptions v;
  std::tie(v.n_lo, v.n_hi) = parse_range(o.n_range);
  if (v.n_lo < 2 || v.n_hi < v.n_lo) throw UsageError("--n range must satisfy 2 <= LO <= HI");
  if (o.grid != 0) v.grid = o.grid;
  v.trials = o.trials;
  v.seed = o.seed.value_or(0);
  v.workers = worker_count();

  std::ostringstream report;
  report << "verify n=" << v.n_lo << ".." << v.n_hi << " grid="
         << (v.grid ? std::to_string(*v.grid) : std::string("default")) << " trials=" << v.trials
         << " seed=" << v.seed << "\n";
  bool all = true;
  for (const auto& c : auh::run_verification(v)) {
    all = all && c.passed;
    report << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases): " << c.detail << "\n";
  }
  report << (all ? "PASS" : "FAIL") << "\n";
  write_output(report.str(), o.out);
  return all ? kOk : kVerifyFailed;
}

int cmd_search(const Options& o) {
  if (o.format != "json") throw UsageError("search output is JSON only");
  if (o.n < 2) throw UsageError("--n must be at least 2");
  const auto objective = auh::parse_objective(o.objective);
  auh::SearchReport report;
  if (o.seed) {
    report = auh::local_ascent(auh::random_auh(o.n, *o.seed), objective);
    report.seed = *o.seed;
  } else {
    const auh::GridSpec spec{o.n, o.grid != 0 ? o.grid : auh::default_resolution(o.n)};
    report = auh::brute_force_max(spec, objective, worker_count());
  }
  write_output(auh::to_json(report).dump(2) + "\n", o.out);
  if (!report.within_bound()) {
    std::cerr << "auh: best value " << report.best_value << " exceeds the bound " << report.bound << "\n";
    return kVerifyFailed;
  }
  return kOk;
}

std::size_t alphabet_size(const Options& o) {
  if (!o.dist.empty()) {
    const auto any = auh::distribution_from_json_text(read_file(o.dist));
    return std::visit([](const auto& d) { return d.size(); }, any);
  }
  if (o.n < 2) throw UsageError("give --n (at least 2) or --dist");
  return o.n;
}

// Input byte b is symbol b + 1.
int cmd_encode(const Options& o) {
  const std::size_t n = alphabet_size(o);
  const std::string data = read_file(o.in);
  std::vector<std::uint32_t> symbols;
  symbols.reserve(data.size());
  for (unsigned char b : data) symbols.push_back(static_cast<std::uint32_t>(b) + 1);
  const auto packed = auh::encode_stream(symbols, n);
  write_output(std::string(packed.begin(), packed.end()), o.out);
  return kOk;
}

int cmd_decode(const Options& o) {
  const std::size_t n = alphabet_size(o);
  if (n > 256) throw UsageError("decode to bytes needs n <= 256");
  const std::string data = read_file(o.in);
  const std::vector<std::uint8_t> bytes(data.begin(), data.end());
  std::string out;
  for (auto s : auh::decode_stream(bytes, n)) out.push_back(static_cast<char>(s - 1));
  write_output(out, o.out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Anti-uniform Huffman codes: bounds, families, metrics, verification, search and codec"};
  app.require_subcommand(1);
  Options o;

  const std::vector<std::string> formats{"json", "csv", "tsv"};
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
    sub->add_option("--out", o.out, "Output file (default stdout)");
  };

  auto* bounds = app.add_subcommand("bounds", "Table of l_max(n) and h_max(n) with the limit row");
  bounds->add_option("--n-max", o.n_max, "Largest alphabet size")->required();
  add_output(bounds);

  auto* family = app.add_subcommand("family", "Write a named distribution family as JSON");
  family->add_option("--kind", o.kind, "fibonacci|epsilon|dyadic|high_redundancy|geometric_tail|poisson_tail")
      ->required();
  family->add_option("--n", o.n, "Alphabet size")->required();
  family->add_option("--eps", o.eps, "epsilon (decimal or p/q)");
  family->add_option("--q", o.q, "geometric ratio (decimal or p/q)");
  family->add_option("--lambda", o.lambda, "Poisson mean (decimal or p/q)");
  add_output(family);

  auto* metrics = app.add_subcommand("metrics", "L, H, R and AUH classification of a distribution file");
  metrics->add_option("--dist", o.dist, "Distribution JSON file ('-' for stdin)")->required();
  add_output(metrics);

  auto* verify = app.add_subcommand("verify", "Run the numerical checks of the extremal results");
  verify->add_option("--n", o.n_range, "Alphabet sizes for grid and sampling checks, N or LO..HI");
  verify->add_option("--grid", o.grid, "Grid resolution m (default per n)");
  verify->add_option("--trials", o.trials, "Random trials per check");
  verify->add_option("--seed", o.seed, "Random seed (default 0)");
  verify->add_option("--out", o.out, "Output file (default stdout)");

  auto* search = app.add_subcommand("search", "Grid search, or local ascent when --seed is given");
  search->add_option("--n", o.n, "Alphabet size")->required();
  search->add_option("--objective", o.objective, "length|entropy")
      ->check(CLI::IsMember({"length", "avg_length", "entropy"}));
  search->add_option("--grid", o.grid, "Grid resolution m (default per n)");
  search->add_option("--seed", o.seed, "Run the local ascent from random_auh(n, seed)");
  add_output(search);

  auto* encode = app.add_subcommand("encode", "Encode bytes (byte b is symbol b+1) with the anti-uniform code");
  auto* decode = app.add_subcommand("decode", "Decode a stream written by encode");
  for (auto* sub : {encode, decode}) {
    sub->add_option("--n", o.n, "Alphabet size");
    sub->add_option("--dist", o.dist, "Take the alphabet size from a distribution file");
    sub->add_option("--in", o.in, "Input file (default stdin)");
    sub->add_option("--out", o.out, "Output file (default stdout)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*bounds) return cmd_bounds(o);
    if (*family) return cmd_family(o);
    if (*metrics) return cmd_metrics(o);
    if (*verify) return cmd_verify(o);
    if (*search) return cmd_search(o);
    if (*encode) return cmd_encode(o);
    if (*decode) return cmd_decode(o);
  } catch (const UsageError& e) {
    std::cerr << "auh: " << e.what() << "\n";
    return kUsage;
  } catch (const auh::Error& e) {
    std::cerr << "auh: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
