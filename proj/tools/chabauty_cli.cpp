// Command-line front end: the only part of the project that performs I/O.
//
// Subcommands
//   dist      exact distance between two point-set files (JSON out)
//   curve     the piecewise-constant curve R -> d_R as CSV rows
//   converge  convergence report for a directory of numbered sets (JSON out)
//   selftest  seeded property suites (JSON out)
//
// Exit codes: 0 success, 1 usage error, 2 malformed input, 3 self-test
// failure. Machine-readable output goes to stdout, diagnostics to stderr.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <chabauty/chabauty.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitSelfTestFailed = 3;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  std::string metric = "euclidean";
  std::string base;          // comma-separated coordinates, empty = origin
  std::string weight = "exp:1";
  double r_cut = 30.0;
  std::optional<double> tol;  // per-command default
  std::uint64_t seed = 0;
  int trials = 200;
};

void add_common_flags(CLI::App* cmd, CommonOptions* opts) {
  cmd->add_option("--metric", opts->metric, "euclidean|chebyshev|manhattan")
      ->check(CLI::IsMember({"euclidean", "chebyshev", "manhattan"}));
  cmd->add_option("--base", opts->base,
                  "base point as comma-separated coordinates (default origin)");
  cmd->add_option("--weight", opts->weight, "weight spec exp:<rate>");
  cmd->add_option("--rcut", opts->r_cut, "quadrature cutoff radius");
  cmd->add_option("--tol", opts->tol, "tolerance (meaning is per command)");
  cmd->add_option("--seed", opts->seed, "RNG seed");
  cmd->add_option("--trials", opts->trials, "trial count for selftest");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

chabauty::PointSetDocument load_document(const std::string& path) {
  try {
    return chabauty::parse_point_set(read_file(path));
  } catch (const chabauty::DocumentError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::vector<double> parse_base(const std::string& text) {
  std::vector<double> coords;
  std::stringstream stream(text);
  std::string piece;
  while (std::getline(stream, piece, ',')) {
    try {
      std::size_t used = 0;
      coords.push_back(std::stod(piece, &used));
      if (used != piece.size()) throw std::invalid_argument(piece);
    } catch (const std::exception&) {
      throw UsageError("cannot parse base coordinate: " + piece);
    }
  }
  if (coords.empty()) throw UsageError("empty base point");
  return coords;
}

chabauty::CoordinateSpace make_space(const CommonOptions& opts, int dim) {
  chabauty::Point base(static_cast<std::size_t>(dim), 0.0);
  if (!opts.base.empty()) {
    base = parse_base(opts.base);
    if (base.size() != static_cast<std::size_t>(dim))
      throw UsageError("--base has " + std::to_string(base.size()) +
                       " coordinates but the input sets live in dimension " +
                       std::to_string(dim));
  }
  return chabauty::CoordinateSpace(chabauty::parse_norm(opts.metric),
                                   std::move(base));
}

chabauty::Weight make_weight(const CommonOptions& opts) {
  try {
    return chabauty::Weight::parse(opts.weight);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::pair<chabauty::PointSet, chabauty::PointSet> load_pair(
    const std::string& path_a, const std::string& path_b, int* dim) {
  const auto doc_a = load_document(path_a);
  const auto doc_b = load_document(path_b);
  if (doc_a.dim != doc_b.dim)
    throw InputError("input dimensions differ: " + std::to_string(doc_a.dim) +
                     " vs " + std::to_string(doc_b.dim));
  *dim = doc_a.dim;
  return {chabauty::to_set(doc_a), chabauty::to_set(doc_b)};
}

int run_dist(const CommonOptions& opts, const std::string& file_a,
             const std::string& file_b) {
  int dim = 0;
  const auto [a, b] = load_pair(file_a, file_b, &dim);
  const auto space = make_space(opts, dim);
  const auto weight = make_weight(opts);
  const chabauty::DistanceCurve curve = chabauty::distance_curve(space, a, b);

  json out;
  out["distance"] = chabauty::integrate_curve(curve, weight);
  out["breakpoints"] = curve.breakpoints;
  out["segment_values"] = curve.segment_values;
  out["weight"] = weight.spec_string();
  std::cout << out.dump() << "\n";
  return kExitOk;
}

int run_curve(const CommonOptions& opts, const std::string& file_a,
              const std::string& file_b) {
  int dim = 0;
  const auto [a, b] = load_pair(file_a, file_b, &dim);
  const auto space = make_space(opts, dim);
  const chabauty::DistanceCurve curve = chabauty::distance_curve(space, a, b);

  std::printf("R_start,R_end,d_R\n");
  const std::size_t m = curve.breakpoints.size();
  for (std::size_t k = 0; k <= m; ++k) {
    const double lo = k == 0 ? 0.0 : curve.breakpoints[k - 1];
    if (k < m && curve.breakpoints[k] == lo) continue;  // zero-width lead
    if (k == m)
      std::printf("%.17g,inf,%.17g\n", lo, curve.segment_values[k]);
    else
      std::printf("%.17g,%.17g,%.17g\n", lo, curve.breakpoints[k],
                  curve.segment_values[k]);
  }
  return kExitOk;
}

json witness_json(const chabauty::ConditionCheck<chabauty::Point>& check) {
  json out;
  out["ok"] = check.ok;
  if (!check.ok) {
    out["witness_index"] = *check.witness_index;
    out["witness_point"] = *check.witness_point;
    if (check.violation_infinite)
      out["violation"] = "infinite";
    else
      out["violation"] = check.max_violation;
  }
  return out;
}

int run_converge(const CommonOptions& opts, const std::string& dir,
                 const std::string& limit_file) {
  // Collect <index>.json members and demand a contiguous index range.
  std::map<long, fs::path> files;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    if (!entry.is_regular_file()) continue;
    const fs::path& path = entry.path();
    if (path.extension() != ".json") continue;
    const std::string stem = path.stem().string();
    if (stem.empty() ||
        stem.find_first_not_of("0123456789") != std::string::npos)
      continue;
    const long index = std::stol(stem);
    if (!files.emplace(index, path).second)
      throw InputError("duplicate sequence index " + std::to_string(index));
  }
  if (ec) throw InputError("cannot read directory " + dir);
  if (files.empty())
    throw InputError("no numbered .json files in " + dir);
  const long first = files.begin()->first;
  const long last = files.rbegin()->first;
  if (last - first + 1 != static_cast<long>(files.size()))
    throw InputError("sequence indices are not contiguous (" +
                     std::to_string(first) + ".." + std::to_string(last) +
                     " with " + std::to_string(files.size()) + " files)");

  const auto limit_doc = load_document(limit_file);
  std::vector<chabauty::PointSet> sequence;
  sequence.reserve(files.size());
  for (const auto& [index, path] : files) {
    const auto doc = load_document(path.string());
    if (doc.dim != limit_doc.dim)
      throw InputError(path.string() + ": dimension differs from the limit");
    sequence.push_back(chabauty::to_set(doc));
  }

  const auto space = make_space(opts, limit_doc.dim);
  chabauty::ConvergenceConfig config;
  config.weight = make_weight(opts);
  // One tolerance knob on the CLI: it drives both the pointwise condition
  // tolerance and the d-threshold.
  const double tol = opts.tol.value_or(0.05);
  if (!(tol > 0.0)) throw UsageError("--tol must be positive");
  config.tol = tol;
  config.d_threshold = tol;

  const auto report =
      chabauty::analyze(space, sequence, chabauty::to_set(limit_doc), config);

  json out;
  out["verdict"] = chabauty::to_string(report.verdict);
  out["condition1"] = witness_json(report.condition1);
  out["condition2"] = witness_json(report.condition2);
  out["d_values"] = report.d_values;
  out["tail_start"] = report.tail_start;
  out["window_radius"] = report.window_radius;
  out["first_index"] = first;
  std::cout << out.dump() << "\n";
  return kExitOk;
}

int run_selftest(const CommonOptions& opts, const std::string& fault) {
  chabauty::SelfTestOptions st;
  st.seed = opts.seed;
  st.trials = opts.trials;
  st.r_cut = opts.r_cut;
  st.quadrature_tol = opts.tol.value_or(1e-9);
  if (!(st.quadrature_tol > 0.0)) throw UsageError("--tol must be positive");
  if (!(st.r_cut > 0.0)) throw UsageError("--rcut must be positive");
  if (st.trials < 1) throw UsageError("--trials must be >= 1");
  if (fault == "cap")
    st.fault = chabauty::SelfTestFault::cap;
  else if (!fault.empty())
    throw UsageError("unknown fault: " + fault);

  const chabauty::SelfTestReport report = chabauty::run_selftest(st);
  json out;
  out["seed"] = st.seed;
  out["trials"] = st.trials;
  out["suites"] = json::array();
  for (const auto& suite : report.suites) {
    json entry;
    entry["name"] = suite.name;
    entry["trials"] = suite.trials;
    entry["failures"] = suite.failures;
    if (!suite.first_failure.empty())
      entry["first_failure"] = suite.first_failure;
    out["suites"].push_back(entry);
  }
  out["passed"] = report.all_passed();
  std::cout << out.dump() << "\n";
  if (!report.all_passed()) {
    std::cerr << "selftest: property failures detected\n";
    return kExitSelfTestFailed;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Metric on the space of closed subsets of a proper metric "
               "space: truncate, measure, integrate."};
  app.require_subcommand(1);

  CommonOptions opts;
  std::string file_a, file_b, sequence_dir, limit_file, fault;

  CLI::App* dist = app.add_subcommand(
      "dist", "exact distance between two point-set files");
  dist->add_option("fileA", file_a, "point-set JSON file")->required();
  dist->add_option("fileB", file_b, "point-set JSON file")->required();
  add_common_flags(dist, &opts);

  CLI::App* curve = app.add_subcommand(
      "curve", "piecewise-constant d_R curve as CSV rows");
  curve->add_option("fileA", file_a, "point-set JSON file")->required();
  curve->add_option("fileB", file_b, "point-set JSON file")->required();
  add_common_flags(curve, &opts);

  CLI::App* converge = app.add_subcommand(
      "converge", "convergence report for a directory of numbered sets");
  converge->add_option("sequence_dir", sequence_dir,
                       "directory of <k>.json documents")
      ->required();
  converge->add_option("limit_file", limit_file, "limit point-set JSON file")
      ->required();
  add_common_flags(converge, &opts);

  CLI::App* selftest =
      app.add_subcommand("selftest", "run the seeded property suites");
  selftest->add_option("--inject-fault", fault,
                       "negative control: corrupt an evaluation (cap)");
  add_common_flags(selftest, &opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(dist)) return run_dist(opts, file_a, file_b);
    if (app.got_subcommand(curve)) return run_curve(opts, file_a, file_b);
    if (app.got_subcommand(converge))
      return run_converge(opts, sequence_dir, limit_file);
    if (app.got_subcommand(selftest)) return run_selftest(opts, fault);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitUsage;
}
