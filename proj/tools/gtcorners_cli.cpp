// Copyright 2026 The gtcorners Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end.  Deliberately a pure client of the C API in
// gtcorners.h: it exercises the same surface that external bindings use.

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gtcorners.h"

namespace {

using nlohmann::json;

constexpr int kExitValidation = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitVerifyFailed = 3;

struct CliFailure {
  int exit_code;
  std::string message;
};

[[noreturn]] void die(int exit_code, const std::string& message) {
  throw CliFailure{exit_code, message};
}

void check(gtc_status status) {
  if (status == GTC_OK) return;
  const bool validation = status == GTC_ERROR_INVALID_ARGUMENT ||
                          status == GTC_ERROR_DIMENSION || status == GTC_ERROR_DEGENERATE;
  die(validation ? kExitValidation : kExitNumerical, gtc_last_error());
}

// decimal, up to 17 significant digits (exact round trip), always with a
// decimal point so plotting tools treat the column as real-valued
std::string format_number(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", v);
  std::string s = buffer;
  if (s.find_first_of(".eni") == std::string::npos) s += ".0";  // e/n/i: exp, nan, inf
  return s;
}

// --x and friends accept inline JSON or @path-to-file
json parse_json_arg(const std::string& text, const char* what) {
  std::string payload = text;
  if (!text.empty() && text[0] == '@') {
    std::ifstream in(text.substr(1));
    if (!in) die(kExitValidation, std::string("cannot open ") + text.substr(1));
    std::ostringstream buffer;
    buffer << in.rdbuf();
    payload = buffer.str();
  }
  json parsed = json::parse(payload, nullptr, /*allow_exceptions=*/false);
  if (parsed.is_discarded())
    die(kExitValidation, std::string(what) + ": not valid JSON: " + payload);
  return parsed;
}

std::vector<double> parse_reals(const std::string& text, const char* what) {
  const json parsed = parse_json_arg(text, what);
  if (!parsed.is_array()) die(kExitValidation, std::string(what) + ": expected a JSON array");
  std::vector<double> out;
  for (const json& v : parsed) {
    if (!v.is_number()) die(kExitValidation, std::string(what) + ": expected numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

std::vector<int64_t> parse_ints(const std::string& text, const char* what) {
  const json parsed = parse_json_arg(text, what);
  if (!parsed.is_array()) die(kExitValidation, std::string(what) + ": expected a JSON array");
  std::vector<int64_t> out;
  for (const json& v : parsed) {
    if (!v.is_number_integer())
      die(kExitValidation, std::string(what) + ": expected integers");
    out.push_back(v.get<int64_t>());
  }
  return out;
}

// complex entries: plain number, [re, im] pair, or {"re":..., "im":...}
void parse_complex(const std::string& text, const char* what, std::vector<double>& re,
                   std::vector<double>& im) {
  const json parsed = parse_json_arg(text, what);
  if (!parsed.is_array()) die(kExitValidation, std::string(what) + ": expected a JSON array");
  for (const json& v : parsed) {
    if (v.is_number()) {
      re.push_back(v.get<double>());
      im.push_back(0.0);
    } else if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
      re.push_back(v[0].get<double>());
      im.push_back(v[1].get<double>());
    } else if (v.is_object() && v.contains("re")) {
      re.push_back(v["re"].get<double>());
      im.push_back(v.value("im", 0.0));
    } else {
      die(kExitValidation,
          std::string(what) + ": entries must be numbers, [re,im] pairs, or {\"re\",\"im\"}");
    }
  }
}

// per-coordinate `min:max:steps`, comma-separated; steps evenly spaced
// points including both endpoints
std::vector<std::vector<double>> parse_grid_spec(const std::string& spec) {
  std::vector<std::vector<double>> axes;
  std::stringstream stream(spec);
  std::string part;
  while (std::getline(stream, part, ',')) {
    double lo = 0.0, hi = 0.0;
    long long steps = 0;
    char tail = 0;
    if (std::sscanf(part.c_str(), "%lf:%lf:%lld%c", &lo, &hi, &steps, &tail) != 3 || steps < 1)
      die(kExitValidation, "bad grid component '" + part + "'; expected min:max:steps");
    std::vector<double> axis(static_cast<std::size_t>(steps));
    for (long long i = 0; i < steps; ++i)
      axis[std::size_t(i)] =
          steps == 1 ? lo : lo + (hi - lo) * double(i) / double(steps - 1);
    axes.push_back(std::move(axis));
  }
  if (axes.empty()) die(kExitValidation, "empty grid spec");
  return axes;
}

int env_threads() {
  const char* env = std::getenv("GTCORNERS_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  return std::atoi(env);
}

std::ostream& open_output(const std::string& path, std::optional<std::ofstream>& file) {
  if (path.empty()) return std::cout;
  file.emplace(path);
  if (!*file) die(kExitValidation, "cannot open output file " + path);
  return *file;
}

std::string take_string(char* owned) {
  std::string out = owned == nullptr ? "" : owned;
  gtc_string_free(owned);
  return out;
}

struct DensityHandle {
  gtc_density* ptr = nullptr;
  ~DensityHandle() { gtc_density_destroy(ptr); }
};

struct SamplerHandle {
  gtc_sampler* ptr = nullptr;
  ~SamplerHandle() { gtc_sampler_destroy(ptr); }
};

// ------------------------------------------------------------ subcommands

struct SplineArgs {
  std::string knots;
  double at = 0.0;
  double from = -INFINITY;
  double to = INFINITY;
};

int run_spline_eval(const SplineArgs& args, bool bspline) {
  const std::vector<double> knots = parse_reals(args.knots, "--knots");
  double value = 0.0;
  check(bspline ? gtc_bspline_eval(knots.data(), int64_t(knots.size()), args.at, &value)
                : gtc_spline_eval(knots.data(), int64_t(knots.size()), args.at, &value));
  std::cout << "{\"value\": " << format_number(value) << "}\n";
  return 0;
}

int run_spline_integrate(const SplineArgs& args) {
  const std::vector<double> knots = parse_reals(args.knots, "--knots");
  double value = 0.0;
  check(gtc_spline_integrate(knots.data(), int64_t(knots.size()), args.from, args.to, &value));
  std::cout << "{\"value\": " << format_number(value) << "}\n";
  return 0;
}

struct DensityArgs {
  std::string x;
  int k = 1;
  std::string at;
  std::string grid;
  std::string out;
};

DensityHandle make_density(const DensityArgs& args) {
  const std::vector<double> x = parse_reals(args.x, "--x");
  DensityHandle handle;
  check(gtc_density_create(x.data(), int64_t(x.size()), args.k, &handle.ptr));
  return handle;
}

int run_density_eval(const DensityArgs& args) {
  const DensityHandle density = make_density(args);
  const std::vector<double> at = parse_reals(args.at, "--at");
  double value = 0.0;
  check(gtc_density_eval(density.ptr, at.data(), int64_t(at.size()), &value));
  std::cout << format_number(value) << "\n";
  return 0;
}

int run_density_grid(const DensityArgs& args) {
  const DensityHandle density = make_density(args);
  const std::vector<std::vector<double>> axes = parse_grid_spec(args.grid);
  if (int(axes.size()) != args.k)
    die(kExitValidation, "grid spec must have exactly K comma-separated components");
  std::optional<std::ofstream> file;
  std::ostream& out = open_output(args.out, file);
  for (int j = 0; j < args.k; ++j) out << "a" << (j + 1) << ",";
  out << "density\n";
  std::vector<std::size_t> index(axes.size(), 0);
  std::vector<double> point(axes.size(), 0.0);
  while (true) {
    bool sorted = true;
    for (std::size_t j = 0; j < axes.size(); ++j) {
      point[j] = axes[j][index[j]];
      if (j > 0 && point[j] < point[j - 1]) sorted = false;
    }
    double value = 0.0;  // off-chamber grid rows report density 0
    if (sorted) check(gtc_density_eval(density.ptr, point.data(), int64_t(point.size()), &value));
    for (const double v : point) out << format_number(v) << ",";
    out << format_number(value) << "\n";
    std::size_t j = axes.size();
    while (j > 0 && ++index[j - 1] == axes[j - 1].size()) index[--j] = 0;
    if (j == 0) break;
  }
  return 0;
}

int run_volume(const std::string& x_text) {
  const std::vector<double> x = parse_reals(x_text, "--x");
  double value = 0.0;
  check(gtc_gt_volume(x.data(), int64_t(x.size()), &value));
  std::cout << format_number(value) << "\n";
  return 0;
}

int run_hciz(const std::string& x_text, const std::string& z_text) {
  const std::vector<double> x = parse_reals(x_text, "--x");
  std::vector<double> z_re, z_im;
  parse_complex(z_text, "--z", z_re, z_im);
  if (z_re.size() != x.size())
    die(kExitValidation, "--z must have the same length as --x");
  double re = 0.0, im = 0.0;
  check(gtc_hciz(x.data(), int64_t(x.size()), z_re.data(), z_im.data(), &re, &im));
  std::cout << "{\"re\": " << format_number(re) << ", \"im\": " << format_number(im) << "}\n";
  return 0;
}

struct SampleArgs {
  std::string x;
  int k = 1;
  int64_t count = 0;
  uint64_t seed = 0;
  int threads = 0;
  bool deterministic = false;
  std::string out;
};

SamplerHandle make_sampler(const SampleArgs& args) {
  const std::vector<double> x = parse_reals(args.x, "--x");
  SamplerHandle handle;
  const int threads = args.deterministic ? 1 : args.threads;
  check(gtc_sampler_create(x.data(), int64_t(x.size()), args.seed, threads, &handle.ptr));
  return handle;
}

int run_sample_spectra(const SampleArgs& args) {
  const SamplerHandle sampler = make_sampler(args);
  std::vector<double> rows(std::size_t(args.count) * std::size_t(args.k));
  check(gtc_sampler_corner_spectra(sampler.ptr, args.k, args.count, rows.data()));
  std::optional<std::ofstream> file;
  std::ostream& out = open_output(args.out, file);
  for (int j = 0; j < args.k; ++j) out << "a" << (j + 1) << (j + 1 < args.k ? "," : "");
  out << "\n";
  for (int64_t i = 0; i < args.count; ++i) {
    for (int j = 0; j < args.k; ++j)
      out << format_number(rows[std::size_t(i) * args.k + j]) << (j + 1 < args.k ? "," : "");
    out << "\n";
  }
  return 0;
}

int run_sample_patterns(const SampleArgs& args) {
  const std::vector<double> x = parse_reals(args.x, "--x");
  const int n = int(x.size());
  if (n < 2) die(kExitValidation, "--x needs at least two entries");
  const SamplerHandle sampler = make_sampler(args);
  std::vector<double> flat(std::size_t(args.count) * std::size_t(n) * std::size_t(n - 1) / 2);
  check(gtc_sampler_patterns(sampler.ptr, args.count, flat.data()));
  std::optional<std::ofstream> file;
  std::ostream& out = open_output(args.out, file);
  std::size_t cursor = 0;
  for (int64_t i = 0; i < args.count; ++i) {
    json pattern = json::array();
    for (int len = n - 1; len >= 1; --len) {
      json row = json::array();
      for (int j = 0; j < len; ++j) row.push_back(flat[cursor++]);
      pattern.push_back(std::move(row));
    }
    out << pattern.dump() << "\n";
  }
  return 0;
}

struct DiscreteArgs {
  std::string x;
  std::string y;
  int k = 1;
  int64_t l = 1;
  std::string points;
  std::string out;
};

int run_discrete_dim(const DiscreteArgs& args) {
  const std::vector<int64_t> x = parse_ints(args.x, "--x");
  char* text = nullptr;
  check(gtc_count_schemes(x.data(), int64_t(x.size()), &text));
  std::cout << take_string(text) << "\n";
  return 0;
}

int run_discrete_reldim(const DiscreteArgs& args) {
  const std::vector<int64_t> x = parse_ints(args.x, "--x");
  const std::vector<int64_t> y = parse_ints(args.y, "--y");
  char* text = nullptr;
  check(gtc_relative_dimension(x.data(), int64_t(x.size()), y.data(), int64_t(y.size()), &text));
  std::cout << take_string(text) << "\n";
  return 0;
}

int run_discrete_limit(const DiscreteArgs& args) {
  const std::vector<double> x = parse_reals(args.x, "--x");
  const json parsed = parse_json_arg(args.points, "--points");
  if (!parsed.is_array() || parsed.empty())
    die(kExitValidation, "--points: expected a nonempty JSON array");
  std::vector<double> flat;
  for (const json& row : parsed) {
    if (row.is_number() && args.k == 1) {
      flat.push_back(row.get<double>());
    } else if (row.is_array() && int(row.size()) == args.k) {
      for (const json& v : row) flat.push_back(v.get<double>());
    } else {
      die(kExitValidation, "--points: each entry must be a K-tuple");
    }
  }
  const int64_t count = int64_t(flat.size()) / args.k;
  const auto slots = static_cast<std::size_t>(count);
  std::vector<double> discrete(slots), density(slots), difference(slots);
  check(gtc_scaling_limit(x.data(), int64_t(x.size()), args.k, args.l, flat.data(), count,
                          discrete.data(), density.data(), difference.data()));
  std::optional<std::ofstream> file;
  std::ostream& out = open_output(args.out, file);
  for (int j = 0; j < args.k; ++j) out << "a" << (j + 1) << ",";
  out << "discrete,density,abs_difference\n";
  for (int64_t i = 0; i < count; ++i) {
    for (int j = 0; j < args.k; ++j)
      out << format_number(flat[std::size_t(i) * args.k + j]) << ",";
    out << format_number(discrete[std::size_t(i)]) << ","
        << format_number(density[std::size_t(i)]) << ","
        << format_number(difference[std::size_t(i)]) << "\n";
  }
  return 0;
}

struct VerifyArgs {
  std::string suite;
  int max_n = 0;
  uint64_t seed = 0;
  int64_t samples = 0;
  int threads = 0;
  std::string out;
};

int run_verify(const VerifyArgs& args) {
  char* report = nullptr;
  int all_pass = 0;
  check(gtc_verify_run(args.suite.c_str(), args.max_n, args.seed, args.samples, args.threads,
                       &report, &all_pass));
  const std::string text = take_string(report);
  std::optional<std::ofstream> file;
  std::ostream& out = open_output(args.out, file);
  out << text << "\n";
  if (all_pass == 0) {
    std::cerr << "verification failed; see report\n";
    return kExitVerifyFailed;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Corner spectra of random self-adjoint matrices: exact densities,"
               " splines, samplers, and discrete counterparts"};
  app.require_subcommand(1);

  // spline
  SplineArgs spline_args;
  CLI::App* spline = app.add_subcommand("spline", "Spline evaluation and integration");
  spline->require_subcommand(1);
  CLI::App* spline_eval = spline->add_subcommand(
      "eval", "Evaluate the unit-integral spline; prints {\"value\": ...}");
  spline_eval->add_option("--knots", spline_args.knots, "strictly increasing knots (JSON array or @file)")
      ->required();
  spline_eval->add_option("--at", spline_args.at, "evaluation point")->required();
  spline_eval->add_flag("--bspline", "unit-peak normalization instead of unit integral");
  CLI::App* spline_integrate = spline->add_subcommand(
      "integrate", "Integrate the unit-integral spline over [from, to]");
  spline_integrate
      ->add_option("--knots", spline_args.knots, "strictly increasing knots (JSON array or @file)")
      ->required();
  spline_integrate->add_option("--from", spline_args.from, "lower bound (default -inf)");
  spline_integrate->add_option("--to", spline_args.to, "upper bound (default +inf)");

  // density
  DensityArgs density_args;
  CLI::App* density = app.add_subcommand("density", "Corner-spectrum densities");
  density->require_subcommand(1);
  CLI::App* density_eval =
      density->add_subcommand("eval", "Density at one point; prints the value");
  CLI::App* density_grid = density->add_subcommand(
      "grid", "Density on a grid as CSV (columns a1..aK,density); rows where the"
              " coordinates are not weakly increasing report 0");
  for (CLI::App* sub : {density_eval, density_grid}) {
    sub->add_option("--x", density_args.x, "spectrum, strictly increasing (JSON array or @file)")
        ->required();
    sub->add_option("--k", density_args.k, "corner size K, 1 <= K <= N-1")->required();
  }
  density_eval->add_option("--at", density_args.at, "evaluation point, K weakly increasing reals")
      ->required();
  density_grid
      ->add_option("--grid", density_args.grid,
                   "per-coordinate min:max:steps, comma-separated, K components")
      ->required();
  density_grid->add_option("--out", density_args.out, "output CSV path (default stdout)");

  // volume
  std::string volume_x;
  CLI::App* volume =
      app.add_subcommand("volume", "Volume of the interlacing-array polytope under a spectrum");
  volume->add_option("--x", volume_x, "spectrum, strictly increasing (JSON array or @file)")
      ->required();

  // hciz
  std::string hciz_x, hciz_z;
  CLI::App* hciz = app.add_subcommand(
      "hciz", "Spherical matrix integral: average of exp(trace(Z U X U*)) over Haar U");
  hciz->add_option("--x", hciz_x, "spectrum, strictly increasing (JSON array or @file)")
      ->required();
  hciz->add_option("--z", hciz_z,
                   "distinct eigenvalues of Z: JSON array of numbers, [re,im] pairs,"
                   " or {\"re\",\"im\"} objects")
      ->required();

  // sample
  SampleArgs sample_args;
  sample_args.threads = env_threads();
  CLI::App* sample =
      app.add_subcommand("sample", "Monte Carlo corner spectra of random orbit matrices (CSV)");
  CLI::App* sample_pattern = sample->add_subcommand(
      "pattern", "Full interlacing arrays instead of one corner row (JSON lines)");
  sample->add_option("--x", sample_args.x, "spectrum, weakly increasing (JSON array or @file)")
      ->required();
  sample->add_option("--k", sample_args.k, "corner size K (ignored by `pattern`)");
  sample->add_option("--n", sample_args.count, "number of samples")->required();
  sample->add_option("--seed", sample_args.seed, "random seed")->required();
  sample->add_option("--threads", sample_args.threads,
                     "worker threads (default $GTCORNERS_THREADS, then hardware)");
  sample->add_flag("--deterministic", sample_args.deterministic,
                   "single worker (output is identical for any thread count anyway)");
  sample->add_option("--out", sample_args.out, "output path (default stdout)");
  sample_pattern->fallthrough();  // `sample pattern --x ...` routes options to `sample`

  // discrete
  DiscreteArgs discrete_args;
  CLI::App* discrete =
      app.add_subcommand("discrete", "Exact counts over integer interlacing arrays");
  discrete->require_subcommand(1);
  CLI::App* discrete_dim =
      discrete->add_subcommand("dim", "Number of integer arrays under the top row");
  discrete_dim->add_option("--x", discrete_args.x, "integer signature (JSON array or @file)")
      ->required();
  CLI::App* discrete_reldim = discrete->add_subcommand(
      "reldim", "Exact fraction of arrays whose row K equals Y, printed as p/q");
  discrete_reldim->add_option("--x", discrete_args.x, "integer signature (JSON array or @file)")
      ->required();
  discrete_reldim->add_option("--y", discrete_args.y, "integer row (JSON array or @file)")
      ->required();
  CLI::App* discrete_limit = discrete->add_subcommand(
      "limit", "Rescaled discrete row-K mass vs continuous density (CSV report)");
  discrete_limit->add_option("--x", discrete_args.x, "real spectrum (JSON array or @file)")
      ->required();
  discrete_limit->add_option("--k", discrete_args.k, "row length K")->required();
  discrete_limit->add_option("--l", discrete_args.l, "scaling factor L >= 1")->required();
  discrete_limit
      ->add_option("--points", discrete_args.points, "JSON array of K-tuples (or numbers if K=1)")
      ->required();
  discrete_limit->add_option("--out", discrete_args.out, "output CSV path (default stdout)");

  // verify
  VerifyArgs verify_args;
  verify_args.threads = env_threads();
  CLI::App* verify = app.add_subcommand(
      "verify", "Run a named self-verification suite and print the JSON report");
  verify
      ->add_option("suite", verify_args.suite,
                   "one of: splines, kernel, theorem, volume, hciz, recurrence, discrete, all")
      ->required();
  verify->add_option("--n", verify_args.max_n, "largest matrix size to sweep (default 6)");
  verify->add_option("--seed", verify_args.seed, "random seed (default pinned)");
  verify->add_option("--samples", verify_args.samples, "Monte Carlo samples (default 100000)");
  verify->add_option("--threads", verify_args.threads,
                     "worker threads (default $GTCORNERS_THREADS, then hardware)");
  verify->add_option("--out", verify_args.out, "report path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (spline_eval->parsed())
      return run_spline_eval(spline_args, spline_eval->count("--bspline") > 0);
    if (spline_integrate->parsed()) return run_spline_integrate(spline_args);
    if (density_eval->parsed()) return run_density_eval(density_args);
    if (density_grid->parsed()) return run_density_grid(density_args);
    if (volume->parsed()) return run_volume(volume_x);
    if (hciz->parsed()) return run_hciz(hciz_x, hciz_z);
    if (sample->parsed())
      return sample_pattern->parsed() ? run_sample_patterns(sample_args)
                                      : run_sample_spectra(sample_args);
    if (discrete_dim->parsed()) return run_discrete_dim(discrete_args);
    if (discrete_reldim->parsed()) return run_discrete_reldim(discrete_args);
    if (discrete_limit->parsed()) return run_discrete_limit(discrete_args);
    if (verify->parsed()) return run_verify(verify_args);
    std::cerr << "no subcommand selected\n";
    return kExitValidation;
  } catch (const CliFailure& failure) {
    std::cerr << "gtcorners: " << failure.message << "\n";
    return failure.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "gtcorners: " << e.what() << "\n";
    return kExitNumerical;
  }
}
