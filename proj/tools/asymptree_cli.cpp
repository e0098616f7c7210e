/*
 * Copyright 2026 The asymptree Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "asymptree/correspondence.hpp"
#include "asymptree/experiments.hpp"
#include "asymptree/levelled_io.hpp"
#include "asymptree/profile_json.hpp"
#include "asymptree/report_format.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using namespace asymptree;

enum Exit { kOk = 0, kViolation = 1, kUsage = 2, kIo = 3 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::uint64_t seed = 42;
  std::uint64_t trials = 1000;
  std::vector<double> scales{25, 50, 100, 200, 400};
  double threshold = 0.1;
  report::Format format = report::Format::csv;
  std::string out;
  std::string expr;
  std::vector<std::string> profiles;
};

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw IoError("failed writing to stdout");
    return;
  }
  std::ofstream file(opt.out, std::ios::binary);
  if (!file) throw IoError("cannot open " + opt.out + " for writing");
  file << text;
  if (!file.flush()) throw IoError("failed writing " + opt.out);
}

tree::ProfileF load_f(const std::string& path) {
  tree::AnyProfile p;
  try {
    p = tree::load_profile(path);
  } catch (const std::runtime_error& e) {
    throw IoError(e.what());
  }
  if (tree::kind_of(p) != tree::SpaceKind::F) throw std::invalid_argument(path + ": expected an F profile");
  return std::get<tree::ProfileF>(p);
}

int run_verify(const Options& opt) {
  const auto report = experiments::verify_metric(opt.seed, opt.trials);
  emit(opt, report::render(report, opt.format));
  return report.ok() ? kOk : kViolation;
}

int run_grid(const Options& opt) {
  emit(opt, report::render(experiments::convergence_grid(opt.scales), opt.format));
  return kOk;
}

int run_embed(const Options& opt) {
  experiments::check_scales(opt.scales);
  const auto p1 = load_f(opt.profiles.at(0));
  const auto p2 = load_f(opt.profiles.at(1));
  std::vector<correspondence::ConvergenceRow> rows;
  for (double n : opt.scales) rows.push_back(correspondence::pair_error(p1, p2, n));
  emit(opt, report::render(rows, opt.format));
  return rows.back().error <= opt.threshold ? kOk : kViolation;
}

int run_subcone(const Options& opt) {
  const auto rows = experiments::subcone_demo(opt.scales);
  emit(opt, report::render(rows, opt.format));
  const auto summary = correspondence::max_error_by_scale(rows);
  return summary.back().max_error <= opt.threshold ? kOk : kViolation;
}

int run_decompose(const Options& opt) {
  const auto spectrum = levelled::decompose(levelled::parse_levelled(opt.expr));
  emit(opt, levelled::format_spectrum(spectrum) + "\n");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Asymptotic-cone experiments for the hyperbolic plane"};
  app.require_subcommand(1);
  Options opt;

  const std::map<std::string, report::Format> formats{{"csv", report::Format::csv}, {"json", report::Format::json}};
  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", opt.seed, "Random seed")->envname("ASYMPTREE_SEED");
    sub->add_option("--format", opt.format, "Output format")->transform(CLI::CheckedTransformer(formats));
    sub->add_option("--out", opt.out, "Output file (default: stdout)");
  };
  auto scaled = [&](CLI::App* sub) {
    sub->add_option("--scales", opt.scales, "Scales N, comma separated and increasing")->delimiter(',');
    sub->add_option("--threshold", opt.threshold, "Largest acceptable error at the final scale");
  };

  auto* verify = app.add_subcommand("verify-metric", "Run the tree-metric and distance-formula property suites");
  common(verify);
  verify->add_option("--trials", opt.trials, "Samples per suite")->check(CLI::PositiveNumber);

  auto* grid = app.add_subcommand("convergence-grid", "Tabulate the max-formula error over a parameter grid");
  common(grid);
  scaled(grid);

  auto* embed = app.add_subcommand("embed-pair", "Compare hyperbolic and tree distance for two F profiles");
  common(embed);
  scaled(embed);
  embed->add_option("profiles", opt.profiles, "Two profile JSON files")->required()->expected(2);

  auto* subcone = app.add_subcommand("subcone-demo", "Run the bundled four-profile configuration");
  common(subcone);
  scaled(subcone);

  auto* decompose = app.add_subcommand("decompose", "Print the spectrum of a levelled number");
  common(decompose);
  decompose->add_option("expr", opt.expr, "Expression such as \"3*u^0 + -2*u^1/2\"")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*verify) return run_verify(opt);
    if (*grid) return run_grid(opt);
    if (*embed) return run_embed(opt);
    if (*subcone) return run_subcone(opt);
    return run_decompose(opt);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
