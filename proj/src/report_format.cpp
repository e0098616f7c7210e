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

#include "asymptree/report_format.hpp"

#include <fmt/format.h>
#include <json.hpp>

namespace asymptree::report {
namespace {

using nlohmann::json;

std::string num(double x) { return fmt::format("{:.12g}", x); }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string render(const experiments::VerifyReport& r, Format f) {
  if (f == Format::json) {
    json props = json::array();
    for (const auto& p : r.properties) {
      props.push_back({{"property", p.name}, {"checks", p.checks}, {"violations", p.violations}});
    }
    return dump({{"seed", r.seed}, {"trials", r.trials}, {"properties", props}, {"ok", r.ok()}});
  }
  std::string out = "property,checks,violations\n";
  for (const auto& p : r.properties) out += fmt::format("{},{},{}\n", p.name, p.checks, p.violations);
  return out;
}

std::string render(const experiments::GridReport& r, Format f) {
  if (f == Format::json) {
    json rows = json::array();
    for (const auto& g : r.rows) {
      rows.push_back({{"r1", g.r1}, {"r2", g.r2}, {"cap_phi", g.cap_phi}, {"n", g.n}, {"error", g.error}});
    }
    json summary = json::array();
    for (const auto& s : r.summary) summary.push_back({{"n", s.n}, {"max_error", s.max_error}});
    return dump({{"rows", rows}, {"summary", summary}});
  }
  std::string out = "kind,r1,r2,cap_phi,n,error\n";
  for (const auto& g : r.rows) {
    out += fmt::format("cell,{},{},{},{},{}\n", num(g.r1), num(g.r2), num(g.cap_phi), num(g.n), num(g.error));
  }
  for (const auto& s : r.summary) out += fmt::format("max,,,,{},{}\n", num(s.n), num(s.max_error));
  return out;
}

std::string render(const std::vector<correspondence::ConvergenceRow>& rows, Format f) {
  if (f == Format::json) {
    json out = json::array();
    for (const auto& r : rows) {
      out.push_back({{"pair", r.pair},
                     {"n", r.n},
                     {"tree_delta", to_string(r.tree_delta)},
                     {"hyper_scaled", r.hyper_scaled},
                     {"error", r.error}});
    }
    return dump(out);
  }
  std::string out = "pair,n,tree_delta,hyper_scaled,error\n";
  for (const auto& r : rows) {
    out += fmt::format("{},{},{},{},{}\n", r.pair, num(r.n), num(to_double(r.tree_delta)), num(r.hyper_scaled),
                       num(r.error));
  }
  return out;
}

}  // namespace asymptree::report
