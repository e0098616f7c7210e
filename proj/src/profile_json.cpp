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

#include "asymptree/profile_json.hpp"

#include <fstream>
#include <stdexcept>

namespace asymptree::tree {
namespace {

using nlohmann::json;

Rational rational_field(const json& j, const char* what) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_number_float()) return rational_from_double(j.get<double>());
  throw std::invalid_argument(std::string(what) + " must be a \"p/q\" string or a number");
}

json support_json(std::span<const SupportPoint> support) {
  json out = json::array();
  for (const auto& p : support) out.push_back(json::array({to_string(p.depth), p.value}));
  return out;
}

std::vector<SupportPoint> support_from_json(const json& j) {
  std::vector<SupportPoint> out;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2 || !item[1].is_number()) {
      throw std::invalid_argument("support entries must be [\"p/q\", number]");
    }
    out.push_back({rational_field(item[0], "support depth"), item[1].get<double>()});
  }
  return out;
}

}  // namespace

json to_json(const AnyProfile& p) {
  return std::visit(
      [](const auto& x) -> json {
        using X = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<X, ProfileC>) {
          json bps = json::array();
          for (const auto& b : x.breakpoints()) bps.push_back(json::array({to_string(b.x), to_string(b.value)}));
          return {{"kind", "C"}, {"depth", to_string(x.depth())}, {"support", bps}};
        } else if constexpr (std::is_same_v<X, ProfileD>) {
          return {{"kind", "D"}, {"depth", to_string(x.depth())}, {"support", support_json(x.support())}};
        } else {
          return {{"kind", "F"},
                  {"depth", to_string(x.depth())},
                  {"top", x.top()},
                  {"support", support_json(x.support())}};
        }
      },
      p);
}

AnyProfile profile_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("profile must be a JSON object");
  if (!j.contains("kind") || !j["kind"].is_string()) throw std::invalid_argument("profile needs a string \"kind\"");
  if (!j.contains("depth")) throw std::invalid_argument("profile needs a \"depth\"");
  const auto kind = j["kind"].get<std::string>();
  const Rational depth = rational_field(j["depth"], "depth");
  const json support = j.value("support", json::array());
  if (!support.is_array()) throw std::invalid_argument("\"support\" must be an array");

  if (kind == "D") return ProfileD(depth, support_from_json(support));
  if (kind == "F") {
    if (!j.contains("top") || !j["top"].is_number()) throw std::invalid_argument("F profile needs a numeric \"top\"");
    return ProfileF(depth, j["top"].get<double>(), support_from_json(support));
  }
  if (kind == "C") {
    std::vector<Breakpoint> bps;
    for (const auto& item : support) {
      if (!item.is_array() || item.size() != 2) throw std::invalid_argument("breakpoints must be [x, value] pairs");
      bps.push_back({rational_field(item[0], "breakpoint x"), rational_field(item[1], "breakpoint value")});
    }
    if (bps.empty()) bps.push_back({Rational(0), Rational(0)});
    ProfileC out(std::move(bps));
    if (out.depth() != depth) throw std::invalid_argument("last breakpoint must sit at the profile depth");
    return out;
  }
  throw std::invalid_argument("unknown profile kind '" + kind + "'");
}

AnyProfile load_profile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return profile_from_json(json::parse(in));
}

}  // namespace asymptree::tree
