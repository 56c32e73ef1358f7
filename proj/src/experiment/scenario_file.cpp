// Copyright 2026 The canoma Authors
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

#include "canoma/experiment/scenario_file.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <json.hpp>
#include <limits>
#include <optional>
#include <sstream>

namespace canoma::experiment {
namespace {

using nlohmann::json;

std::string join(std::string_view parent, std::string_view key) {
  return parent.empty() ? std::string(key) : std::string(parent) + "." + std::string(key);
}

void reject_unknown(const json& obj, std::string_view path,
                    std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) throw ValidationError(join(path, key), "unknown key");
  }
}

const json* section(const json& doc, const char* name) {
  if (!doc.contains(name)) return nullptr;
  const json& s = doc.at(name);
  if (!s.is_object()) throw ValidationError(name, "must be an object");
  return &s;
}

std::optional<double> number(const json& obj, std::string_view path, const char* key) {
  if (!obj.contains(key)) return std::nullopt;
  const json& v = obj.at(key);
  if (!v.is_number()) throw ValidationError(join(path, key), "must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ValidationError(join(path, key), "must be finite");
  return d;
}

std::optional<int> integer(const json& obj, std::string_view path, const char* key) {
  if (!obj.contains(key)) return std::nullopt;
  const json& v = obj.at(key);
  if (!v.is_number_integer()) throw ValidationError(join(path, key), "must be an integer");
  const auto i = v.get<long long>();
  if (i < 1 || i > std::numeric_limits<int>::max()) {
    throw ValidationError(join(path, key), "must be a positive integer");
  }
  return static_cast<int>(i);
}

double target_rate(const json& qos, const char* rate_key, const char* sinr_key) {
  const auto rate = number(qos, "qos", rate_key);
  const auto sinr = number(qos, "qos", sinr_key);
  if (rate && sinr) {
    throw ValidationError(join("qos", sinr_key), std::string("conflicts with qos.") + rate_key);
  }
  if (sinr) {
    if (*sinr < 0.0) throw ValidationError(join("qos", sinr_key), "must be >= 0");
    return rate_from_sinr(*sinr);
  }
  return rate.value_or(0.0);
}

}  // namespace

ScenarioBundle parse_scenario(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ScenarioParseError(e.what());
  }
  if (!doc.is_object()) throw ScenarioParseError("scenario must be a JSON object");
  reject_unknown(doc, "", {"channels", "powers", "frame", "qos", "weights", "limits", "n_star"});

  ScenarioBundle b;
  PowerScenario& sc = b.scenario;

  const json* channels = section(doc, "channels");
  if (channels == nullptr) throw ValidationError("channels", "section is required");
  reject_unknown(*channels, "channels", {"h1_sq", "h2_sq", "h12_sq"});
  for (const char* key : {"h1_sq", "h2_sq", "h12_sq"}) {
    if (!channels->contains(key)) throw ValidationError(join("channels", key), "is required");
  }
  sc.channels = {*number(*channels, "channels", "h1_sq"), *number(*channels, "channels", "h2_sq"),
                 *number(*channels, "channels", "h12_sq")};

  if (const json* p = section(doc, "powers")) {
    reject_unknown(*p, "powers", {"p1", "p2", "pr"});
    b.powers = {number(*p, "powers", "p1").value_or(0.0), number(*p, "powers", "p2").value_or(0.0),
                number(*p, "powers", "pr").value_or(0.0)};
  }

  if (const json* f = section(doc, "frame")) {
    reject_unknown(*f, "frame", {"n", "tau"});
    b.frame.n = integer(*f, "frame", "n").value_or(b.frame.n);
    b.frame.tau = number(*f, "frame", "tau").value_or(b.frame.tau);
  }
  sc.tau = b.frame.tau;

  if (const json* q = section(doc, "qos")) {
    reject_unknown(*q, "qos", {"r1_star", "gamma1", "r2_star", "gamma2"});
    sc.r1_star = target_rate(*q, "r1_star", "gamma1");
    sc.r2_star = target_rate(*q, "r2_star", "gamma2");
  }

  if (const json* w = section(doc, "weights")) {
    reject_unknown(*w, "weights", {"omega_s", "omega_r"});
    const auto ws = number(*w, "weights", "omega_s");
    const auto wr = number(*w, "weights", "omega_r");
    sc.omega_s = ws.value_or(wr ? 1.0 - *wr : sc.omega_s);
    sc.omega_r = wr.value_or(ws ? 1.0 - *ws : sc.omega_r);
  }

  if (const json* l = section(doc, "limits")) {
    reject_unknown(*l, "limits", {"ps_max", "pr_max"});
    sc.ps_max = number(*l, "limits", "ps_max").value_or(sc.ps_max);
    sc.pr_max = number(*l, "limits", "pr_max").value_or(sc.pr_max);
  }

  sc.n_star = integer(doc, "", "n_star").value_or(sc.n_star);

  b.frame.validate();
  b.powers.validate();
  sc.validate();
  return b;
}

ScenarioBundle load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ScenarioParseError("cannot read scenario file '" + path.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_scenario(text.str());
}

std::string scenario_to_json(const ScenarioBundle& b) {
  const PowerScenario& sc = b.scenario;
  const json doc = {
      {"channels", {{"h1_sq", sc.channels.h1_sq}, {"h2_sq", sc.channels.h2_sq},
                    {"h12_sq", sc.channels.h12_sq}}},
      {"powers", {{"p1", b.powers.p1}, {"p2", b.powers.p2}, {"pr", b.powers.pr}}},
      {"frame", {{"n", b.frame.n}, {"tau", b.frame.tau}}},
      {"qos", {{"r1_star", sc.r1_star}, {"r2_star", sc.r2_star}}},
      {"weights", {{"omega_s", sc.omega_s}, {"omega_r", sc.omega_r}}},
      {"limits", {{"ps_max", sc.ps_max}, {"pr_max", sc.pr_max}}},
      {"n_star", sc.n_star},
  };
  return doc.dump(2) + "\n";
}

}  // namespace canoma::experiment
