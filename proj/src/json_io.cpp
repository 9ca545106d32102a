// Copyright 2026 The tycat Authors
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

#include <string>

#include <json.hpp>

#include "tycat/bicharacter.hpp"
#include "tycat/continuum.hpp"
#include "tycat/error.hpp"
#include "tycat/normalize.hpp"
#include "tycat/pentagon.hpp"
#include "tycat/ty_data.hpp"

namespace tycat {

using nlohmann::json;

namespace {

constexpr int kIndent = 2;

json parse(const std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorKind::kParse, std::string("invalid JSON: ") + e.what());
  }
}

// Runs `body`, turning JSON type and key errors into parse errors.
template <class F>
auto reading(const char* what, F body) {
  try {
    return body();
  } catch (const json::exception& e) {
    fail(ErrorKind::kParse, std::string("malformed ") + what + ": " + e.what());
  }
}

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorKind::kParse, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

json phases_json(const std::vector<Phase>& t) {
  json out = json::array();
  for (const auto& p : t) out.push_back(p.to_string());
  return out;
}

std::vector<Phase> phases_from(const json& j) {
  if (!j.is_array()) fail(ErrorKind::kParse, "phase table must be an array");
  std::vector<Phase> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_string()) fail(ErrorKind::kParse, "phases must be strings \"num/den\"");
    out.push_back(Phase::parse(v.get<std::string>()));
  }
  return out;
}

GroupSpec spec_from(const json& j) {
  if (!j.is_array()) fail(ErrorKind::kParse, "orders must be an array");
  return GroupSpec(j.get<std::vector<std::int64_t>>());
}

json bichar_json(const Bicharacter& b) { return {{"orders", b.spec.orders()}, {"M", b.M}}; }

json family_json(const FamilyResult& f) {
  return {{"id", f.id}, {"violations", f.violations}, {"max_deviation", f.max_deviation}, {"sample", f.sample}};
}

json report_json(const PentagonReport& r) {
  json fams = json::array();
  for (const auto& f : r.families) fams.push_back(family_json(f));
  return {{"pass", r.pass}, {"tolerance", r.tolerance}, {"families", fams}};
}

json gauge_json(const GaugeTransform& g) {
  return {{"orders", g.spec.orders()},
          {"theta", phases_json(g.theta)},
          {"phi", phases_json(g.phi)},
          {"psi", phases_json(g.psi)},
          {"omega", phases_json(g.omega)}};
}

}  // namespace

std::string to_json(const GroupSpec& spec) { return json(spec.orders()).dump(); }

GroupSpec group_from_json(const std::string& text) {
  const json j = parse(text);
  return reading("group", [&] { return spec_from(j); });
}

std::string to_json(const Bicharacter& b) { return bichar_json(b).dump(kIndent); }

Bicharacter bichar_from_json(const std::string& text) {
  const json j = parse(text);
  Bicharacter b = reading("bicharacter", [&] {
    return Bicharacter{spec_from(member(j, "orders")), member(j, "M").get<std::vector<std::vector<std::int64_t>>>()};
  });
  validate_shape(b);
  return b;
}

std::string to_json(const TYData& d) {
  json j;
  j["orders"] = d.spec.orders();
  for (const char* name : kPhaseTableNames) j[name] = phases_json(phase_table(d, name));
  json g = json::array();
  // Row-major, matching the lexicographic (x, y) order of the other tables.
  for (Eigen::Index x = 0; x < d.gamma.rows(); ++x) {
    for (Eigen::Index y = 0; y < d.gamma.cols(); ++y) g.push_back({d.gamma(x, y).real(), d.gamma(x, y).imag()});
  }
  j["gamma"] = std::move(g);
  return j.dump(kIndent);
}

TYData ty_from_json(std::string_view text) {
  const json j = parse(text);
  TYData d = reading("TY data", [&] {
    TYData out;
    out.spec = spec_from(member(j, "orders"));
    for (const char* name : kPhaseTableNames) phase_table(out, name) = phases_from(member(j, name));
    const json& g = member(j, "gamma");
    if (!g.is_array()) fail(ErrorKind::kParse, "gamma must be an array");
    const auto n = static_cast<std::size_t>(group_order(out.spec));
    if (g.size() != n * n) fail(ErrorKind::kInput, "gamma must have " + std::to_string(n * n) + " entries");
    out.gamma.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < g.size(); ++i) {
      const json& e = g[i];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
        fail(ErrorKind::kParse, "gamma entries must be [re, im] pairs");
      }
      out.gamma(static_cast<Eigen::Index>(i / n), static_cast<Eigen::Index>(i % n)) = {e[0].get<double>(),
                                                                                       e[1].get<double>()};
    }
    return out;
  });
  validate_shapes(d);
  if (!(unitarity_residual(d.gamma) < 1e-10)) fail(ErrorKind::kInvariant, "gamma is not unitary");
  return d;
}

std::string to_json(const PentagonReport& r) { return report_json(r).dump(kIndent); }

PentagonReport report_from_json(const std::string& text) {
  const json j = parse(text);
  return reading("report", [&] {
    PentagonReport r;
    r.pass = member(j, "pass").get<bool>();
    r.tolerance = member(j, "tolerance").get<double>();
    for (const auto& f : member(j, "families")) {
      r.families.push_back({member(f, "id").get<std::string>(), member(f, "violations").get<std::size_t>(),
                            member(f, "max_deviation").get<double>(),
                            member(f, "sample").get<std::vector<std::size_t>>()});
    }
    return r;
  });
}

std::string to_json(const GaugeTransform& g) { return gauge_json(g).dump(kIndent); }

GaugeTransform gauge_from_json(const std::string& text) {
  const json j = parse(text);
  GaugeTransform g = reading("gauge", [&] {
    return GaugeTransform{spec_from(member(j, "orders")), phases_from(member(j, "theta")),
                          phases_from(member(j, "phi")), phases_from(member(j, "psi")),
                          phases_from(member(j, "omega"))};
  });
  const auto n = static_cast<std::size_t>(group_order(g.spec));
  if (g.theta.size() != n * n || g.phi.size() != n || g.psi.size() != n || g.omega.size() != n) {
    fail(ErrorKind::kInput, "gauge tables have the wrong size for the group");
  }
  return g;
}

std::string to_json(const ClassificationResult& r) {
  json j;
  j["orders"] = r.spec.orders();
  j["chi"] = phases_json(r.chi);
  j["M"] = r.bicharacter ? json(r.bicharacter->M) : json(nullptr);
  j["sign"] = to_int(r.sign);
  j["sign_deviation"] = r.sign_deviation;
  j["residual"] = r.residual;
  j["gauge"] = gauge_json(r.gauge);
  return j.dump(kIndent);
}

std::string to_json(const GroupSpec& spec, const std::vector<ClassRepresentative>& classes) {
  json list = json::array();
  for (const auto& c : classes) {
    list.push_back({{"M", c.bicharacter.M}, {"sign", to_int(c.sign)}, {"orbit_size", c.orbit_size}});
  }
  return json{{"orders", spec.orders()}, {"count", classes.size()}, {"classes", list}}.dump(kIndent);
}

std::string to_json(const ResidualReport& r) {
  json fams = json::object();
  for (const auto& f : r.pentagon.families) fams[f.id] = f.max_deviation;
  return json{{"pass", r.pass},
              {"tolerance", r.tolerance},
              {"unitarity", r.unitarity},
              {"parity", r.parity},
              {"periodicity", r.periodicity},
              {"families", fams}}
      .dump(kIndent);
}

}  // namespace tycat
