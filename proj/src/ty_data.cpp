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

#include "tycat/ty_data.hpp"

#include <cmath>
#include <numbers>

#include "tycat/error.hpp"

namespace tycat {

Sign sign_from_int(int v) {
  if (v == 1) return Sign::kPlus;
  if (v == -1) return Sign::kMinus;
  fail(ErrorKind::kInput, "sign must be +1 or -1, got " + std::to_string(v));
}

std::vector<SimpleObject> fusion_product(const GroupSpec& spec, const SimpleObject& s, const SimpleObject& t) {
  if (is_tau(s) && is_tau(t)) {
    std::vector<SimpleObject> out;
    for (auto& g : enumerate_elements(spec)) out.emplace_back(std::move(g));
    return out;
  }
  if (is_tau(s) || is_tau(t)) return {Tau{}};
  return {elem_op(spec, std::get<GroupElement>(s), std::get<GroupElement>(t))};
}

std::vector<Phase>& phase_table(TYData& d, std::string_view name) {
  if (name == "a") return d.a;
  if (name == "a1") return d.a1;
  if (name == "a2") return d.a2;
  if (name == "a3") return d.a3;
  if (name == "b1") return d.b1;
  if (name == "b2") return d.b2;
  if (name == "b3") return d.b3;
  fail(ErrorKind::kInput, "unknown table " + std::string(name));
}

const std::vector<Phase>& phase_table(const TYData& d, std::string_view name) {
  return phase_table(const_cast<TYData&>(d), name);
}

void validate_shapes(const TYData& d) {
  const auto n = static_cast<std::size_t>(group_order(d.spec));
  if (static_cast<std::size_t>(d.gamma.rows()) != n || static_cast<std::size_t>(d.gamma.cols()) != n) {
    fail(ErrorKind::kInput, "gamma must be " + std::to_string(n) + "x" + std::to_string(n));
  }
  for (const char* name : kPhaseTableNames) {
    const std::size_t want = std::string_view(name) == "a" ? n * n * n : n * n;
    if (phase_table(d, name).size() != want) {
      fail(ErrorKind::kInput, std::string("table ") + name + " must have " + std::to_string(want) + " entries");
    }
  }
}

double unitarity_residual(const Eigen::MatrixXcd& gamma) {
  if (gamma.size() == 0) return 0.0;
  const Eigen::MatrixXcd d = gamma * gamma.adjoint() - Eigen::MatrixXcd::Identity(gamma.rows(), gamma.cols());
  return d.cwiseAbs().maxCoeff();
}

TYData construct_standard(const GroupSpec& spec, const Bicharacter& B, Sign s) {
  if (!(B.spec == spec)) fail(ErrorKind::kInput, "bicharacter is defined on a different group");
  const auto chi = bichar_table(B);
  const auto n = static_cast<std::size_t>(group_order(spec));
  if (!table_is_symmetric(chi, n)) fail(ErrorKind::kInvariant, "bicharacter is not symmetric");
  if (!table_is_nondegenerate(chi, n)) fail(ErrorKind::kInvariant, "bicharacter is degenerate");

  TYData d;
  d.spec = spec;
  d.a.assign(n * n * n, Phase());
  d.a1.assign(n * n, Phase());
  d.a3.assign(n * n, Phase());
  d.b1.assign(n * n, Phase());
  d.b3.assign(n * n, Phase());
  d.a2 = chi;
  d.b2 = chi;
  d.gamma.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  const double xi = to_int(s) / std::sqrt(static_cast<double>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      d.gamma(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)) = xi * std::conj(chi[x * n + y].to_complex());
    }
  }
  return d;
}

Eigen::MatrixXd parity_matrix(const GroupSpec& spec) {
  const GroupTable g(spec);
  const auto n = static_cast<Eigen::Index>(g.size());
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t x = 0; x < g.size(); ++x) p(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(g.neg(x))) = 1.0;
  return p;
}

bool operator==(const TYData& lhs, const TYData& rhs) {
  if (!(lhs.spec == rhs.spec)) return false;
  for (const char* name : kPhaseTableNames) {
    if (phase_table(lhs, name) != phase_table(rhs, name)) return false;
  }
  return lhs.gamma.rows() == rhs.gamma.rows() && lhs.gamma.cols() == rhs.gamma.cols() && lhs.gamma == rhs.gamma;
}

}  // namespace tycat
