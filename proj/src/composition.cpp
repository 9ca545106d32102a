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

// Pentagon check by composing F-matrices between fusion trees.
//
// Simple objects are labelled 0..n-1 (group elements) and n (tau). For a
// triple (A, B, C) and output O, F^{ABC}_O maps the tree ((AB)->e, (eC)->O)
// to the tree ((BC)->g, (Ag)->O) and its entry is written F(A,B,C,O,g,e).

#include <algorithm>
#include <array>
#include <iterator>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tycat/pentagon.hpp"

namespace tycat {

namespace {

using cd = std::complex<double>;

class Oracle {
 public:
  explicit Oracle(const TYData& d)
      : g_(GroupTable(d.spec)), n_(d.n()), gamma_(d.gamma), fuse_cache_((n_ + 1) * (n_ + 1)) {
    for (std::size_t i = 0; i < kTables; ++i) {
      const auto& t = phase_table(d, kPhaseTableNames[i]);
      auto& out = tables_[i];
      out.reserve(t.size());
      for (const auto& p : t) out.push_back(p.to_complex());
    }
  }

  std::size_t tau() const { return n_; }

  const std::vector<std::size_t>& fuse(std::size_t a, std::size_t b) {
    auto& slot = fuse_cache_[a * (n_ + 1) + b];
    if (!slot.empty()) return slot;
    if (a == n_ && b == n_) {
      for (std::size_t x = 0; x < n_; ++x) slot.push_back(x);
    } else if (a == n_ || b == n_) {
      slot.push_back(n_);
    } else {
      slot.push_back(g_.add(a, b));
    }
    return slot;
  }

  bool in(std::size_t o, std::size_t a, std::size_t b) {
    const auto& f = fuse(a, b);
    return std::binary_search(f.begin(), f.end(), o);
  }

  cd F(std::size_t a, std::size_t b, std::size_t c, std::size_t o, std::size_t g, std::size_t e) const {
    const bool ta = a == n_, tb = b == n_, tc = c == n_;
    auto t2 = [&](std::size_t table, std::size_t x, std::size_t y) { return tables_[table][x * n_ + y]; };
    if (!ta && !tb && !tc) return tables_[0][(a * n_ + b) * n_ + c];
    if (ta && !tb && !tc) return t2(1, b, c);
    if (!ta && tb && !tc) return t2(2, a, c);
    if (!ta && !tb && tc) return t2(3, a, b);
    if (!ta && tb && tc) return t2(4, a, o);
    if (ta && !tb && tc) return t2(5, b, o);
    if (ta && tb && !tc) return t2(6, c, e);
    return gamma_(static_cast<Eigen::Index>(g), static_cast<Eigen::Index>(e));
  }

  // Frobenius norm of (lhs - rhs) for each output, maximized.
  double pentagon(std::size_t A, std::size_t B, std::size_t C, std::size_t D, std::size_t* worst_out) {
    std::vector<std::size_t> outs;
    for (std::size_t e : fuse(A, B)) {
      for (std::size_t f : fuse(e, C)) {
        for (std::size_t o : fuse(f, D)) outs.push_back(o);
      }
    }
    std::sort(outs.begin(), outs.end());
    outs.erase(std::unique(outs.begin(), outs.end()), outs.end());

    double worst = 0.0;
    for (std::size_t O : outs) {
      std::vector<std::pair<std::size_t, std::size_t>> src, tgt;
      for (std::size_t e : fuse(A, B)) {
        for (std::size_t f : fuse(e, C)) {
          if (in(O, f, D)) src.emplace_back(e, f);
        }
      }
      for (std::size_t k : fuse(C, D)) {
        for (std::size_t h : fuse(B, k)) {
          if (in(O, A, h)) tgt.emplace_back(k, h);
        }
      }
      double sq = 0.0;
      for (const auto& [e, f] : src) {
        for (const auto& [k, h] : tgt) {
          cd lhs = 0.0;
          if (in(O, e, k)) lhs = F(A, B, k, O, h, e) * F(e, C, D, O, k, f);
          cd rhs = 0.0;
          for (std::size_t g : fuse(B, C)) {
            if (in(h, g, D) && in(f, A, g)) rhs += F(B, C, D, h, k, g) * F(A, g, D, O, h, f) * F(A, B, C, f, g, e);
          }
          sq += std::norm(lhs - rhs);
        }
      }
      const double dev = std::sqrt(sq);
      if (dev > worst) {
        worst = dev;
        *worst_out = O;
      }
    }
    return worst;
  }

 private:
  GroupTable g_;
  std::size_t n_;
  Eigen::MatrixXcd gamma_;
  static constexpr std::size_t kTables = std::size(kPhaseTableNames);
  std::array<std::vector<cd>, kTables> tables_;
  std::vector<std::vector<std::size_t>> fuse_cache_;
};

}  // namespace

PentagonReport verify_by_composition(const TYData& data, double tolerance) {
  validate_shapes(data);
  Oracle o(data);
  const std::size_t t = o.tau();

  std::vector<FamilyResult> families(16);
  for (std::size_t mask = 0; mask < 16; ++mask) {
    std::string id = "oracle:";
    for (int bit = 3; bit >= 0; --bit) id += (mask >> bit & 1) ? 't' : 'x';
    families[mask].id = id;
  }

  // Labels 0..n, tau last.
  for (std::size_t A = 0; A <= t; ++A) {
    for (std::size_t B = 0; B <= t; ++B) {
      for (std::size_t C = 0; C <= t; ++C) {
        for (std::size_t D = 0; D <= t; ++D) {
          std::size_t out = 0;
          const double dev = o.pentagon(A, B, C, D, &out);
          const std::size_t mask = (A == t) << 3 | (B == t) << 2 | (C == t) << 1 | (D == t);
          auto& f = families[mask];
          f.max_deviation = std::max(f.max_deviation, dev);
          if (dev >= tolerance && f.violations++ == 0) f.sample = {A, B, C, D, out};
        }
      }
    }
  }

  PentagonReport r;
  r.tolerance = tolerance;
  r.families = std::move(families);
  r.pass = std::all_of(r.families.begin(), r.families.end(), [](const FamilyResult& f) { return f.violations == 0; });
  return r;
}

}  // namespace tycat
