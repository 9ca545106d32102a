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

#include "tycat/tycat.h"

#include <cstring>
#include <exception>
#include <string>
#include <vector>

#include "tycat/continuum.hpp"
#include "tycat/error.hpp"
#include "tycat/normalize.hpp"
#include "tycat/pentagon.hpp"
#include "tycat/ty_data.hpp"

struct tycat_data {
  tycat::TYData data;
};

namespace {

thread_local std::string last_error;

tycat_status status_of(tycat::ErrorKind k) {
  switch (k) {
    case tycat::ErrorKind::kInput:
      return TYCAT_ERR_INPUT;
    case tycat::ErrorKind::kParse:
      return TYCAT_ERR_PARSE;
    case tycat::ErrorKind::kInvariant:
      return TYCAT_ERR_INVARIANT;
    case tycat::ErrorKind::kSize:
      return TYCAT_ERR_SIZE;
    case tycat::ErrorKind::kPrecondition:
      return TYCAT_ERR_PRECONDITION;
    case tycat::ErrorKind::kInconsistency:
      return TYCAT_ERR_INCONSISTENCY;
  }
  return TYCAT_ERR_INTERNAL;
}

template <class F>
tycat_status guarded(F body) {
  try {
    body();
    last_error.clear();
    return TYCAT_OK;
  } catch (const tycat::Error& e) {
    last_error = std::string(tycat::to_string(e.kind())) + ": " + e.what();
    return status_of(e.kind());
  } catch (const std::exception& e) {
    last_error = std::string("internal error: ") + e.what();
    return TYCAT_ERR_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (p == nullptr) tycat::fail(tycat::ErrorKind::kInput, std::string(what) + " is null");
}

tycat::GroupSpec spec_of(const int64_t* orders, size_t rank) {
  if (rank > 0) require(orders, "orders");
  return tycat::GroupSpec(std::vector<std::int64_t>(orders, orders + rank));
}

}  // namespace

extern "C" {

const char* tycat_last_error(void) { return last_error.c_str(); }

void tycat_string_free(char* s) { delete[] s; }

void tycat_data_free(tycat_data* d) { delete d; }

tycat_status tycat_construct(const int64_t* orders, size_t rank, const int64_t* m, int sign, tycat_data** out) {
  return guarded([&] {
    require(out, "out");
    const tycat::GroupSpec spec = spec_of(orders, rank);
    if (rank > 0) require(m, "m");
    tycat::Bicharacter b{spec, std::vector<std::vector<std::int64_t>>(rank, std::vector<std::int64_t>(rank))};
    for (size_t i = 0; i < rank; ++i) {
      for (size_t j = 0; j < rank; ++j) b.M[i][j] = m[i * rank + j];
    }
    *out = new tycat_data{tycat::construct_standard(spec, b, tycat::sign_from_int(sign))};
  });
}

tycat_status tycat_from_json(const char* text, tycat_data** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new tycat_data{tycat::ty_from_json(text)};
  });
}

tycat_status tycat_to_json(const tycat_data* d, char** json_out) {
  return guarded([&] {
    require(d, "data");
    require(json_out, "json_out");
    *json_out = dup(tycat::to_json(d->data));
  });
}

tycat_status tycat_verify(const tycat_data* d, double tolerance, int* pass, char** report_out) {
  return guarded([&] {
    require(d, "data");
    const auto r = tycat::verify_all(d->data, tolerance);
    if (pass) *pass = r.pass ? 1 : 0;
    if (report_out) *report_out = dup(tycat::to_json(r));
  });
}

tycat_status tycat_gauge_random(const tycat_data* d, uint64_t seed, char** gauge_out) {
  return guarded([&] {
    require(d, "data");
    require(gauge_out, "gauge_out");
    *gauge_out = dup(tycat::to_json(tycat::random_gauge(d->data.spec, seed)));
  });
}

tycat_status tycat_gauge_apply(const tycat_data* d, const char* gauge_json, tycat_data** out) {
  return guarded([&] {
    require(d, "data");
    require(gauge_json, "gauge_json");
    require(out, "out");
    *out = new tycat_data{tycat::apply_gauge(d->data, tycat::gauge_from_json(gauge_json))};
  });
}

tycat_status tycat_mutate(const tycat_data* d, uint64_t seed, int count, tycat_data** out) {
  return guarded([&] {
    require(d, "data");
    require(out, "out");
    *out = new tycat_data{tycat::mutate(d->data, seed, count)};
  });
}

tycat_status tycat_normalize(const tycat_data* d, double tolerance, char** result_out) {
  return guarded([&] {
    require(d, "data");
    require(result_out, "result_out");
    *result_out = dup(tycat::to_json(tycat::normalize(d->data, tolerance)));
  });
}

tycat_status tycat_classify(const int64_t* orders, size_t rank, size_t* count, char** result_out) {
  return guarded([&] {
    const tycat::GroupSpec spec = spec_of(orders, rank);
    const auto classes = tycat::classify_all(spec);
    if (count) *count = classes.size();
    if (result_out) *result_out = dup(tycat::to_json(spec, classes));
  });
}

tycat_status tycat_continuum(size_t n, double a, int sign, double tolerance, int* pass, char** report_out) {
  return guarded([&] {
    const auto grid = tycat::make_grid(n, a);
    const auto r = tycat::verify_continuum(grid, tycat::sign_from_int(sign), tolerance);
    if (pass) *pass = r.pass ? 1 : 0;
    if (report_out) *report_out = dup(tycat::to_json(r));
  });
}

}  // extern "C"
