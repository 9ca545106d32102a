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

#ifndef TYCAT_TYCAT_H_
#define TYCAT_TYCAT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(TYCAT_BUILDING_LIBRARY)
#define TYCAT_API __attribute__((visibility("default")))
#else
#define TYCAT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tycat_status {
  TYCAT_OK = 0,
  TYCAT_ERR_INPUT = 1,
  TYCAT_ERR_PARSE = 2,
  TYCAT_ERR_INVARIANT = 3,
  TYCAT_ERR_SIZE = 4,
  TYCAT_ERR_PRECONDITION = 5,
  TYCAT_ERR_INCONSISTENCY = 6,
  TYCAT_ERR_INTERNAL = 7
} tycat_status;

/* Associator data for one Tambara-Yamagami type structure. */
typedef struct tycat_data tycat_data;

/* Message of the last failed call on this thread; never NULL. */
TYCAT_API const char* tycat_last_error(void);

/* Strings returned through char** out-parameters are owned by the caller. */
TYCAT_API void tycat_string_free(char* s);
TYCAT_API void tycat_data_free(tycat_data* d);

/* Standard data for Z/orders[0] x ... with bicharacter matrix `m` (rank x
 * rank, row-major) and sign +1 or -1. */
TYCAT_API tycat_status tycat_construct(const int64_t* orders, size_t rank, const int64_t* m, int sign,
                                       tycat_data** out);

TYCAT_API tycat_status tycat_from_json(const char* text, tycat_data** out);
TYCAT_API tycat_status tycat_to_json(const tycat_data* d, char** json_out);

/* Runs every check. *pass is 1 if the data is coherent. */
TYCAT_API tycat_status tycat_verify(const tycat_data* d, double tolerance, int* pass, char** report_out);

/* Random unit-normalized gauge for the group of `d`, as JSON. */
TYCAT_API tycat_status tycat_gauge_random(const tycat_data* d, uint64_t seed, char** gauge_out);
TYCAT_API tycat_status tycat_gauge_apply(const tycat_data* d, const char* gauge_json, tycat_data** out);

TYCAT_API tycat_status tycat_mutate(const tycat_data* d, uint64_t seed, int count, tycat_data** out);

/* Normal form invariants (chi, sign) and the gauge reaching them, as JSON. */
TYCAT_API tycat_status tycat_normalize(const tycat_data* d, double tolerance, char** result_out);

/* Equivalence classes for the group, as JSON; *count receives their number. */
TYCAT_API tycat_status tycat_classify(const int64_t* orders, size_t rank, size_t* count, char** result_out);

/* Residual report for the sampled real line with N points and parameter a. */
TYCAT_API tycat_status tycat_continuum(size_t n, double a, int sign, double tolerance, int* pass,
                                       char** report_out);

#ifdef __cplusplus
}
#endif

#endif  // TYCAT_TYCAT_H_
