// Copyright 2026 The sdt Authors
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


/* C interface to the sdt library. Handles are opaque; every call that can
 * fail returns an sdt_status and leaves a message for sdt_last_error() on
 * the calling thread. Strings returned through char** are owned by the
 * caller and released with sdt_string_free(). */

#ifndef SDT_SDT_H_
#define SDT_SDT_H_

#include <stddef.h>

#if defined(_WIN32)
#define SDT_API __declspec(dllexport)
#else
#define SDT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct sdt_graph sdt_graph;
typedef struct sdt_group sdt_group;

typedef enum sdt_status {
  SDT_OK = 0,
  SDT_E_ARGUMENT = 1,
  SDT_E_PARSE = 2,
  SDT_E_CONNECTIVITY = 3,
  SDT_E_REGULARITY = 4,
  SDT_E_INVARIANT = 5,
  SDT_E_INVARIANCE = 6,
  SDT_E_PRECONDITION = 7,
  SDT_E_HYPOTHESIS = 8,
  SDT_E_THEOREM_VIOLATION = 9,
  SDT_E_SCALE = 10,
  SDT_E_SCOPE = 11,
  SDT_E_NOT_FOUND = 12,
  SDT_E_IO = 13,
  SDT_E_APPLICABILITY = 14,
  SDT_E_INTERNAL = 100
} sdt_status;

SDT_API const char* sdt_version(void);
SDT_API const char* sdt_status_name(sdt_status status);
/* Message of the most recent failure on this thread; "" after success. */
SDT_API const char* sdt_last_error(void);
SDT_API void sdt_string_free(char* s);

/* Graphs. Loaders reject disconnected input with SDT_E_CONNECTIVITY. */
SDT_API sdt_status sdt_graph_from_graph6(const char* line, sdt_graph** out);
SDT_API sdt_status sdt_graph_from_corpus(const char* name, sdt_graph** out);
/* `endpoints` holds 2 * edge_count vertex ids. */
SDT_API sdt_status sdt_graph_from_edges(int order, const int* endpoints,
                                        size_t edge_count, sdt_graph** out);
SDT_API int sdt_graph_order(const sdt_graph* g);
SDT_API sdt_status sdt_graph_to_graph6(const sdt_graph* g, char** out);
SDT_API void sdt_graph_free(sdt_graph* g);

/* Groups acting on the vertices of a graph. */
SDT_API sdt_status sdt_group_automorphisms(const sdt_graph* g, sdt_group** out);
/* Generator text: one permutation per line, cycle notation or "[...]". */
SDT_API sdt_status sdt_group_from_text(const sdt_graph* g, const char* text,
                                       sdt_group** out);
/* A subgroup shipped with a corpus entry, e.g. ("K33", "C3wrC2"). */
SDT_API sdt_status sdt_group_named(const char* graph_name, const char* subgroup,
                                   sdt_group** out);
SDT_API sdt_status sdt_group_order(const sdt_group* group, char** out);
SDT_API void sdt_group_free(sdt_group* group);

/* JSON producers. */
SDT_API sdt_status sdt_corpus_json(char** out);
SDT_API sdt_status sdt_analyze_json(const sdt_graph* g, const sdt_group* group,
                                    const char* name, const char* group_name,
                                    int with_timing, char** out);
SDT_API sdt_status sdt_verify_json(const sdt_graph* g, const sdt_group* group,
                                   const char* name, const char* group_name,
                                   char** out);
SDT_API sdt_status sdt_designs_json(const sdt_graph* g, const sdt_group* group,
                                    char** out);
SDT_API sdt_status sdt_small_designs_json(int points, int block_size, char** out);
SDT_API sdt_status sdt_orders_json(char** out);
/* Exhaustive cross-checks; SDT_E_SCALE above 12 vertices. */
SDT_API sdt_status sdt_oracle_json(const sdt_graph* g, char** out);

#ifdef __cplusplus
}
#endif

#endif /* SDT_SDT_H_ */
