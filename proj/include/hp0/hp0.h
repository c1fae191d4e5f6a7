/* C interface to the hypertoric degree-zero Poisson homology toolkit.
 *
 * All computation runs behind opaque frame handles. Functions return
 * HP0_OK on success; on failure they write a message into the caller's
 * error buffer and return a nonzero status. JSON results are heap
 * strings released with hp0_string_free.
 */
#ifndef HP0_H
#define HP0_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct hp0_frame hp0_frame;

enum hp0_status {
  HP0_OK = 0,
  HP0_ERR_INPUT = 1,    /* unreadable/invalid frame, bad options */
  HP0_ERR_IDENTITY = 2, /* a verified identity failed */
  HP0_ERR_INTERNAL = 3
};

typedef struct hp0_options {
  int d_max;         /* top combinatorial degree, default 12 */
  uint64_t seed;     /* seed for sampled fiber points */
  int paper_degrees; /* nonzero: degree labels are doubled */
  int threads;       /* 0 = use HP0_THREADS or hardware count */
} hp0_options;

void hp0_options_init(hp0_options* opt);

/* Frame files are either "k n" followed by k integer rows, or a JSON
 * object {"k":..,"n":..,"rows":[[..]]}; the format is sniffed. */
int hp0_frame_from_file(const char* path, hp0_frame** out, char* err, size_t err_len);
int hp0_frame_parse(const char* text, hp0_frame** out, char* err, size_t err_len);
void hp0_frame_free(hp0_frame* frame);

int hp0_frame_rows(const hp0_frame* frame); /* k */
int hp0_frame_cols(const hp0_frame* frame); /* n */

/* Relabel the ground set: order is a permutation of 1..n; new column j is
 * old column order[j-1]. */
int hp0_frame_permute(const hp0_frame* frame, const int* order, int n, hp0_frame** out,
                      char* err, size_t err_len);

/* Per-command JSON documents. Identical inputs yield identical bytes. */
int hp0_circuits_json(const hp0_frame* frame, const hp0_options* opt, char** out_json,
                      char* err, size_t err_len);
int hp0_hilbert_json(const hp0_frame* frame, const hp0_options* opt, char** out_json,
                     char* err, size_t err_len);
int hp0_betti_json(const hp0_frame* frame, const hp0_options* opt, char** out_json,
                   char* err, size_t err_len);
int hp0_degeneration_json(const hp0_frame* frame, const hp0_options* opt, char** out_json,
                          char* err, size_t err_len);
/* lambda_csv: comma-separated rationals ("1,2" or "1/2,-3"), or NULL to
 * sample a seeded random point. */
int hp0_fiber_json(const hp0_frame* frame, const hp0_options* opt, const char* lambda_csv,
                   char** out_json, char* err, size_t err_len);
int hp0_flats_json(const hp0_frame* frame, const hp0_options* opt, char** out_json,
                   char* err, size_t err_len);
int hp0_sheaf_json(const hp0_frame* frame, const hp0_options* opt, char** out_json,
                   char* err, size_t err_len);

/* Runs the whole verification suite. Returns HP0_OK when every checked
 * identity holds, HP0_ERR_IDENTITY otherwise; the JSON is produced in
 * both cases. */
int hp0_report_json(const hp0_frame* frame, const hp0_options* opt, char** out_json,
                    char* err, size_t err_len);

void hp0_string_free(char* s);
const char* hp0_version(void);

#ifdef __cplusplus
}
#endif

#endif
