#ifndef TORIC_H
#define TORIC_H

/* C interface to the exact placement-polynomial engine. All entry points
 * return a status; on failure toric_last_error() describes what went wrong
 * (per thread). Results come back as reports holding a JSON document. */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum toric_status {
    TORIC_OK = 0,
    TORIC_ERR_PARSE = 1,    /* malformed input or file not found */
    TORIC_ERR_GUARD = 2,    /* request exceeds the configured size limits */
    TORIC_ERR_BUDGET = 3,   /* enumeration exceeded the iteration budget */
    TORIC_ERR_INTERNAL = 4, /* engine invariant failed */
    TORIC_ERR_USAGE = 5     /* null handle or bad argument combination */
} toric_status;

typedef struct toric_figure_set toric_figure_set;
typedef struct toric_report toric_report;

typedef struct toric_options {
    int box;               /* nonzero: box counts instead of torus counts */
    int max_weight;        /* K for sequence and chromatic runs */
    int allow_large;       /* nonzero: lift weight caps, widen the budget */
    const int* verify_n;   /* side lengths for brute-force verification */
    int verify_n_count;
} toric_options;

const char* toric_version(void);
const char* toric_last_error(void);
void toric_options_init(toric_options* opts);

toric_status toric_figure_set_parse(const char* json_text, toric_figure_set** out);
/* Accepts a path or the bare name of a catalog under $TORICLIB_DATA (or the
 * built-in data directory). */
toric_status toric_figure_set_load(const char* path_or_name, toric_figure_set** out);
void toric_figure_set_free(toric_figure_set* fs);
int toric_figure_set_dim(const toric_figure_set* fs);
int toric_figure_set_size(const toric_figure_set* fs);

toric_status toric_run_poly(const toric_figure_set* fs, const toric_options* opts,
                            toric_report** out);
toric_status toric_run_sequence(const toric_figure_set* fs, const toric_options* opts,
                                toric_report** out);
toric_status toric_run_chromatic(int dim, const toric_options* opts, toric_report** out);
toric_status toric_run_selftest(const toric_options* opts, toric_report** out);

/* JSON text owned by the report; valid until toric_report_free. */
const char* toric_report_json(const toric_report* report);
/* 1 when every check in the report passed. */
int toric_report_ok(const toric_report* report);
void toric_report_free(toric_report* report);

#ifdef __cplusplus
}
#endif

#endif /* TORIC_H */
