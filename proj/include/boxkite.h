/*
 * boxkite: exact Cayley-Dickson 2^N-ion arithmetic and the zero-divisor
 * superstructure built on it (assessors, box-kites, twists, lanyards,
 * emanation tables).
 *
 * C interface over the C++ core.  Objects are opaque handles paired with
 * create/destroy calls; every fallible function returns a bk_status and
 * writes results through out-parameters.  Strings and byte buffers handed
 * out by the library are released with bk_string_free / bk_bytes_free.
 */
#ifndef BOXKITE_H
#define BOXKITE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bk_status {
  BK_OK = 0,
  BK_ERR_INVALID_ARGUMENT = 1, /* bad handle, range, or name */
  BK_ERR_PARSE = 2,            /* malformed text input */
  BK_ERR_NOMEM = 3,
  BK_ERR_INTERNAL = 4          /* a structural claim failed; see bk_last_error */
} bk_status;

/* Static name for a status code. */
const char* bk_status_string(bk_status status);

/* Detail message for the most recent failure on this thread. */
const char* bk_last_error(void);

void bk_string_free(char* text);
void bk_bytes_free(unsigned char* bytes);

/* ---- signed unit arithmetic -------------------------------------------- */

/* Product of two signed basis units: out index = a_index XOR b_index.
 * Signs are -1 or +1. */
bk_status bk_unit_product(uint32_t a_index, int32_t a_sign, uint32_t b_index, int32_t b_sign,
                          uint32_t* out_index, int32_t* out_sign);

/* ---- strut contexts ----------------------------------------------------- */

typedef struct bk_context bk_context;

/* Requires 4 <= n <= 16 and 0 < s < 2^(n-1). */
bk_status bk_context_create(uint32_t n, uint32_t s, bk_context** out);
void bk_context_destroy(bk_context* ctx);

uint32_t bk_context_n(const bk_context* ctx);
uint32_t bk_context_strut_constant(const bk_context* ctx);
uint32_t bk_context_generator(const bk_context* ctx);
uint32_t bk_context_strut_bound(const bk_context* ctx);

/* K = 2^(n-1) - 2, the tone-row length. */
size_t bk_context_row_length(const bk_context* ctx);

/* Fills lows[] and highs[] (each with capacity entries) with the tone row.
 * capacity must be at least the row length. */
bk_status bk_context_tone_row(const bk_context* ctx, uint32_t* lows, uint32_t* highs,
                              size_t capacity);

/* ---- emanation tables --------------------------------------------------- */

typedef struct bk_table bk_table;

bk_status bk_table_generate(const bk_context* ctx, bk_table** out);
void bk_table_destroy(bk_table* table);

size_t bk_table_size(const bk_table* table);
size_t bk_table_filled_count(const bk_table* table);

/* *out_filled is 0 for an empty cell, else 1 with *out_value = signed entry. */
bk_status bk_table_cell(const bk_table* table, size_t row, size_t col, int32_t* out_value,
                        int32_t* out_filled);

/* Delimited text; parse is its exact inverse. */
bk_status bk_table_to_csv(const bk_table* table, char** out_text);
bk_status bk_table_parse_csv(const char* text, bk_table** out);

/* Binary portable pixmap.  palette_text may be NULL for the default palette;
 * otherwise it holds key=R,G,B lines ("background", "diagonal", or a decimal
 * magnitude). */
bk_status bk_table_to_ppm(const bk_table* table, const char* palette_text, uint32_t cell_px,
                          unsigned char** out_bytes, size_t* out_len);

/* "N###S###.<extension>" */
bk_status bk_default_filename(const bk_context* ctx, const char* extension, char** out_text);

/* ---- censuses ----------------------------------------------------------- */

typedef struct bk_census bk_census;

/* Per-S fill counts and box-kite counts; 4 <= n <= 8. */
bk_status bk_census_run(uint32_t n, bk_census** out);
void bk_census_destroy(bk_census* census);

size_t bk_census_entry_count(const bk_census* census);
bk_status bk_census_entry(const bk_census* census, size_t i, uint32_t* out_s,
                          uint64_t* out_filled_cells, uint32_t* out_box_kites);
/* Pointer valid until the census is destroyed. */
const char* bk_census_range_class(const bk_census* census, size_t i);
uint64_t bk_census_total_box_kites(const bk_census* census);
bk_status bk_census_report(const bk_census* census, char** out_text);

/* ---- formatted reports for the CLI -------------------------------------- */

bk_status bk_tone_row_report(const bk_context* ctx, char** out_text);
bk_status bk_boxkites_report(const bk_context* ctx, char** out_text);
/* strut is "af", "be", or "cd" (case-insensitive). */
bk_status bk_twist_report(const bk_context* ctx, const char* strut, char** out_text);
/* kind is "sail", "trayrack", "quincunx", or "chain". */
bk_status bk_lanyards_report(const bk_context* ctx, const char* kind, char** out_text);

/* ---- verification -------------------------------------------------------- */

/* Runs the invariant suite for dimension exponent n; s = -1 sweeps every
 * strut constant.  *out_failures receives the number of failed checks. */
bk_status bk_verify(uint32_t n, int32_t s, char** out_report, uint32_t* out_failures);

#ifdef __cplusplus
}
#endif

#endif /* BOXKITE_H */
