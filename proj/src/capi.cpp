#include "boxkite.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "atlas.hpp"
#include "render.hpp"
#include "report.hpp"
#include "verify.hpp"

using namespace boxkite;

extern "C" {

struct bk_context {
  StrutContext ctx;
};

struct bk_table {
  EmanationTable table;
};

struct bk_census {
  CensusReport report;
};

}  // extern "C"

namespace {

thread_local std::string g_last_error;

bk_status fail(bk_status status, const char* what) {
  g_last_error = what;
  return status;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bk_status emit_string(const std::string& s, char** out) {
  if (!out) return fail(BK_ERR_INVALID_ARGUMENT, "null output pointer");
  *out = dup_string(s);
  return *out ? BK_OK : fail(BK_ERR_NOMEM, "string allocation failed");
}

template <typename Fn>
bk_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    return fail(BK_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(BK_ERR_NOMEM, "out of memory");
  } catch (const std::exception& e) {
    return fail(BK_ERR_INTERNAL, e.what());
  }
}

}  // namespace

extern "C" {

const char* bk_status_string(bk_status status) {
  switch (status) {
    case BK_OK: return "ok";
    case BK_ERR_INVALID_ARGUMENT: return "invalid argument";
    case BK_ERR_PARSE: return "parse error";
    case BK_ERR_NOMEM: return "out of memory";
    case BK_ERR_INTERNAL: return "internal consistency failure";
  }
  return "unknown status";
}

const char* bk_last_error(void) { return g_last_error.c_str(); }

void bk_string_free(char* text) { std::free(text); }
void bk_bytes_free(unsigned char* bytes) { std::free(bytes); }

bk_status bk_unit_product(uint32_t a_index, int32_t a_sign, uint32_t b_index, int32_t b_sign,
                          uint32_t* out_index, int32_t* out_sign) {
  if (!out_index || !out_sign || (a_sign != 1 && a_sign != -1) ||
      (b_sign != 1 && b_sign != -1))
    return fail(BK_ERR_INVALID_ARGUMENT, "signs must be +1 or -1 and outputs non-null");
  const SignedUnit u = unit_product({a_sign, a_index}, {b_sign, b_index});
  *out_index = u.index;
  *out_sign = u.sign;
  return BK_OK;
}

bk_status bk_context_create(uint32_t n, uint32_t s, bk_context** out) {
  if (!out) return fail(BK_ERR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] {
    *out = new bk_context{make_context(n, s)};
    return BK_OK;
  });
}

void bk_context_destroy(bk_context* ctx) { delete ctx; }

uint32_t bk_context_n(const bk_context* ctx) { return ctx ? ctx->ctx.n : 0; }
uint32_t bk_context_strut_constant(const bk_context* ctx) {
  return ctx ? ctx->ctx.strut_constant : 0;
}
uint32_t bk_context_generator(const bk_context* ctx) { return ctx ? ctx->ctx.generator : 0; }
uint32_t bk_context_strut_bound(const bk_context* ctx) { return ctx ? ctx->ctx.strut_bound : 0; }

size_t bk_context_row_length(const bk_context* ctx) { return ctx ? ctx->ctx.row_length() : 0; }

bk_status bk_context_tone_row(const bk_context* ctx, uint32_t* lows, uint32_t* highs,
                              size_t capacity) {
  if (!ctx || !lows || !highs) return fail(BK_ERR_INVALID_ARGUMENT, "null argument");
  if (capacity < ctx->ctx.row_length())
    return fail(BK_ERR_INVALID_ARGUMENT, "capacity below the tone-row length");
  return guarded([&] {
    const auto row = tone_row(ctx->ctx);
    for (std::size_t i = 0; i < row.size(); ++i) {
      lows[i] = row[i].low;
      highs[i] = row[i].high;
    }
    return BK_OK;
  });
}

bk_status bk_table_generate(const bk_context* ctx, bk_table** out) {
  if (!ctx || !out) return fail(BK_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new bk_table{generate_table(ctx->ctx)};
    return BK_OK;
  });
}

void bk_table_destroy(bk_table* table) { delete table; }

size_t bk_table_size(const bk_table* table) { return table ? table->table.size() : 0; }

size_t bk_table_filled_count(const bk_table* table) {
  return table ? table->table.filled_count() : 0;
}

bk_status bk_table_cell(const bk_table* table, size_t row, size_t col, int32_t* out_value,
                        int32_t* out_filled) {
  if (!table || !out_value || !out_filled)
    return fail(BK_ERR_INVALID_ARGUMENT, "null argument");
  if (row >= table->table.size() || col >= table->table.size())
    return fail(BK_ERR_INVALID_ARGUMENT, "cell coordinates out of range");
  const auto r = static_cast<std::uint32_t>(row);
  const auto c = static_cast<std::uint32_t>(col);
  *out_value = table->table.cell(r, c);
  *out_filled = table->table.filled(r, c) ? 1 : 0;
  return BK_OK;
}

bk_status bk_table_to_csv(const bk_table* table, char** out_text) {
  if (!table) return fail(BK_ERR_INVALID_ARGUMENT, "null table");
  return guarded([&] { return emit_string(to_delimited(table->table), out_text); });
}

bk_status bk_table_parse_csv(const char* text, bk_table** out) {
  if (!text || !out) return fail(BK_ERR_INVALID_ARGUMENT, "null argument");
  try {
    *out = new bk_table{parse_delimited(text)};
    return BK_OK;
  } catch (const std::bad_alloc&) {
    return fail(BK_ERR_NOMEM, "out of memory");
  } catch (const std::exception& e) {
    return fail(BK_ERR_PARSE, e.what());
  }
}

bk_status bk_table_to_ppm(const bk_table* table, const char* palette_text, uint32_t cell_px,
                          unsigned char** out_bytes, size_t* out_len) {
  if (!table || !out_bytes || !out_len) return fail(BK_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    Palette palette;
    if (palette_text) {
      try {
        palette = Palette::parse(palette_text);
      } catch (const std::exception& e) {
        return fail(BK_ERR_PARSE, e.what());
      }
    }
    const auto bytes = to_pixmap(table->table, palette, cell_px);
    auto* mem = static_cast<unsigned char*>(std::malloc(bytes.size()));
    if (!mem) return fail(BK_ERR_NOMEM, "pixmap allocation failed");
    std::memcpy(mem, bytes.data(), bytes.size());
    *out_bytes = mem;
    *out_len = bytes.size();
    return BK_OK;
  });
}

bk_status bk_default_filename(const bk_context* ctx, const char* extension, char** out_text) {
  if (!ctx || !extension) return fail(BK_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { return emit_string(default_filename(ctx->ctx, extension), out_text); });
}

bk_status bk_census_run(uint32_t n, bk_census** out) {
  if (!out) return fail(BK_ERR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] {
    *out = new bk_census{census(n)};
    return BK_OK;
  });
}

void bk_census_destroy(bk_census* c) { delete c; }

size_t bk_census_entry_count(const bk_census* c) { return c ? c->report.entries.size() : 0; }

bk_status bk_census_entry(const bk_census* c, size_t i, uint32_t* out_s,
                          uint64_t* out_filled_cells, uint32_t* out_box_kites) {
  if (!c || i >= c->report.entries.size())
    return fail(BK_ERR_INVALID_ARGUMENT, "bad census entry index");
  const CensusEntry& e = c->report.entries[i];
  if (out_s) *out_s = e.strut_constant;
  if (out_filled_cells) *out_filled_cells = e.filled_cells;
  if (out_box_kites) *out_box_kites = e.box_kites;
  return BK_OK;
}

const char* bk_census_range_class(const bk_census* c, size_t i) {
  if (!c || i >= c->report.entries.size()) return nullptr;
  return c->report.entries[i].range_class.c_str();
}

uint64_t bk_census_total_box_kites(const bk_census* c) {
  return c ? c->report.total_box_kites : 0;
}

bk_status bk_census_report(const bk_census* c, char** out_text) {
  if (!c) return fail(BK_ERR_INVALID_ARGUMENT, "null census");
  return guarded([&] { return emit_string(census_report(c->report), out_text); });
}

bk_status bk_tone_row_report(const bk_context* ctx, char** out_text) {
  if (!ctx) return fail(BK_ERR_INVALID_ARGUMENT, "null context");
  return guarded([&] { return emit_string(tone_row_report(ctx->ctx), out_text); });
}

bk_status bk_boxkites_report(const bk_context* ctx, char** out_text) {
  if (!ctx) return fail(BK_ERR_INVALID_ARGUMENT, "null context");
  return guarded([&] { return emit_string(boxkites_report(ctx->ctx), out_text); });
}

bk_status bk_twist_report(const bk_context* ctx, const char* strut, char** out_text) {
  if (!ctx || !strut) return fail(BK_ERR_INVALID_ARGUMENT, "null argument");
  const auto id = strut_from_name(strut);
  if (!id) return fail(BK_ERR_INVALID_ARGUMENT, "strut must be af, be, or cd");
  return guarded([&] { return emit_string(twist_report(ctx->ctx, *id), out_text); });
}

bk_status bk_lanyards_report(const bk_context* ctx, const char* kind, char** out_text) {
  if (!ctx || !kind) return fail(BK_ERR_INVALID_ARGUMENT, "null argument");
  const std::string name = kind;
  LanyardKind k;
  if (name == "sail") k = LanyardKind::sail_cycle;
  else if (name == "trayrack") k = LanyardKind::tray_rack_circuit;
  else if (name == "quincunx") k = LanyardKind::quincunx;
  else if (name == "chain") k = LanyardKind::bicycle_chain;
  else return fail(BK_ERR_INVALID_ARGUMENT, "kind must be sail, trayrack, quincunx, or chain");
  return guarded([&] { return emit_string(lanyards_report(ctx->ctx, k), out_text); });
}

bk_status bk_verify(uint32_t n, int32_t s, char** out_report, uint32_t* out_failures) {
  if (!out_failures) return fail(BK_ERR_INVALID_ARGUMENT, "null failure counter");
  return guarded([&] {
    const VerifyReport report = run_verification(n, s);
    *out_failures = static_cast<uint32_t>(report.failures);
    if (out_report) return emit_string(report.text(), out_report);
    return BK_OK;
  });
}

}  // extern "C"
