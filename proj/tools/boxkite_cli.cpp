// Command-line surface over the boxkite C API: products, tone rows,
// emanation tables, censuses, box-kite reports, twists, lanyards, and the
// verification suite.  Exit codes: 0 success, 1 verification failure,
// 2 argument errors.
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "boxkite.h"

namespace {

struct StringDeleter {
  void operator()(char* p) const { bk_string_free(p); }
};
using ApiString = std::unique_ptr<char, StringDeleter>;

int report_error(bk_status status) {
  std::cerr << "error: " << bk_status_string(status);
  const char* detail = bk_last_error();
  if (detail && *detail) std::cerr << " (" << detail << ")";
  std::cerr << "\n";
  return status == BK_ERR_INVALID_ARGUMENT || status == BK_ERR_PARSE ? 2 : 1;
}

struct ContextDeleter {
  void operator()(bk_context* c) const { bk_context_destroy(c); }
};
using Context = std::unique_ptr<bk_context, ContextDeleter>;

Context open_context(uint32_t n, uint32_t s, int& exit_code) {
  bk_context* raw = nullptr;
  const bk_status status = bk_context_create(n, s, &raw);
  if (status != BK_OK) exit_code = report_error(status);
  return Context(raw);
}

int print_report(bk_status status, const ApiString& text) {
  if (status != BK_OK) return report_error(status);
  std::cout << text.get();
  return 0;
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

bool write_file(const std::string& path, const void* data, size_t len) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out.write(static_cast<const char*>(data), static_cast<std::streamsize>(len));
  return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cayley-Dickson zero-divisor structures: box-kites, twists, "
               "lanyards, and emanation-table sand mandalas"};
  app.require_subcommand(1);

  // The original interactive form defaulted to the 32-D level.
  uint32_t n = 5;
  uint32_t s = 1;

  auto* product = app.add_subcommand("product", "signed product of two basis units");
  uint32_t pi = 0, pj = 0;
  product->add_option("i", pi, "left unit index")->required();
  product->add_option("j", pj, "right unit index")->required();

  auto* tone = app.add_subcommand("tone-row", "assessor dyads for (N, S)");
  tone->add_option("--n", n, "dimension exponent");
  tone->add_option("--s", s, "strut constant");

  auto* table = app.add_subcommand("table", "emanation table for (N, S)");
  std::string csv_path, ppm_path, palette_path;
  uint32_t cell_px = 8;
  table->add_option("--n", n, "dimension exponent");
  table->add_option("--s", s, "strut constant");
  table->add_option("--csv", csv_path, "write delimited text to this path");
  table->add_option("--ppm", ppm_path, "write a binary pixmap to this path");
  table->add_option("--cell-px", cell_px, "pixels per cell in the pixmap");
  table->add_option("--palette", palette_path, "key=R,G,B palette file");

  auto* census = app.add_subcommand("census", "per-S fill counts and box-kite counts");
  census->add_option("--n", n, "dimension exponent");

  auto* kites = app.add_subcommand("boxkites", "sails, edge signs, struts, zigzag");
  kites->add_option("--n", n, "dimension exponent");
  kites->add_option("--s", s, "strut constant");

  auto* twist = app.add_subcommand("twist", "twist products for one tray-rack");
  std::string strut;
  twist->add_option("--n", n, "dimension exponent");
  twist->add_option("--s", s, "strut constant");
  twist->add_option("--strut", strut, "af, be, or cd")->required();

  auto* lanyards = app.add_subcommand("lanyards", "closed zero-divisor threads");
  std::string kind;
  lanyards->add_option("--n", n, "dimension exponent");
  lanyards->add_option("--s", s, "strut constant");
  lanyards->add_option("--kind", kind, "sail, trayrack, quincunx, or chain")->required();

  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  int32_t verify_s = -1;
  verify->add_option("--n", n, "dimension exponent");
  verify->add_option("--s", verify_s, "restrict to one strut constant");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  if (product->parsed()) {
    uint32_t index = 0;
    int32_t sign = 0;
    const bk_status status = bk_unit_product(pi, 1, pj, 1, &index, &sign);
    if (status != BK_OK) return report_error(status);
    std::cout << (sign < 0 ? '-' : '+') << index << "\n";
    return 0;
  }

  int exit_code = 0;

  if (tone->parsed()) {
    const Context ctx = open_context(n, s, exit_code);
    if (!ctx) return exit_code;
    char* text = nullptr;
    const bk_status status = bk_tone_row_report(ctx.get(), &text);
    return print_report(status, ApiString(text));
  }

  if (table->parsed()) {
    const Context ctx = open_context(n, s, exit_code);
    if (!ctx) return exit_code;
    bk_table* raw = nullptr;
    bk_status status = bk_table_generate(ctx.get(), &raw);
    if (status != BK_OK) return report_error(status);
    const std::unique_ptr<bk_table, decltype(&bk_table_destroy)> tab(raw, &bk_table_destroy);

    std::string palette_text;
    const char* palette_arg = nullptr;
    if (!palette_path.empty()) {
      if (!read_file(palette_path, palette_text)) {
        std::cerr << "error: cannot read palette file " << palette_path << "\n";
        return 2;
      }
      palette_arg = palette_text.c_str();
    }

    char* csv = nullptr;
    status = bk_table_to_csv(tab.get(), &csv);
    if (status != BK_OK) return report_error(status);
    const ApiString csv_text(csv);

    if (csv_path.empty() && ppm_path.empty()) {
      std::cout << csv_text.get();
      return 0;
    }
    if (!csv_path.empty() && !write_file(csv_path, csv_text.get(), std::strlen(csv_text.get()))) {
      std::cerr << "error: cannot write " << csv_path << "\n";
      return 2;
    }
    if (!ppm_path.empty()) {
      unsigned char* bytes = nullptr;
      size_t len = 0;
      status = bk_table_to_ppm(tab.get(), palette_arg, cell_px, &bytes, &len);
      if (status != BK_OK) return report_error(status);
      const bool ok = write_file(ppm_path, bytes, len);
      bk_bytes_free(bytes);
      if (!ok) {
        std::cerr << "error: cannot write " << ppm_path << "\n";
        return 2;
      }
    }
    std::cout << "wrote " << bk_table_filled_count(tab.get()) << " filled cells";
    if (!csv_path.empty()) std::cout << " -> " << csv_path;
    if (!ppm_path.empty()) std::cout << " -> " << ppm_path;
    std::cout << "\n";
    return 0;
  }

  if (census->parsed()) {
    bk_census* raw = nullptr;
    bk_status status = bk_census_run(n, &raw);
    if (status != BK_OK) return report_error(status);
    const std::unique_ptr<bk_census, decltype(&bk_census_destroy)> cs(raw, &bk_census_destroy);
    char* text = nullptr;
    status = bk_census_report(cs.get(), &text);
    return print_report(status, ApiString(text));
  }

  if (kites->parsed()) {
    const Context ctx = open_context(n, s, exit_code);
    if (!ctx) return exit_code;
    char* text = nullptr;
    const bk_status status = bk_boxkites_report(ctx.get(), &text);
    return print_report(status, ApiString(text));
  }

  if (twist->parsed()) {
    const Context ctx = open_context(n, s, exit_code);
    if (!ctx) return exit_code;
    char* text = nullptr;
    const bk_status status = bk_twist_report(ctx.get(), strut.c_str(), &text);
    return print_report(status, ApiString(text));
  }

  if (lanyards->parsed()) {
    const Context ctx = open_context(n, s, exit_code);
    if (!ctx) return exit_code;
    char* text = nullptr;
    const bk_status status = bk_lanyards_report(ctx.get(), kind.c_str(), &text);
    return print_report(status, ApiString(text));
  }

  if (verify->parsed()) {
    char* text = nullptr;
    uint32_t failures = 0;
    const bk_status status = bk_verify(n, verify_s, &text, &failures);
    if (status != BK_OK) return report_error(status);
    const ApiString report(text);
    std::cout << report.get();
    return failures ? 1 : 0;
  }

  return 2;
}
