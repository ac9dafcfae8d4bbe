#include <doctest.h>

#include <string>

#include "render.hpp"
#include "test_util.hpp"

using namespace boxkite;

TEST_CASE("delimited header and strut-opposite gaps") {
  const EmanationTable t = generate_table(make_context(4, 1));
  const std::string csv = to_delimited(t);
  const std::string header = csv.substr(0, csv.find('\n'));
  CHECK(header == ",2,4,6,7,5,3");

  // row for low 2: its strut opposite (low 3) heads the last column, so the
  // final field is empty and the line ends in a comma
  const auto second_line_start = csv.find('\n') + 1;
  const std::string row2 = csv.substr(second_line_start,
                                      csv.find('\n', second_line_start) - second_line_start);
  CHECK(row2.front() == '2');
  CHECK(row2.back() == ',');
  CHECK(row2[2] == ',');  // first cell (own diagonal) empty: "2,,..."
}

TEST_CASE("golden dump of the S=1 sedenion table") {
  // Hexagon edges (one low under G XOR-distance from a zigzag low) carry "+"
  // entries, zigzag and vent edges carry "-", strut opposites and the
  // self-diagonal stay empty.
  const char* golden =
      ",2,4,6,7,5,3\n"
      "2,,-6,4,-5,7,\n"
      "4,-6,,2,-3,,7\n"
      "6,4,2,,,-3,-5\n"
      "7,-5,-3,,,2,4\n"
      "5,7,,-3,2,,-6\n"
      "3,,7,-5,4,-6,\n";
  CHECK(to_delimited(generate_table(make_context(4, 1))) == golden);
}

TEST_CASE("round-trips are byte-identical") {
  for (const auto& [n, s] : {std::pair{4u, 1u}, {4u, 7u}, {5u, 3u}, {5u, 9u}, {5u, 15u},
                             {6u, 24u}}) {
    const EmanationTable t = generate_table(make_context(n, s));
    const std::string csv = to_delimited(t);
    const EmanationTable parsed = parse_delimited(csv);
    REQUIRE(parsed == t);
    REQUIRE(to_delimited(parsed) == csv);
  }
}

TEST_CASE("malformed text is rejected") {
  CHECK(testutil::throws_invalid_argument([] { parse_delimited("garbage"); }));
  CHECK(testutil::throws_invalid_argument([] { parse_delimited(",2,4,6\n"); }));
  const std::string csv = to_delimited(generate_table(make_context(4, 1)));
  std::string truncated = csv.substr(0, csv.size() - 20);
  CHECK(testutil::throws_invalid_argument([&] { parse_delimited(truncated); }));
}

TEST_CASE("pixmap geometry and pixel counts") {
  const EmanationTable t = generate_table(make_context(4, 1));
  const Palette palette;

  const auto img = to_pixmap(t, palette, 1);
  const std::string head = "P6\n6 6\n255\n";
  REQUIRE(img.size() == head.size() + 6 * 6 * 3);
  CHECK(std::string(img.begin(), img.begin() + static_cast<long>(head.size())) == head);
  std::size_t non_background = 0;
  for (std::size_t px = 0; px < 36; ++px) {
    const std::size_t at = head.size() + px * 3;
    if (img[at] != 255 || img[at + 1] != 255 || img[at + 2] != 255) ++non_background;
  }
  CHECK(non_background == 24);

  const auto img4 = to_pixmap(t, palette, 4);
  const std::string head4 = "P6\n24 24\n255\n";
  REQUIRE(img4.size() == head4.size() + 24 * 24 * 3);
  std::size_t scaled = 0;
  for (std::size_t px = 0; px < 24 * 24; ++px) {
    const std::size_t at = head4.size() + px * 3;
    if (img4[at] != 255 || img4[at + 1] != 255 || img4[at + 2] != 255) ++scaled;
  }
  CHECK(scaled == 24 * 16);  // filled cells times cell_px squared

  // deterministic
  CHECK(to_pixmap(t, palette, 4) == img4);
  CHECK(testutil::throws_invalid_argument([&] { to_pixmap(t, palette, 0); }));
}

TEST_CASE("palette files") {
  const Palette p = Palette::parse(
      "# comment\n"
      "background=0,0,0\n"
      "diagonal=10,20,30\n"
      "7=100,110,120\n");
  CHECK(p.background() == Rgb{0, 0, 0});
  CHECK(p.diagonal() == Rgb{10, 20, 30});
  CHECK(p.color(4, 7, true) == Rgb{100, 110, 120});
  CHECK(p.color(4, 7, false) != Rgb{100, 110, 120});  // minus cells step down

  const Palette def;
  CHECK(def.color(4, 3, true) != def.color(4, 5, true));
  CHECK(def.color(4, 3, true) != def.color(4, 3, false));

  CHECK(testutil::throws_invalid_argument([] { Palette::parse("background=1,2\n"); }));
  CHECK(testutil::throws_invalid_argument([] { Palette::parse("nonsense\n"); }));
}

TEST_CASE("default filenames") {
  CHECK(default_filename(make_context(5, 9), "csv") == "N005S009.csv");
  CHECK(default_filename(make_context(16, 100), "csv") == "N016S100.csv");
  CHECK(default_filename(make_context(4, 1), "ppm") == "N004S001.ppm");
}
