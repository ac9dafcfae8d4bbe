#include <doctest.h>

#include <set>

#include "atlas.hpp"
#include "test_util.hpp"

using namespace boxkite;

TEST_CASE("table generation pinned counts") {
  const EmanationTable t1 = generate_table(make_context(4, 1));
  CHECK(t1.filled_count() == 24);

  const EmanationTable t9 = generate_table(make_context(5, 9));
  CHECK(t9.filled_count() == 72);

  // cell addressed by row low 4, column low 2: tone row [2,4,6,7,5,3]
  CHECK(t1.row_order()[1].low == 4);
  CHECK(t1.row_order()[0].low == 2);
  CHECK(t1.cell(1, 0) == -6);  // magnitude 4 XOR 2, vent-edge sign

  // determinism
  CHECK(generate_table(make_context(4, 1)) == t1);
}

TEST_CASE("table structure for every context through the chingons") {
  for (std::uint32_t n = 4; n <= 6; ++n) {
    const std::uint32_t g = 1u << (n - 1);
    for (std::uint32_t s = 1; s < g; ++s) {
      const EmanationTable t = generate_table(make_context(n, s));
      const std::uint32_t k = t.size();
      REQUIRE(k == g - 2);
      for (std::uint32_t r = 0; r < k; ++r) {
        REQUIRE(!t.filled(r, r));
        REQUIRE(!t.filled(r, k - 1 - r));
      }
      REQUIRE(t.filled_count() % 24 == 0);
      for (std::uint32_t r = 0; r < k; ++r)
        for (std::uint32_t c = 0; c < k; ++c) {
          REQUIRE(t.filled(r, c) == t.filled(c, r));
          if (!t.filled(r, c)) continue;
          const int v = t.cell(r, c);
          const std::uint32_t mag = static_cast<std::uint32_t>(v < 0 ? -v : v);
          REQUIRE(mag == (t.row_order()[r].low ^ t.row_order()[c].low));
          REQUIRE(mag == static_cast<std::uint32_t>(
                             t.cell(c, r) < 0 ? -t.cell(c, r) : t.cell(c, r)));
        }
    }
  }
}

TEST_CASE("census of the sedenions") {
  const CensusReport rep = census(4);
  REQUIRE(rep.entries.size() == 7);
  for (const auto& e : rep.entries) {
    CHECK(e.filled_cells == 24);
    CHECK(e.box_kites == 1);
    CHECK(e.range_class == "full");
  }
  CHECK(rep.total_box_kites == 7);
}

TEST_CASE("census of the pathions") {
  const CensusReport rep = census(5);
  REQUIRE(rep.entries.size() == 15);
  for (const auto& e : rep.entries) {
    if (e.strut_constant <= 8) {
      CHECK(e.filled_cells == 168);
      CHECK(e.box_kites == 7);
      CHECK(e.range_class == "full");
    } else {
      CHECK(e.filled_cells == 72);
      CHECK(e.box_kites == 3);
      CHECK(e.range_class == "overflow(8,16]");
    }
  }
  CHECK(rep.total_box_kites == 77);
}

TEST_CASE("census of the chingons") {
  const CensusReport rep = census(6);
  REQUIRE(rep.entries.size() == 31);
  for (const auto& e : rep.entries) {
    const std::uint32_t s = e.strut_constant;
    std::uint32_t want = 0;
    if (s <= 8 || s == 16) want = 35;       // powers of two are exempt from overflow
    else if (s < 16) want = 19;
    else if (s <= 24) want = 7;
    else want = 23;
    CHECK(e.box_kites == want);
    CHECK(e.filled_cells == want * 24u);
  }
}

TEST_CASE("ensembles at the 128-D and 256-D levels, non-overflow range") {
  const CensusReport rep7 = census(7);
  const CensusReport rep8 = census(8);
  for (std::uint32_t s = 1; s <= 8; ++s) {
    CHECK(rep7.entries[s - 1].box_kites == 155);
    CHECK(rep8.entries[s - 1].box_kites == 651);
  }
  CHECK(rep7.entries[0].filled_cells == 3720);   // 62^2 - 2*62
  CHECK(rep8.entries[0].filled_cells == 15624);  // 126^2 - 2*126
}

TEST_CASE("range classification") {
  CHECK(range_class(1) == "full");
  CHECK(range_class(8) == "full");
  CHECK(range_class(16) == "full");
  CHECK(range_class(32) == "full");
  CHECK(range_class(9) == "overflow(8,16]");
  CHECK(range_class(15) == "overflow(8,16]");
  CHECK(range_class(17) == "overflow(16,24]");
  CHECK(range_class(24) == "overflow(16,24]");
  CHECK(range_class(25) == "overflow(24,32]");
  CHECK(range_class(31) == "overflow(24,32]");
}

TEST_CASE("central blocks") {
  const EmanationTable t24 = generate_table(make_context(6, 24));
  CHECK(central_block(t24, 14).empty());

  const EmanationTable t17 = generate_table(make_context(6, 17));
  CHECK(!central_block(t17, 14).empty());

  const EmanationTable t1 = generate_table(make_context(4, 1));
  const CentralBlock whole = central_block(t1, t1.size());
  for (std::uint32_t r = 0; r < t1.size(); ++r)
    for (std::uint32_t c = 0; c < t1.size(); ++c)
      CHECK(whole.cell(r, c) == t1.cell(r, c));

  CHECK(testutil::throws_invalid_argument([&] { central_block(t1, 3); }));
  CHECK(testutil::throws_invalid_argument([&] { central_block(t1, 8); }));
}

TEST_CASE("flip book") {
  const auto book = flip_book();
  REQUIRE(book.size() == 7);
  for (const auto& t : book) {
    CHECK(t.filled_count() == 72);
    CHECK(assemble_boxkites(t.context()).size() == 3);
  }
  for (std::size_t i = 0; i < book.size(); ++i)
    for (std::size_t j = i + 1; j < book.size(); ++j) {
      bool differ = false;
      for (std::uint32_t r = 0; r < 14 && !differ; ++r)
        for (std::uint32_t c = 0; c < 14 && !differ; ++c)
          differ = book[i].cell(r, c) != book[j].cell(r, c);
      CHECK(differ);
    }
}

TEST_CASE("self-similarity reports") {
  const EmanationTable sed7 = generate_table(make_context(4, 7));
  const EmanationTable path15 = generate_table(make_context(5, 15));
  const EmanationTable ching15 = generate_table(make_context(6, 15));

  const SimilarityReport identity = self_similarity_report(sed7, sed7);
  CHECK(identity.match_ratio == 1.0);
  CHECK(identity.mismatched == 0);

  const SimilarityReport up1 = self_similarity_report(sed7, path15);
  CHECK(up1.source_id == "N004S007");
  CHECK(up1.target_id == "N005S015");
  CHECK(up1.compared == 36);  // four 3x3 corner quadrants
  CHECK(up1.matched + up1.mismatched == up1.compared);
  CHECK(up1.match_ratio == doctest::Approx(12.0 / 36.0));

  const SimilarityReport up2 = self_similarity_report(path15, ching15);
  CHECK(up2.compared == 196);  // four 7x7 corner quadrants
  CHECK(up2.matched == 124);
  CHECK(up2.matched + up2.mismatched == up2.compared);
  CHECK(up2.residues.size() == up2.mismatched);

  CHECK(testutil::throws_invalid_argument(
      [&] { self_similarity_report(sed7, ching15); }));
}
