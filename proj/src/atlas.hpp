#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "topology.hpp"

// Emanation tables and their censuses: the K x K zero-divisor analogue of a
// Cayley table for one (N, S), plus the cross-(N, S) fill counts and the
// period-doubling comparisons between scales.
namespace boxkite {

/// K x K grid of optional signed emanation entries over the tone row.
/// cell = edge sign times the low index of the emanated assessor; 0 = empty.
class EmanationTable {
 public:
  EmanationTable(StrutContext ctx, std::vector<Assessor> row_order,
                 std::vector<int> cells);

  const StrutContext& context() const { return ctx_; }
  const std::vector<Assessor>& row_order() const { return row_; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(row_.size()); }

  bool filled(std::uint32_t r, std::uint32_t c) const { return at(r, c) != 0; }
  int cell(std::uint32_t r, std::uint32_t c) const { return at(r, c); }
  std::size_t filled_count() const;

  friend bool operator==(const EmanationTable&, const EmanationTable&) = default;

 private:
  int at(std::uint32_t r, std::uint32_t c) const {
    return cells_[static_cast<std::size_t>(r) * row_.size() + c];
  }
  StrutContext ctx_;
  std::vector<Assessor> row_;
  std::vector<int> cells_;
};

/// Fills every cell from emanation_of over the tone-row ordering; the two
/// long diagonals (self and mirror slots) stay empty.
EmanationTable generate_table(const StrutContext& ctx);

struct CensusEntry {
  std::uint32_t strut_constant = 0;
  std::uint64_t filled_cells = 0;
  std::uint32_t box_kites = 0;       // filled / 24, cross-checked structurally
  std::string range_class;           // "full" or an overflow band label
};

struct CensusReport {
  std::uint32_t n = 0;
  std::vector<CensusEntry> entries;  // S = 1 .. G-1 in order
  std::uint64_t total_box_kites = 0;
};

/// Per-S fill counts and box-kite counts for 4 <= N <= 8.  Throws
/// std::logic_error when the cell count and the structural box-kite census
/// disagree.
CensusReport census(std::uint32_t n);

/// "full" when S <= 8 or S is a power of two, else the (8k, 8k+8] band.
std::string range_class(std::uint32_t s);

/// Centered size x size sub-grid; size must match the table parity.
struct CentralBlock {
  std::uint32_t size = 0;
  std::vector<int> cells;  // row-major, 0 = empty

  int cell(std::uint32_t r, std::uint32_t c) const {
    return cells[static_cast<std::size_t>(r) * size + c];
  }
  bool empty() const {
    for (int v : cells)
      if (v != 0) return false;
    return true;
  }
};

CentralBlock central_block(const EmanationTable& t, std::uint32_t size);

/// Diagnostic block comparison between two scales; a report, not a gate.
struct SimilarityReport {
  std::string source_id;               // e.g. "N004S007"
  std::string target_id;
  std::string mapping;                 // which block mapping was applied
  std::uint64_t compared = 0;
  std::uint64_t matched = 0;           // emptiness / magnitude correspondence; includes refills
  std::uint64_t refilled = 0;          // coarse-empty cells taking G or X entries
  std::uint64_t mismatched = 0;        // matched + mismatched == compared
  double match_ratio = 0.0;            // matched / compared
  struct Residue {
    std::uint32_t row, col;            // fine-table coordinates
    int coarse_value, fine_value;
  };
  std::vector<Residue> residues;       // the mismatched cells
  std::string text() const;
};

/// Same dimensions: plain cell-by-cell comparison.  One doubling step apart:
/// the fine table's corner quadrants against the coarse quadrants under
/// index augmentation by the coarse generator, with coarse-empty cells taken
/// by G or X counted as diagonal refills.
SimilarityReport self_similarity_report(const EmanationTable& coarse,
                                        const EmanationTable& fine);

/// The seven overflow tables of the 32-D level, S = 9..15.
std::vector<EmanationTable> flip_book();

}  // namespace boxkite
