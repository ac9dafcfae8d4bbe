#include "atlas.hpp"

#include <bit>
#include <cstdio>
#include <future>
#include <sstream>
#include <stdexcept>

namespace boxkite {

EmanationTable::EmanationTable(StrutContext ctx, std::vector<Assessor> row_order,
                               std::vector<int> cells)
    : ctx_(ctx), row_(std::move(row_order)), cells_(std::move(cells)) {
  if (row_.size() != ctx_.row_length() || cells_.size() != row_.size() * row_.size())
    throw std::invalid_argument("table shape does not match the context");
}

std::size_t EmanationTable::filled_count() const {
  std::size_t n = 0;
  for (int v : cells_) n += v != 0;
  return n;
}

EmanationTable generate_table(const StrutContext& ctx) {
  const std::vector<Assessor> row = tone_row(ctx);
  const std::size_t k = row.size();
  std::vector<int> cells(k * k, 0);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) {
      if (c == r || c == k - 1 - r) continue;  // the empty X
      const auto em = emanation_of(ctx, row[r], row[c]);
      if (em) cells[r * k + c] = em->sign * static_cast<int>(em->index);
    }
  }
  return EmanationTable(ctx, std::move(row), std::move(cells));
}

std::string range_class(std::uint32_t s) {
  if (s <= 8 || std::has_single_bit(s)) return "full";
  const std::uint32_t lo = ((s - 1) / 8) * 8;
  std::ostringstream os;
  os << "overflow(" << lo << "," << lo + 8 << "]";
  return os.str();
}

CensusReport census(std::uint32_t n) {
  if (n < 4 || n > 8) throw std::invalid_argument("census covers 4 <= N <= 8");
  CensusReport report;
  report.n = n;
  const std::uint32_t g = 1u << (n - 1);

  auto survey = [n](std::uint32_t s) {
    const StrutContext ctx = make_context(n, s);
    const EmanationTable t = generate_table(ctx);
    const auto kites = assemble_boxkites(ctx);
    CensusEntry e;
    e.strut_constant = s;
    e.filled_cells = t.filled_count();
    if (e.filled_cells % 24 != 0)
      throw std::logic_error("filled-cell count is not a multiple of 24");
    e.box_kites = static_cast<std::uint32_t>(e.filled_cells / 24);
    if (e.box_kites != kites.size())
      throw std::logic_error("cell count and structural box-kite census disagree");
    e.range_class = range_class(s);
    return e;
  };

  std::vector<std::future<CensusEntry>> jobs;
  for (std::uint32_t s = 1; s < g; ++s)
    jobs.push_back(std::async(std::launch::async, survey, s));
  for (auto& j : jobs) {
    report.entries.push_back(j.get());
    report.total_box_kites += report.entries.back().box_kites;
  }
  return report;
}

CentralBlock central_block(const EmanationTable& t, std::uint32_t size) {
  const std::uint32_t k = t.size();
  if (size > k || (size % 2) != (k % 2))
    throw std::invalid_argument("block size must fit the table and match its parity");
  const std::uint32_t off = (k - size) / 2;
  CentralBlock b;
  b.size = size;
  b.cells.resize(static_cast<std::size_t>(size) * size);
  for (std::uint32_t r = 0; r < size; ++r)
    for (std::uint32_t c = 0; c < size; ++c)
      b.cells[static_cast<std::size_t>(r) * size + c] = t.cell(off + r, off + c);
  return b;
}

std::string SimilarityReport::text() const {
  std::ostringstream os;
  os << source_id << " -> " << target_id << "  mapping: " << mapping << "\n"
     << "compared: " << compared << "  matched: " << matched << " (of which refilled: "
     << refilled << ")  mismatched: " << mismatched << "\n"
     << "match ratio: " << match_ratio << "\n";
  for (const auto& r : residues)
    os << "residue at (" << r.row << "," << r.col << "): coarse " << r.coarse_value
       << " fine " << r.fine_value << "\n";
  return os.str();
}

SimilarityReport self_similarity_report(const EmanationTable& coarse,
                                        const EmanationTable& fine) {
  SimilarityReport rep;
  char id[12];
  std::snprintf(id, sizeof id, "N%03uS%03u", coarse.context().n,
                coarse.context().strut_constant);
  rep.source_id = id;
  std::snprintf(id, sizeof id, "N%03uS%03u", fine.context().n, fine.context().strut_constant);
  rep.target_id = id;
  const std::uint32_t kc = coarse.size();
  const std::uint32_t kf = fine.size();

  // Refills (coarse-empty cells taken by G or X) count as matches: the
  // coarse-to-fine mapping expects the diagonal stretches to fill in.
  auto tally = [&](std::uint32_t fr, std::uint32_t fc, int cv, int fv, std::uint32_t aug,
                   std::uint32_t xc) {
    ++rep.compared;
    const std::uint32_t cm = static_cast<std::uint32_t>(cv < 0 ? -cv : cv);
    const std::uint32_t fm = static_cast<std::uint32_t>(fv < 0 ? -fv : fv);
    if (cv == 0 && fv == 0) {
      ++rep.matched;
    } else if (cv == 0 && aug != 0 && (fm == aug || fm == xc)) {
      ++rep.matched;
      ++rep.refilled;
    } else if (cv != 0 && fv != 0 && fm == cm + aug) {
      ++rep.matched;
    } else {
      ++rep.mismatched;
      rep.residues.push_back({fr, fc, cv, fv});
    }
  };

  if (coarse.context().n == fine.context().n) {
    rep.mapping = "identity";
    for (std::uint32_t r = 0; r < kc; ++r)
      for (std::uint32_t c = 0; c < kc; ++c) tally(r, c, coarse.cell(r, c), fine.cell(r, c), 0, 0);
  } else if (fine.context().n == coarse.context().n + 1) {
    rep.mapping = "corner quadrants, indices augmented by the coarse generator";
    const std::uint32_t q = kc / 2;
    const std::uint32_t aug = coarse.context().generator;
    const std::uint32_t xc = coarse.context().strut_bound;
    const std::uint32_t corners[4][4] = {
        // coarse quadrant origin, fine corner origin
        {0, 0, 0, 0},
        {0, q, 0, kf - q},
        {q, 0, kf - q, 0},
        {q, q, kf - q, kf - q},
    };
    for (const auto& m : corners)
      for (std::uint32_t r = 0; r < q; ++r)
        for (std::uint32_t c = 0; c < q; ++c)
          tally(m[2] + r, m[3] + c, coarse.cell(m[0] + r, m[1] + c),
                fine.cell(m[2] + r, m[3] + c), aug, xc);
  } else {
    throw std::invalid_argument("tables must share N or sit one doubling apart");
  }
  rep.match_ratio =
      rep.compared ? static_cast<double>(rep.matched) / static_cast<double>(rep.compared) : 0.0;
  return rep;
}

std::vector<EmanationTable> flip_book() {
  std::vector<EmanationTable> out;
  for (std::uint32_t s = 9; s <= 15; ++s) out.push_back(generate_table(make_context(5, s)));
  return out;
}

}  // namespace boxkite
