#include "report.hpp"

#include <algorithm>
#include <sstream>

namespace boxkite {

namespace {

std::string dyad(const Assessor& a) {
  std::ostringstream os;
  os << '(' << a.low << ',' << a.high << ')';
  return os.str();
}

std::string lanyard_text(const Lanyard& l) {
  std::ostringstream os;
  for (std::size_t i = 0; i < l.steps.size(); ++i) {
    if (i) os << ' ';
    os << kVertexNames[l.steps[i].vertex]
       << (l.steps[i].orientation == Orientation::slash ? '/' : '\\');
  }
  return os.str();
}

std::string kite_header(const BoxKite& bk, std::size_t index, std::size_t total) {
  std::ostringstream os;
  const StrutContext& ctx = bk.context();
  os << "box-kite " << index + 1 << " of " << total << "  (N=" << ctx.n
     << " S=" << ctx.strut_constant << " G=" << ctx.generator << " X=" << ctx.strut_bound
     << ")\n";
  os << "  vertices:";
  for (int v = 0; v < 6; ++v) os << ' ' << kVertexNames[v] << '=' << dyad(bk.vertex(v));
  os << '\n';
  return os.str();
}

}  // namespace

std::string tone_row_report(const StrutContext& ctx) {
  std::ostringstream os;
  os << "N " << ctx.n << "  S " << ctx.strut_constant << "  G " << ctx.generator << "  X "
     << ctx.strut_bound << "  K " << ctx.row_length() << '\n';
  const auto row = tone_row(ctx);
  for (std::size_t i = 0; i < row.size(); ++i)
    os << i + 1 << ": " << dyad(row[i]) << '\n';
  return os.str();
}

std::string boxkites_report(const StrutContext& ctx) {
  std::ostringstream os;
  const auto kites = assemble_boxkites(ctx);
  for (std::size_t i = 0; i < kites.size(); ++i) {
    const BoxKite& bk = kites[i];
    os << kite_header(bk, i, kites.size());
    os << "  struts:   AF BE CD\n";
    os << "  zigzag:   A B C  lows {" << bk.vertex(kA).low << ',' << bk.vertex(kB).low << ','
       << bk.vertex(kC).low << "}\n";
    os << "  sails:\n";
    for (const auto& s : classify_sails(bk)) {
      os << "    ";
      for (int v : s.vertices) os << kVertexNames[v];
      os << (s.kind == SailKind::zigzag ? " zigzag " : " trefoil");
      for (int e = 0; e < 3; ++e)
        os << ' ' << kVertexNames[s.vertices[static_cast<std::size_t>(e)]]
           << kVertexNames[s.vertices[static_cast<std::size_t>((e + 1) % 3)]]
           << edge_sign_char(s.edge_signs[static_cast<std::size_t>(e)]);
      os << '\n';
    }
    os << "  edges:   ";
    for (int p = 0; p < 6; ++p)
      for (int q = p + 1; q < 6; ++q)
        if (bk.is_edge(p, q))
          os << ' ' << kVertexNames[p] << kVertexNames[q]
             << edge_sign_char(bk.edge_sign(p, q));
    os << '\n';
  }
  const std::size_t cells = generate_table(ctx).filled_count();
  os << "box-kites: " << kites.size() << "  filled cells: " << cells << '\n';
  return os.str();
}

std::string twist_report(const StrutContext& ctx, Strut strut) {
  std::ostringstream os;
  const auto kites = assemble_boxkites(ctx);
  for (std::size_t i = 0; i < kites.size(); ++i) {
    const BoxKite& bk = kites[i];
    os << kite_header(bk, i, kites.size());
    const auto racks = tray_racks(bk);
    const TrayRack& tr = racks[static_cast<std::size_t>(strut)];
    const RoyalHunt rh = royal_hunt(bk, tr);
    os << "  tray-rack " << strut_name(strut) << "  royal hunt:";
    for (int v : rh.order) os << ' ' << kVertexNames[v];
    os << "  reversed edge " << kVertexNames[rh.reversed_edge.first]
       << kVertexNames[rh.reversed_edge.second] << '\n';

    auto line = [&](const char* pos, std::pair<int, int> e, TwistMode mode) {
      const TwistResult t = twist(bk, e.first, e.second, mode);
      os << "  " << pos << ' ' << kVertexNames[e.first] << kVertexNames[e.second]
         << edge_sign_char(t.source_sign) << " swaps " << (t.swapped_lows ? "lows " : "highs")
         << " -> S=" << t.target_strut_constant << " edge " << dyad(t.twisted_first) << 'x'
         << dyad(t.twisted_second) << edge_sign_char(t.twisted_sign) << '\n';
    };
    line("top   ", rh.top(), TwistMode::horizontal);
    line("bottom", rh.bottom(), TwistMode::horizontal);
    line("left  ", rh.left(), TwistMode::vertical);
    line("right ", rh.right(), TwistMode::vertical);

    const auto& pair = kStrutPairs[static_cast<std::size_t>(strut)];
    const std::uint32_t h = bk.vertex(pair.second).low;
    const std::uint32_t v = bk.vertex(pair.first).low;
    std::array<std::uint32_t, 3> idx = {ctx.strut_constant, h, v};
    std::sort(idx.begin(), idx.end());
    const bool fwd = unit_sign(idx[0], idx[1]) > 0;
    os << "  H* -> S=" << h << "  V* -> S=" << v << "  s-triple (" << idx[0] << ','
       << (fwd ? idx[1] : idx[2]) << ',' << (fwd ? idx[2] : idx[1]) << ")\n";
  }
  return os.str();
}

std::string lanyards_report(const StrutContext& ctx, LanyardKind kind) {
  static const char* names[] = {"sail-cycle", "tray-rack-circuit", "quincunx", "bicycle-chain"};
  std::ostringstream os;
  const auto kites = assemble_boxkites(ctx);
  for (std::size_t i = 0; i < kites.size(); ++i) {
    const BoxKite& bk = kites[i];
    os << kite_header(bk, i, kites.size());
    const auto found = find_lanyards(bk, kind);
    os << "  " << names[static_cast<int>(kind)] << " lanyards: " << found.size() << '\n';
    for (std::size_t j = 0; j < found.size(); ++j)
      os << "    " << j + 1 << ": " << lanyard_text(found[j]) << '\n';
  }
  return os.str();
}

std::string census_report(const CensusReport& report) {
  std::ostringstream os;
  os << "census N=" << report.n << " (dimension " << (1u << report.n) << ")\n";
  for (const auto& e : report.entries)
    os << "S=" << e.strut_constant << "  cells=" << e.filled_cells
       << "  box-kites=" << e.box_kites << "  range=" << e.range_class << '\n';
  os << "total box-kites: " << report.total_box_kites << '\n';
  return os.str();
}

}  // namespace boxkite
