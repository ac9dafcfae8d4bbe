#include "topology.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace boxkite {

namespace {

constexpr std::array<int, 6> kOpposite = {kF, kE, kD, kC, kB, kA};

// Hexagon of "+" edges in counterclockwise tracing order.
constexpr std::array<int, 6> kHexagonCcw = {kA, kD, kB, kF, kC, kE};

// Tray-rack squares complementary to AF, BE, CD.
constexpr std::array<std::array<int, 4>, 3> kSquares = {
    std::array<int, 4>{kB, kC, kE, kD},
    std::array<int, 4>{kA, kC, kF, kD},
    std::array<int, 4>{kA, kB, kF, kE}};

bool is_strut_pair(int p, int q) { return kOpposite[static_cast<std::size_t>(p)] == q; }

AssociativeTriplet triplet_from_indices(std::array<std::uint32_t, 3> idx) {
  std::sort(idx.begin(), idx.end());
  if ((idx[0] ^ idx[1]) != idx[2]) throw std::logic_error("triple is not XOR-closed");
  AssociativeTriplet t;
  t.indices = idx;
  if (unit_sign(idx[0], idx[1]) > 0) {
    t.oriented = idx;
    t.counting_order_consistent = true;
  } else {
    t.oriented = {idx[0], idx[2], idx[1]};
    t.counting_order_consistent = false;
  }
  return t;
}

int diagonal_node(int vertex, Orientation o) {
  return vertex * 2 + (o == Orientation::backslash ? 1 : 0);
}

LanyardStep node_step(int node) {
  return LanyardStep{node / 2, node % 2 ? Orientation::backslash : Orientation::slash};
}

}  // namespace

BoxKite::BoxKite(StrutContext ctx, const std::array<Assessor, 6>& vertices)
    : ctx_(ctx), vertices_(vertices) {
  for (const auto& [p, q] : kStrutPairs) {
    const auto& zig = vertices_[static_cast<std::size_t>(p)];
    const auto& vent = vertices_[static_cast<std::size_t>(q)];
    if (!valid_assessor(ctx_, zig) || !valid_assessor(ctx_, vent) ||
        vent.low != (zig.low ^ ctx_.strut_constant))
      throw std::invalid_argument("vertices do not pair into struts");
  }
  int minus = 0, plus = 0;
  for (int p = 0; p < 6; ++p) {
    for (int q = 0; q < 6; ++q) {
      if (p == q || is_strut_pair(p, q)) continue;
      const auto sign = mutual_zd_edge(ctx_, vertices_[static_cast<std::size_t>(p)],
                                       vertices_[static_cast<std::size_t>(q)]);
      if (!sign) throw std::invalid_argument("octahedron edge missing");
      edge_[p][q] = edge_sign_value(*sign);
      if (p < q) (*sign == EdgeSign::minus ? minus : plus) += 1;
    }
  }
  if (minus != 6 || plus != 6) throw std::invalid_argument("edge-sign census is not 6/6");
  const std::uint32_t a = vertices_[kA].low, b = vertices_[kB].low, c = vertices_[kC].low;
  if ((a ^ b) != c) throw std::invalid_argument("zigzag lows are not XOR-closed");
  if (edge_[kA][kB] != -1 || edge_[kB][kC] != -1 || edge_[kC][kA] != -1)
    throw std::invalid_argument("zigzag face is not all-minus");
  if (a > b || a > c || unit_sign(a, b) < 0)
    throw std::invalid_argument("zigzag letters violate the sign-order convention");
}

EdgeSign BoxKite::edge_sign(int p, int q) const {
  const int v = edge_[p][q];
  if (v == 0) throw std::invalid_argument("no edge between the given vertices");
  return v > 0 ? EdgeSign::plus : EdgeSign::minus;
}

int BoxKite::find_low(std::uint32_t low) const {
  for (int v = 0; v < 6; ++v)
    if (vertices_[static_cast<std::size_t>(v)].low == low) return v;
  return -1;
}

ZdGraph build_zd_graph(const StrutContext& ctx) {
  ZdGraph g;
  g.row = tone_row(ctx);
  const std::size_t k = g.row.size();
  g.edge.assign(k, std::vector<int>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const auto sign = mutual_zd_edge(ctx, g.row[i], g.row[j]);
      if (!sign) continue;
      g.edge[i][j] = g.edge[j][i] = edge_sign_value(*sign);
      ++g.edge_count;
    }
  }
  return g;
}

std::vector<BoxKite> assemble_boxkites(const StrutContext& ctx) {
  const ZdGraph g = build_zd_graph(ctx);
  const std::size_t k = g.row.size();
  std::map<std::uint32_t, std::size_t> pos;
  for (std::size_t i = 0; i < k; ++i) pos[g.row[i].low] = i;

  // Sails: XOR-closed low triples whose three pairwise edges all exist.
  std::set<std::array<std::uint32_t, 3>> sails;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (g.edge[i][j] == 0) continue;
      const std::uint32_t third = g.row[i].low ^ g.row[j].low;
      const auto it = pos.find(third);
      if (it == pos.end()) continue;
      const std::size_t m = it->second;
      if (g.edge[i][m] == 0 || g.edge[j][m] == 0) continue;
      std::array<std::uint32_t, 3> key = {g.row[i].low, g.row[j].low, third};
      std::sort(key.begin(), key.end());
      sails.insert(key);
    }
  }

  // Each sail plus its strut opposites seeds one box-kite candidate.
  std::set<std::array<std::uint32_t, 6>> candidates;
  for (const auto& s : sails) {
    std::array<std::uint32_t, 6> lows = {s[0], s[1], s[2], s[0] ^ ctx.strut_constant,
                                         s[1] ^ ctx.strut_constant, s[2] ^ ctx.strut_constant};
    std::sort(lows.begin(), lows.end());
    candidates.insert(lows);
  }

  std::vector<BoxKite> out;
  for (const auto& lows : candidates) {
    // Zigzag: the unique XOR-closed triple among the six lows that carries
    // three "-" edges.
    std::array<std::uint32_t, 3> zig{};
    bool found = false;
    for (std::size_t i = 0; i < 6 && !found; ++i) {
      for (std::size_t j = i + 1; j < 6 && !found; ++j) {
        const std::uint32_t third = lows[i] ^ lows[j];
        if (third == ctx.strut_constant) continue;
        if (!std::binary_search(lows.begin(), lows.end(), third) || third <= lows[j]) continue;
        const std::size_t pi = pos.at(lows[i]), pj = pos.at(lows[j]), pm = pos.at(third);
        if (g.edge[pi][pj] == -1 && g.edge[pi][pm] == -1 && g.edge[pj][pm] == -1) {
          zig = {lows[i], lows[j], third};
          found = true;
        }
      }
    }
    if (!found) continue;  // not a box-kite; the structure census reports these

    const std::uint32_t a = zig[0];
    std::uint32_t b = zig[1], c = zig[2];
    if (unit_sign(a, b) < 0) std::swap(b, c);
    std::array<Assessor, 6> v;
    v[kA] = make_assessor(ctx, a);
    v[kB] = make_assessor(ctx, b);
    v[kC] = make_assessor(ctx, c);
    v[kF] = make_assessor(ctx, a ^ ctx.strut_constant);
    v[kE] = make_assessor(ctx, b ^ ctx.strut_constant);
    v[kD] = make_assessor(ctx, c ^ ctx.strut_constant);
    try {
      out.emplace_back(ctx, v);
    } catch (const std::invalid_argument&) {
      // Candidate fails the octahedron shape; skipped here, surfaced by the
      // edge-coverage cross-check (12 * count == edge_count) in the census.
    }
  }
  std::sort(out.begin(), out.end(), [](const BoxKite& x, const BoxKite& y) {
    return x.vertex(kA).low < y.vertex(kA).low ||
           (x.vertex(kA).low == y.vertex(kA).low && x.vertex(kB).low < y.vertex(kB).low);
  });
  return out;
}

std::array<Sail, 4> classify_sails(const BoxKite& bk) {
  const std::array<std::array<int, 3>, 4> faces = {
      std::array<int, 3>{kA, kB, kC}, {kA, kD, kE}, {kF, kD, kB}, {kF, kC, kE}};
  std::array<Sail, 4> out;
  for (std::size_t f = 0; f < 4; ++f) {
    Sail s;
    s.vertices = faces[f];
    int minus = 0;
    for (int e = 0; e < 3; ++e) {
      s.edge_signs[static_cast<std::size_t>(e)] =
          bk.edge_sign(s.vertices[static_cast<std::size_t>(e)],
                       s.vertices[static_cast<std::size_t>((e + 1) % 3)]);
      if (s.edge_signs[static_cast<std::size_t>(e)] == EdgeSign::minus) ++minus;
    }
    s.kind = (minus == 3) ? SailKind::zigzag : SailKind::trefoil;
    if ((s.kind == SailKind::trefoil && minus != 1) || (f == 0) != (s.kind == SailKind::zigzag))
      throw std::logic_error("sail edge-sign pattern violates the 3+1 split");
    out[f] = s;
  }
  return out;
}

std::array<AssociativeTriplet, 4> q_copies(const BoxKite& bk, const Sail& s) {
  const std::uint32_t a = bk.vertex(s.vertices[0]).low;
  const std::uint32_t b = bk.vertex(s.vertices[1]).low;
  const std::uint32_t c = bk.vertex(s.vertices[2]).low;
  const std::uint32_t ah = bk.vertex(s.vertices[0]).high;
  const std::uint32_t bh = bk.vertex(s.vertices[1]).high;
  const std::uint32_t ch = bk.vertex(s.vertices[2]).high;
  return {triplet_from_indices({a, b, c}), triplet_from_indices({a, bh, ch}),
          triplet_from_indices({ah, b, ch}), triplet_from_indices({ah, bh, c})};
}

Lanyard sail_cycle(const BoxKite& bk, const Sail& s, const Diagonal& start) {
  int at = -1;
  for (int i = 0; i < 3; ++i)
    if (bk.vertex(s.vertices[static_cast<std::size_t>(i)]) == start.assessor) at = i;
  if (at < 0) throw std::invalid_argument("start diagonal is not on the sail");
  Lanyard l;
  l.kind = LanyardKind::sail_cycle;
  Orientation o = start.orientation;
  for (int step = 0; step < 6; ++step) {
    l.steps.push_back(LanyardStep{s.vertices[static_cast<std::size_t>(at)], o});
    const int next = (at + 1) % 3;
    if (bk.edge_sign(s.vertices[static_cast<std::size_t>(at)],
                     s.vertices[static_cast<std::size_t>(next)]) == EdgeSign::minus)
      o = o == Orientation::slash ? Orientation::backslash : Orientation::slash;
    at = next;
  }
  l.closed = s.vertices[static_cast<std::size_t>(at)] == l.steps.front().vertex &&
             o == l.steps.front().orientation;
  return l;
}

static Lanyard walk_square(const BoxKite& bk, const std::array<int, 4>& square,
                           Orientation start) {
  Lanyard l;
  l.kind = LanyardKind::tray_rack_circuit;
  Orientation o = start;
  int at = 0;
  for (int step = 0; step < 4; ++step) {
    l.steps.push_back(LanyardStep{square[static_cast<std::size_t>(at)], o});
    const int next = (at + 1) % 4;
    if (bk.edge_sign(square[static_cast<std::size_t>(at)],
                     square[static_cast<std::size_t>(next)]) == EdgeSign::minus)
      o = o == Orientation::slash ? Orientation::backslash : Orientation::slash;
    at = next;
  }
  l.closed = o == start;
  return l;
}

std::array<TrayRack, 3> tray_racks(const BoxKite& bk) {
  std::array<TrayRack, 3> out;
  for (int s = 0; s < 3; ++s) {
    TrayRack tr;
    tr.perpendicular_strut = static_cast<Strut>(s);
    tr.square = kSquares[static_cast<std::size_t>(s)];
    tr.circuits = {walk_square(bk, tr.square, Orientation::slash),
                   walk_square(bk, tr.square, Orientation::backslash)};
    out[static_cast<std::size_t>(s)] = tr;
  }
  return out;
}

RoyalHunt royal_hunt(const BoxKite& bk, const TrayRack& tr) {
  auto directed_signs = [&](const std::array<int, 4>& cycle) {
    std::array<int, 4> s{};
    for (int i = 0; i < 4; ++i)
      s[static_cast<std::size_t>(i)] =
          unit_sign(bk.vertex(cycle[static_cast<std::size_t>(i)]).low,
                    bk.vertex(cycle[static_cast<std::size_t>((i + 1) % 4)]).low);
    return s;
  };
  std::array<int, 4> cycle = tr.square;
  std::array<int, 4> signs = directed_signs(cycle);
  int positives = 0;
  for (int s : signs) positives += s > 0;
  if (positives != 3) {
    cycle = {tr.square[0], tr.square[3], tr.square[2], tr.square[1]};
    signs = directed_signs(cycle);
    positives = 0;
    for (int s : signs) positives += s > 0;
  }
  if (positives != 3) throw std::logic_error("tray-rack lacks the 3+1 flow split");
  int rev = 0;
  while (signs[static_cast<std::size_t>(rev)] > 0) ++rev;
  RoyalHunt rh;
  for (int i = 0; i < 4; ++i)
    rh.order[static_cast<std::size_t>(i)] = cycle[static_cast<std::size_t>((rev + 1 + i) % 4)];
  rh.reversed_edge = rh.top();
  return rh;
}

TwistResult twist(const BoxKite& bk, int p, int q, TwistMode mode) {
  if (p < 0 || p > 5 || q < 0 || q > 5 || !bk.is_edge(p, q))
    throw std::invalid_argument("twist input is not a mutual-ZD edge");
  int rack = -1;
  for (int s = 0; s < 3; ++s) {
    const auto& [s1, s2] = kStrutPairs[static_cast<std::size_t>(s)];
    if (p != s1 && p != s2 && q != s1 && q != s2) rack = s;
  }
  const auto racks = tray_racks(bk);
  const RoyalHunt rh = royal_hunt(bk, racks[static_cast<std::size_t>(rack)]);
  auto matches = [&](std::pair<int, int> e) {
    return (e.first == p && e.second == q) || (e.first == q && e.second == p);
  };
  bool horizontal, swap_lows;
  if (matches(rh.top())) horizontal = true, swap_lows = true;
  else if (matches(rh.bottom())) horizontal = true, swap_lows = false;
  else if (matches(rh.left())) horizontal = false, swap_lows = true;
  else horizontal = false, swap_lows = false;
  if (horizontal != (mode == TwistMode::horizontal))
    throw std::invalid_argument("twist mode does not match the edge's royal-hunt class");

  const StrutContext& ctx = bk.context();
  const Assessor ap = bk.vertex(p), aq = bk.vertex(q);
  TwistResult r;
  r.source_vertices = {p, q};
  r.source_sign = bk.edge_sign(p, q);
  r.source_first = Diagonal{ap, Orientation::slash};
  r.source_second = Diagonal{aq, r.source_sign == EdgeSign::plus ? Orientation::slash
                                                                 : Orientation::backslash};
  r.swapped_lows = swap_lows;
  r.target_strut_constant = ctx.strut_constant ^ ap.low ^ aq.low;
  r.target_context = make_context(ctx.n, r.target_strut_constant);
  // Either swap produces the same unordered plane pair; the held unit of the
  // first source vertex stays in the first twisted plane.
  if (swap_lows) {
    r.twisted_first = Assessor{aq.low, ap.high};
    r.twisted_second = Assessor{ap.low, aq.high};
  } else {
    r.twisted_first = Assessor{ap.low, aq.high};
    r.twisted_second = Assessor{aq.low, ap.high};
  }
  const auto tsign = mutual_zd_edge(r.target_context, r.twisted_first, r.twisted_second);
  if (!tsign) throw std::logic_error("twisted pairing is not a zero-divisor edge");
  r.twisted_sign = *tsign;
  r.twisted_d1 = Diagonal{r.twisted_first, Orientation::slash};
  r.twisted_d2 = Diagonal{r.twisted_second, r.twisted_sign == EdgeSign::plus
                                                ? Orientation::slash
                                                : Orientation::backslash};
  if (!multivector_product(diagonal_vector(r.target_context, r.twisted_d1),
                           diagonal_vector(r.target_context, r.twisted_d2))
           .is_zero())
    throw std::logic_error("twisted diagonal product does not vanish");
  return r;
}

std::vector<TwistCensusEntry> twist_census(std::uint32_t n) {
  if (n != 4) throw std::invalid_argument("twist census is defined for the sedenions");
  std::vector<TwistCensusEntry> out;
  for (std::uint32_t s = 1; s < 8; ++s) {
    const StrutContext ctx = make_context(n, s);
    const auto kites = assemble_boxkites(ctx);
    if (kites.size() != 1) throw std::logic_error("sedenion context must hold one box-kite");
    const BoxKite& bk = kites.front();
    for (int strut = 0; strut < 3; ++strut) {
      const auto& [zv, vv] = kStrutPairs[static_cast<std::size_t>(strut)];
      TwistCensusEntry e;
      e.source_s = s;
      e.strut = static_cast<Strut>(strut);
      e.horizontal_target = bk.vertex(vv).low;
      e.vertical_target = bk.vertex(zv).low;
      e.triple = triplet_from_indices({s, e.horizontal_target, e.vertical_target}).oriented;
      out.push_back(e);
    }
  }
  return out;
}

std::vector<Lanyard> find_lanyards(const BoxKite& bk, LanyardKind kind) {
  // Diagonal adjacency: 12 nodes, one compatible diagonal per neighbouring
  // vertex ("+" keeps orientation, "-" toggles it).
  std::array<std::vector<int>, 12> adj;
  for (int p = 0; p < 6; ++p) {
    for (int q = 0; q < 6; ++q) {
      if (p == q || !bk.is_edge(p, q)) continue;
      for (Orientation o : {Orientation::slash, Orientation::backslash}) {
        const Orientation oq =
            bk.edge_sign(p, q) == EdgeSign::plus
                ? o
                : (o == Orientation::slash ? Orientation::backslash : Orientation::slash);
        adj[static_cast<std::size_t>(diagonal_node(p, o))].push_back(diagonal_node(q, oq));
      }
    }
  }
  for (auto& v : adj) std::sort(v.begin(), v.end());

  std::size_t want_len = 0, want_vertices = 0;
  switch (kind) {
    case LanyardKind::sail_cycle: want_len = 6; want_vertices = 3; break;
    case LanyardKind::tray_rack_circuit: want_len = 4; want_vertices = 4; break;
    case LanyardKind::quincunx: want_len = 10; want_vertices = 5; break;
    case LanyardKind::bicycle_chain: want_len = 12; want_vertices = 6; break;
  }

  auto rack_of_edge = [&](int p, int q) {
    for (int s = 0; s < 3; ++s) {
      const auto& [s1, s2] = kStrutPairs[static_cast<std::size_t>(s)];
      if (p != s1 && p != s2 && q != s1 && q != s2) return s;
    }
    return -1;
  };

  auto accept = [&](const std::vector<int>& cycle) {
    std::set<int> verts;
    for (int nd : cycle) verts.insert(nd / 2);
    if (verts.size() != want_vertices) return false;
    if (kind == LanyardKind::sail_cycle) {
      std::vector<std::uint32_t> lows;
      for (int v : verts) lows.push_back(bk.vertex(v).low);
      return (lows[0] ^ lows[1] ^ lows[2]) == 0;  // sail faces, not vents
    }
    if (kind == LanyardKind::tray_rack_circuit) {
      for (const auto& [s1, s2] : kStrutPairs)
        if (!verts.count(s1) && !verts.count(s2)) return true;
      return false;
    }
    if (kind == LanyardKind::bicycle_chain) {
      // Three 3/4-tray-rack scans joined by single jumps along "-" edges.
      std::array<int, 12> racks{};
      std::array<int, 12> signs{};
      for (std::size_t i = 0; i < 12; ++i) {
        const int p = cycle[i] / 2, q = cycle[(i + 1) % 12] / 2;
        racks[i] = rack_of_edge(p, q);
        signs[i] = bk.edge_value(p, q);
      }
      for (std::size_t rot = 0; rot < 12; ++rot) {
        auto at = [&](std::size_t i) { return racks[(rot + i) % 12]; };
        const bool scans = at(0) == at(1) && at(1) == at(2) && at(4) == at(5) &&
                           at(5) == at(6) && at(8) == at(9) && at(9) == at(10);
        const bool jumps_minus = signs[(rot + 3) % 12] < 0 && signs[(rot + 7) % 12] < 0 &&
                                 signs[(rot + 11) % 12] < 0;
        if (scans && jumps_minus && at(0) != at(4) && at(4) != at(8) && at(0) != at(8))
          return true;
      }
      return false;
    }
    return true;
  };

  std::vector<Lanyard> out;
  std::vector<int> path;
  std::array<bool, 12> used{};
  auto emit = [&](const std::vector<int>& cycle) {
    Lanyard l;
    l.kind = kind;
    for (int nd : cycle) l.steps.push_back(node_step(nd));
    l.closed = true;
    out.push_back(l);
  };
  // Directed cycles, each reported once from its least node.
  std::function<void(int, int)> dfs = [&](int start, int at) {
    for (int nxt : adj[static_cast<std::size_t>(at)]) {
      if (nxt == start && path.size() == want_len) {
        if (accept(path)) emit(path);
        continue;
      }
      if (nxt <= start || used[static_cast<std::size_t>(nxt)] || path.size() >= want_len)
        continue;
      used[static_cast<std::size_t>(nxt)] = true;
      path.push_back(nxt);
      dfs(start, nxt);
      path.pop_back();
      used[static_cast<std::size_t>(nxt)] = false;
    }
  };
  for (int start = 0; start < 12; ++start) {
    path = {start};
    used.fill(false);
    used[static_cast<std::size_t>(start)] = true;
    dfs(start, start);
  }
  return out;
}

OrientationAudit orientation_audit(const BoxKite& bk) {
  OrientationAudit audit;
  auto record = [&](int p, int q, bool high) {
    const std::uint32_t x = high ? bk.vertex(p).high : bk.vertex(p).low;
    const std::uint32_t y = high ? bk.vertex(q).high : bk.vertex(q).low;
    const SignedUnit u = unit_product({+1, x}, {+1, y});
    std::string name;
    name += static_cast<char>(high ? kVertexNames[p] : kVertexNames[p] + 32);
    name += '*';
    name += static_cast<char>(high ? kVertexNames[q] : kVertexNames[q] + 32);
    audit.products.emplace_back(name, u);
    return u.sign > 0;
  };
  bool hex_low = true, hex_high = true;
  for (int i = 0; i < 6; ++i) {
    const int p = kHexagonCcw[static_cast<std::size_t>(i)];
    const int q = kHexagonCcw[static_cast<std::size_t>((i + 1) % 6)];
    hex_low = record(p, q, false) && hex_low;
    hex_high = !record(p, q, true) && hex_high;
  }
  audit.hexagon_low_all_positive = hex_low;
  audit.hexagon_high_all_negative = hex_high;

  const std::array<int, 3> zig = {kA, kB, kC};
  const std::array<int, 3> vent_cw = {kD, kE, kF};
  bool zl = true, zh = true, vl = true, vh = true;
  for (int i = 0; i < 3; ++i) {
    zl = record(zig[static_cast<std::size_t>(i)], zig[static_cast<std::size_t>((i + 1) % 3)],
                false) && zl;
    zh = record(zig[static_cast<std::size_t>(i)], zig[static_cast<std::size_t>((i + 1) % 3)],
                true) && zh;
    vl = record(vent_cw[static_cast<std::size_t>(i)],
                vent_cw[static_cast<std::size_t>((i + 1) % 3)], false) && vl;
    vh = record(vent_cw[static_cast<std::size_t>(i)],
                vent_cw[static_cast<std::size_t>((i + 1) % 3)], true) && vh;
  }
  audit.zigzag_low_positive = zl;
  audit.zigzag_high_positive = zh;
  audit.vent_low_positive_clockwise = vl;
  audit.vent_high_positive_clockwise = vh;
  return audit;
}

std::string strut_name(Strut s) {
  switch (s) {
    case Strut::AF: return "AF";
    case Strut::BE: return "BE";
    case Strut::CD: return "CD";
  }
  return "?";
}

std::optional<Strut> strut_from_name(const std::string& name) {
  std::string up;
  for (char c : name) up += static_cast<char>(c >= 'a' && c <= 'z' ? c - 32 : c);
  if (up == "AF") return Strut::AF;
  if (up == "BE") return Strut::BE;
  if (up == "CD") return Strut::CD;
  return std::nullopt;
}

}  // namespace boxkite
