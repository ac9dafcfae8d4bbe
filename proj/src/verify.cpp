#include "verify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "atlas.hpp"
#include "render.hpp"

namespace boxkite {

namespace {

class Suite {
 public:
  void check(const std::string& name, bool ok, const std::string& detail = "") {
    report_.checks.push_back({name, ok, ok ? "" : detail});
    if (!ok) ++report_.failures;
  }
  VerifyReport take() { return std::move(report_); }

 private:
  VerifyReport report_;
};

std::string fmt(std::uint32_t s, const std::string& what) {
  std::ostringstream os;
  os << what << " (S=" << s << ")";
  return os.str();
}

void unit_law_checks(Suite& suite, std::uint32_t n) {
  const std::uint32_t xn = std::min<std::uint32_t>(n, 8);
  bool ok = true;
  for (std::uint32_t a = 0; a < (1u << xn) && ok; ++a)
    for (std::uint32_t b = 0; b < (1u << xn) && ok; ++b)
      ok = unit_product({+1, a}, {+1, b}).index == (a ^ b);
  suite.check("index law: product index is the XOR of the factor indices", ok);

  const std::uint32_t an = std::min<std::uint32_t>(n, 6);
  ok = true;
  for (std::uint32_t a = 1; a < (1u << an) && ok; ++a)
    for (std::uint32_t b = 1; b < (1u << an) && ok; ++b)
      if (a != b) ok = unit_sign(a, b) == -unit_sign(b, a);
  suite.check("anticommutativity of distinct imaginary units", ok);

  ok = true;
  for (std::uint32_t m = 2; m <= n && ok; ++m) {
    const std::uint32_t g = 1u << (m - 1);
    for (std::uint32_t k = 1; k < g && ok; ++k)
      ok = unit_product({+1, k}, {+1, g}) == SignedUnit{+1, k + g};
  }
  suite.check("generator rule: i_k * i_G = +i_(k+G)", ok);

  const std::uint32_t counts[5] = {0, 0, 0, 7, 35};
  ok = true;
  for (std::uint32_t m = 3; m <= std::min<std::uint32_t>(n, 6); ++m) {
    const std::uint64_t want = (m < 5) ? counts[m] : ((1u << m) - 1) * ((1u << m) - 2) / 6;
    ok = ok && enumerate_triplets(m).size() == want;
  }
  suite.check("triplet census equals (2^N-1)(2^N-2)/6", ok);

  const auto octonion = enumerate_triplets(3);
  std::set<std::array<std::uint32_t, 3>> violators;
  for (const auto& t : octonion)
    if (!t.counting_order_consistent) violators.insert(t.indices);
  suite.check("octonion counting-order violators are (1,7,6) and (3,6,5)",
              violators == std::set<std::array<std::uint32_t, 3>>{{1, 6, 7}, {3, 5, 6}});

  std::mt19937 rng(20407);
  std::uniform_int_distribution<long long> coeff(-9, 9);
  ok = true;
  for (std::uint32_t m = 1; m <= 3; ++m) {
    for (int trial = 0; trial < 200 && ok; ++trial) {
      Multivector x(m), y(m);
      for (std::size_t i = 0; i < x.size(); ++i) x[i] = coeff(rng);
      for (std::size_t i = 0; i < y.size(); ++i) y[i] = coeff(rng);
      ok = norm_composition_defect(x, y) == 0;
    }
  }
  suite.check("norm composition holds for dimensions 2, 4, 8", ok);

  if (n >= 4) {
    const Multivector x = Multivector::basis(4, 3) + Multivector::basis(4, 10);
    const Multivector y = Multivector::basis(4, 6) - Multivector::basis(4, 15);
    suite.check("sedenion zero-divisor witness (e3+e10)(e6-e15) = 0",
                multivector_product(x, y).is_zero() && norm_composition_defect(x, y) == -4);
  }

  const std::uint32_t bn = std::min<std::uint32_t>(n, 5);
  ok = true;
  for (std::uint32_t a = 0; a < (1u << bn) && ok; ++a)
    for (std::uint32_t b = 0; b < (1u << bn) && ok; ++b) {
      const auto u = unit_product({+1, a}, {+1, b});
      const auto prod =
          multivector_product(Multivector::basis(bn, a), Multivector::basis(bn, b));
      ok = prod[u.index] == u.sign;
      for (std::size_t i = 0; i < prod.size() && ok; ++i)
        if (i != u.index) ok = prod[i] == 0;
    }
  suite.check("multivector product agrees with unit product on basis vectors", ok);
}

void context_checks(Suite& suite, const StrutContext& ctx) {
  const std::uint32_t s = ctx.strut_constant;
  const auto row = tone_row(ctx);
  const std::uint32_t k = ctx.row_length();

  bool ok = row.size() == k;
  std::set<std::uint32_t> lows;
  for (const auto& a : row) {
    lows.insert(a.low);
    ok = ok && valid_assessor(ctx, a);
  }
  ok = ok && lows.size() == k && !lows.count(s);
  for (std::uint32_t i = 0; i < k / 2 && ok; ++i)
    ok = row[k - 1 - i].low == (row[i].low ^ s);
  suite.check(fmt(s, "tone row: length, distinct lows, mirrored strut opposites"), ok);

  ok = true;
  for (const auto& a : row) {
    ok = ok && strut_opposite(ctx, strut_opposite(ctx, a)) == a;
    ok = ok && !mutual_zd_edge(ctx, a, strut_opposite(ctx, a)).has_value();
    ok = ok && !mutual_zd_edge(ctx, a, a).has_value();
  }
  suite.check(fmt(s, "strut opposites: involution, never mutual zero divisors"), ok);

  const ZdGraph g = build_zd_graph(ctx);
  ok = true;
  for (std::size_t i = 0; i < row.size() && ok; ++i)
    for (std::size_t j = 0; j < row.size() && ok; ++j)
      ok = g.edge[i][j] == g.edge[j][i];
  suite.check(fmt(s, "edge test is symmetric"), ok);

  ok = true;
  std::size_t probes = 0;
  for (std::size_t i = 0; i < row.size() && ok; ++i) {
    for (std::size_t j = i + 1; j < row.size() && ok; ++j) {
      if (g.edge[i][j] == 0) continue;
      if (ctx.n > 4 && ++probes > 24) break;  // sampled above the sedenions
      const auto like = [&](Orientation o1, Orientation o2) {
        return multivector_product(diagonal_vector(ctx, {row[i], o1}),
                                   diagonal_vector(ctx, {row[j], o2}))
            .is_zero();
      };
      if (g.edge[i][j] > 0)
        ok = like(Orientation::slash, Orientation::slash) &&
             like(Orientation::backslash, Orientation::backslash) &&
             !like(Orientation::slash, Orientation::backslash);
      else
        ok = like(Orientation::slash, Orientation::backslash) &&
             like(Orientation::backslash, Orientation::slash) &&
             !like(Orientation::slash, Orientation::slash);
    }
  }
  suite.check(fmt(s, "edge signs select the vanishing diagonal pairings"), ok);

  const auto kites = assemble_boxkites(ctx);
  ok = !kites.empty();
  std::size_t covered = 0;
  for (const auto& bk : kites) {
    int minus = 0, plus = 0;
    for (int p = 0; p < 6; ++p)
      for (int q = p + 1; q < 6; ++q) {
        if (bk.edge_value(p, q) > 0) ++plus;
        if (bk.edge_value(p, q) < 0) ++minus;
      }
    ok = ok && minus == 6 && plus == 6;
    covered += 12;
    const auto sails = classify_sails(bk);
    ok = ok && sails[0].kind == SailKind::zigzag;
    for (const auto& sail : sails) {
      for (const auto& t : q_copies(bk, sail)) {
        ok = ok && (t.indices[0] ^ t.indices[1] ^ t.indices[2]) == 0;
        const auto x = t.oriented;
        ok = ok && unit_product({+1, x[0]}, {+1, x[1]}) == SignedUnit{+1, x[2]};
      }
      const auto cycle =
          sail_cycle(bk, sail, Diagonal{bk.vertex(sail.vertices[0]), Orientation::slash});
      std::set<std::pair<int, Orientation>> seen;
      for (const auto& st : cycle.steps) seen.insert({st.vertex, st.orientation});
      ok = ok && cycle.closed && cycle.steps.size() == 6 && seen.size() == 6;
    }
    for (const auto& tr : tray_racks(bk)) {
      ok = ok && tr.circuits[0].closed && tr.circuits[1].closed;
      std::set<std::pair<int, Orientation>> left, right;
      for (const auto& st : tr.circuits[0].steps) left.insert({st.vertex, st.orientation});
      for (const auto& st : tr.circuits[1].steps) right.insert({st.vertex, st.orientation});
      ok = ok && left.size() == 4 && right.size() == 4;
      for (const auto& d : left) ok = ok && !right.count(d);
    }
  }
  suite.check(fmt(s, "box-kites: 6/6 edge split, sails, q-copies, cycles, tray-racks"), ok);
  suite.check(fmt(s, "every edge lies in exactly one box-kite"), covered == g.edge_count);

  if (ctx.n == 4) {
    ok = true;
    for (const auto& bk : kites) {
      const auto racks = tray_racks(bk);
      for (int strut = 0; strut < 3; ++strut) {
        const RoyalHunt rh = royal_hunt(bk, racks[static_cast<std::size_t>(strut)]);
        const std::array<std::pair<TwistMode, std::pair<int, int>>, 4> edges = {
            std::pair{TwistMode::horizontal, rh.top()},
            std::pair{TwistMode::horizontal, rh.bottom()},
            std::pair{TwistMode::vertical, rh.left()},
            std::pair{TwistMode::vertical, rh.right()}};
        for (const auto& [mode, e] : edges) {
          const TwistResult t = twist(bk, e.first, e.second, mode);
          const auto& pair = kStrutPairs[static_cast<std::size_t>(strut)];
          const std::uint32_t perp_low = mode == TwistMode::horizontal
                                             ? bk.vertex(pair.first).low
                                             : bk.vertex(pair.second).low;
          ok = ok && t.twisted_sign != t.source_sign &&
               (s ^ t.target_strut_constant ^ perp_low) == 0;
        }
      }
    }
    suite.check(fmt(s, "twists vanish, toggle signs, and hit the perpendicular targets"), ok);

    ok = true;
    for (const auto& bk : kites) ok = ok && orientation_audit(bk).pass();
    suite.check(fmt(s, "hexagon and Star-of-David orientation audit"), ok);
  }

  const EmanationTable t = generate_table(ctx);
  ok = t.filled_count() % 24 == 0 && t.filled_count() / 24 == kites.size();
  for (std::uint32_t r = 0; r < k && ok; ++r)
    ok = !t.filled(r, r) && !t.filled(r, k - 1 - r);
  for (std::uint32_t r = 0; r < k && ok; ++r)
    for (std::uint32_t c = 0; c < k && ok; ++c)
      if (t.filled(r, c)) {
        const int v = t.cell(r, c);
        ok = static_cast<std::uint32_t>(v < 0 ? -v : v) == (row[r].low ^ row[c].low);
      }
  suite.check(fmt(s, "table: empty X, cells multiple of 24, magnitude law"), ok);

  const std::string csv = to_delimited(t);
  suite.check(fmt(s, "delimited round-trip is byte-identical"),
              to_delimited(parse_delimited(csv)) == csv && parse_delimited(csv) == t);
}

}  // namespace

std::string VerifyReport::text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.passed ? "ok   " : "FAIL ") << c.name;
    if (!c.passed && !c.detail.empty()) os << ": " << c.detail;
    os << '\n';
  }
  os << checks.size() - failures << "/" << checks.size() << " checks passed\n";
  return os.str();
}

VerifyReport run_verification(std::uint32_t n, int s) {
  Suite suite;
  unit_law_checks(suite, n);
  const std::uint32_t g = 1u << (n - 1);
  if (s >= 0) {
    context_checks(suite, make_context(n, static_cast<std::uint32_t>(s)));
  } else {
    for (std::uint32_t sc = 1; sc < g; ++sc) context_checks(suite, make_context(n, sc));
    if (n <= 6) {
      const CensusReport rep = census(n);
      bool ok = true;
      if (n == 4) ok = rep.total_box_kites == 7;
      if (n == 5) ok = rep.total_box_kites == 77;
      for (const auto& e : rep.entries) ok = ok && e.box_kites * 24 == e.filled_cells;
      suite.check("census totals and 24-cell quantisation", ok);
    }
    if (n == 4) {
      bool ok = true;
      std::array<std::uint32_t, 3> s3_af{}, s3_be{};
      for (const auto& e : twist_census(4)) {
        ok = ok && (e.triple[0] ^ e.triple[1] ^ e.triple[2]) == 0;
        if (e.source_s == 3 && e.strut == Strut::AF) s3_af = e.triple;
        if (e.source_s == 3 && e.strut == Strut::BE) s3_be = e.triple;
      }
      ok = ok && s3_af == std::array<std::uint32_t, 3>{1, 2, 3} &&
           s3_be == std::array<std::uint32_t, 3>{3, 6, 5};
      suite.check("twist census triples are XOR-closed with the pinned S=3 rows", ok);
    }
  }
  return suite.take();
}

}  // namespace boxkite
