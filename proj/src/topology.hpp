#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "assessor.hpp"

// Box-kite assembly and classification: sails, struts, tray-racks, royal-hunt
// presentations, twist products, and lanyard traversal over the diagonal
// adjacency graph.
namespace boxkite {

// Vertex letters.  A, B, C are the zigzag (A = least low, then positive
// cyclic sign order); F, E, D are their strut opposites, so the struts are
// AF, BE, CD.
enum Vertex : int { kA = 0, kB = 1, kC = 2, kD = 3, kE = 4, kF = 5 };

constexpr char kVertexNames[6] = {'A', 'B', 'C', 'D', 'E', 'F'};

/// Strut identifiers, named by their vertex pairs.
enum class Strut : int { AF = 0, BE = 1, CD = 2 };

constexpr std::array<std::pair<int, int>, 3> kStrutPairs = {
    std::pair<int, int>{kA, kF}, {kB, kE}, {kC, kD}};

/// Six assessors on an octahedral frame: twelve signed edges, three struts.
class BoxKite {
 public:
  BoxKite(StrutContext ctx, const std::array<Assessor, 6>& vertices);

  const StrutContext& context() const { return ctx_; }
  const Assessor& vertex(int v) const { return vertices_[static_cast<std::size_t>(v)]; }
  const std::array<Assessor, 6>& vertices() const { return vertices_; }

  bool is_edge(int p, int q) const { return edge_[p][q] != 0; }
  /// Edge sign; throws if (p, q) is a strut pair or p == q.
  EdgeSign edge_sign(int p, int q) const;
  /// +1, -1, or 0 when no edge exists.
  int edge_value(int p, int q) const { return edge_[p][q]; }

  std::array<int, 3> zigzag_vertices() const { return {kA, kB, kC}; }

  /// Letter of the assessor with the given low index, or -1.
  int find_low(std::uint32_t low) const;

 private:
  StrutContext ctx_;
  std::array<Assessor, 6> vertices_;
  int edge_[6][6] = {};
};

/// All box-kites of the context: every XOR-closed low triple whose pairwise
/// edges exist seeds a candidate (the triple plus its strut opposites);
/// candidates are deduplicated and validated as octahedra.  Throws
/// std::logic_error if a candidate fails the octahedron shape.
std::vector<BoxKite> assemble_boxkites(const StrutContext& ctx);

/// Mutual-ZD census for one context, shared by the table generator and the
/// box-kite consistency checks.
struct ZdGraph {
  std::vector<Assessor> row;                 // tone row order
  std::vector<std::vector<int>> edge;        // KxK: +1 / -1 / 0
  std::size_t edge_count = 0;                // unordered signed pairs
};

ZdGraph build_zd_graph(const StrutContext& ctx);

enum class SailKind { zigzag, trefoil };

struct Sail {
  std::array<int, 3> vertices;      // letters, traversal order
  SailKind kind = SailKind::trefoil;
  std::array<EdgeSign, 3> edge_signs;  // (v0,v1), (v1,v2), (v2,v0)
};

/// One zigzag (A,B,C) plus the trefoils ADE, FDB, FCE.
std::array<Sail, 4> classify_sails(const BoxKite& bk);

/// The four quaternion-copy index triples of a sail: lows {a,b,c} and each
/// low with the other two highs.
std::array<AssociativeTriplet, 4> q_copies(const BoxKite& bk, const Sail& s);

enum class LanyardKind { sail_cycle, tray_rack_circuit, quincunx, bicycle_chain };

struct LanyardStep {
  int vertex = 0;
  Orientation orientation = Orientation::slash;

  friend bool operator==(const LanyardStep&, const LanyardStep&) = default;
};

/// Closed thread of diagonals in which consecutive entries multiply to zero.
struct Lanyard {
  LanyardKind kind = LanyardKind::sail_cycle;
  std::vector<LanyardStep> steps;
  bool closed = true;
};

/// Alternating traversal of a sail from the given start: "+" edges keep the
/// orientation, "-" edges toggle it.  Closes after exactly 6 steps.
Lanyard sail_cycle(const BoxKite& bk, const Sail& s, const Diagonal& start);

/// The 4-cycle of assessors complementary to one strut, with its two
/// disjoint single-cover diagonal circuits.
struct TrayRack {
  Strut perpendicular_strut = Strut::AF;
  std::array<int, 4> square;  // vertex cycle around the perimeter
  std::array<Lanyard, 2> circuits;
};

std::array<TrayRack, 3> tray_racks(const BoxKite& bk);

/// Canonical presentation: vertices ordered so the circuit's three
/// consistently oriented low-product edges come first and the reversed edge
/// closes the square (top edge of the frame).
struct RoyalHunt {
  std::array<int, 4> order;          // NW, SW, SE, NE when drawn
  std::pair<int, int> reversed_edge; // == top()
  std::pair<int, int> top() const { return {order[3], order[0]}; }
  std::pair<int, int> left() const { return {order[0], order[1]}; }
  std::pair<int, int> bottom() const { return {order[1], order[2]}; }
  std::pair<int, int> right() const { return {order[2], order[3]}; }
};

RoyalHunt royal_hunt(const BoxKite& bk, const TrayRack& tr);

enum class TwistMode { horizontal, vertical };

/// Unit-swapping transform sending a zero-divisor edge to one in another
/// box-kite.  Top/left edges swap lows holding highs; bottom/right edges
/// swap highs holding lows.
struct TwistResult {
  std::pair<int, int> source_vertices;
  EdgeSign source_sign = EdgeSign::plus;
  Diagonal source_first, source_second;    // a vanishing source pairing
  bool swapped_lows = false;
  StrutContext target_context;
  std::uint32_t target_strut_constant = 0;
  Assessor twisted_first, twisted_second;
  EdgeSign twisted_sign = EdgeSign::plus;
  Diagonal twisted_d1, twisted_d2;         // a vanishing twisted pairing
};

/// Throws std::invalid_argument when (p, q) is not a mutual-ZD edge or when
/// the mode does not match the edge's royal-hunt orientation class.
TwistResult twist(const BoxKite& bk, int p, int q, TwistMode mode);

/// Twist targets for one tray-rack: horizontal edges land on the strut's
/// vent low, vertical edges on its zigzag low; with the source S these form
/// an XOR-closed triple.
struct TwistCensusEntry {
  std::uint32_t source_s = 0;
  Strut strut = Strut::AF;
  std::uint32_t horizontal_target = 0;
  std::uint32_t vertical_target = 0;
  std::array<std::uint32_t, 3> triple;  // oriented from the least member
};

std::vector<TwistCensusEntry> twist_census(std::uint32_t n = 4);

/// Depth-first enumeration over the diagonal adjacency graph, deduplicated
/// by rotation (direction-reversed traversals count separately).  Empty
/// results are legal; the tests flag them.
std::vector<Lanyard> find_lanyards(const BoxKite& bk, LanyardKind kind);

/// Sign-pattern report for the hexagon and Star-of-David tracings.
struct OrientationAudit {
  bool hexagon_low_all_positive = false;   // a*d, d*b, ... ccw
  bool hexagon_high_all_negative = false;  // A*D, D*B, ... same paths
  bool zigzag_low_positive = false;        // abc ccw
  bool zigzag_high_positive = false;       // ABC ccw
  bool vent_low_positive_clockwise = false;   // def cw
  bool vent_high_positive_clockwise = false;  // DEF cw
  std::vector<std::pair<std::string, SignedUnit>> products;

  bool pass() const {
    return hexagon_low_all_positive && hexagon_high_all_negative && zigzag_low_positive &&
           zigzag_high_positive && vent_low_positive_clockwise && vent_high_positive_clockwise;
  }
};

OrientationAudit orientation_audit(const BoxKite& bk);

std::string strut_name(Strut s);
std::optional<Strut> strut_from_name(const std::string& name);

}  // namespace boxkite
