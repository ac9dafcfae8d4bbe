#pragma once

#include <optional>
#include <vector>

#include "cdp.hpp"

// Assessor planes for a strut context (N, S): dyads (low, high) with
// high = low XOR (G + S), their tone-row ordering, and the mutual
// zero-divisor test between them.
namespace boxkite {

/// Parameters of one zero-divisor family: generator G = 2^(N-1), strut
/// constant 0 < S < G, strut bound X = G + S = G XOR S.
struct StrutContext {
  std::uint32_t n = 0;
  std::uint32_t generator = 0;
  std::uint32_t strut_constant = 0;
  std::uint32_t strut_bound = 0;

  /// Row/column count of the emanation table: K = 2^(N-1) - 2.
  std::uint32_t row_length() const { return generator - 2; }

  friend bool operator==(const StrutContext&, const StrutContext&) = default;
};

/// Validates N >= 4 and 0 < S < G.  Throws std::invalid_argument otherwise.
StrutContext make_context(std::uint32_t n, std::uint32_t s);

/// Dyad spanning a zero-divisor-bearing plane: 0 < low < G, low != S,
/// high = low XOR X.
struct Assessor {
  std::uint32_t low = 0;
  std::uint32_t high = 0;

  friend bool operator==(const Assessor&, const Assessor&) = default;
};

enum class Orientation { slash, backslash };  // slash = i_low + i_high

struct Diagonal {
  Assessor assessor;
  Orientation orientation = Orientation::slash;

  friend bool operator==(const Diagonal&, const Diagonal&) = default;
};

enum class EdgeSign { plus, minus };

inline int edge_sign_value(EdgeSign s) { return s == EdgeSign::plus ? +1 : -1; }
inline char edge_sign_char(EdgeSign s) { return s == EdgeSign::plus ? '+' : '-'; }

Assessor make_assessor(const StrutContext& ctx, std::uint32_t low);
bool valid_assessor(const StrutContext& ctx, const Assessor& a);

/// The multivector i_low +/- i_high for the diagonal, at the context dimension.
Multivector diagonal_vector(const StrutContext& ctx, const Diagonal& d);

/// Canonical K-long assessor ordering: ascending scan over low indices,
/// lower member of each strut-opposite pair at the next free left slot and
/// its opposite mirrored from the right.
std::vector<Assessor> tone_row(const StrutContext& ctx);

/// The assessor with low' = low XOR S; an involution.
Assessor strut_opposite(const StrutContext& ctx, const Assessor& a);

/// Edge sign between two assessors, or nothing when they are not mutual
/// zero divisors.  "+" means like-oriented diagonals multiply to zero,
/// "-" means slash pairs with backslash.  Symmetric; empty for a1 == a2.
std::optional<EdgeSign> mutual_zd_edge(const StrutContext& ctx, const Assessor& a1,
                                       const Assessor& a2);

/// Edge sign attached to low1 XOR low2 (the low index of the third assessor
/// in the shared sail), or nothing when there is no edge.
std::optional<SignedUnit> emanation_of(const StrutContext& ctx, const Assessor& a1,
                                       const Assessor& a2);

/// The six strut-opposite products V*Z, v*z (index S), Z*v, V*z (index G),
/// Z*z, v*V (index X), where (Z, z) is the argument and (V, v) its opposite.
struct StrutProductSignature {
  SignedUnit opp_high_times_high;  // V*Z -> S
  SignedUnit opp_low_times_low;    // v*z -> S
  SignedUnit high_times_opp_low;   // Z*v -> G
  SignedUnit opp_high_times_low;   // V*z -> G
  SignedUnit high_times_low;       // Z*z -> X
  SignedUnit opp_low_times_opp_high;  // v*V -> X
  bool indices_verified = false;
};

StrutProductSignature strut_product_signature(const StrutContext& ctx, const Assessor& z);

}  // namespace boxkite
