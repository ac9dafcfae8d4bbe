#include "assessor.hpp"

#include <stdexcept>

namespace boxkite {

StrutContext make_context(std::uint32_t n, std::uint32_t s) {
  if (n < 4 || n > 16) throw std::invalid_argument("dimension exponent must be in [4, 16]");
  const std::uint32_t g = 1u << (n - 1);
  if (s == 0 || s >= g)
    throw std::invalid_argument("strut constant must satisfy 0 < S < 2^(N-1)");
  return StrutContext{n, g, s, g + s};
}

Assessor make_assessor(const StrutContext& ctx, std::uint32_t low) {
  Assessor a{low, low ^ ctx.strut_bound};
  if (!valid_assessor(ctx, a)) throw std::invalid_argument("invalid assessor low index");
  return a;
}

bool valid_assessor(const StrutContext& ctx, const Assessor& a) {
  return a.low > 0 && a.low < ctx.generator && a.low != ctx.strut_constant &&
         a.high == (a.low ^ ctx.strut_bound);
}

Multivector diagonal_vector(const StrutContext& ctx, const Diagonal& d) {
  Multivector m(ctx.n);
  m[d.assessor.low] = 1;
  m[d.assessor.high] = d.orientation == Orientation::slash ? 1 : -1;
  return m;
}

std::vector<Assessor> tone_row(const StrutContext& ctx) {
  const std::uint32_t k = ctx.row_length();
  std::vector<Assessor> row(k);
  std::uint32_t left = 0;
  std::uint32_t right = k - 1;
  for (std::uint32_t low = 1; low < ctx.generator; ++low) {
    if (low == ctx.strut_constant) continue;
    const std::uint32_t opp = low ^ ctx.strut_constant;
    if (low >= opp) continue;  // lower member of each opposite pair leads
    row[left] = Assessor{low, low ^ ctx.strut_bound};
    row[right] = Assessor{opp, opp ^ ctx.strut_bound};
    if (2 * (left + 1) == k) break;
    ++left;
    --right;
  }
  return row;
}

Assessor strut_opposite(const StrutContext& ctx, const Assessor& a) {
  if (!valid_assessor(ctx, a)) throw std::invalid_argument("assessor not valid in context");
  return make_assessor(ctx, a.low ^ ctx.strut_constant);
}

std::optional<EdgeSign> mutual_zd_edge(const StrutContext& ctx, const Assessor& a1,
                                       const Assessor& a2) {
  if (!valid_assessor(ctx, a1) || !valid_assessor(ctx, a2))
    throw std::invalid_argument("assessor not valid in context");
  if (a1 == a2) return std::nullopt;  // a plane's own diagonals never pair to zero

  const SignedUnit ul = unit_product({+1, a1.high}, {+1, a2.low});
  const SignedUnit ur = unit_product({+1, a1.high}, {+1, a2.high});
  const SignedUnit ll = unit_product({+1, a1.low}, {+1, a2.low});
  const SignedUnit lr = unit_product({+1, a1.low}, {+1, a2.high});
  if (ul.index != lr.index || ur.index != ll.index)
    throw std::logic_error("cross products lost XOR coherence");

  const bool outer = ul.sign == lr.sign;
  const bool inner = ur.sign == ll.sign;
  if (outer != inner) return std::nullopt;
  // Coherent with opposite signs: the four terms of (i_l1 +/- i_h1)(i_l2 +/- i_h2)
  // cancel for like orientations.  Same signs: the mixed pairings cancel.
  return outer ? EdgeSign::minus : EdgeSign::plus;
}

std::optional<SignedUnit> emanation_of(const StrutContext& ctx, const Assessor& a1,
                                       const Assessor& a2) {
  const auto sign = mutual_zd_edge(ctx, a1, a2);
  if (!sign) return std::nullopt;
  return SignedUnit{edge_sign_value(*sign), a1.low ^ a2.low};
}

StrutProductSignature strut_product_signature(const StrutContext& ctx, const Assessor& z) {
  const Assessor v = strut_opposite(ctx, z);
  StrutProductSignature sig;
  sig.opp_high_times_high = unit_product({+1, v.high}, {+1, z.high});
  sig.opp_low_times_low = unit_product({+1, v.low}, {+1, z.low});
  sig.high_times_opp_low = unit_product({+1, z.high}, {+1, v.low});
  sig.opp_high_times_low = unit_product({+1, v.high}, {+1, z.low});
  sig.high_times_low = unit_product({+1, z.high}, {+1, z.low});
  sig.opp_low_times_opp_high = unit_product({+1, v.low}, {+1, v.high});
  sig.indices_verified = sig.opp_high_times_high.index == ctx.strut_constant &&
                         sig.opp_low_times_low.index == ctx.strut_constant &&
                         sig.high_times_opp_low.index == ctx.generator &&
                         sig.opp_high_times_low.index == ctx.generator &&
                         sig.high_times_low.index == ctx.strut_bound &&
                         sig.opp_low_times_opp_high.index == ctx.strut_bound;
  return sig;
}

}  // namespace boxkite
