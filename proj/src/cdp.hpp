#pragma once

#include <array>
#include <cstdint>
#include <vector>

// Exact signed arithmetic for Cayley-Dickson basis units and integer
// multivectors.  Index 0 is the real unit; the product of units i_a and i_b
// carries index a XOR b, with the sign decided by a quaternion base table,
// equal-index negation, the generator rules, and high-bit stripping.
namespace boxkite {

/// A basis element with orientation: sign in {-1,+1}, index in [0, 2^N).
struct SignedUnit {
  int sign = 1;
  std::uint32_t index = 0;

  friend bool operator==(const SignedUnit&, const SignedUnit&) = default;
};

/// Sign of i_a * i_b for unsigned (positively oriented) units.
int unit_sign(std::uint32_t a, std::uint32_t b);

/// Full signed product: index = a.index XOR b.index.
SignedUnit unit_product(SignedUnit a, SignedUnit b);

/// Element of the 2^N-ion algebra with exact integer coefficients.
class Multivector {
 public:
  explicit Multivector(std::uint32_t dimension_exponent);

  static Multivector basis(std::uint32_t dimension_exponent, std::uint32_t index,
                           long long coefficient = 1);

  std::uint32_t dimension_exponent() const { return dim_exp_; }
  std::size_t size() const { return coeff_.size(); }
  long long operator[](std::size_t i) const { return coeff_[i]; }
  long long& operator[](std::size_t i) { return coeff_[i]; }

  bool is_zero() const;

  Multivector& operator+=(const Multivector& rhs);
  Multivector& operator-=(const Multivector& rhs);
  friend Multivector operator+(Multivector lhs, const Multivector& rhs) { return lhs += rhs; }
  friend Multivector operator-(Multivector lhs, const Multivector& rhs) { return lhs -= rhs; }
  friend bool operator==(const Multivector&, const Multivector&) = default;

 private:
  std::uint32_t dim_exp_;
  std::vector<long long> coeff_;
};

/// Bilinear extension of unit_product.  Throws std::invalid_argument on
/// dimension mismatch.
Multivector multivector_product(const Multivector& x, const Multivector& y);

/// Sum of squared coefficients, exact.
long long squared_norm(const Multivector& x);

/// squared_norm(x*y) - squared_norm(x)*squared_norm(y).  Identically zero for
/// dimension exponents <= 3; can go negative from the sedenions up.
long long norm_composition_defect(const Multivector& x, const Multivector& y);

/// XOR-closed index triple spanning a quaternion copy.
struct AssociativeTriplet {
  std::array<std::uint32_t, 3> indices;   // ascending
  std::array<std::uint32_t, 3> oriented;  // cyclic order with positive pairwise products
  bool counting_order_consistent = false; // oriented == ascending
};

/// All XOR-closed triples of distinct indices in [1, 2^N); count is
/// (2^N - 1)(2^N - 2)/6.
std::vector<AssociativeTriplet> enumerate_triplets(std::uint32_t dimension_exponent);

}  // namespace boxkite
