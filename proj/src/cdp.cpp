#include "cdp.hpp"

#include <bit>
#include <stdexcept>

namespace boxkite {

namespace {

// Quaternion sign table, indices 0..3.  Row = left factor, column = right.
constexpr int kQuaternionSigns[4][4] = {
    {+1, +1, +1, +1},
    {+1, -1, +1, -1},
    {+1, -1, -1, +1},
    {+1, +1, -1, -1},
};

}  // namespace

int unit_sign(std::uint32_t a, std::uint32_t b) {
  int sign = 1;
  for (;;) {
    if (a == 0 || b == 0) return sign;
    if (a == b) return -sign;
    const unsigned abits = std::bit_width(a);
    const unsigned bbits = std::bit_width(b);
    if (abits < 3 && bbits < 3) return sign * kQuaternionSigns[a][b];
    if (abits == bbits) {
      const std::uint32_t g = 1u << (abits - 1);
      if (a == g) return sign;        // (b-g, g, b) in cyclic plus order
      if (b == g) return -sign;       // reverse of the line above
      if ((a ^ b) == g) return (b > a) ? -sign : sign;
      sign = -sign;                   // (g+r)(g+c) = -(r*c)
      a -= g;
      b -= g;
      continue;
    }
    if (abits < bbits) {
      const std::uint32_t g = 1u << (bbits - 1);
      if (b == g) return sign;        // generator acts from the right with +
      if ((a ^ b) == g) return -sign; // i_a * i_(g+a) = -i_g
      sign = -sign;
      b -= g;
      continue;
    }
    const std::uint32_t g = 1u << (abits - 1);
    if ((a ^ b) == g) return sign;    // i_(g+b) * i_b = +i_g
    sign = -sign;
    if (a == g) return sign;          // generator from the left flips
    a -= g;
  }
}

SignedUnit unit_product(SignedUnit a, SignedUnit b) {
  return SignedUnit{a.sign * b.sign * unit_sign(a.index, b.index), a.index ^ b.index};
}

Multivector::Multivector(std::uint32_t dimension_exponent)
    : dim_exp_(dimension_exponent), coeff_(std::size_t{1} << dimension_exponent, 0) {
  if (dimension_exponent == 0 || dimension_exponent > 16)
    throw std::invalid_argument("dimension exponent out of range");
}

Multivector Multivector::basis(std::uint32_t dimension_exponent, std::uint32_t index,
                               long long coefficient) {
  Multivector m(dimension_exponent);
  if (index >= m.size()) throw std::invalid_argument("basis index out of range");
  m[index] = coefficient;
  return m;
}

bool Multivector::is_zero() const {
  for (long long c : coeff_)
    if (c != 0) return false;
  return true;
}

Multivector& Multivector::operator+=(const Multivector& rhs) {
  if (dim_exp_ != rhs.dim_exp_) throw std::invalid_argument("dimension mismatch");
  for (std::size_t i = 0; i < coeff_.size(); ++i) coeff_[i] += rhs.coeff_[i];
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& rhs) {
  if (dim_exp_ != rhs.dim_exp_) throw std::invalid_argument("dimension mismatch");
  for (std::size_t i = 0; i < coeff_.size(); ++i) coeff_[i] -= rhs.coeff_[i];
  return *this;
}

Multivector multivector_product(const Multivector& x, const Multivector& y) {
  if (x.dimension_exponent() != y.dimension_exponent())
    throw std::invalid_argument("dimension mismatch");
  Multivector out(x.dimension_exponent());
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      const auto a = static_cast<std::uint32_t>(i);
      const auto b = static_cast<std::uint32_t>(j);
      out[a ^ b] += unit_sign(a, b) * x[i] * y[j];
    }
  }
  return out;
}

long long squared_norm(const Multivector& x) {
  long long sum = 0;
  for (std::size_t i = 0; i < x.size(); ++i) sum += x[i] * x[i];
  return sum;
}

long long norm_composition_defect(const Multivector& x, const Multivector& y) {
  return squared_norm(multivector_product(x, y)) - squared_norm(x) * squared_norm(y);
}

std::vector<AssociativeTriplet> enumerate_triplets(std::uint32_t dimension_exponent) {
  if (dimension_exponent < 2) throw std::invalid_argument("need dimension exponent >= 2");
  const std::uint32_t limit = 1u << dimension_exponent;
  std::vector<AssociativeTriplet> out;
  for (std::uint32_t a = 1; a < limit; ++a) {
    for (std::uint32_t b = a + 1; b < limit; ++b) {
      const std::uint32_t c = a ^ b;
      if (c <= b) continue;  // keep each triple once, with a < b < c
      AssociativeTriplet t;
      t.indices = {a, b, c};
      if (unit_sign(a, b) > 0) {
        t.oriented = {a, b, c};
        t.counting_order_consistent = true;
      } else {
        t.oriented = {a, c, b};
        t.counting_order_consistent = false;
      }
      out.push_back(t);
    }
  }
  return out;
}

}  // namespace boxkite
