#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tricode/codes.hpp"
#include "tricode/gf3m.hpp"

namespace tricode {

/// Univariate polynomial over GF(3), coefficients low-to-high with no
/// trailing zeros; the zero polynomial is the empty vector.
struct Poly {
  std::vector<std::uint8_t> c;

  Poly() = default;
  explicit Poly(std::vector<std::uint8_t> coeffs);
  static Poly one() { return Poly({1}); }
  static Poly x() { return Poly({0, 1}); }
  /// x^n - 1.
  static Poly x_pow_minus_one(std::uint32_t n);

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  bool is_monic() const { return !c.empty() && c.back() == 1; }
  std::string to_digits() const;

  bool operator==(const Poly&) const = default;
};

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
/// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& a);
Poly monic(Poly p);
Poly gcd(Poly a, Poly b);
/// Least common multiple of a nonempty list of nonzero polynomials,
/// normalized monic.
Poly lcm_polys(const std::vector<Poly>& ps);
/// Evaluation inside GF(3^m) at the element with the given index.
std::uint32_t eval_in_field(const Poly& p, const Field& field, std::uint32_t x);

/// The 3-cyclotomic coset {i*3^j mod n} as a sorted set.
std::vector<std::uint32_t> cyclotomic_coset(std::uint32_t i, std::uint32_t n);

/// Sum of the base-q digits of j.
unsigned qary_weight(std::uint64_t j, unsigned q, unsigned digits);

/// Minimal polynomial over GF(3) of beta^i, beta = field.primitive_element().
/// Computed as the product of (x - beta^j) over the coset of i; every
/// coefficient is checked to land in the prime subfield.
Poly minimal_polynomial(const Field& field, std::uint32_t i);

/// The cyclic code of length n whose parity-check polynomial is H, i.e.
/// the code of dimension deg(H) generated by (x^n - 1)/H and its shifts.
/// Throws std::invalid_argument if H does not divide x^n - 1.
LinearCode cyclic_code_from_check(const Poly& H, std::uint32_t n);

}  // namespace tricode
