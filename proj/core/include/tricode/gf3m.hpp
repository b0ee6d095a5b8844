#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tricode {

/// Arithmetic in GF(3^m) for 1 <= m <= 12.
///
/// Elements are dense indices in [0, 3^m). The base-3 digits of an index
/// are the element's coefficients in the polynomial basis, low degree
/// first, so index 0 is the additive identity and indices 0,1,2 form the
/// prime subfield. The modulus for each degree comes from a fixed table
/// (see assets/gf3_moduli.txt) so that indices, tables and serialized
/// artifacts are reproducible across builds.
///
/// A Field is immutable after construction and safe to share between
/// threads. All lookup tables (trace, squares, discrete logs) are built
/// eagerly; memory is O(3^m).
class Field {
 public:
  static constexpr unsigned kMaxDegree = 12;

  explicit Field(unsigned degree);

  unsigned degree() const { return m_; }
  std::uint32_t size() const { return q_; }
  /// Modulus coefficients, low-to-high, length degree()+1, leading 1.
  const std::vector<std::uint8_t>& modulus() const { return modulus_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t pa = planes_[a], pb = planes_[b];
    std::uint32_t a0 = pa & kLoMask, a1 = pa >> 16;
    std::uint32_t b0 = pb & kLoMask, b1 = pb >> 16;
    std::uint32_t c0 = ((a0 ^ b0) & ~(a1 | b1)) | (a1 & b1);
    std::uint32_t c1 = ((a1 ^ b1) & ~(a0 | b0)) | (a0 & b0);
    return pow3sum_[c0] + 2 * pow3sum_[c1];
  }
  std::uint32_t neg(std::uint32_t a) const {
    std::uint32_t pa = planes_[a];
    return pow3sum_[pa >> 16] + 2 * pow3sum_[pa & kLoMask];
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t e = log_[a] + log_[b];
    if (e >= q_ - 1) e -= q_ - 1;
    return exp_[e];
  }
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t x, std::uint64_t e) const;

  /// Trace to GF(3); the result is the element index, always in {0,1,2}.
  std::uint8_t trace(std::uint32_t x) const { return trace_[x]; }
  std::uint32_t square(std::uint32_t x) const { return square_[x]; }
  /// Quadratic-residue test; zero counts as a square.
  bool is_square(std::uint32_t x) const { return x == 0 || (log_[x] & 1u) == 0; }

  /// Smallest-index element of multiplicative order q-1.
  std::uint32_t primitive_element() const { return primitive_; }
  /// Discrete log base primitive_element(); requires x != 0.
  std::uint32_t log(std::uint32_t x) const;
  /// primitive_element()^e with e reduced mod q-1.
  std::uint32_t exp(std::uint64_t e) const { return exp_[e % (q_ - 1)]; }
  std::uint64_t order(std::uint32_t x) const;

  /// Basis element with a single coefficient, index 3^i.
  std::uint32_t basis_element(unsigned i) const;
  std::vector<std::uint8_t> coords(std::uint32_t x) const;
  std::uint32_t from_coords(const std::vector<std::uint8_t>& c) const;

  std::vector<std::uint32_t> nonzero_squares() const;
  std::vector<std::uint32_t> nonsquares() const;

  /// The shipped modulus table, identical to assets/gf3_moduli.txt.
  static std::string modulus_table_text();
  /// Parses one table line ("m coeffdigits"); used by table self-checks.
  static std::vector<std::uint8_t> table_modulus(unsigned degree);

 private:
  static constexpr std::uint32_t kLoMask = 0xffffu;

  unsigned m_ = 0;
  std::uint32_t q_ = 0;
  std::uint32_t primitive_ = 0;
  std::vector<std::uint8_t> modulus_;
  std::vector<std::uint32_t> planes_;   // index -> (lo bits | hi bits << 16)
  std::vector<std::uint32_t> pow3sum_;  // bitmask -> sum of 3^i over set bits
  std::vector<std::uint32_t> exp_;      // length q-1
  std::vector<std::uint32_t> log_;      // length q, log_[0] unused
  std::vector<std::uint8_t> trace_;
  std::vector<std::uint32_t> square_;
  std::vector<std::uint64_t> order_prime_factors_;

  std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t pow_slow(std::uint32_t x, std::uint64_t e) const;
};

}  // namespace tricode
