#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "tricode/gf3m.hpp"
#include "tricode/trits.hpp"

namespace tricode {

using BigInt = boost::multiprecision::cpp_int;

/// Thrown when an exact computation would exceed the enumeration guard;
/// the message names the guard and the alternative route when one exists.
class infeasible_error : public std::runtime_error {
 public:
  explicit infeasible_error(const std::string& what) : std::runtime_error(what) {}
};

/// Largest dimension for which full codeword enumeration is allowed.
inline constexpr unsigned kEnumerationGuard = 21;

/// Exact weight distribution A_0..A_n of a ternary linear code.
/// Counts are arbitrary-precision so MacWilliams transforms of long codes
/// stay exact.
class WeightEnumerator {
 public:
  WeightEnumerator(std::uint32_t n, std::uint32_t k) : n_(n), k_(k), counts_(n + 1) {}

  std::uint32_t length() const { return n_; }
  std::uint32_t dimension() const { return k_; }
  const BigInt& count(std::uint32_t w) const { return counts_.at(w); }
  void set_count(std::uint32_t w, BigInt v) { counts_.at(w) = std::move(v); }
  void add_count(std::uint32_t w, const BigInt& v) { counts_.at(w) += v; }

  /// Throws std::logic_error unless A_0 = 1, all counts >= 0 and they sum
  /// to 3^k.
  void validate() const;

  /// Smallest w >= 1 with A_w > 0; throws if the code is zero.
  std::uint32_t min_nonzero_weight() const;
  std::vector<std::uint32_t> nonzero_weights() const;  // excludes w = 0

  /// {"n":…, "k":…, "counts":{"w":"count",…}} with exact decimal strings,
  /// zero counts omitted.
  std::string to_json() const;

  bool operator==(const WeightEnumerator&) const = default;

 private:
  std::uint32_t n_, k_;
  std::vector<BigInt> counts_;
};

/// Exact MacWilliams transform over GF(q): the enumerator of the dual of a
/// code whose enumerator is `we`. Input is validated; the transform checks
/// the q^k divisibility so any inconsistency surfaces as an error.
WeightEnumerator macwilliams(const WeightEnumerator& we, unsigned q = 3);

/// A length-n linear code over GF(3) held as its canonical RREF generator
/// basis, so two codes are equal iff their representations are equal.
class LinearCode {
 public:
  explicit LinearCode(std::uint32_t n) : gen_(n) {}
  explicit LinearCode(SpanBasis basis) : gen_(std::move(basis)) {}

  std::uint32_t length() const { return gen_.length(); }
  std::uint32_t dimension() const { return gen_.rank(); }
  const SpanBasis& basis() const { return gen_; }
  const std::vector<TritVec>& generator_rows() const { return gen_.rows(); }

  bool contains(const TritVec& v) const { return gen_.contains(v); }

  LinearCode dual() const;
  /// Appends an overall parity coordinate c_n = -sum(c_i).
  LinearCode extended() const;
  /// Deletes the last coordinate.
  LinearCode punctured_last() const;
  /// Adjoins the all-one row; the dimension grows iff it was missing.
  LinearCode augmented() const;

  /// Exact counts by reflected ternary Gray enumeration, one basis-row
  /// add/subtract per step. Requires dimension() <= kEnumerationGuard.
  WeightEnumerator weight_distribution(unsigned workers = 1) const;

  /// Smallest nonzero weight, computed on whichever of the code and its
  /// dual fits the enumeration guard (dual side goes through MacWilliams).
  std::uint32_t min_distance(unsigned workers = 1) const;

  bool operator==(const LinearCode&) const = default;

 private:
  SpanBasis gen_;
};

/// RREF span of the given rows. An empty row list yields the zero code of
/// the stated length.
LinearCode code_from_rows(std::uint32_t n, const std::vector<TritVec>& rows);

/// Code with coordinates remapped: new coordinate i reads old coordinate
/// perm[i].
LinearCode permuted(const LinearCode& code, const std::vector<std::uint32_t>& perm);

/// True iff the code of length q, coordinates indexed by the field
/// elements in canonical index order, is fixed by every substitution
/// x -> a*x + b with a != 0. Checked on a generating set: all
/// translations plus multiplication by a primitive element.
bool is_affine_invariant(const LinearCode& code, const Field& field);

/// Visits all 3^k codewords in Gray order (the zero word first).
/// Visitor signature: void(const TritVec& word).
template <typename Visitor>
void for_each_codeword(const LinearCode& code, Visitor&& visit);

namespace detail {

/// Reflected mixed-radix Gray walk over 3^k states. step(j, delta) is
/// called for each transition; digit j changes by delta in {+1,-1}.
template <typename Step>
void gray3_walk(unsigned k, Step&& step) {
  std::vector<std::uint8_t> digit(k, 0);
  std::vector<unsigned> focus(k + 1);
  std::vector<std::int8_t> dir(k, 1);
  for (unsigned i = 0; i <= k; ++i) focus[i] = i;
  for (;;) {
    const unsigned j = focus[0];
    focus[0] = 0;
    if (j == k) break;
    digit[j] = static_cast<std::uint8_t>(digit[j] + dir[j]);
    step(j, dir[j]);
    if (digit[j] == 0 || digit[j] == 2) {
      dir[j] = static_cast<std::int8_t>(-dir[j]);
      focus[j] = focus[j + 1];
      focus[j + 1] = j + 1;
    }
  }
}

}  // namespace detail

template <typename Visitor>
void for_each_codeword(const LinearCode& code, Visitor&& visit) {
  const unsigned k = code.dimension();
  if (k > kEnumerationGuard) {
    throw infeasible_error("for_each_codeword: dimension " + std::to_string(k) +
                           " exceeds the enumeration guard " + std::to_string(kEnumerationGuard));
  }
  TritVec word(code.length());
  visit(static_cast<const TritVec&>(word));
  const auto& rows = code.generator_rows();
  detail::gray3_walk(k, [&](unsigned j, std::int8_t delta) {
    word.add_scaled(rows[j], delta > 0 ? 1 : 2);
    visit(static_cast<const TritVec&>(word));
  });
}

}  // namespace tricode
