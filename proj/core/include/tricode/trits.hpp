#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tricode {

/// Packed vector over GF(3).
///
/// Two bit planes per 64-trit word: plane 0 marks positions holding 1,
/// plane 1 positions holding 2. Addition and subtraction are word-parallel
/// and weight is a popcount over the OR of the planes, which is what makes
/// streaming millions of length-3^m rows through rank accumulation cheap.
/// Bits beyond size() are kept zero.
class TritVec {
 public:
  TritVec() = default;
  explicit TritVec(std::uint32_t n) : n_(n), words_(2 * word_count(n), 0) {}

  static TritVec ones(std::uint32_t n);
  static TritVec from_digits(std::string_view digits);

  std::uint32_t size() const { return n_; }

  std::uint8_t get(std::uint32_t i) const {
    const std::uint64_t bit = 1ULL << (i & 63);
    if (lo()[i >> 6] & bit) return 1;
    if (hi()[i >> 6] & bit) return 2;
    return 0;
  }
  void set(std::uint32_t i, std::uint8_t v);

  std::uint64_t weight() const;
  bool is_zero() const;
  /// Index of the first nonzero trit, or -1 if the vector is zero.
  std::int64_t first_nonzero() const;

  void add_assign(const TritVec& o);
  void sub_assign(const TritVec& o);
  /// this += c * o with c in {0,1,2}.
  void add_scaled(const TritVec& o, std::uint8_t c);
  void negate();

  /// Standard inner product mod 3.
  std::uint8_t dot(const TritVec& o) const;

  TritVec& operator+=(const TritVec& o) {
    add_assign(o);
    return *this;
  }
  TritVec& operator-=(const TritVec& o) {
    sub_assign(o);
    return *this;
  }
  friend TritVec operator+(TritVec a, const TritVec& b) {
    a += b;
    return a;
  }
  friend TritVec operator-(TritVec a, const TritVec& b) {
    a -= b;
    return a;
  }
  friend TritVec operator*(std::uint8_t c, TritVec v);

  bool operator==(const TritVec& o) const = default;

  std::string to_digits() const;

  std::size_t words() const { return words_.size() / 2; }
  std::uint64_t* lo() { return words_.data(); }
  const std::uint64_t* lo() const { return words_.data(); }
  std::uint64_t* hi() { return words_.data() + words(); }
  const std::uint64_t* hi() const { return words_.data() + words(); }
  void fill_ones();
  void clear();

 private:
  static std::size_t word_count(std::uint32_t n) { return (static_cast<std::size_t>(n) + 63) / 64; }
  void check_len(const TritVec& o) const;

  std::uint32_t n_ = 0;
  std::vector<std::uint64_t> words_;  // plane 0 then plane 1
};

/// Coordinatewise product in GF(3).
TritVec pointwise_product(const TritVec& a, const TritVec& b);

struct TritMat {
  std::uint32_t cols = 0;
  std::vector<TritVec> rows;
};

/// Rank over GF(3) by full Gaussian elimination on a working copy.
/// Pivoting is first nonzero column, lowest row index.
std::uint32_t rank(const TritMat& mat);

/// Row basis in reduced row echelon form with strictly increasing pivots;
/// every pivot entry is 1 and is the only nonzero entry of its column
/// among the basis rows. Supports streaming insertion so that the rank of
/// a huge row family can be accumulated without materializing it.
class SpanBasis {
 public:
  SpanBasis() = default;
  explicit SpanBasis(std::uint32_t n) : n_(n) {}

  std::uint32_t length() const { return n_; }
  std::uint32_t rank() const { return static_cast<std::uint32_t>(rows_.size()); }

  /// Reduces v against the basis; inserts the remainder if nonzero.
  /// Returns true iff the rank grew.
  bool insert(TritVec v);
  bool contains(const TritVec& v) const;
  /// The unique RREF remainder of v modulo the current span.
  TritVec reduce(TritVec v) const;
  void merge(const SpanBasis& other);

  const std::vector<TritVec>& rows() const { return rows_; }
  const std::vector<std::uint32_t>& pivots() const { return pivots_; }

  bool operator==(const SpanBasis& o) const = default;

 private:
  std::uint32_t n_ = 0;
  std::vector<TritVec> rows_;
  std::vector<std::uint32_t> pivots_;
};

}  // namespace tricode
