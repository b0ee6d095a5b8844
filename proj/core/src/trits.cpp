#include "tricode/trits.hpp"

#include <bit>
#include <stdexcept>

namespace tricode {

namespace {

// Trit addition on planes: (a0,a1) + (b0,b1) mod 3.
inline void plane_add(std::uint64_t a0, std::uint64_t a1, std::uint64_t b0, std::uint64_t b1,
                      std::uint64_t& c0, std::uint64_t& c1) {
  c0 = ((a0 ^ b0) & ~(a1 | b1)) | (a1 & b1);
  c1 = ((a1 ^ b1) & ~(a0 | b0)) | (a0 & b0);
}

}  // namespace

TritVec TritVec::ones(std::uint32_t n) {
  TritVec v(n);
  v.fill_ones();
  return v;
}

TritVec TritVec::from_digits(std::string_view digits) {
  TritVec v(static_cast<std::uint32_t>(digits.size()));
  for (std::uint32_t i = 0; i < digits.size(); ++i) {
    const char c = digits[i];
    if (c < '0' || c > '2') throw std::invalid_argument("TritVec::from_digits: digit not in {0,1,2}");
    v.set(i, static_cast<std::uint8_t>(c - '0'));
  }
  return v;
}

void TritVec::set(std::uint32_t i, std::uint8_t v) {
  const std::size_t w = i >> 6;
  const std::uint64_t bit = 1ULL << (i & 63);
  lo()[w] &= ~bit;
  hi()[w] &= ~bit;
  if (v == 1) {
    lo()[w] |= bit;
  } else if (v == 2) {
    hi()[w] |= bit;
  } else if (v != 0) {
    throw std::invalid_argument("TritVec::set: value not in {0,1,2}");
  }
}

std::uint64_t TritVec::weight() const {
  std::uint64_t w = 0;
  const std::uint64_t* l = lo();
  const std::uint64_t* h = hi();
  for (std::size_t i = 0; i < words(); ++i) w += std::popcount(l[i] | h[i]);
  return w;
}

bool TritVec::is_zero() const {
  for (std::uint64_t w : words_) {
    if (w) return false;
  }
  return true;
}

std::int64_t TritVec::first_nonzero() const {
  const std::uint64_t* l = lo();
  const std::uint64_t* h = hi();
  for (std::size_t i = 0; i < words(); ++i) {
    const std::uint64_t any = l[i] | h[i];
    if (any) return static_cast<std::int64_t>(i * 64 + std::countr_zero(any));
  }
  return -1;
}

void TritVec::check_len(const TritVec& o) const {
  if (n_ != o.n_) {
    throw std::invalid_argument("TritVec: length mismatch (" + std::to_string(n_) + " vs " +
                                std::to_string(o.n_) + ")");
  }
}

void TritVec::add_assign(const TritVec& o) {
  check_len(o);
  std::uint64_t* l = lo();
  std::uint64_t* h = hi();
  const std::uint64_t* ol = o.lo();
  const std::uint64_t* oh = o.hi();
  for (std::size_t i = 0; i < words(); ++i) plane_add(l[i], h[i], ol[i], oh[i], l[i], h[i]);
}

void TritVec::sub_assign(const TritVec& o) {
  check_len(o);
  std::uint64_t* l = lo();
  std::uint64_t* h = hi();
  const std::uint64_t* ol = o.lo();
  const std::uint64_t* oh = o.hi();
  // Subtraction is addition of the plane-swapped operand.
  for (std::size_t i = 0; i < words(); ++i) plane_add(l[i], h[i], oh[i], ol[i], l[i], h[i]);
}

void TritVec::add_scaled(const TritVec& o, std::uint8_t c) {
  if (c == 1) {
    add_assign(o);
  } else if (c == 2) {
    sub_assign(o);
  } else if (c != 0) {
    throw std::invalid_argument("TritVec::add_scaled: scalar not in {0,1,2}");
  }
}

void TritVec::negate() {
  std::uint64_t* l = lo();
  std::uint64_t* h = hi();
  for (std::size_t i = 0; i < words(); ++i) std::swap(l[i], h[i]);
}

TritVec operator*(std::uint8_t c, TritVec v) {
  if (c == 0) {
    v.clear();
  } else if (c == 2) {
    v.negate();
  } else if (c != 1) {
    throw std::invalid_argument("TritVec: scalar not in {0,1,2}");
  }
  return v;
}

std::uint8_t TritVec::dot(const TritVec& o) const {
  check_len(o);
  std::uint64_t ones = 0, twos = 0;
  const std::uint64_t* l = lo();
  const std::uint64_t* h = hi();
  const std::uint64_t* ol = o.lo();
  const std::uint64_t* oh = o.hi();
  for (std::size_t i = 0; i < words(); ++i) {
    const std::uint64_t p0 = (l[i] & ol[i]) | (h[i] & oh[i]);
    const std::uint64_t p1 = (l[i] & oh[i]) | (h[i] & ol[i]);
    ones += std::popcount(p0);
    twos += std::popcount(p1);
  }
  return static_cast<std::uint8_t>((ones + 2 * twos) % 3);
}

std::string TritVec::to_digits() const {
  std::string s(n_, '0');
  for (std::uint32_t i = 0; i < n_; ++i) s[i] = static_cast<char>('0' + get(i));
  return s;
}

void TritVec::fill_ones() {
  std::uint64_t* l = lo();
  std::uint64_t* h = hi();
  for (std::size_t i = 0; i < words(); ++i) {
    l[i] = ~0ULL;
    h[i] = 0;
  }
  const std::uint32_t rem = n_ & 63;
  if (rem && words() > 0) l[words() - 1] = (1ULL << rem) - 1;
}

void TritVec::clear() {
  for (std::uint64_t& w : words_) w = 0;
}

TritVec pointwise_product(const TritVec& a, const TritVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("pointwise_product: length mismatch");
  TritVec out(a.size());
  std::uint64_t* l = out.lo();
  std::uint64_t* h = out.hi();
  const std::uint64_t* al = a.lo();
  const std::uint64_t* ah = a.hi();
  const std::uint64_t* bl = b.lo();
  const std::uint64_t* bh = b.hi();
  for (std::size_t i = 0; i < out.words(); ++i) {
    l[i] = (al[i] & bl[i]) | (ah[i] & bh[i]);
    h[i] = (al[i] & bh[i]) | (ah[i] & bl[i]);
  }
  return out;
}

std::uint32_t rank(const TritMat& mat) {
  for (const TritVec& r : mat.rows) {
    if (r.size() != mat.cols) throw std::invalid_argument("rank: ragged rows");
  }
  std::vector<TritVec> rows = mat.rows;
  std::uint32_t r = 0;
  for (std::uint32_t c = 0; c < mat.cols && r < rows.size(); ++c) {
    std::size_t pivot = rows.size();
    for (std::size_t i = r; i < rows.size(); ++i) {
      if (rows[i].get(c) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    if (rows[r].get(c) == 2) rows[r].negate();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r) continue;
      const std::uint8_t v = rows[i].get(c);
      if (v) rows[i].add_scaled(rows[r], static_cast<std::uint8_t>(3 - v));
    }
    ++r;
  }
  return r;
}

bool SpanBasis::insert(TritVec v) {
  if (v.size() != n_) throw std::invalid_argument("SpanBasis::insert: length mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::uint8_t c = v.get(pivots_[i]);
    if (c) v.add_scaled(rows_[i], static_cast<std::uint8_t>(3 - c));
  }
  const std::int64_t p = v.first_nonzero();
  if (p < 0) return false;
  const std::uint32_t pivot = static_cast<std::uint32_t>(p);
  if (v.get(pivot) == 2) v.negate();
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::uint8_t c = rows_[i].get(pivot);
    if (c) rows_[i].add_scaled(v, static_cast<std::uint8_t>(3 - c));
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, pivot);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

TritVec SpanBasis::reduce(TritVec v) const {
  if (v.size() != n_) throw std::invalid_argument("SpanBasis::reduce: length mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::uint8_t c = v.get(pivots_[i]);
    if (c) v.add_scaled(rows_[i], static_cast<std::uint8_t>(3 - c));
  }
  return v;
}

bool SpanBasis::contains(const TritVec& v) const { return reduce(v).is_zero(); }

void SpanBasis::merge(const SpanBasis& other) {
  if (other.n_ != n_) throw std::invalid_argument("SpanBasis::merge: length mismatch");
  for (const TritVec& r : other.rows_) insert(r);
}

}  // namespace tricode
