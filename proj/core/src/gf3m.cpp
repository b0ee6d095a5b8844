#include "tricode/gf3m.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tricode {

namespace {

// One line per degree m = 1..12: the m+1 modulus coefficients low-to-high.
// Lexicographically smallest monic irreducible per degree, ordering by the
// non-leading coefficient vector read as a base-3 integer. Must stay in
// sync with assets/gf3_moduli.txt (checked by a unit test).
constexpr const char* kModulusDigits[Field::kMaxDegree] = {
    "01",
    "101",
    "1201",
    "21001",
    "120001",
    "2100001",
    "20100001",
    "201000001",
    "1012000001",
    "10200000001",
    "201000000001",
    "2010000000001",
};

using PolyVec = std::vector<std::uint8_t>;

void poly_trim(PolyVec& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a mod b over GF(3); b must be monic.
PolyVec poly_rem(PolyVec a, const PolyVec& b) {
  poly_trim(a);
  const int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    const std::uint8_t c = a.back();
    const std::size_t shift = a.size() - b.size();
    if (c != 0) {
      for (std::size_t i = 0; i < b.size(); ++i) {
        std::uint8_t v = static_cast<std::uint8_t>((a[shift + i] + 3 - (c * b[i]) % 3) % 3);
        a[shift + i] = v;
      }
    }
    a.pop_back();
    poly_trim(a);
  }
  return a;
}

bool poly_is_irreducible(const PolyVec& p) {
  const unsigned m = static_cast<unsigned>(p.size()) - 1;
  if (m == 1) return true;
  for (unsigned d = 1; d <= m / 2; ++d) {
    std::uint32_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= 3;
    for (std::uint32_t v = 0; v < count; ++v) {
      PolyVec div(d + 1, 0);
      std::uint32_t t = v;
      for (unsigned i = 0; i < d; ++i) {
        div[i] = static_cast<std::uint8_t>(t % 3);
        t /= 3;
      }
      div[d] = 1;
      if (poly_rem(p, div).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

Field::Field(unsigned degree) {
  if (degree < 1 || degree > kMaxDegree) {
    throw std::out_of_range("Field: extension degree must be in [1, " +
                            std::to_string(kMaxDegree) + "], got " + std::to_string(degree));
  }
  m_ = degree;
  q_ = 1;
  for (unsigned i = 0; i < m_; ++i) q_ *= 3;

  modulus_ = table_modulus(degree);
  if (!poly_is_irreducible(modulus_)) {
    throw std::logic_error("Field: table modulus is not irreducible");
  }

  // Plane representation and the bitmask -> sum-of-powers-of-3 table.
  planes_.resize(q_);
  for (std::uint32_t x = 0; x < q_; ++x) {
    std::uint32_t lo = 0, hi = 0, t = x;
    for (unsigned i = 0; i < m_; ++i) {
      const std::uint32_t d = t % 3;
      t /= 3;
      if (d == 1) lo |= 1u << i;
      if (d == 2) hi |= 1u << i;
    }
    planes_[x] = lo | (hi << 16);
  }
  pow3sum_.assign(1u << m_, 0);
  for (std::uint32_t mask = 0; mask < (1u << m_); ++mask) {
    std::uint32_t s = 0, p = 1;
    for (unsigned i = 0; i < m_; ++i) {
      if (mask & (1u << i)) s += p;
      p *= 3;
    }
    pow3sum_[mask] = s;
  }

  // Smallest-index primitive element, found with naive arithmetic.
  const std::uint64_t n = q_ - 1;
  order_prime_factors_ = prime_factors(n);
  primitive_ = 0;
  for (std::uint32_t c = 1; c < q_; ++c) {
    bool primitive = true;
    for (std::uint64_t p : order_prime_factors_) {
      if (pow_slow(c, n / p) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      primitive_ = c;
      break;
    }
  }

  exp_.resize(n);
  log_.assign(q_, 0);
  std::uint32_t e = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    exp_[i] = e;
    log_[e] = static_cast<std::uint32_t>(i);
    e = mul_slow(e, primitive_);
  }
  if (e != 1) throw std::logic_error("Field: primitive element order mismatch");

  square_.resize(q_);
  for (std::uint32_t x = 0; x < q_; ++x) square_[x] = mul(x, x);

  // trace(x) = sum of digit_i(x) * trace(basis_i); trace is GF(3)-linear.
  std::vector<std::uint8_t> basis_trace(m_);
  for (unsigned i = 0; i < m_; ++i) {
    std::uint32_t g = basis_element(i);
    std::uint32_t acc = 0, y = g;
    for (unsigned j = 0; j < m_; ++j) {
      acc = add(acc, y);
      y = mul(square_[y], y);  // y^3
    }
    if (acc > 2) throw std::logic_error("Field: trace outside prime subfield");
    basis_trace[i] = static_cast<std::uint8_t>(acc);
  }
  trace_.resize(q_);
  for (std::uint32_t x = 0; x < q_; ++x) {
    std::uint32_t t = x, acc = 0;
    for (unsigned i = 0; i < m_; ++i) {
      acc += (t % 3) * basis_trace[i];
      t /= 3;
    }
    trace_[x] = static_cast<std::uint8_t>(acc % 3);
  }
}

std::uint32_t Field::mul_slow(std::uint32_t a, std::uint32_t b) const {
  std::uint8_t da[kMaxDegree], db[kMaxDegree];
  for (unsigned i = 0; i < m_; ++i) {
    da[i] = static_cast<std::uint8_t>(a % 3);
    a /= 3;
    db[i] = static_cast<std::uint8_t>(b % 3);
    b /= 3;
  }
  std::uint8_t r[2 * kMaxDegree - 1] = {0};
  for (unsigned i = 0; i < m_; ++i) {
    if (!da[i]) continue;
    for (unsigned j = 0; j < m_; ++j) r[i + j] = static_cast<std::uint8_t>((r[i + j] + da[i] * db[j]) % 3);
  }
  for (int d = 2 * static_cast<int>(m_) - 2; d >= static_cast<int>(m_); --d) {
    const std::uint8_t c = r[d];
    if (!c) continue;
    r[d] = 0;
    for (unsigned i = 0; i < m_; ++i) {
      r[d - m_ + i] = static_cast<std::uint8_t>((r[d - m_ + i] + 3 - (c * modulus_[i]) % 3) % 3);
    }
  }
  std::uint32_t out = 0, p = 1;
  for (unsigned i = 0; i < m_; ++i) {
    out += r[i] * p;
    p *= 3;
  }
  return out;
}

std::uint32_t Field::pow_slow(std::uint32_t x, std::uint64_t e) const {
  std::uint32_t r = 1;
  while (e) {
    if (e & 1) r = mul_slow(r, x);
    x = mul_slow(x, x);
    e >>= 1;
  }
  return r;
}

std::uint32_t Field::inv(std::uint32_t a) const {
  if (a == 0) throw std::invalid_argument("Field::inv: zero has no inverse");
  const std::uint32_t n = q_ - 1;
  const std::uint32_t l = log_[a];
  return l == 0 ? 1 : exp_[n - l];
}

std::uint32_t Field::pow(std::uint32_t x, std::uint64_t e) const {
  if (x == 0) return e == 0 ? 1 : 0;
  const std::uint64_t n = q_ - 1;
  return exp_[(static_cast<std::uint64_t>(log_[x]) * (e % n)) % n];
}

std::uint32_t Field::log(std::uint32_t x) const {
  if (x == 0) throw std::invalid_argument("Field::log: undefined at zero");
  return log_[x];
}

std::uint64_t Field::order(std::uint32_t x) const {
  if (x == 0) throw std::invalid_argument("Field::order: undefined at zero");
  std::uint64_t ord = q_ - 1;
  for (std::uint64_t p : order_prime_factors_) {
    while (ord % p == 0 && pow(x, ord / p) == 1) ord /= p;
  }
  return ord;
}

std::uint32_t Field::basis_element(unsigned i) const {
  if (i >= m_) throw std::out_of_range("Field::basis_element: index out of range");
  std::uint32_t p = 1;
  for (unsigned j = 0; j < i; ++j) p *= 3;
  return p;
}

std::vector<std::uint8_t> Field::coords(std::uint32_t x) const {
  std::vector<std::uint8_t> c(m_);
  for (unsigned i = 0; i < m_; ++i) {
    c[i] = static_cast<std::uint8_t>(x % 3);
    x /= 3;
  }
  return c;
}

std::uint32_t Field::from_coords(const std::vector<std::uint8_t>& c) const {
  if (c.size() != m_) throw std::invalid_argument("Field::from_coords: wrong length");
  std::uint32_t x = 0, p = 1;
  for (unsigned i = 0; i < m_; ++i) {
    if (c[i] > 2) throw std::invalid_argument("Field::from_coords: digit out of range");
    x += c[i] * p;
    p *= 3;
  }
  return x;
}

std::vector<std::uint32_t> Field::nonzero_squares() const {
  std::vector<std::uint32_t> out;
  out.reserve((q_ - 1) / 2);
  for (std::uint32_t x = 1; x < q_; ++x) {
    if ((log_[x] & 1u) == 0) out.push_back(x);
  }
  return out;
}

std::vector<std::uint32_t> Field::nonsquares() const {
  std::vector<std::uint32_t> out;
  out.reserve((q_ - 1) / 2);
  for (std::uint32_t x = 1; x < q_; ++x) {
    if (log_[x] & 1u) out.push_back(x);
  }
  return out;
}

std::string Field::modulus_table_text() {
  std::ostringstream os;
  os << "# Fixed monic irreducible moduli for GF(3^m), one line per m = 1..12.\n"
     << "# Each line: m, then the m+1 coefficients low-to-high as base-3 digits.\n"
     << "# The polynomial is the lexicographically smallest monic irreducible of\n"
     << "# its degree, ordering candidates by the value of the non-leading\n"
     << "# coefficient vector read as a base-3 integer.\n";
  for (unsigned m = 1; m <= kMaxDegree; ++m) os << m << ' ' << kModulusDigits[m - 1] << '\n';
  return os.str();
}

std::vector<std::uint8_t> Field::table_modulus(unsigned degree) {
  if (degree < 1 || degree > kMaxDegree) {
    throw std::out_of_range("Field: extension degree must be in [1, " +
                            std::to_string(kMaxDegree) + "], got " + std::to_string(degree));
  }
  const char* digits = kModulusDigits[degree - 1];
  std::vector<std::uint8_t> mod;
  for (const char* p = digits; *p; ++p) mod.push_back(static_cast<std::uint8_t>(*p - '0'));
  if (mod.size() != degree + 1 || mod.back() != 1) {
    throw std::logic_error("Field: malformed modulus table entry");
  }
  return mod;
}

}  // namespace tricode
