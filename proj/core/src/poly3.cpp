#include "tricode/poly3.hpp"

#include <algorithm>
#include <stdexcept>

namespace tricode {

namespace {

void trim(std::vector<std::uint8_t>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

Poly::Poly(std::vector<std::uint8_t> coeffs) : c(std::move(coeffs)) {
  for (std::uint8_t v : c) {
    if (v > 2) throw std::invalid_argument("Poly: coefficient not in {0,1,2}");
  }
  trim(c);
}

Poly Poly::x_pow_minus_one(std::uint32_t n) {
  std::vector<std::uint8_t> c(n + 1, 0);
  c[0] = 2;
  c[n] = 1;
  return Poly(std::move(c));
}

std::string Poly::to_digits() const {
  std::string s;
  for (std::uint8_t v : c) s.push_back(static_cast<char>('0' + v));
  return s;
}

Poly add(const Poly& a, const Poly& b) {
  std::vector<std::uint8_t> c(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::uint8_t v = 0;
    if (i < a.c.size()) v += a.c[i];
    if (i < b.c.size()) v += b.c[i];
    c[i] = static_cast<std::uint8_t>(v % 3);
  }
  trim(c);
  Poly out;
  out.c = std::move(c);
  return out;
}

Poly sub(const Poly& a, const Poly& b) {
  std::vector<std::uint8_t> c(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::uint8_t v = 3;
    if (i < a.c.size()) v += a.c[i];
    if (i < b.c.size()) v = static_cast<std::uint8_t>(v - b.c[i]);
    c[i] = static_cast<std::uint8_t>(v % 3);
  }
  trim(c);
  Poly out;
  out.c = std::move(c);
  return out;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<std::uint8_t> c(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (!a.c[i]) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      c[i + j] = static_cast<std::uint8_t>((c[i + j] + a.c[i] * b.c[j]) % 3);
    }
  }
  Poly out;
  out.c = std::move(c);
  return out;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::invalid_argument("divmod: division by the zero polynomial");
  std::vector<std::uint8_t> rem = a.c;
  trim(rem);
  const int db = b.degree();
  const std::uint8_t lead_inv = b.c.back() == 1 ? 1 : 2;  // inverse in GF(3)
  std::vector<std::uint8_t> quo;
  if (static_cast<int>(rem.size()) - 1 >= db) quo.assign(rem.size() - db, 0);
  while (static_cast<int>(rem.size()) - 1 >= db && !rem.empty()) {
    const std::uint8_t f = static_cast<std::uint8_t>((rem.back() * lead_inv) % 3);
    const std::size_t shift = rem.size() - 1 - db;
    quo[shift] = f;
    if (f) {
      for (int i = 0; i <= db; ++i) {
        rem[shift + i] = static_cast<std::uint8_t>((rem[shift + i] + 3 - (f * b.c[i]) % 3) % 3);
      }
    }
    rem.pop_back();
    trim(rem);
  }
  Poly q, r;
  trim(quo);
  q.c = std::move(quo);
  r.c = std::move(rem);
  return {q, r};
}

bool divides(const Poly& d, const Poly& a) { return divmod(a, d).second.is_zero(); }

Poly monic(Poly p) {
  if (p.is_zero() || p.c.back() == 1) return p;
  for (std::uint8_t& v : p.c) v = static_cast<std::uint8_t>((v * 2) % 3);
  return p;
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a));
}

Poly lcm_polys(const std::vector<Poly>& ps) {
  if (ps.empty()) throw std::invalid_argument("lcm_polys: empty input");
  Poly acc = Poly::one();
  for (const Poly& p : ps) {
    if (p.is_zero()) throw std::invalid_argument("lcm_polys: zero polynomial input");
    const Poly g = gcd(acc, p);
    acc = mul(divmod(acc, g).first, p);
  }
  return monic(std::move(acc));
}

std::uint32_t eval_in_field(const Poly& p, const Field& field, std::uint32_t x) {
  std::uint32_t acc = 0;
  for (std::size_t i = p.c.size(); i-- > 0;) {
    acc = field.add(field.mul(acc, x), p.c[i]);
  }
  return acc;
}

std::vector<std::uint32_t> cyclotomic_coset(std::uint32_t i, std::uint32_t n) {
  if (i >= n) throw std::invalid_argument("cyclotomic_coset: residue out of range");
  std::vector<std::uint32_t> coset;
  std::uint32_t x = i;
  do {
    coset.push_back(x);
    x = static_cast<std::uint32_t>((static_cast<std::uint64_t>(x) * 3) % n);
  } while (x != i);
  std::sort(coset.begin(), coset.end());
  return coset;
}

unsigned qary_weight(std::uint64_t j, unsigned q, unsigned digits) {
  unsigned s = 0;
  for (unsigned i = 0; i < digits; ++i) {
    s += static_cast<unsigned>(j % q);
    j /= q;
  }
  if (j != 0) throw std::invalid_argument("qary_weight: value does not fit the digit count");
  return s;
}

Poly minimal_polynomial(const Field& field, std::uint32_t i) {
  const std::uint32_t n = field.size() - 1;
  if (i >= n) throw std::invalid_argument("minimal_polynomial: exponent out of range");
  const auto coset = cyclotomic_coset(i, n);

  // Product of (x - beta^j) expanded inside GF(q), low-to-high.
  std::vector<std::uint32_t> acc{1};
  for (std::uint32_t j : coset) {
    const std::uint32_t root = field.exp(j);
    std::vector<std::uint32_t> next(acc.size() + 1, 0);
    for (std::size_t t = 0; t < acc.size(); ++t) {
      next[t + 1] = field.add(next[t + 1], acc[t]);
      next[t] = field.sub(next[t], field.mul(root, acc[t]));
    }
    acc = std::move(next);
  }
  std::vector<std::uint8_t> coeffs(acc.size());
  for (std::size_t t = 0; t < acc.size(); ++t) {
    if (acc[t] > 2) {
      throw std::logic_error("minimal_polynomial: coefficient outside the prime subfield");
    }
    coeffs[t] = static_cast<std::uint8_t>(acc[t]);
  }
  return Poly(std::move(coeffs));
}

LinearCode cyclic_code_from_check(const Poly& H, std::uint32_t n) {
  if (H.is_zero() || !H.is_monic()) {
    throw std::invalid_argument("cyclic_code_from_check: parity-check polynomial must be monic");
  }
  const Poly xn1 = Poly::x_pow_minus_one(n);
  auto [g, r] = divmod(xn1, H);
  if (!r.is_zero()) {
    throw std::invalid_argument("cyclic_code_from_check: H does not divide x^n - 1");
  }
  const int k = H.degree();
  SpanBasis basis(n);
  for (int s = 0; s < k; ++s) {
    TritVec row(n);
    for (std::size_t i = 0; i < g.c.size(); ++i) {
      if (g.c[i]) row.set(static_cast<std::uint32_t>(i + s), g.c[i]);
    }
    basis.insert(std::move(row));
  }
  return LinearCode(std::move(basis));
}

}  // namespace tricode
