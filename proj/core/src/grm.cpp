#include "tricode/grm.hpp"

#include <stdexcept>

#include "tricode/poly3.hpp"

namespace tricode {

namespace {

std::int64_t binom_i64(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < b) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

BigInt pow_big(unsigned base, unsigned e) {
  BigInt r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

GrmParams::GrmParams(unsigned q_, unsigned m_, unsigned ell_) : q(q_), m(m_), ell(ell_) {
  if (q < 2 || m < 1) throw std::invalid_argument("GrmParams: need q >= 2 and m >= 1");
  if (ell >= (q - 1) * m) {
    throw std::invalid_argument("GrmParams: order " + std::to_string(ell) + " out of range [0, " +
                                std::to_string((q - 1) * m) + ")");
  }
  ell1 = ell / (q - 1);
  ell0 = ell % (q - 1);
}

std::uint64_t grm_dimension(const GrmParams& p) {
  std::int64_t kappa = 0;
  for (unsigned i = 0; i <= p.ell; ++i) {
    for (unsigned j = 0; j <= p.m; ++j) {
      const std::int64_t top = static_cast<std::int64_t>(i) - static_cast<std::int64_t>(j) * p.q;
      const std::int64_t term = binom_i64(p.m, j) * binom_i64(top + p.m - 1, top);
      kappa += (j & 1) ? -term : term;
    }
  }
  if (kappa < 0) throw std::logic_error("grm_dimension: negative result");
  return static_cast<std::uint64_t>(kappa);
}

BigInt grm_min_weight_count(const GrmParams& p) {
  const unsigned q = p.q;
  BigInt num = pow_big(q, p.ell1);
  for (unsigned j = p.m; j >= p.ell1 + 1 && j > 0; --j) num *= pow_big(q, j) - 1;
  BigInt den = 1;
  for (unsigned j = p.m - p.ell1; j >= 1; --j) den *= pow_big(q, j) - 1;
  if (num % den != 0) throw std::logic_error("grm_min_weight_count: non-integral quotient");
  BigInt a = (q - 1) * (num / den);
  if (p.ell0 != 0) {
    BigInt n0 = 1;
    for (unsigned i = 0; i < p.ell0; ++i) n0 = n0 * (q - i) / (i + 1);  // C(q, ell0)
    n0 *= (pow_big(q, p.m - p.ell1) - 1) / (q - 1);
    a *= n0;
  }
  return a;
}

std::uint64_t grm_min_weight(const GrmParams& p) {
  std::uint64_t w = p.q - p.ell0;
  for (unsigned i = 0; i + p.ell1 + 1 < p.m; ++i) w *= p.q;
  return w;
}

unsigned grm_dual_order(const GrmParams& p) { return p.m * (p.q - 1) - 1 - p.ell; }

LinearCode grm_code(const Field& field, unsigned ell) {
  const unsigned m = field.degree();
  const GrmParams params(3, m, ell);
  (void)params;  // range validation
  const std::uint32_t q = field.size();

  SpanBasis basis(q);
  // Exponent vectors in lexicographic order, e_i in {0,1,2}.
  std::vector<std::uint8_t> e(m, 0);
  for (;;) {
    unsigned total = 0;
    for (std::uint8_t v : e) total += v;
    if (total <= ell) {
      TritVec row(q);
      for (std::uint32_t pt = 0; pt < q; ++pt) {
        std::uint32_t digits = pt;
        unsigned val = 1;
        for (unsigned i = 0; i < m && val; ++i) {
          const unsigned d = digits % 3;
          digits /= 3;
          for (unsigned rep = 0; rep < e[i] && val; ++rep) val = (val * d) % 3;
        }
        if (val) row.set(pt, static_cast<std::uint8_t>(val));
      }
      basis.insert(std::move(row));
    }
    // next exponent vector
    unsigned i = 0;
    while (i < m && e[i] == 2) e[i++] = 0;
    if (i == m) break;
    ++e[i];
  }
  return LinearCode(std::move(basis));
}

LinearCode punctured_grm(const Field& field, unsigned ell) {
  const unsigned m = field.degree();
  if (ell < 1) throw std::invalid_argument("punctured_grm: order must be at least 1");
  const GrmParams params(3, m, ell);
  (void)params;  // range validation
  const std::uint32_t n = field.size() - 1;
  const unsigned bound = 2 * m - ell;  // wt_3(j) < bound keeps the root alpha^j

  // The digit weight is constant on cyclotomic cosets, so the generator is
  // a product of minimal polynomials over distinct cosets.
  std::vector<bool> seen(n, false);
  Poly g = Poly::one();
  for (std::uint32_t j = 1; j < n; ++j) {
    if (seen[j]) continue;
    const auto coset = cyclotomic_coset(j, n);
    for (std::uint32_t t : coset) seen[t] = true;
    if (qary_weight(j, 3, m) < bound) g = mul(g, minimal_polynomial(field, j));
  }

  const std::uint32_t k = n - static_cast<std::uint32_t>(g.degree());
  SpanBasis basis(n);
  for (std::uint32_t s = 0; s < k; ++s) {
    TritVec row(n);
    for (std::size_t i = 0; i < g.c.size(); ++i) {
      if (g.c[i]) row.set(static_cast<std::uint32_t>(i) + s, g.c[i]);
    }
    basis.insert(std::move(row));
  }
  return LinearCode(std::move(basis));
}

std::vector<std::uint32_t> field_coordinate_map(const Field& field) {
  const std::uint32_t q = field.size();
  std::vector<std::uint32_t> pos(q, 0);
  pos[0] = q - 1;  // the parity position appended by extended()
  for (std::uint32_t j = 0; j + 1 < q; ++j) pos[field.exp(j)] = j;
  return pos;
}

}  // namespace tricode
