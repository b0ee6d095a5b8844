#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "tricode/poly3.hpp"

using namespace tricode;

TEST_CASE("cyclotomic cosets") {
  CHECK(cyclotomic_coset(0, 26) == std::vector<std::uint32_t>{0});
  // the coset of -4 mod 26
  CHECK(cyclotomic_coset(22, 26) == std::vector<std::uint32_t>{14, 16, 22});
  CHECK_THROWS_AS(cyclotomic_coset(26, 26), std::invalid_argument);
}

TEST_CASE("defining residues have full-size cosets for m in {5,7}") {
  for (unsigned m : {5u, 7u}) {
    std::uint32_t n = 1;
    for (unsigned i = 0; i < m; ++i) n *= 3;
    --n;
    std::uint64_t p = 1;
    for (unsigned i = 0; i < m; ++i, p *= 3) {
      for (std::uint64_t e : {2 * p + 2, 2 * p + 1, p + 1}) {
        const std::uint32_t r = static_cast<std::uint32_t>((n - e % n) % n);
        CHECK(cyclotomic_coset(r, n).size() == m);
      }
    }
  }
}

TEST_CASE("distinct canonical cosets partition the residues") {
  const std::uint32_t n = 80;  // m = 4
  std::set<std::uint32_t> seen;
  std::uint32_t total = 0;
  for (std::uint32_t i = 0; i < n; ++i) {
    const auto coset = cyclotomic_coset(i, n);
    if (coset.front() != i) continue;  // not the canonical representative
    for (std::uint32_t x : coset) {
      CHECK(seen.insert(x).second);
    }
    total += static_cast<std::uint32_t>(coset.size());
  }
  CHECK(total == n);
}

TEST_CASE("qary weight") {
  CHECK(qary_weight(0, 3, 3) == 0);
  CHECK(qary_weight(26, 3, 3) == 6);  // digits (2,2,2)
  CHECK(qary_weight(5, 2, 3) == 2);
  CHECK_THROWS_AS(qary_weight(27, 3, 3), std::invalid_argument);
  // constant on every 3-cyclotomic coset mod 3^4 - 1
  for (std::uint32_t i = 0; i < 80; ++i) {
    const auto coset = cyclotomic_coset(i, 80);
    for (std::uint32_t x : coset) CHECK(qary_weight(x, 3, 4) == qary_weight(i, 3, 4));
  }
}

TEST_CASE("polynomial arithmetic") {
  const Poly a({1, 2, 0, 1});  // 1 + 2x + x^3
  const Poly b({2, 1});        // 2 + x
  const auto [q, r] = divmod(a, b);
  CHECK(add(mul(q, b), r) == a);
  CHECK(gcd(mul(a, b), b) == monic(b));
  CHECK(lcm_polys({b, b}) == monic(b));
  CHECK(lcm_polys({Poly({2, 1}), Poly({1, 1})}) == Poly({2, 0, 1}));  // (x-1)(x+1) = x^2-1
  CHECK_THROWS_AS(divmod(a, Poly()), std::invalid_argument);
  CHECK_THROWS_AS(lcm_polys({Poly()}), std::invalid_argument);
}

TEST_CASE("minimal polynomials") {
  const Field f(5);
  CHECK(minimal_polynomial(f, 0) == Poly({2, 1}));  // x - 1
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::uint32_t> any(0, f.size() - 2);
  for (int round = 0; round < 50; ++round) {
    const std::uint32_t i = any(rng);
    const Poly mi = minimal_polynomial(f, i);
    CHECK(static_cast<std::size_t>(mi.degree()) == cyclotomic_coset(i, f.size() - 1).size());
    CHECK(eval_in_field(mi, f, f.exp(i)) == 0);
    // same polynomial exactly when the cosets coincide
    const std::uint32_t j = any(rng);
    const bool same_coset = cyclotomic_coset(i, f.size() - 1) == cyclotomic_coset(j, f.size() - 1);
    CHECK((minimal_polynomial(f, j) == mi) == same_coset);
  }
}

TEST_CASE("parity-check lcm for the defining residues, m=5") {
  const Field f(5);
  const std::uint32_t n = f.size() - 1;
  std::vector<Poly> mins;
  std::uint64_t p = 1;
  for (unsigned i = 0; i < 5; ++i, p *= 3) {
    for (std::uint64_t e : {2 * p + 2, 2 * p + 1, p + 1}) {
      mins.push_back(minimal_polynomial(f, static_cast<std::uint32_t>((n - e % n) % n)));
    }
  }
  const Poly H = lcm_polys(mins);
  CHECK(H.degree() == 50);  // 2 m^2
  // H and its cofactor multiply back to x^n - 1 exactly
  const Poly xn1 = Poly::x_pow_minus_one(n);
  const auto [g, rem] = divmod(xn1, H);
  CHECK(rem.is_zero());
  CHECK(mul(g, H) == xn1);
  CHECK(cyclic_code_from_check(H, n).dimension() == 50);
}

TEST_CASE("cyclic code from a parity check") {
  CHECK(cyclic_code_from_check(Poly({2, 1}), 4).dimension() == 1);  // repetition
  const LinearCode rep = cyclic_code_from_check(Poly({2, 1}), 4);
  CHECK(rep.contains(TritVec::ones(4)));
  // dimension equals the degree for random check polynomials
  const Field f(3);
  for (std::uint32_t i : {1u, 2u, 4u}) {
    const Poly h = mul(minimal_polynomial(f, 0), minimal_polynomial(f, i));
    const LinearCode c = cyclic_code_from_check(h, 26);
    CHECK(c.dimension() == static_cast<std::uint32_t>(h.degree()));
    // codewords are annihilated by the check: c(x) H(x) = 0 mod x^n - 1
    const auto& row = c.generator_rows().front();
    Poly cw;
    cw.c.assign(26, 0);
    for (std::uint32_t t = 0; t < 26; ++t) cw.c[t] = row.get(t);
    while (!cw.c.empty() && cw.c.back() == 0) cw.c.pop_back();
    const Poly prod = divmod(mul(cw, h), Poly::x_pow_minus_one(26)).second;
    CHECK(prod.is_zero());
  }
  CHECK_THROWS_AS(cyclic_code_from_check(Poly({1, 1, 1}), 4), std::invalid_argument);
}
