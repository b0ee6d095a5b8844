#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "tricode/gf3m.hpp"

using tricode::Field;

namespace {

// Independent irreducibility oracle: trial division with its own
// polynomial arithmetic, no shared code with the library.
bool oracle_irreducible(const std::vector<std::uint8_t>& p) {
  const unsigned m = static_cast<unsigned>(p.size()) - 1;
  if (m == 1) return true;
  for (unsigned d = 1; d <= m / 2; ++d) {
    std::uint32_t total = 1;
    for (unsigned i = 0; i < d; ++i) total *= 3;
    for (std::uint32_t v = 0; v < total; ++v) {
      std::vector<std::uint8_t> div(d + 1);
      std::uint32_t t = v;
      for (unsigned i = 0; i < d; ++i) {
        div[i] = static_cast<std::uint8_t>(t % 3);
        t /= 3;
      }
      div[d] = 1;
      std::vector<std::uint8_t> rem = p;
      while (rem.size() >= div.size()) {
        const std::uint8_t c = rem.back();
        if (c) {
          const std::size_t sh = rem.size() - div.size();
          for (std::size_t i = 0; i < div.size(); ++i) {
            rem[sh + i] = static_cast<std::uint8_t>((rem[sh + i] + 3 - c * div[i] % 3) % 3);
          }
        }
        rem.pop_back();
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
      }
      bool zero = true;
      for (std::uint8_t c : rem) {
        if (c) zero = false;
      }
      if (zero) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("construction and sizes") {
  CHECK(Field(1).size() == 3);
  CHECK(Field(1).modulus() == std::vector<std::uint8_t>{0, 1});
  CHECK(Field(3).size() == 27);
  CHECK(Field(5).size() == 243);
  CHECK_THROWS_AS(Field(0), std::out_of_range);
  CHECK_THROWS_AS(Field(13), std::out_of_range);
  CHECK_THROWS_WITH_AS(Field(13), doctest::Contains("12"), std::out_of_range);
}

TEST_CASE("modulus table matches the shipped asset") {
  std::ifstream in(TRICODE_MODULI_ASSET);
  REQUIRE(in.good());
  std::ostringstream file;
  file << in.rdbuf();
  CHECK(file.str() == Field::modulus_table_text());
}

TEST_CASE("table moduli are the smallest irreducibles") {
  for (unsigned m = 1; m <= 6; ++m) {
    const auto mod = Field::table_modulus(m);
    REQUIRE(oracle_irreducible(mod));
    // nothing lexicographically smaller is irreducible
    std::uint32_t value = 0, p = 1;
    for (unsigned i = 0; i < m; ++i) {
      value += mod[i] * p;
      p *= 3;
    }
    for (std::uint32_t v = 0; v < value; ++v) {
      std::vector<std::uint8_t> cand(m + 1);
      std::uint32_t t = v;
      for (unsigned i = 0; i < m; ++i) {
        cand[i] = static_cast<std::uint8_t>(t % 3);
        t /= 3;
      }
      cand[m] = 1;
      CHECK_FALSE(oracle_irreducible(cand));
    }
  }
}

TEST_CASE("trace table") {
  for (unsigned m : {2u, 3u, 4u, 5u, 6u}) {
    const Field f(m);
    CHECK(f.trace(0) == 0);
    // balance: each value hit exactly 3^{m-1} times
    std::uint32_t cnt[3] = {0, 0, 0};
    for (std::uint32_t x = 0; x < f.size(); ++x) ++cnt[f.trace(x)];
    for (int c = 0; c < 3; ++c) CHECK(cnt[c] == f.size() / 3);
    // table equals the naive Frobenius orbit sum
    for (std::uint32_t x = 0; x < f.size(); ++x) {
      std::uint32_t acc = 0, y = x;
      for (unsigned j = 0; j < m; ++j) {
        acc = f.add(acc, y);
        y = f.mul(f.mul(y, y), y);
      }
      REQUIRE(acc == f.trace(x));
    }
  }
}

TEST_CASE("addition is digitwise base-3") {
  for (unsigned m : {2u, 5u}) {
    const Field f(m);
    std::mt19937 rng(m);
    std::uniform_int_distribution<std::uint32_t> any(0, f.size() - 1);
    for (int round = 0; round < 2000; ++round) {
      std::uint32_t a = any(rng), b = any(rng);
      const std::uint32_t got = f.add(a, b);
      std::uint32_t want = 0, p = 1;
      for (unsigned i = 0; i < m; ++i) {
        want += (a % 3 + b % 3) % 3 * p;
        a /= 3;
        b /= 3;
        p *= 3;
      }
      REQUIRE(got == want);
    }
    for (std::uint32_t x = 0; x < f.size(); ++x) {
      CHECK(f.add(x, f.neg(x)) == 0);
      CHECK(f.sub(x, x) == 0);
    }
  }
}

TEST_CASE("trace linearity on sampled pairs") {
  const Field f(4);
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::uint32_t> any(0, f.size() - 1);
  for (int i = 0; i < 1000; ++i) {
    const std::uint32_t x = any(rng), y = any(rng);
    CHECK((f.trace(x) + f.trace(y)) % 3 == f.trace(f.add(x, y)));
  }
}

TEST_CASE("squares and nonsquares") {
  const Field f1(1);
  CHECK(f1.nonzero_squares() == std::vector<std::uint32_t>{1});
  CHECK(f1.nonsquares() == std::vector<std::uint32_t>{2});
  CHECK(Field(3).nonzero_squares().size() == 13);
  for (unsigned m : {1u, 3u, 5u}) {
    const Field f(m);
    CHECK_FALSE(f.is_square(f.neg(1)));  // -1 is a nonsquare for odd m
    // Q really is the image of squaring
    std::vector<bool> hit(f.size(), false);
    for (std::uint32_t x = 1; x < f.size(); ++x) hit[f.square(x)] = true;
    for (std::uint32_t s : f.nonzero_squares()) CHECK(hit[s]);
    CHECK(f.nonzero_squares().size() == (f.size() - 1) / 2);
    CHECK(f.nonsquares().size() == (f.size() - 1) / 2);
  }
}

TEST_CASE("primitive element") {
  CHECK(Field(1).primitive_element() == 2);
  CHECK(Field(1).order(2) == 2);
  for (unsigned m = 2; m <= 6; ++m) {
    const Field f(m);
    const std::uint32_t b = f.primitive_element();
    CHECK(f.order(b) == f.size() - 1);
    // nothing smaller generates
    for (std::uint32_t c = 1; c < b; ++c) CHECK(f.order(c) < f.size() - 1);
    CHECK(f.pow(b, (f.size() - 1) / 2) == f.neg(1));
  }
}

TEST_CASE("field axioms on sampled elements") {
  for (unsigned m : {2u, 4u, 5u}) {
    const Field f(m);
    std::mt19937 rng(m);
    std::uniform_int_distribution<std::uint32_t> any(0, f.size() - 1);
    for (int i = 0; i < 500; ++i) {
      const std::uint32_t x = any(rng), y = any(rng), z = any(rng);
      CHECK(f.mul(x, y) == f.mul(y, x));
      CHECK(f.add(x, y) == f.add(y, x));
      CHECK(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
      CHECK(f.pow(x, f.size()) == x);  // x^q = x
      if (x) {
        CHECK(f.mul(f.inv(x), x) == 1);
        CHECK(f.pow(x, f.size() - 1) == 1);
      }
    }
  }
}

TEST_CASE("power sums vanish") {
  for (unsigned m = 2; m <= 6; ++m) {
    const Field f(m);
    std::uint32_t s1 = 0, s2 = 0;
    for (std::uint32_t x = 0; x < f.size(); ++x) {
      s1 = f.add(s1, x);
      s2 = f.add(s2, f.square(x));
    }
    CHECK(s1 == 0);
    CHECK(s2 == 0);
  }
}

TEST_CASE("coordinates round-trip") {
  const Field f(4);
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    CHECK(f.from_coords(f.coords(x)) == x);
  }
  CHECK(f.basis_element(0) == 1);
  CHECK(f.basis_element(2) == 9);
}
