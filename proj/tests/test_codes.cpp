#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "tricode/codes.hpp"
#include "tricode/quadcode.hpp"

using namespace tricode;

namespace {

LinearCode random_code(std::mt19937& rng, std::uint32_t n, unsigned rows) {
  std::uniform_int_distribution<int> d(0, 2);
  std::vector<TritVec> rs;
  for (unsigned r = 0; r < rows; ++r) {
    TritVec v(n);
    for (std::uint32_t i = 0; i < n; ++i) v.set(i, static_cast<std::uint8_t>(d(rng)));
    rs.push_back(std::move(v));
  }
  return code_from_rows(n, rs);
}

}  // namespace

TEST_CASE("code construction") {
  const std::vector<TritVec> e = {TritVec::from_digits("100"), TritVec::from_digits("010"),
                                  TritVec::from_digits("001")};
  CHECK(code_from_rows(3, e).dimension() == 3);
  CHECK(code_from_rows(3, {}).dimension() == 0);
  CHECK(code_from_rows(3, {e[0], e[0], e[1]}) == code_from_rows(3, {e[0], e[1]}));
}

TEST_CASE("dual") {
  std::mt19937 rng(20);
  const LinearCode full = code_from_rows(4, {TritVec::from_digits("1000"), TritVec::from_digits("0100"),
                                             TritVec::from_digits("0010"), TritVec::from_digits("0001")});
  CHECK(full.dual().dimension() == 0);
  CHECK(code_from_rows(4, {}).dual() == full);
  for (int round = 0; round < 20; ++round) {
    const LinearCode c = random_code(rng, 12, 1 + rng() % 10);
    const LinearCode d = c.dual();
    CHECK(c.dimension() + d.dimension() == 12);
    CHECK(d.dual() == c);
    for (const TritVec& g : c.generator_rows()) {
      for (const TritVec& h : d.generator_rows()) CHECK(g.dot(h) == 0);
    }
  }
}

TEST_CASE("extend puncture augment") {
  std::mt19937 rng(21);
  for (int round = 0; round < 20; ++round) {
    const LinearCode c = random_code(rng, 10, 1 + rng() % 8);
    const LinearCode ext = c.extended();
    CHECK(ext.dimension() == c.dimension());
    CHECK(ext.punctured_last() == c);
    for (const TritVec& r : ext.generator_rows()) {
      std::uint32_t s = 0;
      for (std::uint32_t i = 0; i < ext.length(); ++i) s += r.get(i);
      CHECK(s % 3 == 0);  // extended words sum to zero
    }
    const LinearCode aug = c.augmented();
    CHECK(aug.augmented() == aug);
    CHECK(aug.contains(TritVec::ones(10)));
    const unsigned grew = c.contains(TritVec::ones(10)) ? 0 : 1;
    CHECK(aug.dimension() == c.dimension() + grew);
  }
  // extension weight stays within one of the original
  const LinearCode c = random_code(rng, 9, 4);
  const LinearCode ext = c.extended();
  for (std::size_t i = 0; i < c.generator_rows().size(); ++i) {
    const std::uint64_t w = c.generator_rows()[i].weight();
    const std::uint64_t we = ext.generator_rows()[i].weight();
    CHECK(we >= w);
    CHECK(we <= w + 1);
  }
  CHECK_THROWS_AS(LinearCode(1).punctured_last(), std::invalid_argument);
}

TEST_CASE("gray enumeration visits every codeword exactly once") {
  std::mt19937 rng(22);
  const LinearCode c = random_code(rng, 9, 5);
  std::set<std::string> seen;
  std::uint64_t visits = 0;
  for_each_codeword(c, [&](const TritVec& w) {
    ++visits;
    seen.insert(w.to_digits());
    REQUIRE(c.contains(w));
  });
  std::uint64_t expect = 1;
  for (unsigned i = 0; i < c.dimension(); ++i) expect *= 3;
  CHECK(visits == expect);
  CHECK(seen.size() == expect);
}

TEST_CASE("weight distribution basics") {
  CHECK(code_from_rows(6, {}).weight_distribution().count(0) == 1);
  CHECK(code_from_rows(6, {}).weight_distribution().nonzero_weights().empty());
  std::uint64_t visits = 0;
  for_each_codeword(code_from_rows(6, {}), [&](const TritVec& w) {
    ++visits;
    CHECK(w.is_zero());
  });
  CHECK(visits == 1);
  const Field f(3);
  const WeightEnumerator we = quadratic_code(f).weight_distribution();
  CHECK(we.count(15) == 702);
  CHECK(we.count(18) == 780);
  CHECK(we.count(21) == 702);
  CHECK(we.count(27) == 2);
  CHECK(we.nonzero_weights() == std::vector<std::uint32_t>{15, 18, 21, 27});
  // sharded enumeration agrees
  CHECK(quadratic_code(f).weight_distribution(4) == we);
}

TEST_CASE("enumeration guard names the alternative") {
  std::vector<TritVec> rows;
  for (std::uint32_t i = 0; i < 22; ++i) {
    TritVec v(22);
    v.set(i, 1);
    rows.push_back(std::move(v));
  }
  const LinearCode big = code_from_rows(22, rows);
  CHECK_THROWS_WITH_AS(big.weight_distribution(), doctest::Contains("macwilliams"), infeasible_error);
}

TEST_CASE("macwilliams transform") {
  // zero code of length n maps to the full space
  const WeightEnumerator zero = code_from_rows(5, {}).weight_distribution();
  const WeightEnumerator full = macwilliams(zero);
  CHECK(full.dimension() == 5);
  CHECK(full.count(1) == 10);  // C(5,1) * 2
  CHECK(full.count(5) == 32);  // 2^5

  std::mt19937 rng(23);
  for (int round = 0; round < 50; ++round) {
    const std::uint32_t n = 6 + rng() % 10;  // n <= 15
    const LinearCode c = random_code(rng, n, 1 + rng() % 10);
    if (c.dimension() > 10) continue;
    const WeightEnumerator wc = c.weight_distribution();
    // oracle equivalence with the constructed dual
    CHECK(macwilliams(wc) == c.dual().weight_distribution());
    // involution
    CHECK(macwilliams(macwilliams(wc)) == wc);
  }
}

TEST_CASE("macwilliams rejects inconsistent input") {
  WeightEnumerator bad(5, 2);
  bad.set_count(0, 1);
  bad.set_count(1, 8);  // sums to 9 = 3^2 but the transform is fractional
  CHECK_THROWS_AS(macwilliams(bad), std::logic_error);
  WeightEnumerator bad2(5, 2);
  bad2.set_count(0, 1);
  bad2.set_count(1, 3);
  CHECK_THROWS_AS(macwilliams(bad2), std::logic_error);  // sum != 3^k
}

TEST_CASE("enumerator json uses exact decimal strings") {
  WeightEnumerator we(4, 2);
  we.set_count(0, 1);
  we.set_count(2, 8);
  CHECK(we.to_json() == R"({"n":4,"k":2,"counts":{"0":"1","2":"8"}})");
}

TEST_CASE("min distance") {
  const Field f3(3);
  const LinearCode c = quadratic_code(f3);
  CHECK(c.min_distance() == 15);
  CHECK(c.dual().dimension() == 20);
  CHECK(c.dual().min_distance() == 5);  // computed through the small side
  const Field f5(5);
  CHECK(quadratic_code(f5).dual().min_distance() == 5);
  CHECK_THROWS_AS(LinearCode(4).min_distance(), std::invalid_argument);
}

TEST_CASE("permuted") {
  std::mt19937 rng(24);
  const LinearCode c = random_code(rng, 8, 4);
  std::vector<std::uint32_t> ident(8);
  for (std::uint32_t i = 0; i < 8; ++i) ident[i] = i;
  CHECK(permuted(c, ident) == c);
  std::vector<std::uint32_t> swap = ident;
  std::swap(swap[0], swap[5]);
  const LinearCode p = permuted(c, swap);
  CHECK(p.dimension() == c.dimension());
  CHECK(permuted(p, swap) == c);
}

TEST_CASE("affine invariance") {
  const Field f(3);
  const LinearCode c = quadratic_code(f);
  CHECK(is_affine_invariant(c, f));
  // negation x -> -x is itself a substitution, so it keeps the code;
  // swapping just two unrelated coordinates does not
  std::vector<std::uint32_t> negperm(27);
  for (std::uint32_t i = 0; i < 27; ++i) negperm[i] = f.neg(i);
  CHECK(is_affine_invariant(permuted(c, negperm), f));
  std::vector<std::uint32_t> perm(27);
  for (std::uint32_t i = 0; i < 27; ++i) perm[i] = i;
  std::swap(perm[1], perm[3]);
  CHECK_FALSE(is_affine_invariant(permuted(c, perm), f));
  CHECK_THROWS_AS(is_affine_invariant(LinearCode(9), f), std::invalid_argument);
}
