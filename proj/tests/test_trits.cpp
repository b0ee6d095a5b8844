#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "tricode/trits.hpp"

using tricode::SpanBasis;
using tricode::TritMat;
using tricode::TritVec;

namespace {

std::vector<std::uint8_t> random_digits(std::mt19937& rng, std::uint32_t n) {
  std::uniform_int_distribution<int> d(0, 2);
  std::vector<std::uint8_t> v(n);
  for (auto& x : v) x = static_cast<std::uint8_t>(d(rng));
  return v;
}

TritVec from_vec(const std::vector<std::uint8_t>& d) {
  TritVec v(static_cast<std::uint32_t>(d.size()));
  for (std::uint32_t i = 0; i < d.size(); ++i) v.set(i, d[i]);
  return v;
}

}  // namespace

TEST_CASE("pack round-trip and digits") {
  std::mt19937 rng(1);
  for (std::uint32_t n : {1u, 63u, 64u, 65u, 130u, 243u}) {
    const auto d = random_digits(rng, n);
    const TritVec v = from_vec(d);
    for (std::uint32_t i = 0; i < n; ++i) REQUIRE(v.get(i) == d[i]);
    CHECK(TritVec::from_digits(v.to_digits()) == v);
  }
  CHECK_THROWS_AS(TritVec::from_digits("0123"), std::invalid_argument);
}

TEST_CASE("add and sub against naive arithmetic") {
  std::mt19937 rng(2);
  for (int round = 0; round < 200; ++round) {
    const std::uint32_t n = 1 + rng() % 200;
    const auto da = random_digits(rng, n);
    const auto db = random_digits(rng, n);
    TritVec a = from_vec(da), b = from_vec(db);
    TritVec sum = a;
    sum.add_assign(b);
    TritVec diff = a;
    diff.sub_assign(b);
    for (std::uint32_t i = 0; i < n; ++i) {
      CHECK(sum.get(i) == (da[i] + db[i]) % 3);
      CHECK(diff.get(i) == (da[i] + 3 - db[i]) % 3);
    }
  }
}

TEST_CASE("vector space axioms") {
  std::mt19937 rng(3);
  for (int round = 0; round < 100; ++round) {
    const std::uint32_t n = 1 + rng() % 100;
    const TritVec a = from_vec(random_digits(rng, n));
    const TritVec b = from_vec(random_digits(rng, n));
    const TritVec c = from_vec(random_digits(rng, n));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK(a - a == TritVec(n));
    CHECK(std::uint8_t(2) * (std::uint8_t(2) * a) == a);
    CHECK(a + a + a == TritVec(n));
  }
}

TEST_CASE("weight") {
  std::mt19937 rng(4);
  for (int round = 0; round < 50; ++round) {
    const std::uint32_t n = 1 + rng() % 300;
    const auto d = random_digits(rng, n);
    const TritVec v = from_vec(d);
    const std::uint64_t naive =
        static_cast<std::uint64_t>(std::count_if(d.begin(), d.end(), [](std::uint8_t x) { return x != 0; }));
    CHECK(v.weight() == naive);
    CHECK((std::uint8_t(2) * v).weight() == naive);
  }
  CHECK(TritVec::ones(77).weight() == 77);
}

TEST_CASE("dot product against naive") {
  std::mt19937 rng(5);
  for (int round = 0; round < 100; ++round) {
    const std::uint32_t n = 1 + rng() % 150;
    const auto da = random_digits(rng, n);
    const auto db = random_digits(rng, n);
    unsigned naive = 0;
    for (std::uint32_t i = 0; i < n; ++i) naive += da[i] * db[i];
    CHECK(from_vec(da).dot(from_vec(db)) == naive % 3);
  }
}

TEST_CASE("pointwise product against naive") {
  std::mt19937 rng(6);
  const std::uint32_t n = 200;
  const auto da = random_digits(rng, n);
  const auto db = random_digits(rng, n);
  const TritVec p = pointwise_product(from_vec(da), from_vec(db));
  for (std::uint32_t i = 0; i < n; ++i) CHECK(p.get(i) == da[i] * db[i] % 3);
}

TEST_CASE("rank basics") {
  TritMat id3{3, {TritVec::from_digits("100"), TritVec::from_digits("010"), TritVec::from_digits("001")}};
  CHECK(tricode::rank(id3) == 3);
  TritMat zero{7, std::vector<TritVec>(5, TritVec(7))};
  CHECK(tricode::rank(zero) == 0);
  TritMat ragged{3, {TritVec(3), TritVec(4)}};
  CHECK_THROWS_AS(tricode::rank(ragged), std::invalid_argument);
}

TEST_CASE("insert idempotence and scalar multiples") {
  std::mt19937 rng(7);
  const TritVec v = from_vec(random_digits(rng, 40));
  SpanBasis basis(40);
  CHECK(basis.insert(v));
  CHECK_FALSE(basis.insert(v));
  CHECK_FALSE(basis.insert(std::uint8_t(2) * v));
  CHECK(basis.contains(TritVec(40)));
  for (const TritVec& row : basis.rows()) CHECK(basis.contains(row));
}

TEST_CASE("full elimination equals streaming insertion in any order") {
  std::mt19937 rng(8);
  for (int round = 0; round < 100; ++round) {
    TritMat mat;
    mat.cols = 30;
    for (int r = 0; r < 20; ++r) mat.rows.push_back(from_vec(random_digits(rng, 30)));
    const std::uint32_t full = tricode::rank(mat);

    std::vector<std::size_t> order(mat.rows.size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    SpanBasis basis(30);
    for (std::size_t i : order) basis.insert(mat.rows[i]);
    CHECK(basis.rank() == full);
  }
}

TEST_CASE("span basis stays in reduced echelon form") {
  std::mt19937 rng(9);
  SpanBasis basis(60);
  for (int i = 0; i < 40; ++i) basis.insert(from_vec(random_digits(rng, 60)));
  const auto& pivots = basis.pivots();
  const auto& rows = basis.rows();
  REQUIRE(pivots.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i > 0) CHECK(pivots[i - 1] < pivots[i]);
    CHECK(rows[i].get(pivots[i]) == 1);
    CHECK(rows[i].first_nonzero() == pivots[i]);
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (j != i) CHECK(rows[j].get(pivots[i]) == 0);
    }
  }
}

TEST_CASE("merge of sharded bases is order independent") {
  std::mt19937 rng(10);
  std::vector<TritVec> rows;
  for (int i = 0; i < 60; ++i) rows.push_back(from_vec(random_digits(rng, 45)));
  SpanBasis whole(45);
  for (const auto& r : rows) whole.insert(r);

  SpanBasis s1(45), s2(45), s3(45);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    (i % 3 == 0 ? s1 : i % 3 == 1 ? s2 : s3).insert(rows[i]);
  }
  SpanBasis merged = s3;
  merged.merge(s1);
  merged.merge(s2);
  CHECK(merged.rank() == whole.rank());
  CHECK(merged == whole);  // canonical RREF of the same span
}

TEST_CASE("length mismatches throw") {
  SpanBasis basis(10);
  CHECK_THROWS_AS(basis.insert(TritVec(9)), std::invalid_argument);
  CHECK_THROWS_AS(basis.contains(TritVec(11)), std::invalid_argument);
  TritVec a(5), b(6);
  CHECK_THROWS_AS(a.add_assign(b), std::invalid_argument);
  CHECK_THROWS_AS(a.dot(b), std::invalid_argument);
}
