#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "tricode/designs.hpp"
#include "tricode/quadcode.hpp"

using namespace tricode;

namespace {

Design fano() {
  return Design(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

}  // namespace

TEST_CASE("construction validates simplicity and shape") {
  CHECK_THROWS_AS(Design(5, {{0, 1}, {0, 1, 2}}), std::invalid_argument);   // unequal sizes
  CHECK_THROWS_AS(Design(5, {{0, 1}, {1, 0}}), std::invalid_argument);      // repeated block
  CHECK_THROWS_AS(Design(5, {{0, 5}}), std::invalid_argument);              // index out of range
  CHECK_THROWS_AS(Design(5, {{1, 1, 2}}), std::invalid_argument);           // repeated point
  const Design d(5, {{2, 0}, {1, 3}});
  CHECK(d.blocks()[0] == std::vector<std::uint32_t>{0, 2});  // sorted on input
}

TEST_CASE("t-design verification") {
  const Design f = fano();
  CHECK(f.t_design_lambda(1) == 3);
  CHECK(f.t_design_lambda(2) == 1);  // the classical 2-(7,3,1)
  CHECK_FALSE(f.t_design_lambda(3).has_value());

  // a single block on all points is a design for every t
  const Design all(4, {{0, 1, 2, 3}});
  CHECK(all.t_design_lambda(1) == 1);
  CHECK(all.t_design_lambda(2) == 1);
  // a single block on a larger point set is not even a 1-design
  const Design partial(6, {{0, 1, 2, 3}});
  CHECK_FALSE(partial.t_design_lambda(1).has_value());
  CHECK_THROWS_AS(partial.t_design_lambda(0), std::invalid_argument);
  CHECK_THROWS_AS(partial.t_design_lambda(4), std::invalid_argument);
}

TEST_CASE("p-rank") {
  const Design f = fano();
  CHECK(p_rank(f, 2) == 4);  // classical 2-rank of the Fano plane
  CHECK(p_rank(f, 7) == 7);
  // packed and dense kernels agree at p = 3
  std::vector<std::vector<std::uint8_t>> rows;
  for (std::size_t i = 0; i < f.block_count(); ++i) {
    std::vector<std::uint8_t> r(f.points(), 0);
    for (std::uint32_t p : f.blocks()[i]) r[p] = 1;
    rows.push_back(std::move(r));
  }
  CHECK(p_rank(f, 3) == dense_rank_mod_p(rows, 3));
  CHECK(p_rank(f, 3, 3) == p_rank(f, 3));  // sharded result is identical
}

TEST_CASE("support designs of the quadratic-trace codes") {
  const Field f2(2);
  const Design d2 = support_design(quadratic_code(f2), 4);
  CHECK(d2.points() == 9);
  CHECK(d2.block_size() == 4);
  CHECK(p_rank(d2, 3) == 9);

  const Field f3(3);
  const LinearCode c3 = quadratic_code(f3);
  const Design d3 = support_design(c3, 15);
  CHECK(d3.points() == 27);
  CHECK(d3.block_size() == 15);
  CHECK(d3.block_count() == 351);
  CHECK(p_rank(d3, 3) == 19);
  // dedup keeps b at most the codeword count
  CHECK(d3.block_count() * 2 == 702);
  // the generic route and the parametrized route agree
  CHECK(d3 == min_weight_design(f3));
  CHECK_THROWS_AS(support_design(c3, 16), std::invalid_argument);
}

TEST_CASE("repetition code holds the single full block") {
  std::vector<TritVec> rows = {TritVec::ones(6)};
  const Design d = support_design(code_from_rows(6, rows), 6);
  CHECK(d.block_count() == 1);
  CHECK(d.blocks()[0] == std::vector<std::uint32_t>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("design code matches the rank and contains its rows") {
  const Design f = fano();
  const LinearCode c = design_code(f);
  CHECK(c.dimension() == p_rank(f, 3));
  for (std::size_t i = 0; i < f.block_count(); ++i) CHECK(c.contains(f.incidence_row(i)));
}

TEST_CASE("json round trip") {
  const Design f = fano();
  const Design back = Design::from_json(f.to_json());
  CHECK(back == f);
  CHECK(f.to_json().substr(0, 16) == R"({"v":7,"k":3,"bl)");
}

TEST_CASE("binary round trip") {
  const Field f3(3);
  const Design d = min_weight_design(f3);
  std::stringstream buf;
  d.write_binary(buf);
  CHECK(buf.str().size() == 12 + 4ull * d.block_count() * d.block_size());
  const Design back = Design::read_binary(buf);
  CHECK(back == d);
}
