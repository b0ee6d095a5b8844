#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "tricode/grm.hpp"
#include "tricode/quadcode.hpp"

using namespace tricode;

TEST_CASE("code parameters") {
  for (unsigned m = 2; m <= 6; ++m) {
    const Field f(m);
    const LinearCode c = quadratic_code(f);
    CHECK(c.length() == f.size());
    CHECK(c.dimension() == 2 * m + 1);
  }
  CHECK(quadratic_code(Field(2)).min_distance() == 4);
  CHECK(quadratic_code(Field(3)).min_distance() == 15);
}

TEST_CASE("closed-form distribution") {
  const Field f3(3);
  const WeightEnumerator t3 = quadratic_code_distribution(f3);
  CHECK(t3.count(15) == 702);
  CHECK(t3.count(18) == 780);
  CHECK(t3.count(21) == 702);
  CHECK(t3.count(27) == 2);
  CHECK(t3 == quadratic_code(f3).weight_distribution());

  const Field f5(5);
  const WeightEnumerator t5 = quadratic_code_distribution(f5);
  CHECK(t5.count(153) == 58806);
  CHECK(t5.count(162) == 59532);
  CHECK(t5.count(171) == 58806);
  CHECK(t5.count(243) == 2);
  CHECK(t5 == quadratic_code(f5).weight_distribution());  // 3^11 words

  CHECK_THROWS_AS(quadratic_code_distribution(Field(4)), std::invalid_argument);
}

TEST_CASE("minimum weights") {
  CHECK(quadratic_code_min_weight(Field(2)) == 4);
  CHECK(quadratic_code_min_weight(Field(3)) == 15);
  CHECK(quadratic_code_min_weight(Field(4)) == 48);
  CHECK(quadratic_code_min_weight(Field(5)) == 153);
}

TEST_CASE("best constant shift") {
  const Field f3(3);
  std::uint64_t total = 0;
  const std::uint32_t d = quadratic_code_min_weight(f3);
  for (std::uint32_t a = 1; a < 27; ++a) {
    for (std::uint32_t b = 0; b < 27; ++b) {
      const MinShift ms = best_constant_shift(f3, a, b);
      CHECK(ms.unique);
      CHECK(ms.weight == d);
      ++total;
      // substituting -b permutes coordinates, so the weight is unchanged
      CHECK(quadratic_word(f3, a, b, ms.shift).weight() ==
            quadratic_word(f3, a, f3.neg(b), ms.shift).weight());
    }
  }
  CHECK(total == 27 * 26);  // q(q-1) minimum-weight words, one per pair
  CHECK_THROWS_AS(best_constant_shift(f3, 0, 1), std::invalid_argument);

  // even m: ties happen and are reported, not thrown
  const Field f4(4);
  const MinShift tied = best_constant_shift(f4, 1, 0);
  CHECK_FALSE(tied.unique);
  CHECK(tied.weight == 51);  // the best shift of this pair stays above d = 48
}

TEST_CASE("support stream for odd m") {
  const Field f(3);
  const std::uint32_t d = quadratic_code_min_weight(f);
  std::set<std::string> supports;
  std::uint64_t rows = 0;
  for_each_min_weight_support(f, [&](const TritVec& row) {
    ++rows;
    CHECK(row.weight() == d);
    supports.insert(row.to_digits());
  });
  CHECK(rows == 27 * 26 / 2);
  CHECK(supports.size() == rows);  // pairwise distinct
}

TEST_CASE("supports of proportional words coincide") {
  const Field f(3);
  std::mt19937 rng(31);
  std::uniform_int_distribution<std::uint32_t> nz(1, 26), any(0, 26);
  for (int round = 0; round < 30; ++round) {
    const std::uint32_t a = nz(rng), b = any(rng);
    const MinShift ms = best_constant_shift(f, a, b);
    const TritVec w = quadratic_word(f, a, b, ms.shift);
    const TritVec wn = std::uint8_t(2) * w;
    CHECK(pointwise_product(w, w) == pointwise_product(wn, wn));
  }
}

TEST_CASE("designs from minimum-weight supports") {
  CHECK(min_weight_design(Field(2)).block_count() == 18);
  const Design d3 = min_weight_design(Field(3));
  CHECK(d3.block_count() == 351);
  CHECK(d3.t_design_lambda(2) == 105);
  const Design d4 = min_weight_design(Field(4));
  CHECK(d4.block_count() == 1620);
  CHECK(d4.block_size() == 48);
  CHECK(d4.t_design_lambda(2) == 564);
  CHECK_THROWS_AS(min_weight_design(Field(6)), infeasible_error);
  CHECK_THROWS_AS(min_weight_design(Field(7)), infeasible_error);
}

TEST_CASE("coset dimension route") {
  const std::uint32_t expect[] = {9, 19, 33, 51, 73, 99};
  for (unsigned m = 2; m <= 7; ++m) {
    CHECK(design_dimension_from_cosets(m) == expect[m - 2]);
    CHECK(design_dimension_from_cosets(m) == 2 * m * m + 1);
  }
}

TEST_CASE("coset structure for m = 5") {
  const CosetStructure cs = coset_structure(5);
  CHECK(cs.sizes_all_m);
  CHECK(cs.b_pairwise_disjoint);
  CHECK(cs.a_half_disjoint_covers);
  CHECK(cs.c_half_disjoint_covers);
  CHECK(cs.b_vs_a_half_disjoint);
  CHECK(cs.b_vs_c_half_disjoint);
  CHECK(cs.a_c_single_coincidence);
  CHECK(cs.coinciding_pair == std::make_pair(0u, 1u));
  CHECK(cs.union_size == 50);
  // family bookkeeping: ((m+1)/2 + (m+1)/2 - 1 + m) m = 2 m^2
  const unsigned m = 5;
  CHECK(((m + 1) / 2 + (m + 1) / 2 - 1 + m) * m == 2 * m * m);
  CHECK_THROWS_AS(coset_structure(4), std::invalid_argument);
}

TEST_CASE("streamed rank equals the design code dimension") {
  const Field f(3);
  const StreamRank sr = min_weight_support_rank(f);
  CHECK(sr.complete);
  CHECK(sr.rank == 19);
  CHECK(sr.rows == 351);
  const StreamRank sr2 = min_weight_support_rank(f, 2);
  CHECK(sr2.rank == 19);
  CHECK(min_weight_design_code(f).dimension() == 19);
  CHECK(min_weight_design_code(f, 2) == min_weight_design_code(f));

  // m = 5: the 29403 streamed incidence rows span all of 2m^2+1 = 51
  const StreamRank sr5 = min_weight_support_rank(Field(5), 2);
  CHECK(sr5.complete);
  CHECK(sr5.rank == 51);
  CHECK(sr5.rows == 243 * 242 / 2);

  // a zero-second deadline yields an honest partial result
  const StreamRank partial = min_weight_support_rank(Field(5), 1, std::chrono::seconds(0));
  CHECK_FALSE(partial.complete);
}

TEST_CASE("generating families span the design code at m = 3") {
  const Field f(3);
  const LinearCode dc = min_weight_design_code(f);
  CHECK(code_from_rows(27, trace_product_generators(f)) == dc);
  CHECK(code_from_rows(27, trace_monomial_generators(f)) == dc);
  const LinearCode grm = grm_code(f, 4);
  for (const TritVec& r : dc.generator_rows()) CHECK(grm.contains(r));
}

TEST_CASE("cyclic route at m = 3") {
  const Field f(3);
  const LinearCode cyc = cyclic_check_code(f);
  CHECK(cyc.length() == 26);
  CHECK(cyc.dimension() == 18);
  const LinearCode mapped = permuted(cyc.extended().augmented(), field_coordinate_map(f));
  CHECK(mapped == min_weight_design_code(f));
}

TEST_CASE("m = 4 witness") {
  const TritVec w = TritVec::from_digits(low_weight_witness_m4());
  CHECK(w.size() == 81);
  CHECK(w.weight() == 21);
  const LinearCode dc = min_weight_design_code(Field(4));
  CHECK(dc.dimension() == 33);
  CHECK(dc.contains(w));
}
