#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "tricode/codes.hpp"
#include "tricode/designs.hpp"
#include "tricode/gf3m.hpp"

namespace tricode {

/// The evaluation vector (Tr(a x^2 + b x) + h) over all field elements in
/// canonical index order.
TritVec quadratic_word(const Field& field, std::uint32_t a, std::uint32_t b, std::uint8_t h);

/// The evaluation vector (Tr(c x^e)) over all field elements; e >= 1.
TritVec trace_monomial_word(const Field& field, std::uint32_t c, std::uint64_t e);

/// The [3^m, 2m+1] code spanned by the quadratic and linear trace
/// evaluations over a fixed basis together with the all-one word.
LinearCode quadratic_code(const Field& field);

/// Closed-form weight distribution of the quadratic trace code for odd
/// m >= 3: counts 3^{2m}-3^m at 2*3^{m-1} -+ 3^{(m-1)/2}, (3^m+3)(3^m-1)
/// at 2*3^{m-1}, and 2 at 3^m. Even m has a different (six-weight)
/// distribution and is rejected.
WeightEnumerator quadratic_code_distribution(const Field& field);

/// Minimum weight of the quadratic trace code: 2*3^{m-1} - 3^{(m-1)/2}
/// for odd m (cross-checked on a concrete word); full enumeration for
/// even m (guarded to m <= 6).
std::uint32_t quadratic_code_min_weight(const Field& field);

struct MinShift {
  std::uint8_t shift;
  std::uint32_t weight;
  bool unique;
};

/// The constant shift h minimizing the weight of (Tr(a x^2 + b x) + h),
/// a != 0, with the achieved weight. For odd m a tie is a contradiction
/// and throws; for even m ties are reported via unique = false (the
/// smallest minimizing h is returned).
MinShift best_constant_shift(const Field& field, std::uint32_t a, std::uint32_t b);

/// Streams the 0/1 support indicators of the minimum-weight codewords.
/// Odd m: the q(q-1)/2 rows of the affine-substitution family, one per
/// parameter pair (a,b) modulo (a,b) ~ (-a,-b), each built in O(q) from
/// the zero locus of the base word. Even m (guarded to m <= 6): supports
/// collected from full enumeration; proportional codewords make each
/// support appear twice.
void for_each_min_weight_support(const Field& field, const std::function<void(const TritVec&)>& visit);

/// The support design of the minimum weight, deduplicated. Guarded to
/// m <= 5 for odd m and m <= 4 for even m (block lists get too large
/// beyond that; use min_weight_support_rank for the streamed rank).
Design min_weight_design(const Field& field);

struct StreamRank {
  std::uint32_t rank = 0;
  bool complete = false;
  std::uint64_t rows = 0;
};

/// Rank over GF(3) of the span of all minimum-weight supports, streamed
/// through per-worker bases that are merged at the end. An optional
/// deadline turns an over-budget run into a partial result.
StreamRank min_weight_support_rank(const Field& field, unsigned workers = 1,
                                   std::optional<std::chrono::seconds> deadline = std::nullopt);

/// The design code as a LinearCode (row space of the incidence rows),
/// built by streaming; practical for m <= 5.
LinearCode min_weight_design_code(const Field& field, unsigned workers = 1);

/// Dimension of the design code predicted by the cyclotomic-coset route:
/// the size of the union of the cosets of -(2*3^i+2), -(2*3^i+1),
/// -(3^i+1) mod 3^m-1, plus one for the all-one word.
std::uint32_t design_dimension_from_cosets(unsigned m);

/// Structural facts about the defining coset families for odd m >= 5.
/// half_a / half_c are the residues -(2*3^i+2) resp. -(3^i+1) with
/// 0 <= i <= (m-1)/2; full families run over all i < m.
struct CosetStructure {
  bool sizes_all_m = false;            // |S_i| = m over all three families
  bool b_pairwise_disjoint = false;    // within the -(2*3^i+1) family
  bool a_half_disjoint_covers = false; // half_a pairwise disjoint, covers the rest of a
  bool c_half_disjoint_covers = false; // half_c pairwise disjoint, covers the rest of c
  bool b_vs_a_half_disjoint = false;
  bool b_vs_c_half_disjoint = false;
  bool a_c_single_coincidence = false; // disjoint except one equal pair
  std::pair<unsigned, unsigned> coinciding_pair{0, 0};  // (half_a index, half_c index)
  std::uint32_t union_size = 0;

  bool all() const {
    return sizes_all_m && b_pairwise_disjoint && a_half_disjoint_covers && c_half_disjoint_covers &&
           b_vs_a_half_disjoint && b_vs_c_half_disjoint && a_c_single_coincidence;
  }
};

CosetStructure coset_structure(unsigned m);

/// Generators of the span {Tr(ax^2)Tr(bx^2), Tr(ax^2)Tr(bx),
/// Tr(ax)Tr(bx), Tr(bx), 1} restricted to basis pairs; bilinearity makes
/// the restriction span-equivalent to quantifying over all (a,b).
std::vector<TritVec> trace_product_generators(const Field& field);

/// Generators Tr(g x^{2*3^i+2}), Tr(g x^{2*3^j+1}), Tr(g x^{3^l+1}) over
/// a fixed basis and all exponent indices, plus the all-one word.
std::vector<TritVec> trace_monomial_generators(const Field& field);

/// The cyclic code of length 3^m - 1 whose parity-check polynomial is the
/// product of the minimal polynomials over the distinct defining cosets;
/// its augmented extension is coordinate-equivalent to the design code.
LinearCode cyclic_check_code(const Field& field);

/// A frozen weight-21 member of the m = 4 design code (81 digits), found
/// once by randomized information-set search. Consumers re-verify
/// membership and weight, so the constant certifies an upper bound on the
/// minimum distance without trusting the search.
const char* low_weight_witness_m4();

}  // namespace tricode
