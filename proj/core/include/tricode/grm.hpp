#pragma once

#include <cstdint>
#include <vector>

#include "tricode/codes.hpp"
#include "tricode/gf3m.hpp"

namespace tricode {

/// Order parameters of a generalized Reed-Muller code: the order ell
/// splits as ell = ell1*(q-1) + ell0 with 0 <= ell0 < q-1.
struct GrmParams {
  unsigned q;
  unsigned m;
  unsigned ell;
  unsigned ell1;
  unsigned ell0;

  GrmParams(unsigned q_, unsigned m_, unsigned ell_);
};

/// Dimension of R_q(ell, m) (and of its punctured version): the
/// alternating double binomial sum.
std::uint64_t grm_dimension(const GrmParams& p);

/// Number of minimum-weight codewords of R_q(ell, m).
BigInt grm_min_weight_count(const GrmParams& p);

/// Minimum weight (q - ell0) * q^(m - ell1 - 1) of R_q(ell, m); the
/// punctured code's minimum weight is one less.
std::uint64_t grm_min_weight(const GrmParams& p);

/// Order of the dual: m(q-1) - 1 - ell.
unsigned grm_dual_order(const GrmParams& p);

/// R_3(ell, m) of length 3^m: evaluations of the monomials
/// x_1^{e_1}...x_m^{e_m}, e_i <= 2, sum e_i <= ell, at all points. The
/// point with coordinate index p has coordinate vector equal to the
/// base-3 digits of p, matching the field's polynomial-basis indexing.
LinearCode grm_code(const Field& field, unsigned ell);

/// Punctured code of length 3^m - 1: the cyclic code with generator
/// polynomial prod(x - alpha^j) over 1 <= j <= n-1 with
/// wt_3(j) < 2m - ell, alpha the canonical primitive element.
LinearCode punctured_grm(const Field& field, unsigned ell);

/// Coordinate identification between a length-(3^m - 1) cyclic code
/// extended by a parity position and the field-indexed coordinates:
/// entry x is the extended-word position holding the value at field
/// element x (position j for x = alpha^j, the parity position for x = 0).
/// permuted(extended_cyclic, this) yields the field-indexed code.
std::vector<std::uint32_t> field_coordinate_map(const Field& field);

}  // namespace tricode
