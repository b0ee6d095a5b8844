#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tricode/codes.hpp"
#include "tricode/trits.hpp"

namespace tricode {

/// A simple block design: v points, blocks of one common size stored as
/// sorted point-index sets, the block list itself sorted and duplicate
/// free (both verified at construction).
class Design {
 public:
  Design(std::uint32_t v, std::vector<std::vector<std::uint32_t>> blocks);

  std::uint32_t points() const { return v_; }
  std::uint32_t block_size() const { return k_; }
  std::uint64_t block_count() const { return blocks_.size(); }
  const std::vector<std::vector<std::uint32_t>>& blocks() const { return blocks_; }

  TritVec incidence_row(std::size_t i) const;

  /// Lambda if every t-subset of points lies in the same number of
  /// blocks, nullopt otherwise. Exhaustive counting; guarded by t <= 3
  /// and v <= 243.
  std::optional<std::uint64_t> t_design_lambda(unsigned t) const;

  /// {"v":…, "k":…, "blocks":[[…],…]}
  std::string to_json() const;
  static Design from_json(const std::string& text);

  /// Compact block list: little-endian u32 fields v, k, b followed by
  /// b*k point indices, blocks in stored order.
  void write_binary(std::ostream& os) const;
  static Design read_binary(std::istream& is);

  bool operator==(const Design&) const = default;

 private:
  std::uint32_t v_ = 0;
  std::uint32_t k_ = 0;
  std::vector<std::vector<std::uint32_t>> blocks_;
};

/// The design whose blocks are the deduplicated supports of the weight-w
/// codewords. Enumerates the code, so the enumeration guard applies.
Design support_design(const LinearCode& code, std::uint32_t w);

/// Rank of the b x v incidence matrix over GF(p). p = 3 streams rows
/// through the packed span kernel (sharded across workers); other primes
/// fall back to a dense generic kernel.
std::uint32_t p_rank(const Design& design, unsigned p, unsigned workers = 1);

/// Row space of the incidence matrix over GF(3).
LinearCode design_code(const Design& design);

/// Rank over GF(p) of rows given as digit vectors (entries already
/// reduced mod p). Generic dense kernel for primes other than 3.
std::uint32_t dense_rank_mod_p(std::vector<std::vector<std::uint8_t>> rows, unsigned p);

}  // namespace tricode
