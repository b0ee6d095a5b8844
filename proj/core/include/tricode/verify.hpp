#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tricode/codes.hpp"

namespace tricode {

/// Outcome of the design-criterion check on a pair of dual weight
/// enumerators. `primal` refers to the code whose enumerator was passed
/// first; the two weight lists mirror the theorem's two conclusions.
struct AmReport {
  unsigned t = 0;
  std::uint32_t d = 0;          // minimum weight on the primal side
  std::uint32_t d_dual = 0;     // minimum weight on the dual side
  std::uint32_t w_limit = 0;      // largest w with w - floor((w+q-2)/(q-1)) < d
  std::uint32_t w_limit_dual = 0; // same bound computed from d_dual
  std::uint64_t s = 0;          // distinct nonzero dual weights in [1, v-t]
  bool applies = false;         // s <= d - t
  std::vector<std::uint32_t> design_weights;       // held in the primal code
  std::vector<std::uint32_t> design_weights_dual;  // held in the dual code
};

/// Checks the Assmus-Mattson criterion for t-designs on (primal, dual)
/// weight enumerators over GF(q). The zero weight does not count toward
/// s. Requires t < d; the pair is verified to be MacWilliams-consistent
/// (checked through the sparser side).
AmReport assmus_mattson(const WeightEnumerator& primal, const WeightEnumerator& dual, unsigned t,
                        unsigned q = 3);

/// First nonzero weight of the dual, from the primal enumerator alone;
/// evaluates the transform coefficient by coefficient instead of
/// materializing the whole dual distribution.
std::uint32_t dual_min_distance_from(const WeightEnumerator& we, unsigned q = 3);

enum class ClaimStatus { pass, fail, flag, skipped };

const char* to_string(ClaimStatus s);

struct ClaimResult {
  std::string id;
  unsigned m = 0;
  std::string statement;
  ClaimStatus status = ClaimStatus::skipped;
  std::string detail;
  double seconds = 0.0;
};

struct SuiteReport {
  std::vector<ClaimResult> entries;

  std::size_t count(ClaimStatus s) const;
  bool all_passed() const { return count(ClaimStatus::fail) == 0; }

  std::string to_json() const;
  std::string to_csv() const;
  std::string to_text() const;
};

struct SuiteOptions {
  std::vector<unsigned> m_values;
  double budget_seconds = 0.0;  // 0 disables the budget
  unsigned workers = 1;
};

/// Runs every applicable registry claim for every requested m, in
/// deterministic order. Claims set `flag` instead of `fail` when a
/// property is probed outside its stated hypothesis range; over-budget
/// claims are reported as skipped, never silently dropped.
SuiteReport run_suite(const SuiteOptions& options);

}  // namespace tricode
