#pragma once

#include <utility>
#include <vector>

#include "qpq/alexander.hpp"
#include "qpq/obstruction.hpp"
#include "qpq/slopes.hpp"

namespace qpq {
namespace sweep {

// Data-parallel parameter sweeps. Each sweep has a serial reference
// implementation and an OpenMP version over the same enumeration; results
// are written by index, so the two are element-for-element identical.

/// All valid slopes with 0 < |c| <= cmax (c even, including negatives) and
/// 1 <= d <= 2|c| + dslack, gcd(|c|, d) = 1; sorted by (c, d).
std::vector<SlopeParam> enumerate_slopes(long cmax, long dslack);

/// All valid slopes with 0 < c <= cmax, 1 <= d <= dmax, gcd(c, d) = 1.
std::vector<SlopeParam> enumerate_positive_slopes(long cmax, long dmax);

struct ObstructionSweepResult {
  std::vector<ObstructionReport> reports;  // sorted by (p, q, c, d)
  bool all_syllables_match;                // syllable count == 2|c| throughout
};

ObstructionSweepResult obstruction_sweep_serial(
    const std::vector<std::pair<long, long>>& pq_pairs, long cmax, long dslack);
ObstructionSweepResult obstruction_sweep_parallel(
    const std::vector<std::pair<long, long>>& pq_pairs, long cmax, long dslack);

struct OracleComparison {
  SlopeParam slope;
  bool full_match;      // oracle sequence equals the formula sequence
  bool multiset_match;  // same count of +1 and -1
};

std::vector<OracleComparison> oracle_sweep_serial(long cmax, long dmax);
std::vector<OracleComparison> oracle_sweep_parallel(long cmax, long dmax);

struct KernelGridResult {
  long kmax;
  bool all_match;  // distinct == (k1 != k2) on the whole grid, both routes
  long checked;
};

KernelGridResult kernel_grid_serial(long kmax);
KernelGridResult kernel_grid_parallel(long kmax);

}  // namespace sweep
}  // namespace qpq
