#include "qpq/sweep.hpp"

#include <numeric>
#include <optional>

namespace qpq {
namespace sweep {

std::vector<SlopeParam> enumerate_slopes(long cmax, long dslack) {
  std::vector<SlopeParam> out;
  for (long c = -cmax; c <= cmax; c += 2) {
    if (c == 0) continue;
    const long ac = std::abs(c);
    for (long d = 1; d <= 2 * ac + dslack; ++d)
      if (std::gcd(ac, d) == 1) out.push_back(SlopeParam::make(c, d));
  }
  return out;
}

std::vector<SlopeParam> enumerate_positive_slopes(long cmax, long dmax) {
  std::vector<SlopeParam> out;
  for (long c = 2; c <= cmax; c += 2)
    for (long d = 1; d <= dmax; ++d)
      if (std::gcd(c, d) == 1) out.push_back(SlopeParam::make(c, d));
  return out;
}

namespace {

struct ObstructionJob {
  TorusKnotParams params;
  SlopeParam slope;
};

std::vector<ObstructionJob> obstruction_jobs(
    const std::vector<std::pair<long, long>>& pq_pairs, long cmax, long dslack) {
  std::vector<ObstructionJob> jobs;
  const std::vector<SlopeParam> slopes = enumerate_slopes(cmax, dslack);
  for (const auto& [p, q] : pq_pairs) {
    const TorusKnotParams t = TorusKnotParams::make(p, q);
    for (const auto& s : slopes) jobs.push_back({t, s});
  }
  return jobs;
}

ObstructionSweepResult collect_obstructions(const std::vector<ObstructionJob>& jobs,
                                            bool parallel) {
  std::vector<std::optional<ObstructionReport>> slots(jobs.size());
  bool ok = true;
  const long n = static_cast<long>(jobs.size());
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 16) reduction(&& : ok)
    for (long i = 0; i < n; ++i) {
      try {
        slots[i] = obstruct_triviality(jobs[i].slope, jobs[i].params);
      } catch (const std::logic_error&) {
        ok = false;
      }
    }
  } else {
    for (long i = 0; i < n; ++i) {
      try {
        slots[i] = obstruct_triviality(jobs[i].slope, jobs[i].params);
      } catch (const std::logic_error&) {
        ok = false;
      }
    }
  }
  ObstructionSweepResult r{{}, ok};
  for (auto& s : slots) {
    if (!s) continue;
    if (s->nontrivial &&
        s->syllable_count != 2 * static_cast<std::size_t>(std::abs(s->slope.c())))
      r.all_syllables_match = false;
    r.reports.push_back(std::move(*s));
  }
  r.all_syllables_match = r.all_syllables_match && ok;
  return r;
}

}  // namespace

ObstructionSweepResult obstruction_sweep_serial(
    const std::vector<std::pair<long, long>>& pq_pairs, long cmax, long dslack) {
  return collect_obstructions(obstruction_jobs(pq_pairs, cmax, dslack), false);
}

ObstructionSweepResult obstruction_sweep_parallel(
    const std::vector<std::pair<long, long>>& pq_pairs, long cmax, long dslack) {
  return collect_obstructions(obstruction_jobs(pq_pairs, cmax, dslack), true);
}

namespace {

OracleComparison compare_one(const SlopeParam& s) {
  const SignSequence formula = epsilon_sequence(s);
  const SignSequence oracle = grid_walk_oracle(s);
  return {s, formula == oracle, formula.sign_counts() == oracle.sign_counts()};
}

std::vector<OracleComparison> oracle_sweep(long cmax, long dmax, bool parallel) {
  const std::vector<SlopeParam> slopes = enumerate_positive_slopes(cmax, dmax);
  std::vector<std::optional<OracleComparison>> slots(slopes.size());
  const long n = static_cast<long>(slopes.size());
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i) slots[i] = compare_one(slopes[i]);
  } else {
    for (long i = 0; i < n; ++i) slots[i] = compare_one(slopes[i]);
  }
  std::vector<OracleComparison> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace

std::vector<OracleComparison> oracle_sweep_serial(long cmax, long dmax) {
  return oracle_sweep(cmax, dmax, false);
}

std::vector<OracleComparison> oracle_sweep_parallel(long cmax, long dmax) {
  return oracle_sweep(cmax, dmax, true);
}

namespace {

bool kernel_cell(long k1, long k2) {
  try {
    const KernelVerdict v = kernels_distinct(k1, k2);
    return v.distinct == (k1 != k2) && v.pairing_route_distinct == (k1 != k2) &&
           v.line_route_distinct == (k1 != k2);
  } catch (const std::logic_error&) {
    return false;
  }
}

}  // namespace

KernelGridResult kernel_grid_serial(long kmax) {
  bool ok = true;
  long checked = 0;
  for (long k1 = 0; k1 <= kmax; ++k1)
    for (long k2 = 0; k2 <= kmax; ++k2) {
      ok = kernel_cell(k1, k2) && ok;
      ++checked;
    }
  return {kmax, ok, checked};
}

KernelGridResult kernel_grid_parallel(long kmax) {
  bool ok = true;
  const long n = (kmax + 1) * (kmax + 1);
#pragma omp parallel for schedule(dynamic, 64) reduction(&& : ok)
  for (long idx = 0; idx < n; ++idx) {
    ok = kernel_cell(idx / (kmax + 1), idx % (kmax + 1)) && ok;
  }
  return {kmax, ok, n};
}

}  // namespace sweep
}  // namespace qpq
