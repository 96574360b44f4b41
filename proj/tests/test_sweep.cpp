#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "qpq/sweep.hpp"

using namespace qpq;
using namespace qpq::sweep;

TEST_CASE("slope enumeration") {
  const std::vector<SlopeParam> all = enumerate_slopes(4, 1);
  for (const auto& s : all) {
    CHECK(s.c() % 2 == 0);
    CHECK(s.c() != 0);
    CHECK(std::abs(s.c()) <= 4);
    CHECK(s.d() >= 1);
    CHECK(s.d() <= 2 * std::abs(s.c()) + 1);
    CHECK(std::gcd(std::abs(s.c()), s.d()) == 1);
  }
  // c in {-4, -2, 2, 4}: 2|c|+1 candidate d values, half even ones dropped
  // for c = +-4: d in {1,3,5,7,9} -> 5 each; c = +-2: d in {1,3,5} -> 3 each.
  CHECK(all.size() == 16);
  CHECK(std::count_if(all.begin(), all.end(),
                      [](const SlopeParam& s) { return s == SlopeParam::make(2, 1); }) == 1);

  const std::vector<SlopeParam> positive = enumerate_positive_slopes(4, 9);
  for (const auto& s : positive) CHECK(s.c() > 0);
  CHECK(positive.size() == 5 + 5);  // c=2: d in {1,3,5,7,9}; c=4: same odd d
}

TEST_CASE("serial and parallel obstruction sweeps agree") {
  const std::vector<std::pair<long, long>> pqs = {{3, 2}, {5, 2}, {5, 3}};
  const ObstructionSweepResult a = obstruction_sweep_serial(pqs, 8, 9);
  const ObstructionSweepResult b = obstruction_sweep_parallel(pqs, 8, 9);
  CHECK(a.all_syllables_match);
  CHECK(b.all_syllables_match);
  REQUIRE(a.reports.size() == b.reports.size());
  for (std::size_t i = 0; i < a.reports.size(); ++i) {
    CHECK(a.reports[i].slope == b.reports[i].slope);
    CHECK(a.reports[i].params.p == b.reports[i].params.p);
    CHECK(a.reports[i].normal_form == b.reports[i].normal_form);
    CHECK(a.reports[i].syllable_count == b.reports[i].syllable_count);
    CHECK(a.reports[i].nontrivial == b.reports[i].nontrivial);
  }
}

TEST_CASE("serial and parallel oracle sweeps agree") {
  const auto a = oracle_sweep_serial(12, 25);
  const auto b = oracle_sweep_parallel(12, 25);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].slope == b[i].slope);
    CHECK(a[i].full_match == b[i].full_match);
    CHECK(a[i].multiset_match == b[i].multiset_match);
    CHECK(a[i].full_match);  // formula and walk agree on this range
  }
}

TEST_CASE("serial and parallel kernel grids agree") {
  const KernelGridResult a = kernel_grid_serial(15);
  const KernelGridResult b = kernel_grid_parallel(15);
  CHECK(a.all_match);
  CHECK(b.all_match);
  CHECK(a.checked == 16 * 16);
  CHECK(a.checked == b.checked);
  CHECK(a.kmax == b.kmax);
}
