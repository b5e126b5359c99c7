#include <algorithm>
#include <bit>
#include <cstdint>

#include "anrcert/oracle.hpp"
#include "anrcert/sumsets.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace anrcert;
using oracle::BoundKind;
using oracle::SweepOptions;
using oracle::SweepReport;

namespace {

bool same_findings(const SweepReport& a, const SweepReport& b) {
  if (a.pairs_checked != b.pairs_checked) return false;
  if (a.tight_total != b.tight_total) return false;
  if (a.violations.size() != b.violations.size()) return false;
  if (a.tight_pairs.size() != b.tight_pairs.size()) return false;
  for (std::size_t i = 0; i < a.tight_pairs.size(); ++i) {
    if (a.tight_pairs[i].mask_a != b.tight_pairs[i].mask_a) return false;
    if (a.tight_pairs[i].mask_b != b.tight_pairs[i].mask_b) return false;
    if (a.tight_pairs[i].size != b.tight_pairs[i].size) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("mask enumeration agrees with the set-level enumeration") {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    PrimeField f(p);
    const std::uint64_t n_masks = (std::uint64_t{1} << p) - 1;
    for (std::uint64_t ma = 1; ma <= n_masks; ++ma) {
      for (std::uint64_t mb = 1; mb <= n_masks; ++mb) {
        const FpSet a(f, SweepReport::mask_elements(ma));
        const FpSet b(f, SweepReport::mask_elements(mb));
        CHECK(oracle::restricted_sum_size(ma, mb, p) ==
              restricted_sumset(a, b).size());
        CHECK(oracle::classical_sum_size(ma, mb, p) == sumset(a, b).size());
      }
    }
  }
}

TEST_CASE("exhaustive ANR sweep at p = 5") {
  const SweepReport report = oracle::sweep(5, BoundKind::anr);
  CHECK(report.violations.empty());

  // Independent pair count: all 961 mask pairs minus the equal-size ones.
  std::uint64_t expected = 0;
  for (std::uint64_t ma = 1; ma <= 31; ++ma) {
    for (std::uint64_t mb = 1; mb <= 31; ++mb) {
      if (std::popcount(ma) != std::popcount(mb)) ++expected;
    }
  }
  CHECK(expected == 710);
  CHECK(report.pairs_checked == expected);
}

TEST_CASE("exhaustive EH sweep at p = 5 finds the tight progression") {
  const SweepReport report = oracle::sweep(5, BoundKind::eh);
  CHECK(report.violations.empty());
  CHECK(report.pairs_checked == 31);
  bool found = false;
  for (const auto& rec : report.tight_pairs) {
    if (rec.mask_a == 0b111) {  // {0,1,2}: |A+.A| = 3 = 2*3-3
      CHECK(rec.size == 3);
      CHECK(rec.bound == 3);
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("degenerate smallest prime") {
  const SweepReport report = oracle::sweep(2, BoundKind::anr);
  CHECK(report.violations.empty());
  CHECK(report.pairs_checked == 4);  // singleton-vs-pair shapes only
}

TEST_CASE("CD sweeps are violation-free") {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    const SweepReport report = oracle::sweep(p, BoundKind::cd);
    CHECK(report.violations.empty());
  }
}

TEST_CASE("size filter restricts the sweep") {
  SweepOptions options;
  options.filter = oracle::SizeFilter{2, 3};
  const SweepReport report = oracle::sweep(5, BoundKind::anr, options);
  CHECK(report.violations.empty());
  CHECK(report.pairs_checked == 100);  // C(5,2) * C(5,3)
}

TEST_CASE("budget cap") {
  SweepOptions options;
  options.cap = 100;
  CHECK_THROWS_AS(oracle::sweep(5, BoundKind::anr, options),
                  BudgetExceededError);
  CHECK_THROWS_AS(oracle::sweep(67, BoundKind::anr), BudgetExceededError);
}

TEST_CASE("random sampling requires a seed and is reproducible") {
  SweepOptions options;
  options.samples = 500;
  CHECK_THROWS_AS(oracle::sweep(11, BoundKind::anr, options), Error);

  options.seed = 42;
  const SweepReport first = oracle::sweep(11, BoundKind::anr, options);
  const SweepReport second = oracle::sweep(11, BoundKind::anr, options);
  CHECK(first.violations.empty());
  CHECK(first.pairs_checked == 500);
  CHECK(same_findings(first, second));
  CHECK(first.seed == 42);
}

TEST_CASE("worker count does not change the findings") {
  SweepOptions serial;
  serial.workers = 1;
  SweepOptions parallel;
  parallel.workers = 4;
  CHECK(same_findings(oracle::sweep(7, BoundKind::anr, serial),
                      oracle::sweep(7, BoundKind::anr, parallel)));
  CHECK(same_findings(oracle::sweep(7, BoundKind::eh, serial),
                      oracle::sweep(7, BoundKind::eh, parallel)));
}

TEST_CASE("certificate cross-check, exhaustive p = 7") {
  const SweepReport report = oracle::cross_check_certificates(7);
  CHECK(report.cross_check);
  CHECK(report.violations.empty());
  CHECK(report.pairs_checked > 0);
}

TEST_CASE("certificate cross-check, sampled p = 11") {
  SweepOptions options;
  options.samples = 10000;
  options.seed = 20250809;
  options.workers = 4;
  const SweepReport report = oracle::cross_check_certificates(11, options);
  CHECK(report.violations.empty());
  CHECK(report.pairs_checked == 10000);
}

TEST_CASE("report serialization") {
  SweepOptions options;
  options.tight_limit = 8;
  const SweepReport report = oracle::sweep(5, BoundKind::anr, options);
  const std::string text = oracle::sweep_report_to_json(report);
  const nlohmann::json j = nlohmann::json::parse(text);
  CHECK(j["p"] == 5);
  CHECK(j["kind"] == "anr");
  CHECK(j["violations"].empty());
  CHECK(j["pairs_checked"] == report.pairs_checked);
  CHECK(j["tight_pairs"].size() == 8);
  CHECK(j["tight_total"] == report.tight_total);
  CHECK(j["sampler"]["mode"] == "exhaustive");

  const std::string csv = oracle::tight_pairs_csv(report);
  CHECK(csv.rfind("a,b,size,bound\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 9);  // header + 8 rows
}

TEST_CASE("interval pairs appear among the recorded tight pairs") {
  const SweepReport report = oracle::sweep(5, BoundKind::anr);
  // A = {0}, B = {0,1} is the first interval pair in canonical order.
  bool found = false;
  for (const auto& rec : report.tight_pairs) {
    if (rec.mask_a == 0b1 && rec.mask_b == 0b11) found = true;
  }
  CHECK(found);
}

}  // TEST_SUITE
