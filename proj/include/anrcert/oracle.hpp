#ifndef ANRCERT_ORACLE_HPP
#define ANRCERT_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace anrcert::oracle {

/// Which closed-form lower bound a sweep checks.
enum class BoundKind { anr, eh, cd };

std::string bound_kind_name(BoundKind kind);
std::optional<BoundKind> bound_kind_from_name(std::string_view name);

/// |{a+b mod p : a in A, b in B, a != b}| by direct enumeration on subset
/// bitmasks. This is the ground-truth path: it shares nothing with the
/// moment machinery and never builds set objects.
std::uint64_t restricted_sum_size(std::uint64_t mask_a, std::uint64_t mask_b,
                                  std::uint64_t p);

/// |A+B| by the same direct enumeration, without the a != b restriction.
std::uint64_t classical_sum_size(std::uint64_t mask_a, std::uint64_t mask_b,
                                 std::uint64_t p);

/// One checked pair. For EH sweeps mask_b duplicates mask_a.
struct PairRecord {
  std::uint64_t mask_a;
  std::uint64_t mask_b;
  std::uint64_t size;
  std::uint64_t bound;
  std::string note;  // empty unless the pair failed for a structural reason
};

/// Restrict a sweep to pairs with given cardinalities.
struct SizeFilter {
  std::optional<std::uint64_t> size_a;
  std::optional<std::uint64_t> size_b;
};

struct SweepOptions {
  std::uint64_t cap = std::uint64_t{1} << 24;  // max raw pair iterations
  unsigned workers = 1;
  std::optional<SizeFilter> filter;
  std::size_t tight_limit = 4096;  // recorded tight pairs; totals stay exact
  std::optional<std::uint64_t> seed;  // required for random sampling
  std::uint64_t samples = 0;          // 0 = exhaustive
};

struct SweepReport {
  std::uint64_t p = 0;
  BoundKind kind = BoundKind::anr;
  bool cross_check = false;  // certificate cross-check vs plain bound sweep
  std::uint64_t pairs_checked = 0;
  std::vector<PairRecord> violations;
  std::vector<PairRecord> tight_pairs;  // first tight_limit in canonical order
  std::uint64_t tight_total = 0;
  std::optional<std::uint64_t> seed;
  std::uint64_t samples = 0;
  double elapsed_seconds = 0.0;
  unsigned workers = 1;

  /// Residues of a recorded mask, ascending.
  static std::vector<std::uint64_t> mask_elements(std::uint64_t mask);
};

/// Checks the chosen bound against brute-force enumeration over every
/// admissible subset pair (all nonempty A, B; |A| != |B| for anr; single
/// sets for eh). Exhaustion beyond the cap requires a seeded random
/// sampler (samples > 0); otherwise BudgetExceededError.
///
/// The mask range is partitioned across workers and partial reports merge
/// in canonical order, so the report is identical for any worker count.
SweepReport sweep(std::uint64_t p, BoundKind kind,
                  const SweepOptions& options = {});

/// For each sampled valid pair: certify_anr, verify_certificate, and
/// compare the claim against oracle enumeration. Generator errors and
/// verification failures are recorded as violations, not thrown.
SweepReport cross_check_certificates(std::uint64_t p,
                                     const SweepOptions& options = {});

/// JSON rendering of a report (sets expanded from masks).
std::string sweep_report_to_json(const SweepReport& report);

/// CSV of the recorded tight pairs: columns a, b (semicolon-joined
/// residues), size, bound.
std::string tight_pairs_csv(const SweepReport& report);

}  // namespace anrcert::oracle

#endif  // ANRCERT_ORACLE_HPP
