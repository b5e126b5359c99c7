#ifndef ANRCERT_CERTIFICATE_HPP
#define ANRCERT_CERTIFICATE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "anrcert/moments.hpp"
#include "anrcert/sumsets.hpp"

namespace anrcert {

/// How a certificate establishes its bound.
///
///   singleton         min(|A|,|B|) = 1; the sums themselves are the witness.
///   main              moment argument on (A, B) directly.
///   reduced-then-main (A, B) shrunk to |A'|+|B'|-2 = p first.
///   eh-corollary      diagonal case |A+.A| via the pair (A, A \ {a0}).
enum class Route { singleton, main, reduced_then_main, eh_corollary };

std::string route_name(Route route);
std::optional<Route> route_from_name(std::string_view name);

/// Witness of the shrink step for oversized pairs: d = |A|+|B|-2-p
/// elements are dropped, split d1 = floor(d/2) from the larger set and
/// d2 = ceil(d/2) from the smaller, leaving |A'|+|B'|-2 = p with
/// |A'| != |B'|.
struct Reduction {
  FpSet removed_from_a;
  FpSet removed_from_b;
  FpSet a_prime;
  FpSet b_prime;
  std::uint64_t d;
  std::uint64_t d1;
  std::uint64_t d2;
};

/// Shrinks an oversized pair. Deterministic: the largest residues are
/// removed from each set.
Reduction reduce_oversized(const FpSet& a, const FpSet& b);

/// One (element, weight) pair of a serialized weight sequence.
struct WeightEntry {
  std::uint64_t element;
  std::uint64_t weight;
};

/// The binomial nonvanishing obligation
/// C(n, r_choice) - C(n, s_choice) != 0 mod p with n = m+k-3,
/// r_choice = m-2, s_choice = k-2.
struct BinomialCheck {
  std::uint64_t n;
  std::uint64_t r_choice;
  std::uint64_t s_choice;
  std::uint64_t value;
};

/// Raw (untyped) mirror of a Reduction, as stored in certificates.
struct ReductionRecord {
  std::vector<std::uint64_t> removed_from_a;
  std::vector<std::uint64_t> removed_from_b;
  std::vector<std::uint64_t> a_prime;
  std::vector<std::uint64_t> b_prime;
  std::uint64_t d;
  std::uint64_t d1;
  std::uint64_t d2;
};

/// Self-contained witness bundle for one lower-bound instance. All values
/// are plain integers: a parsed certificate is untrusted data, and the
/// verifier re-derives every typed object from it.
///
/// For main routes the moment payload (w1, w2, alpha, beta, gamma, e_C,
/// binomial_check) describes the post-reduction pair; A, B, C always
/// describe the original instance.
struct Certificate {
  std::uint64_t p = 0;
  std::vector<std::uint64_t> a;
  std::vector<std::uint64_t> b;
  Route route = Route::main;
  std::optional<ReductionRecord> reduction;
  std::vector<WeightEntry> w1;
  std::vector<WeightEntry> w2;
  std::vector<std::uint64_t> alpha;
  std::vector<std::uint64_t> beta;
  std::vector<std::uint64_t> gamma;
  std::optional<std::uint64_t> e_c;
  std::optional<BinomialCheck> binomial_check;
  std::uint64_t claimed_bound = 0;
  std::vector<std::uint64_t> c;
  std::uint64_t c_size = 0;
};

/// Certificate for |A+.B| >= min{p, |A|+|B|-2} with |A| != |B|.
/// Routes to the singleton witness, the direct moment argument, or the
/// reduction followed by the moment argument.
Certificate certify_anr(const FpSet& a, const FpSet& b);

/// Certificate for |A+.A| >= min{p, 2|A|-3} via the pair (A, A \ {a0})
/// with a0 = min(A). A singleton A yields the trivial bound 0.
Certificate certify_eh(const FpSet& a);

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

/// Outcome of an independent re-derivation of a certificate. The verdict
/// is pass iff every executed check passed; verification stops at the
/// first divergence.
struct VerificationReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  /// Name of the first failing check, or "" when the report passed.
  std::string first_failure() const;
  std::string summary() const;
};

/// Recomputes the full argument from only p, the sets, the route, the
/// reduction, and the weights; every stored quantity must match. Never
/// throws on malformed content: divergences come back as failed checks.
VerificationReport verify_certificate(const Certificate& cert);

/// Exact JSON serialization of the certificate schema.
std::string certificate_to_json(const Certificate& cert);

/// Strict parser for the same schema: unknown or missing fields, wrong
/// JSON types, and malformed numbers raise SchemaError. Value-level
/// problems (residues out of range, inconsistent payloads) are left to
/// verify_certificate.
Certificate certificate_from_json(std::string_view text);

}  // namespace anrcert

#endif  // ANRCERT_CERTIFICATE_HPP
