#include "anrcert/certificate.hpp"

#include <algorithm>
#include <utility>

namespace anrcert {

std::string route_name(Route route) {
  switch (route) {
    case Route::singleton:
      return "singleton";
    case Route::main:
      return "main";
    case Route::reduced_then_main:
      return "reduced-then-main";
    case Route::eh_corollary:
      return "eh-corollary";
  }
  throw InternalInconsistencyError("unhandled route");
}

std::optional<Route> route_from_name(std::string_view name) {
  if (name == "singleton") return Route::singleton;
  if (name == "main") return Route::main;
  if (name == "reduced-then-main") return Route::reduced_then_main;
  if (name == "eh-corollary") return Route::eh_corollary;
  return std::nullopt;
}

namespace {

// Splits off the `count` largest residues of s.
std::pair<FpSet, FpSet> drop_largest(const FpSet& s, std::uint64_t count) {
  const auto& e = s.elements();
  std::vector<std::uint64_t> kept(e.begin(), e.end() - count);
  std::vector<std::uint64_t> removed(e.end() - count, e.end());
  return {FpSet(s.field(), std::move(kept)), FpSet(s.field(), std::move(removed))};
}

}  // namespace

Reduction reduce_oversized(const FpSet& a, const FpSet& b) {
  if (a.modulus() != b.modulus()) {
    throw ModulusMismatchError("sets over different moduli");
  }
  if (a.empty() || b.empty()) {
    throw EmptyInputError("reduce_oversized requires nonempty sets");
  }
  const std::uint64_t p = a.modulus();
  const std::uint64_t m = a.size();
  const std::uint64_t k = b.size();
  if (m == k) {
    throw EqualSizesError("equal sizes: |A| = |B| = " + std::to_string(m));
  }
  if (m + k < p + 3) {
    throw NotOversizedError("|A|+|B|-2 = " + std::to_string(m + k - 2) +
                            " does not exceed p = " + std::to_string(p));
  }
  const std::uint64_t d = m + k - 2 - p;
  const std::uint64_t d1 = d / 2;
  const std::uint64_t d2 = d - d1;

  // The smaller set gives up d2 >= d1 elements, which keeps the sizes
  // strictly apart after the shrink.
  Reduction red{FpSet::empty_set(a.field()), FpSet::empty_set(a.field()),
                a, b, d, d1, d2};
  if (m < k) {
    auto [a_kept, a_removed] = drop_largest(a, d2);
    auto [b_kept, b_removed] = drop_largest(b, d1);
    red.a_prime = std::move(a_kept);
    red.removed_from_a = std::move(a_removed);
    red.b_prime = std::move(b_kept);
    red.removed_from_b = std::move(b_removed);
  } else {
    auto [b_kept, b_removed] = drop_largest(b, d2);
    auto [a_kept, a_removed] = drop_largest(a, d1);
    red.a_prime = std::move(a_kept);
    red.removed_from_a = std::move(a_removed);
    red.b_prime = std::move(b_kept);
    red.removed_from_b = std::move(b_removed);
  }

  if (red.a_prime.empty() || red.b_prime.empty() ||
      red.a_prime.size() + red.b_prime.size() != p + 2 ||
      red.a_prime.size() == red.b_prime.size()) {
    // Flagged rather than repaired: this cannot happen for valid input.
    throw InternalInconsistencyError("reduction violated its size contract");
  }
  return red;
}

namespace {

std::vector<WeightEntry> to_entries(const WeightSequence& w) {
  std::vector<WeightEntry> out;
  out.reserve(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) {
    out.push_back({w.support().elements()[j], w.weights()[j].value()});
  }
  return out;
}

std::vector<std::uint64_t> to_values(const FpVector& v) {
  std::vector<std::uint64_t> out;
  out.reserve(v.size());
  for (const Fp& x : v) out.push_back(x.value());
  return out;
}

ReductionRecord to_record(const Reduction& red) {
  return ReductionRecord{red.removed_from_a.elements(),
                         red.removed_from_b.elements(),
                         red.a_prime.elements(),
                         red.b_prime.elements(),
                         red.d,
                         red.d1,
                         red.d2};
}

// Runs the moment argument on the (post-reduction) pair and stores the
// full payload: extremal weights, moment prefixes, excess index, and the
// binomial nonvanishing value.
void fill_main_payload(Certificate& cert, const FpSet& x, const FpSet& y) {
  const PrimeField& field = x.field();
  const std::size_t m = x.size();
  const std::size_t k = y.size();

  WeightSequence w1 = extremal_weights(x);
  WeightSequence w2 = extremal_weights(y);
  cert.w1 = to_entries(w1);
  cert.w2 = to_entries(w2);

  MomentProfile alpha(w1);
  MomentProfile beta(w2);
  cert.alpha = to_values(alpha.prefix(m - 1));
  cert.beta = to_values(beta.prefix(k - 1));

  const std::uint64_t n = m + k - 3;
  WeightSequence wc = induced_weights(x, w1, y, w2);
  MomentProfile gamma(wc);
  cert.gamma = to_values(gamma.prefix(n));

  const std::size_t e = excess_index(wc);
  if (e != n) {
    throw InternalInconsistencyError("excess index " + std::to_string(e) +
                                     " differs from m+k-3 = " +
                                     std::to_string(n));
  }
  cert.e_c = e;

  const Fp value = binomial_mod_p(n, m - 2, field) -
                   binomial_mod_p(n, k - 2, field);
  if (value.is_zero()) {
    throw InternalInconsistencyError("binomial difference vanished");
  }
  cert.binomial_check = BinomialCheck{n, m - 2, k - 2, value.value()};
}

}  // namespace

Certificate certify_anr(const FpSet& a, const FpSet& b) {
  if (a.modulus() != b.modulus()) {
    throw ModulusMismatchError("sets over different moduli");
  }
  if (a.empty() || b.empty()) {
    throw EmptyInputError("certify_anr requires nonempty sets");
  }
  if (a.size() == b.size()) {
    throw EqualSizesError("equal sizes: |A| = |B| = " +
                          std::to_string(a.size()));
  }
  const std::uint64_t p = a.modulus();

  Certificate cert;
  cert.p = p;
  cert.a = a.elements();
  cert.b = b.elements();
  cert.claimed_bound = anr_bound(p, a.size(), b.size());

  const FpSet c = restricted_sumset(a, b);
  cert.c = c.elements();
  cert.c_size = c.size();

  if (std::min(a.size(), b.size()) == 1) {
    cert.route = Route::singleton;
  } else if (a.size() + b.size() >= p + 3) {
    Reduction red = reduce_oversized(a, b);
    cert.route = Route::reduced_then_main;
    cert.reduction = to_record(red);
    fill_main_payload(cert, red.a_prime, red.b_prime);
  } else {
    cert.route = Route::main;
    fill_main_payload(cert, a, b);
  }

  if (cert.c_size < cert.claimed_bound) {
    throw InternalInconsistencyError("enumerated size below the claimed bound");
  }
  return cert;
}

Certificate certify_eh(const FpSet& a) {
  if (a.empty()) {
    throw EmptyInputError("certify_eh requires a nonempty set");
  }
  const std::uint64_t p = a.modulus();
  if (a.size() == 1) {
    // 2|A|-3 < 0 clamps to 0; A+.A is empty and the bound holds vacuously.
    Certificate cert;
    cert.p = p;
    cert.a = a.elements();
    cert.route = Route::eh_corollary;
    cert.claimed_bound = 0;
    cert.c_size = 0;
    return cert;
  }

  const std::uint64_t a0 = a.elements().front();
  const FpSet rest = a.without(a0);
  const FpSet diag = restricted_sumset(a, a);

  Certificate cert = certify_anr(a, rest);
  if (cert.c != diag.elements()) {
    // A+.A = A+.(A \ {a0}) holds for every a0; a mismatch is a bug.
    throw InternalInconsistencyError("A+.A differs from A+.A'");
  }
  cert.route = Route::eh_corollary;
  cert.claimed_bound = eh_bound(p, a.size());
  return cert;
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

std::string VerificationReport::first_failure() const {
  for (const CheckResult& c : checks) {
    if (!c.passed) return c.name;
  }
  return "";
}

std::string VerificationReport::summary() const {
  if (passed()) return "pass (" + std::to_string(checks.size()) + " checks)";
  for (const CheckResult& c : checks) {
    if (!c.passed) return "fail: " + c.name + " (" + c.detail + ")";
  }
  return "fail";
}

namespace {

// Appends check results; verification stops at the first divergence, so
// callers early-return on false.
class Checker {
 public:
  explicit Checker(VerificationReport& report) : report_(report) {}

  bool check(std::string name, bool ok, std::string detail = "") {
    report_.checks.push_back({std::move(name), ok, std::move(detail)});
    return ok;
  }

 private:
  VerificationReport& report_;
};

std::string set_text(const std::vector<std::uint64_t>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(v[i]);
  }
  return out + "}";
}

// The shape the payload must have once the route is known.
enum class InnerKind { none, singleton, main };

struct VerifyState {
  std::optional<PrimeField> field;
  std::optional<FpSet> a, b, c_stored;
  InnerKind inner = InnerKind::none;
  bool want_reduction = false;
};

bool validate_raw_set(Checker& ck, const std::string& check_name,
                      const std::vector<std::uint64_t>& raw, std::uint64_t p) {
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] >= p) {
      return ck.check(check_name, false,
                      "residue " + std::to_string(raw[i]) +
                          " out of range for p = " + std::to_string(p));
    }
    if (i > 0 && raw[i] <= raw[i - 1]) {
      return ck.check(check_name, false,
                      "residues not strictly ascending at index " +
                          std::to_string(i));
    }
  }
  return ck.check(check_name, true, set_text(raw));
}

// Rebuilds a weight sequence from stored (element, weight) pairs and
// demands exact positional agreement with the expected support.
std::optional<WeightSequence> load_weights(Checker& ck,
                                           const std::string& check_name,
                                           const std::vector<WeightEntry>& raw,
                                           const FpSet& support) {
  if (raw.size() != support.size()) {
    ck.check(check_name, false,
             "weight count " + std::to_string(raw.size()) +
                 " does not match |support| = " +
                 std::to_string(support.size()));
    return std::nullopt;
  }
  const PrimeField& field = support.field();
  FpVector weights;
  weights.reserve(raw.size());
  for (std::size_t j = 0; j < raw.size(); ++j) {
    if (raw[j].element != support.elements()[j]) {
      ck.check(check_name, false,
               "weight support mismatch at position " + std::to_string(j));
      return std::nullopt;
    }
    if (raw[j].weight >= field.modulus()) {
      ck.check(check_name, false,
               "weight " + std::to_string(raw[j].weight) + " out of range");
      return std::nullopt;
    }
    weights.push_back(field.element(raw[j].weight));
  }
  ck.check(check_name, true);
  return WeightSequence(support, std::move(weights));
}

// Recomputes one moment prefix and checks vanishing below the top index,
// a nonzero top value, and exact agreement with the stored list.
bool check_moment_prefix(Checker& ck, const std::string& label,
                         const WeightSequence& w,
                         const std::vector<std::uint64_t>& stored,
                         std::size_t top_index, FpVector& out) {
  out.clear();
  for (std::size_t i = 0; i <= top_index; ++i) {
    out.push_back(power_sum(w, i));
  }
  for (std::size_t i = 0; i < top_index; ++i) {
    if (!out[i].is_zero()) {
      return ck.check(label + "-vanishing", false,
                      label + "_" + std::to_string(i) + " = " +
                          std::to_string(out[i].value()) + ", expected 0");
    }
  }
  if (!ck.check(label + "-vanishing", true)) return false;
  if (!ck.check(label + "-leading-nonzero", !out[top_index].is_zero(),
                label + "_" + std::to_string(top_index) + " = " +
                    std::to_string(out[top_index].value()))) {
    return false;
  }
  bool match = stored.size() == out.size();
  for (std::size_t i = 0; match && i < out.size(); ++i) {
    match = stored[i] == out[i].value();
  }
  return ck.check(label + "-stored-matches", match,
                  match ? "" : "stored list diverges from recomputation");
}

// The moment argument on the (possibly reduced) pair (x, y).
bool verify_main_core(Checker& ck, const Certificate& cert, const FpSet& x,
                      const FpSet& y, const FpSet& c_original) {
  const PrimeField& field = x.field();
  const std::uint64_t p = field.modulus();
  const std::size_t m = x.size();
  const std::size_t k = y.size();

  if (!ck.check("size-window",
                m >= 2 && k >= 2 && m != k && m + k - 2 <= p,
                "m=" + std::to_string(m) + " k=" + std::to_string(k) +
                    " p=" + std::to_string(p))) {
    return false;
  }

  auto w1 = load_weights(ck, "w1-aligned", cert.w1, x);
  if (!w1) return false;
  auto w2 = load_weights(ck, "w2-aligned", cert.w2, y);
  if (!w2) return false;

  if (!ck.check("nonzero-sequence", w1->nonzero() && w2->nonzero(),
                "both weight sequences must have a nonzero entry")) {
    return false;
  }

  FpVector alpha, beta;
  if (!check_moment_prefix(ck, "alpha", *w1, cert.alpha, m - 1, alpha)) {
    return false;
  }
  if (!check_moment_prefix(ck, "beta", *w2, cert.beta, k - 1, beta)) {
    return false;
  }

  const std::uint64_t n = m + k - 3;
  const WeightSequence wc = induced_weights(x, *w1, y, *w2);

  FpVector gamma_direct;
  gamma_direct.reserve(n + 1);
  for (std::uint64_t i = 0; i <= n; ++i) {
    gamma_direct.push_back(power_sum(wc, i));
  }
  bool gamma_match = cert.gamma.size() == n + 1;
  for (std::uint64_t i = 0; gamma_match && i <= n; ++i) {
    gamma_match = cert.gamma[i] == gamma_direct[i].value();
  }
  if (!ck.check("gamma-direct-vs-stored", gamma_match,
                gamma_match ? "" : "stored gamma diverges from recomputation")) {
    return false;
  }

  // Same gammas through the binomial convolution of alpha and beta:
  // an independent route that must agree with the direct definition.
  FpVector alpha_ext = alpha;
  FpVector beta_ext = beta;
  {
    MomentProfile ap(*w1);
    MomentProfile bp(*w2);
    alpha_ext = ap.prefix(n + 1);
    beta_ext = bp.prefix(n + 1);
  }
  for (std::uint64_t i = 0; i <= n; ++i) {
    const Fp conv = gamma_convolution(alpha_ext, beta_ext, i, field);
    if (conv != gamma_direct[i]) {
      return ck.check("gamma-convolution-agrees", false,
                      "gamma_" + std::to_string(i) + ": direct " +
                          std::to_string(gamma_direct[i].value()) +
                          " vs convolution " + std::to_string(conv.value()));
    }
  }
  if (!ck.check("gamma-convolution-agrees", true)) return false;

  bool vanish = true;
  for (std::uint64_t i = 0; i < n; ++i) vanish = vanish && gamma_direct[i].is_zero();
  if (!ck.check("gamma-vanishing-below-excess", vanish)) return false;

  const Fp lead = leading_gamma(m - 2, k - 2, alpha[m - 1], beta[k - 1]);
  if (!ck.check("gamma-leading-closed-form", gamma_direct[n] == lead,
                "gamma_" + std::to_string(n) + " = " +
                    std::to_string(gamma_direct[n].value()) +
                    ", closed form " + std::to_string(lead.value()))) {
    return false;
  }

  std::size_t e = 0;
  try {
    e = excess_index(wc);
  } catch (const Error& err) {
    return ck.check("excess-index", false, err.what());
  }
  if (!ck.check("excess-index",
                cert.e_c.has_value() && e == n && *cert.e_c == e,
                "recomputed " + std::to_string(e) + ", stored " +
                    (cert.e_c ? std::to_string(*cert.e_c) : "none") +
                    ", m+k-3 = " + std::to_string(n))) {
    return false;
  }

  const Fp diff = binomial_mod_p(n, m - 2, field) -
                  binomial_mod_p(n, k - 2, field);
  const BinomialCheck& bc = *cert.binomial_check;
  if (!ck.check("binomial-check",
                bc.n == n && bc.r_choice == m - 2 && bc.s_choice == k - 2 &&
                    bc.value == diff.value() && !diff.is_zero() && n >= 1 &&
                    n <= p - 1,
                "C(" + std::to_string(n) + "," + std::to_string(m - 2) +
                    ") - C(" + std::to_string(n) + "," + std::to_string(k - 2) +
                    ") = " + std::to_string(diff.value()) + ", stored " +
                    std::to_string(bc.value))) {
    return false;
  }

  if (cert.reduction.has_value()) {
    if (!ck.check("reduction-monotonicity",
                  wc.support().subset_of(c_original),
                  "A'+.B' must be contained in A+.B")) {
      return false;
    }
  }
  return true;
}

void verify_impl(const Certificate& cert, VerificationReport& report) {
  Checker ck(report);

  std::optional<PrimeField> field;
  try {
    field.emplace(cert.p);
  } catch (const Error& e) {
    ck.check("modulus-prime", false, e.what());
    return;
  }
  if (!ck.check("modulus-prime", true, "p = " + std::to_string(cert.p))) return;
  const std::uint64_t p = cert.p;

  if (!validate_raw_set(ck, "set-a-valid", cert.a, p)) return;
  if (!validate_raw_set(ck, "set-b-valid", cert.b, p)) return;
  if (!validate_raw_set(ck, "set-c-valid", cert.c, p)) return;
  const FpSet a(*field, cert.a);
  const FpSet b(*field, cert.b);
  const FpSet c_stored(*field, cert.c);

  // Route-level structure of the instance.
  const bool is_eh = cert.route == Route::eh_corollary;
  const bool trivial_eh = is_eh && a.size() == 1;
  bool structure_ok = !a.empty();
  std::string structure_detail;
  InnerKind inner = InnerKind::none;
  bool want_reduction = false;
  switch (cert.route) {
    case Route::singleton:
      structure_ok = structure_ok && !b.empty() &&
                     std::min(a.size(), b.size()) == 1 && a.size() != b.size();
      structure_detail = "singleton route needs min(|A|,|B|) = 1, |A| != |B|";
      inner = InnerKind::singleton;
      break;
    case Route::main:
      structure_ok = structure_ok && a.size() >= 2 && b.size() >= 2 &&
                     a.size() != b.size() && a.size() + b.size() <= p + 2;
      structure_detail = "main route needs 2 <= |A|,|B|, |A| != |B|, |A|+|B|-2 <= p";
      inner = InnerKind::main;
      break;
    case Route::reduced_then_main:
      structure_ok = structure_ok && a.size() >= 2 && b.size() >= 2 &&
                     a.size() != b.size() && a.size() + b.size() >= p + 3;
      structure_detail = "reduced route needs |A|+|B|-2 > p and |A| != |B|";
      inner = InnerKind::main;
      want_reduction = true;
      break;
    case Route::eh_corollary:
      if (trivial_eh) {
        structure_ok = structure_ok && b.empty();
        structure_detail = "trivial EH certificate must have empty B";
        inner = InnerKind::none;
      } else {
        structure_ok = structure_ok && b.size() + 1 == a.size() &&
                       b.subset_of(a);
        structure_detail = "EH route needs B = A minus one element";
        if (structure_ok) {
          if (std::min(a.size(), b.size()) == 1) {
            inner = InnerKind::singleton;
          } else {
            inner = InnerKind::main;
            want_reduction = a.size() + b.size() >= p + 3;
          }
        }
      }
      break;
  }
  if (!ck.check("route-structure", structure_ok, structure_detail)) return;

  // Payload shape: moment data only where the route calls for it.
  const bool has_moments = inner == InnerKind::main;
  bool shape_ok;
  if (has_moments) {
    shape_ok = cert.e_c.has_value() && cert.binomial_check.has_value() &&
               cert.reduction.has_value() == want_reduction &&
               !cert.w1.empty() && !cert.w2.empty();
  } else {
    shape_ok = !cert.e_c.has_value() && !cert.binomial_check.has_value() &&
               !cert.reduction.has_value() && cert.w1.empty() &&
               cert.w2.empty() && cert.alpha.empty() && cert.beta.empty() &&
               cert.gamma.empty();
  }
  if (!ck.check("payload-shape", shape_ok,
                "payload fields do not match route " + route_name(cert.route))) {
    return;
  }

  const std::uint64_t formula =
      is_eh ? eh_bound(p, a.size()) : anr_bound(p, a.size(), b.size());
  if (!ck.check("claimed-bound-formula", cert.claimed_bound == formula,
                "stored " + std::to_string(cert.claimed_bound) +
                    ", formula gives " + std::to_string(formula))) {
    return;
  }

  const FpSet c_true =
      is_eh ? restricted_sumset(a, a)
            : restricted_sumset(a, b);
  if (!ck.check("sumset-enumeration",
                c_stored == c_true && cert.c_size == c_true.size(),
                "stored " + c_stored.to_string() + " size " +
                    std::to_string(cert.c_size) + ", enumerated " +
                    c_true.to_string())) {
    return;
  }

  if (is_eh && !trivial_eh) {
    const FpSet via_pair = restricted_sumset(a, b);
    if (!ck.check("eh-set-equality", via_pair == c_true,
                  "A+.A and A+.(A\\{a0}) must coincide")) {
      return;
    }
  }

  if (!ck.check("bound-inequality", c_true.size() >= cert.claimed_bound,
                "|C| = " + std::to_string(c_true.size()) + " vs bound " +
                    std::to_string(cert.claimed_bound))) {
    return;
  }

  if (inner != InnerKind::main) return;

  FpSet x = a;
  FpSet y = b;
  if (want_reduction) {
    const ReductionRecord& rec = *cert.reduction;
    if (!validate_raw_set(ck, "reduction-sets-valid", rec.removed_from_a, p) ||
        !validate_raw_set(ck, "reduction-sets-valid", rec.removed_from_b, p) ||
        !validate_raw_set(ck, "reduction-sets-valid", rec.a_prime, p) ||
        !validate_raw_set(ck, "reduction-sets-valid", rec.b_prime, p)) {
      return;
    }
    const FpSet removed_a(*field, rec.removed_from_a);
    const FpSet removed_b(*field, rec.removed_from_b);
    const FpSet a_prime(*field, rec.a_prime);
    const FpSet b_prime(*field, rec.b_prime);

    const std::uint64_t d = a.size() + b.size() - 2 - p;
    bool arith_ok =
        rec.d == d && rec.d1 == d / 2 && rec.d2 == d - d / 2 && d >= 1 &&
        removed_a.subset_of(a) && removed_b.subset_of(b) &&
        a_prime.subset_of(a) && b_prime.subset_of(b) &&
        removed_a.size() + a_prime.size() == a.size() &&
        removed_b.size() + b_prime.size() == b.size() &&
        ((removed_a.size() == rec.d1 && removed_b.size() == rec.d2) ||
         (removed_a.size() == rec.d2 && removed_b.size() == rec.d1)) &&
        !a_prime.empty() && !b_prime.empty() &&
        a_prime.size() + b_prime.size() == p + 2 &&
        a_prime.size() != b_prime.size();
    // Removed and kept must actually partition the originals.
    for (std::uint64_t e : a.elements()) {
      arith_ok = arith_ok && (a_prime.contains(e) != removed_a.contains(e));
    }
    for (std::uint64_t e : b.elements()) {
      arith_ok = arith_ok && (b_prime.contains(e) != removed_b.contains(e));
    }
    if (!ck.check("reduction-arithmetic", arith_ok,
                  "d = " + std::to_string(rec.d) + ", d1 = " +
                      std::to_string(rec.d1) + ", d2 = " +
                      std::to_string(rec.d2))) {
      return;
    }
    x = a_prime;
    y = b_prime;
  }

  verify_main_core(ck, cert, x, y, c_true);
}

}  // namespace

VerificationReport verify_certificate(const Certificate& cert) {
  VerificationReport report;
  try {
    verify_impl(cert, report);
  } catch (const std::exception& e) {
    // Malformed content must surface as a failed check, never an abort.
    report.checks.push_back({"internal-error", false, e.what()});
  }
  return report;
}

}  // namespace anrcert
