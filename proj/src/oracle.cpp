#include "anrcert/oracle.hpp"

#include <bit>
#include <chrono>
#include <thread>
#include <utility>

#include "anrcert/certificate.hpp"
#include "anrcert/sumsets.hpp"
#include "json.hpp"

namespace anrcert::oracle {

namespace {

using Json = nlohmann::ordered_json;

void require_mask_range(std::uint64_t p) {
  if (p > 63) {
    throw BudgetExceededError("p = " + std::to_string(p) +
                              " is too large for subset enumeration");
  }
}

std::string u128_to_string(unsigned __int128 v) {
  if (v == 0) return "0";
  std::string out;
  while (v != 0) {
    out.insert(out.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return out;
}

// Deterministic 64-bit generator; the sample stream depends only on the
// seed, never on the stdlib or the worker count.
struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
};

struct Partial {
  std::uint64_t pairs_checked = 0;
  std::vector<PairRecord> violations;
  std::vector<PairRecord> tight;
  std::uint64_t tight_total = 0;
};

FpSet mask_to_set(const PrimeField& field, std::uint64_t mask) {
  return FpSet(field, SweepReport::mask_elements(mask));
}

}  // namespace

std::string bound_kind_name(BoundKind kind) {
  switch (kind) {
    case BoundKind::anr:
      return "anr";
    case BoundKind::eh:
      return "eh";
    case BoundKind::cd:
      return "cd";
  }
  throw InternalInconsistencyError("unhandled bound kind");
}

std::optional<BoundKind> bound_kind_from_name(std::string_view name) {
  if (name == "anr") return BoundKind::anr;
  if (name == "eh") return BoundKind::eh;
  if (name == "cd") return BoundKind::cd;
  return std::nullopt;
}

std::uint64_t restricted_sum_size(std::uint64_t mask_a, std::uint64_t mask_b,
                                  std::uint64_t p) {
  require_mask_range(p);
  std::uint64_t present = 0;
  for (std::uint64_t a = 0; a < p; ++a) {
    if (((mask_a >> a) & 1) == 0) continue;
    for (std::uint64_t b = 0; b < p; ++b) {
      if (a == b || ((mask_b >> b) & 1) == 0) continue;
      std::uint64_t s = a + b;
      if (s >= p) s -= p;
      present |= std::uint64_t{1} << s;
    }
  }
  return std::popcount(present);
}

std::uint64_t classical_sum_size(std::uint64_t mask_a, std::uint64_t mask_b,
                                 std::uint64_t p) {
  require_mask_range(p);
  std::uint64_t present = 0;
  for (std::uint64_t a = 0; a < p; ++a) {
    if (((mask_a >> a) & 1) == 0) continue;
    for (std::uint64_t b = 0; b < p; ++b) {
      if (((mask_b >> b) & 1) == 0) continue;
      std::uint64_t s = a + b;
      if (s >= p) s -= p;
      present |= std::uint64_t{1} << s;
    }
  }
  return std::popcount(present);
}

std::vector<std::uint64_t> SweepReport::mask_elements(std::uint64_t mask) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t r = 0; r < 64; ++r) {
    if ((mask >> r) & 1) out.push_back(r);
  }
  return out;
}

namespace {

void record_outcome(Partial& out, std::size_t tight_limit, std::uint64_t ma,
                    std::uint64_t mb, std::uint64_t size, std::uint64_t bound,
                    std::string note) {
  ++out.pairs_checked;
  if (!note.empty() || size < bound) {
    out.violations.push_back({ma, mb, size, bound, std::move(note)});
    return;
  }
  if (size == bound) {
    ++out.tight_total;
    if (out.tight.size() < tight_limit) {
      out.tight.push_back({ma, mb, size, bound, ""});
    }
  }
}

bool filter_rejects(const std::optional<SizeFilter>& filter, int size_a,
                    int size_b) {
  if (!filter) return false;
  if (filter->size_a && *filter->size_a != static_cast<std::uint64_t>(size_a)) {
    return true;
  }
  if (filter->size_b && *filter->size_b != static_cast<std::uint64_t>(size_b)) {
    return true;
  }
  return false;
}

// Shared driver: budget check, exhaustive or seeded-random pair stream,
// worker partitioning, canonical-order merge.
template <typename ProcessPair>
SweepReport run_driver(std::uint64_t p, BoundKind kind, bool single_set,
                       const SweepOptions& options, ProcessPair process) {
  require_mask_range(p);
  if (!is_prime(p)) {
    throw CompositeModulusError(std::to_string(p) + " is not prime");
  }
  const std::uint64_t n_masks = (std::uint64_t{1} << p) - 1;
  const unsigned workers = options.workers == 0 ? 1 : options.workers;

  SweepReport report;
  report.p = p;
  report.kind = kind;
  report.workers = workers;
  report.samples = options.samples;
  report.seed = options.samples > 0 ? options.seed : std::nullopt;

  const auto start = std::chrono::steady_clock::now();
  std::vector<Partial> parts;

  if (options.samples == 0) {
    const unsigned __int128 raw =
        single_set ? static_cast<unsigned __int128>(n_masks)
                   : static_cast<unsigned __int128>(n_masks) * n_masks;
    if (raw > options.cap) {
      throw BudgetExceededError(
          "exhaustive sweep needs " + u128_to_string(raw) +
          " pair visits, over the cap of " + std::to_string(options.cap) +
          "; use a seeded random sample");
    }
    const unsigned used = static_cast<unsigned>(
        std::min<std::uint64_t>(workers, n_masks));
    parts.resize(used);
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (n_masks + used - 1) / used;
    for (unsigned w = 0; w < used; ++w) {
      const std::uint64_t lo = 1 + w * chunk;
      const std::uint64_t hi = std::min<std::uint64_t>(1 + (w + 1) * chunk,
                                                       n_masks + 1);
      auto task = [&, lo, hi, w] {
        for (std::uint64_t ma = lo; ma < hi; ++ma) {
          if (single_set) {
            process(ma, ma, parts[w]);
          } else {
            for (std::uint64_t mb = 1; mb <= n_masks; ++mb) {
              process(ma, mb, parts[w]);
            }
          }
        }
      };
      if (used == 1) {
        task();
      } else {
        pool.emplace_back(task);
      }
    }
    for (std::thread& t : pool) t.join();
  } else {
    if (!options.seed) {
      throw Error("random sampling requires a seed");
    }
    // The sample list is drawn up front so the report is a function of
    // the seed alone, independent of the worker count.
    SplitMix64 rng{*options.seed};
    auto draw = [&] { return 1 + rng.next() % n_masks; };
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    pairs.reserve(options.samples);
    for (std::uint64_t s = 0; s < options.samples; ++s) {
      if (single_set) {
        const std::uint64_t ma = draw();
        pairs.emplace_back(ma, ma);
      } else if (kind == BoundKind::anr) {
        std::uint64_t ma = draw();
        std::uint64_t mb = draw();
        while (std::popcount(ma) == std::popcount(mb)) {
          ma = draw();
          mb = draw();
        }
        pairs.emplace_back(ma, mb);
      } else {
        const std::uint64_t ma = draw();
        pairs.emplace_back(ma, draw());
      }
    }
    const unsigned used = static_cast<unsigned>(std::min<std::uint64_t>(
        workers, std::max<std::uint64_t>(pairs.size(), 1)));
    parts.resize(used);
    std::vector<std::thread> pool;
    const std::size_t chunk = (pairs.size() + used - 1) / used;
    for (unsigned w = 0; w < used; ++w) {
      const std::size_t lo = w * chunk;
      const std::size_t hi = std::min(pairs.size(), (w + 1) * chunk);
      auto task = [&, lo, hi, w] {
        for (std::size_t i = lo; i < hi; ++i) {
          process(pairs[i].first, pairs[i].second, parts[w]);
        }
      };
      if (used == 1) {
        task();
      } else {
        pool.emplace_back(task);
      }
    }
    for (std::thread& t : pool) t.join();
  }

  for (const Partial& part : parts) {
    report.pairs_checked += part.pairs_checked;
    report.violations.insert(report.violations.end(), part.violations.begin(),
                             part.violations.end());
    report.tight_total += part.tight_total;
    for (const PairRecord& rec : part.tight) {
      if (report.tight_pairs.size() < options.tight_limit) {
        report.tight_pairs.push_back(rec);
      }
    }
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

}  // namespace

SweepReport sweep(std::uint64_t p, BoundKind kind, const SweepOptions& options) {
  const bool single_set = kind == BoundKind::eh;
  auto process = [&, p, kind](std::uint64_t ma, std::uint64_t mb, Partial& out) {
    const int size_a = std::popcount(ma);
    const int size_b = std::popcount(mb);
    if (filter_rejects(options.filter, size_a, size_b)) return;
    std::uint64_t size = 0;
    std::uint64_t bound = 0;
    switch (kind) {
      case BoundKind::anr:
        if (size_a == size_b) return;
        size = restricted_sum_size(ma, mb, p);
        bound = anr_bound(p, size_a, size_b);
        break;
      case BoundKind::eh:
        size = restricted_sum_size(ma, ma, p);
        bound = eh_bound(p, size_a);
        break;
      case BoundKind::cd:
        size = classical_sum_size(ma, mb, p);
        bound = cd_bound(p, size_a, size_b);
        break;
    }
    record_outcome(out, options.tight_limit, ma, mb, size, bound, "");
  };
  return run_driver(p, kind, single_set, options, process);
}

SweepReport cross_check_certificates(std::uint64_t p,
                                     const SweepOptions& options) {
  require_mask_range(p);
  const PrimeField field(p);
  auto process = [&, p](std::uint64_t ma, std::uint64_t mb, Partial& out) {
    const int size_a = std::popcount(ma);
    const int size_b = std::popcount(mb);
    if (size_a == size_b) return;
    if (filter_rejects(options.filter, size_a, size_b)) return;
    const std::uint64_t truth = restricted_sum_size(ma, mb, p);
    const std::uint64_t formula = anr_bound(p, size_a, size_b);
    std::string note;
    try {
      const Certificate cert =
          certify_anr(mask_to_set(field, ma), mask_to_set(field, mb));
      const VerificationReport rep = verify_certificate(cert);
      if (!rep.passed()) {
        note = "verification failed at " + rep.first_failure();
      } else if (cert.claimed_bound != formula) {
        note = "claimed bound " + std::to_string(cert.claimed_bound) +
               " differs from formula " + std::to_string(formula);
      } else if (cert.claimed_bound > truth) {
        note = "claimed bound " + std::to_string(cert.claimed_bound) +
               " exceeds enumerated size " + std::to_string(truth);
      } else if (cert.c_size != truth) {
        note = "certificate C_size " + std::to_string(cert.c_size) +
               " differs from enumerated size " + std::to_string(truth);
      }
    } catch (const std::exception& e) {
      note = std::string("generator error: ") + e.what();
    }
    record_outcome(out, options.tight_limit, ma, mb, truth, formula,
                   std::move(note));
  };
  SweepReport report =
      run_driver(p, BoundKind::anr, /*single_set=*/false, options, process);
  report.cross_check = true;
  return report;
}

namespace {

Json record_to_json(const PairRecord& rec) {
  Json j;
  j["A"] = SweepReport::mask_elements(rec.mask_a);
  j["B"] = SweepReport::mask_elements(rec.mask_b);
  j["size"] = rec.size;
  j["bound"] = rec.bound;
  if (!rec.note.empty()) j["note"] = rec.note;
  return j;
}

}  // namespace

std::string sweep_report_to_json(const SweepReport& report) {
  Json j;
  j["p"] = report.p;
  j["kind"] = bound_kind_name(report.kind);
  j["cross_check"] = report.cross_check;
  j["pairs_checked"] = report.pairs_checked;
  Json violations = Json::array();
  for (const PairRecord& rec : report.violations) {
    violations.push_back(record_to_json(rec));
  }
  j["violations"] = violations;
  j["tight_total"] = report.tight_total;
  Json tight = Json::array();
  for (const PairRecord& rec : report.tight_pairs) {
    tight.push_back(record_to_json(rec));
  }
  j["tight_pairs"] = tight;
  if (report.samples > 0) {
    j["sampler"] = Json{{"mode", "random"},
                        {"seed", report.seed.value_or(0)},
                        {"samples", report.samples}};
  } else {
    j["sampler"] = Json{{"mode", "exhaustive"}};
  }
  j["runtime"] = Json{{"elapsed_seconds", report.elapsed_seconds},
                      {"workers", report.workers}};
  return j.dump(2);
}

std::string tight_pairs_csv(const SweepReport& report) {
  std::string out = "a,b,size,bound\n";
  auto join = [](const std::vector<std::uint64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i > 0) s += ";";
      s += std::to_string(v[i]);
    }
    return s;
  };
  for (const PairRecord& rec : report.tight_pairs) {
    out += join(SweepReport::mask_elements(rec.mask_a)) + "," +
           join(SweepReport::mask_elements(rec.mask_b)) + "," +
           std::to_string(rec.size) + "," + std::to_string(rec.bound) + "\n";
  }
  return out;
}

}  // namespace anrcert::oracle
