// Command-line front end: certify / verify / eh / bound / sweep.
//
// Exit codes are a stable contract:
//   0  success
//   1  verification failure (or sweep violations)
//   2  usage or hypothesis error (bad literals, composite p, |A| = |B|)
//   3  sweep budget exceeded

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "anrcert/certificate.hpp"
#include "anrcert/oracle.hpp"
#include "anrcert/sumsets.hpp"

namespace {

using namespace anrcert;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw Error("failed writing '" + path + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct CertifyArgs {
  std::uint64_t p = 0;
  std::string a;
  std::string b;
  std::string out;
};

int run_certify(const CertifyArgs& args) {
  PrimeField field(args.p);
  const FpSet a = FpSet::parse(field, args.a);
  const FpSet b = FpSet::parse(field, args.b);
  const Certificate cert = certify_anr(a, b);
  std::cout << "bound=" << cert.claimed_bound << " actual=" << cert.c_size
            << " route=" << route_name(cert.route) << "\n";
  if (!args.out.empty()) {
    write_file(args.out, certificate_to_json(cert));
    std::cout << "wrote " << args.out << "\n";
  }
  return 0;
}

struct EhArgs {
  std::uint64_t p = 0;
  std::string a;
  std::string out;
};

int run_eh(const EhArgs& args) {
  PrimeField field(args.p);
  const FpSet a = FpSet::parse(field, args.a);
  const Certificate cert = certify_eh(a);
  std::cout << "bound=" << cert.claimed_bound << " actual=" << cert.c_size
            << " route=" << route_name(cert.route) << "\n";
  if (!args.out.empty()) {
    write_file(args.out, certificate_to_json(cert));
    std::cout << "wrote " << args.out << "\n";
  }
  return 0;
}

int run_verify(const std::string& path) {
  const Certificate cert = certificate_from_json(read_file(path));
  const VerificationReport report = verify_certificate(cert);
  if (report.passed()) {
    std::cout << "pass (" << report.checks.size() << " checks)\n";
    return 0;
  }
  std::cout << report.summary() << "\n";
  return 1;
}

struct BoundArgs {
  std::uint64_t p = 0;
  std::string kind = "anr";
  std::string a;
  std::string b;
  bool actual = false;
};

int run_bound(const BoundArgs& args) {
  PrimeField field(args.p);
  const auto kind = oracle::bound_kind_from_name(args.kind);
  if (!kind) throw Error("unknown bound kind '" + args.kind + "'");
  const FpSet a = FpSet::parse(field, args.a);
  std::optional<FpSet> b;
  if (*kind != oracle::BoundKind::eh) {
    if (args.b.empty()) throw Error("--b is required for kind " + args.kind);
    b = FpSet::parse(field, args.b);
  }

  std::uint64_t bound = 0;
  std::uint64_t size = 0;
  switch (*kind) {
    case oracle::BoundKind::anr:
      bound = anr_bound(args.p, a.size(), b->size());
      if (args.actual) size = restricted_sumset(a, *b).size();
      break;
    case oracle::BoundKind::eh:
      bound = eh_bound(args.p, a.size());
      if (args.actual) size = restricted_sumset(a, a).size();
      break;
    case oracle::BoundKind::cd:
      bound = cd_bound(args.p, a.size(), b->size());
      if (args.actual) size = sumset(a, *b).size();
      break;
  }
  std::cout << "bound=" << bound;
  if (args.actual) std::cout << " actual=" << size;
  std::cout << "\n";
  return 0;
}

struct SweepArgs {
  std::uint64_t p = 0;
  std::string kind = "anr";
  std::uint64_t cap = std::uint64_t{1} << 24;
  std::uint64_t samples = 0;
  std::optional<std::uint64_t> seed;
  unsigned workers = 1;
  std::string out;
  std::string csv;
};

int run_sweep(const SweepArgs& args) {
  const auto kind = oracle::bound_kind_from_name(args.kind);
  if (!kind) throw Error("unknown bound kind '" + args.kind + "'");
  oracle::SweepOptions options;
  options.cap = args.cap;
  options.workers = args.workers;
  options.samples = args.samples;
  options.seed = args.seed;
  const oracle::SweepReport report = oracle::sweep(args.p, *kind, options);
  std::cout << "pairs=" << report.pairs_checked
            << " violations=" << report.violations.size()
            << " tight=" << report.tight_total << "\n";
  if (!args.out.empty()) {
    write_file(args.out, oracle::sweep_report_to_json(report));
    std::cout << "wrote " << args.out << "\n";
  }
  if (!args.csv.empty()) {
    write_file(args.csv, oracle::tight_pairs_csv(report));
    std::cout << "wrote " << args.csv << "\n";
  }
  return report.violations.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lower-bound certificates for restricted sumsets over Z/pZ"};
  app.require_subcommand(1);

  CertifyArgs certify_args;
  CLI::App* certify = app.add_subcommand(
      "certify", "Certify |A+.B| >= min{p, |A|+|B|-2} for |A| != |B|");
  certify->add_option("--p", certify_args.p, "prime modulus")->required();
  certify->add_option("--a", certify_args.a, "set A, e.g. 1,2")->required();
  certify->add_option("--b", certify_args.b, "set B, e.g. 0,1,2")->required();
  certify->add_option("--out", certify_args.out, "certificate output path");

  EhArgs eh_args;
  CLI::App* eh = app.add_subcommand(
      "eh", "Certify the diagonal bound |A+.A| >= min{p, 2|A|-3}");
  eh->add_option("--p", eh_args.p, "prime modulus")->required();
  eh->add_option("--a", eh_args.a, "set A")->required();
  eh->add_option("--out", eh_args.out, "certificate output path");

  std::string verify_path;
  CLI::App* verify = app.add_subcommand(
      "verify", "Independently re-derive a stored certificate");
  verify->add_option("path", verify_path, "certificate JSON file")->required();

  BoundArgs bound_args;
  CLI::App* bound = app.add_subcommand(
      "bound", "Print the closed-form bound, optionally with the true size");
  bound->add_option("--p", bound_args.p, "prime modulus")->required();
  bound->add_option("--kind", bound_args.kind, "anr, eh, or cd");
  bound->add_option("--a", bound_args.a, "set A")->required();
  bound->add_option("--b", bound_args.b, "set B (anr and cd)");
  bound->add_flag("--actual", bound_args.actual, "also enumerate the sumset");

  SweepArgs sweep_args;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Brute-force a bound over all subset pairs of Z/pZ");
  sweep->add_option("--p", sweep_args.p, "prime modulus")->required();
  sweep->add_option("--kind", sweep_args.kind, "anr, eh, or cd");
  sweep->add_option("--cap", sweep_args.cap, "max exhaustive pair visits");
  sweep->add_option("--samples", sweep_args.samples,
                    "random sample count (0 = exhaustive)");
  sweep->add_option("--seed", sweep_args.seed,
                    "seed for random sampling (required with --samples)");
  sweep->add_option("--workers", sweep_args.workers, "worker threads");
  sweep->add_option("--out", sweep_args.out, "report JSON path");
  sweep->add_option("--csv", sweep_args.csv, "tight-pair CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (certify->parsed()) return run_certify(certify_args);
    if (eh->parsed()) return run_eh(eh_args);
    if (verify->parsed()) return run_verify(verify_path);
    if (bound->parsed()) return run_bound(bound_args);
    if (sweep->parsed()) return run_sweep(sweep_args);
  } catch (const anrcert::BudgetExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const anrcert::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
