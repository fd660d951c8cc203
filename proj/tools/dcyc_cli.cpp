// dcyc: cycle certificates for the derangement graph.
//
//   dcyc cycle --n N --alpha PERM --beta PERM --length L [--out FILE]
//   dcyc verify FILE
//   dcyc certify-edge --n N --alpha PERM --beta PERM [--lengths SPEC] [--jobs J] [--json] [--timing]
//   dcyc stats --n N
//
// Exit status: 0 success, 1 internal error, 2 usage or input error,
// 3 verification rejected.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dcyc/dcyc.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;
constexpr int kExitRejected = 3;

struct EdgeArgs {
  int n = 0;
  std::string alpha;
  std::string beta;
};

void add_edge_options(CLI::App* cmd, EdgeArgs& args) {
  cmd->add_option("--n", args.n, "Permutation size")->required();
  cmd->add_option("--alpha", args.alpha, "First endpoint of the edge")->required();
  cmd->add_option("--beta", args.beta, "Second endpoint of the edge")->required();
}

struct Edge {
  dcyc::Perm alpha;
  dcyc::Perm beta;
};

Edge parse_edge(const EdgeArgs& args) {
  Edge e{dcyc::parse_perm(args.alpha), dcyc::parse_perm(args.beta)};
  if (e.alpha.size() != args.n || e.beta.size() != args.n) {
    throw dcyc::InputError("alpha and beta must be permutations of size n = " + std::to_string(args.n));
  }
  if (!dcyc::adjacent(e.alpha, e.beta)) throw dcyc::InputError("alpha and beta are not adjacent");
  return e;
}

int run_cycle(const EdgeArgs& args, std::uint64_t length, const std::string& out) {
  const dcyc::Synthesizer synth(args.n);
  const Edge e = parse_edge(args);
  const std::string doc = dcyc::write_certificate(synth.synthesize(e.alpha, e.beta, length));
  if (out.empty()) {
    std::cout << doc;
    return kExitOk;
  }
  std::ofstream file(out);
  if (!file || !(file << doc)) throw dcyc::InputError("cannot write " + out);
  return kExitOk;
}

int run_verify(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw dcyc::InputError("cannot read " + path);
  std::stringstream buffer;
  buffer << file.rdbuf();
  const dcyc::CycleCertificate cert = dcyc::read_certificate(buffer.str());
  const dcyc::Verdict verdict = dcyc::check_certificate(cert);
  if (verdict.accepted()) {
    std::cout << "accept: cycle of length " << cert.length << " through " << dcyc::format_perm(cert.alpha)
              << " - " << dcyc::format_perm(cert.beta) << " in the derangement graph on S_" << cert.n << "\n";
    return kExitOk;
  }
  std::cout << "reject: " << dcyc::to_string(verdict.violation) << " at index " << verdict.index << ": "
            << verdict.message << "\n";
  return kExitRejected;
}

int run_certify(const EdgeArgs& args, const std::string& lengths_spec, unsigned jobs, bool json, bool timing) {
  const dcyc::Synthesizer synth(args.n);
  const Edge e = parse_edge(args);
  const auto lengths = lengths_spec.empty() ? dcyc::default_lengths(args.n) : dcyc::parse_length_spec(lengths_spec);
  const dcyc::EdgeReport report = dcyc::certify_edge(synth, e.alpha, e.beta, lengths, jobs);
  if (json) {
    std::cout << dcyc::report_to_json(report, timing).dump(2) << "\n";
  } else {
    std::cout << dcyc::render_report_text(report, timing);
  }
  return report.all_passed() ? kExitOk : kExitRejected;
}

int run_stats(int n) {
  if (n < 1) throw dcyc::InputError("n must be positive");
  const std::uint64_t dn = dcyc::derangement_count(n);
  std::cout << "n = " << n << "\n"
            << "n! = " << dcyc::factorial(n) << "\n"
            << "|D_n| = " << dn << "\n"
            << "degree = " << dn << " (regular)\n";
  if (n < 4) return kExitOk;
  const std::uint64_t order = dcyc::factorial(n - 1);
  const std::uint64_t min_degree = order - 1 - dcyc::derangement_count(n - 1);
  const std::uint64_t threshold = (order + 2) / 2;
  const bool holds = 2 * min_degree >= order + 2;
  std::cout << "complement of Gamma_" << n - 1 << ": order " << order << ", minimum degree " << min_degree;
  if (n == 4) std::cout << " (K3,3)";
  std::cout << "\n"
            << "minimum-degree threshold (order + 2) / 2 = " << threshold << ": " << (holds ? "holds" : "fails");
  if (n == 4) std::cout << " (special case: K3,3 is edge even-pancyclic, base lengths 4 and 6)";
  std::cout << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cycle certificates through edges of the derangement graph"};
  app.require_subcommand(1);

  EdgeArgs cycle_args;
  std::uint64_t length = 0;
  std::string out;
  auto* cycle = app.add_subcommand("cycle", "Synthesize a cycle of a given length through an edge");
  add_edge_options(cycle, cycle_args);
  cycle->add_option("--length", length, "Cycle length in [3, n!]")->required();
  cycle->add_option("--out", out, "Write the certificate here instead of standard output");

  std::string verify_path;
  auto* verify = app.add_subcommand("verify", "Check a certificate file");
  verify->add_option("file", verify_path, "Certificate document")->required();

  EdgeArgs certify_args;
  std::string lengths_spec;
  unsigned jobs = 1;
  bool json = false;
  bool timing = false;
  auto* certify = app.add_subcommand("certify-edge", "Synthesize and check cycles of many lengths through an edge");
  add_edge_options(certify, certify_args);
  certify->add_option("--lengths", lengths_spec, "Lengths such as 3-10,120 (default: all for n <= 5, a sample above)");
  certify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  certify->add_flag("--json", json, "Machine-readable report");
  certify->add_flag("--timing", timing, "Include per-length wall time");

  int stats_n = 0;
  auto* stats = app.add_subcommand("stats", "Counts and degree bounds for the derangement graph");
  stats->add_option("--n", stats_n, "Permutation size")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*cycle) return run_cycle(cycle_args, length, out);
    if (*verify) return run_verify(verify_path);
    if (*certify) return run_certify(certify_args, lengths_spec, jobs, json, timing);
    if (*stats) return run_stats(stats_n);
  } catch (const dcyc::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
