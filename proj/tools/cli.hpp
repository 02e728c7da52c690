#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "basecomb/types.hpp"
#include "basecomb/verify.hpp"

namespace basecomb::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int { kSuccess = 0, kFailure = 1, kUsage = 2 };

/// Results of one sweep index n; `skipped` counts parameter tuples that
/// were filtered out by a precondition (e.g. carrying pairs).
struct CaseBatch {
  std::vector<VerifyResult> results;
  std::uint64_t skipped = 0;
};

struct SweepReport {
  std::string identity_id;
  std::uint32_t base = 2;
  std::uint64_t n_max = 0;
  std::uint64_t total = 0;
  std::uint64_t passed = 0;
  std::uint64_t skipped = 0;
  std::vector<VerifyResult> failures;  ///< ascending in n
  double elapsed_seconds = 0.0;
};

/// Identity ids accepted by `verify`, in display order.
const std::vector<std::string>& identity_ids();

/// Builds the per-n case function of an identity (shared precomputation is
/// done here). Throws std::invalid_argument for unknown ids.
std::function<CaseBatch(std::uint64_t)> make_case(const std::string& id, Base b, std::uint64_t n_max);

/// Runs cases n = 0 .. n_max-1 on `workers` threads. Batches are merged in
/// ascending n, so the report does not depend on the worker count.
SweepReport run_sweep(const std::string& id, Base b, std::uint64_t n_max, unsigned workers);

/// Sequence names accepted by `seq`.
const std::vector<std::string>& sequence_names();

/// Value of sequence `name` at n. `param` is the fixed second argument of
/// the two-argument families (binomb: k, stirlingb: upper index).
Nat sequence_value(const std::string& name, const Nat& n, Base b, std::uint64_t param);

/// Prints the summary line and counterexamples of a sweep to out and the
/// elapsed time to err. Returns kSuccess iff there are no failures.
int print_report(const SweepReport& report, std::ostream& out, std::ostream& err);

/// Entry point without the program name. Writes data to out and
/// diagnostics to err; returns an ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace basecomb::cli
