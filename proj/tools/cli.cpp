#include "cli.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <utility>

#include <CLI11.hpp>

#include "basecomb/basecomb.hpp"

namespace basecomb::cli {

namespace {

constexpr std::uint64_t kStirlingOrderMax = 8;
constexpr std::uint64_t kThetaTupleLength = 3;
constexpr std::uint64_t kThetaEntryMax = 5;
constexpr std::size_t kMaxPrintedFailures = 20;
constexpr std::array<double, 4> kGammaGridX{0.0, 0.25, 0.5, 0.75};

Nat nat(std::uint64_t v) { return Nat(static_cast<unsigned long>(v)); }

CaseBatch single(VerifyResult r) {
  CaseBatch batch;
  batch.results.push_back(std::move(r));
  return batch;
}

// Every tuple of the given length with entries in [0, max_entry].
void for_each_tuple(std::size_t length, std::uint64_t max_entry,
                    const std::function<void(const std::vector<std::uint64_t>&)>& f) {
  std::vector<std::uint64_t> t(length, 0);
  for (;;) {
    f(t);
    std::size_t i = 0;
    while (i < t.size() && t[i] == max_entry) t[i++] = 0;
    if (i == t.size()) return;
    ++t[i];
  }
}

// Splits a bundled verification into its per-n parts, computed once.
std::function<CaseBatch(std::uint64_t)> from_parts(VerifyResult bundle) {
  auto shared = std::make_shared<const VerifyResult>(std::move(bundle));
  return [shared](std::uint64_t n) { return single(shared->parts.at(n)); };
}

std::string format_double(double v) {
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.14e", v);
  return buf.data();
}

bool base_matters(const std::string& id) {
  return id != "stern-equivalence" && id != "ternary-count" && id != "theta";
}

}  // namespace

const std::vector<std::string>& identity_ids() {
  static const std::vector<std::string> ids{
      "digital-binomial", "chu-vandermonde", "power-sums",        "stirling-explicit", "stirling-recurrence",
      "theta",            "fib-all",         "fib-eq41",          "ternary-count",     "stern-equivalence",
      "exp-convolution",  "exp-coefficients", "gamma-bound"};
  return ids;
}

std::function<CaseBatch(std::uint64_t)> make_case(const std::string& id, Base b, std::uint64_t n_max) {
  if (id == "digital-binomial") {
    return [b](std::uint64_t n) { return single(verify_digital_binomial(nat(n), b)); };
  }
  if (id == "chu-vandermonde") {
    return [b, n_max](std::uint64_t n) {
      CaseBatch batch;
      for (std::uint64_t m = 0; m < n_max; ++m) {
        if (!carry_free_add(nat(n), nat(m), b)) {
          ++batch.skipped;
          continue;
        }
        for (std::uint64_t r = 0; r <= n + m; ++r) {
          batch.results.push_back(verify_chu_vandermonde(nat(n), nat(m), nat(r), b));
        }
      }
      return batch;
    };
  }
  if (id == "power-sums") {
    return [b](std::uint64_t n) { return single(verify_power_sum_identities(nat(n), b)); };
  }
  if (id == "stirling-explicit") {
    return [b](std::uint64_t k) {
      CaseBatch batch;
      for (std::uint64_t n = 0; n <= kStirlingOrderMax; ++n) batch.results.push_back(verify_stirling_explicit(n, nat(k), b));
      return batch;
    };
  }
  if (id == "stirling-recurrence") {
    return [b](std::uint64_t k) {
      CaseBatch batch;
      for (std::uint64_t n = 1; n <= kStirlingOrderMax; ++n) {
        batch.results.push_back(verify_stirling_recurrence(n, nat(k), b));
      }
      return batch;
    };
  }
  if (id == "theta") {
    return [](std::uint64_t n) {
      CaseBatch batch;
      for (std::size_t len = 0; len <= kThetaTupleLength; ++len) {
        for_each_tuple(len, kThetaEntryMax, [&](const std::vector<std::uint64_t>& m) {
          batch.results.push_back(verify_theta_identity(n, m));
        });
      }
      return batch;
    };
  }
  if (id == "fib-all") {
    return [b](std::uint64_t n) {
      CaseBatch batch;
      batch.results.push_back(verify_fib_identities(nat(n), b));
      batch.results.push_back(verify_fib_dominated(nat(n), b));
      if (b.value() == 3) batch.results.push_back(verify_ternary_count(nat(n)));
      return batch;
    };
  }
  if (id == "fib-eq41") {
    return [b](std::uint64_t n) { return single(verify_fib_dominated(nat(n), b)); };
  }
  if (id == "ternary-count") {
    return [](std::uint64_t n) { return single(verify_ternary_count(nat(n))); };
  }
  if (id == "stern-equivalence") {
    return [](std::uint64_t n) { return single(verify_stern_equivalence(nat(n))); };
  }
  if (id == "exp-convolution") {
    if (n_max == 0) return [](std::uint64_t) { return CaseBatch{}; };
    return from_parts(verify_exp_convolution(b, n_max));
  }
  if (id == "exp-coefficients") {
    if (n_max == 0) return [](std::uint64_t) { return CaseBatch{}; };
    return from_parts(verify_exp_coefficients(b, series_depth(b, n_max)));
  }
  if (id == "gamma-bound") {
    return [b, n_max](std::uint64_t n) {
      CaseBatch batch;
      const double w = static_cast<double>(n) / static_cast<double>(n_max);
      for (double x : kGammaGridX) batch.results.push_back(check_log_gamma_bound(x, w, b, default_depth(w, b)));
      return batch;
    };
  }
  throw std::invalid_argument("unknown identity '" + id + "'");
}

SweepReport run_sweep(const std::string& id, Base b, std::uint64_t n_max, unsigned workers) {
  const auto start = std::chrono::steady_clock::now();
  const auto case_fn = make_case(id, b, n_max);

  struct Slot {
    std::uint64_t total = 0;
    std::uint64_t passed = 0;
    std::uint64_t skipped = 0;
    std::vector<VerifyResult> failures;
  };
  std::vector<Slot> slots(n_max);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto work = [&] {
    for (;;) {
      const std::uint64_t n = next.fetch_add(1);
      if (n >= n_max) return;
      try {
        CaseBatch batch = case_fn(n);
        Slot& slot = slots[n];
        slot.skipped = batch.skipped;
        for (VerifyResult& r : batch.results) {
          ++slot.total;
          if (r.pass) {
            ++slot.passed;
          } else {
            slot.failures.push_back(std::move(r));
          }
        }
      } catch (...) {
        const std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(n_max);
        return;
      }
    }
  };

  workers = std::max(1U, workers);
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < workers; ++i) pool.emplace_back(work);
  work();
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);

  SweepReport report;
  report.identity_id = id;
  report.base = b.value();
  report.n_max = n_max;
  for (Slot& slot : slots) {
    report.total += slot.total;
    report.passed += slot.passed;
    report.skipped += slot.skipped;
    for (VerifyResult& r : slot.failures) report.failures.push_back(std::move(r));
  }
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

const std::vector<std::string>& sequence_names() {
  static const std::vector<std::string> names{"binomb", "factb", "stirlingb", "fibb", "fibtilde2", "stern"};
  return names;
}

Nat sequence_value(const std::string& name, const Nat& n, Base b, std::uint64_t param) {
  if (name == "binomb") return binom_b(n, nat(param), b);
  if (name == "factb") return factorial_b(n, b);
  if (name == "stirlingb") return stirling2_b(param, n, b);
  if (name == "fibb") return fib_b(n, b);
  if (name == "fibtilde2") return fib_tilde2(n);
  if (name == "stern") return stern(n);
  throw std::invalid_argument("unknown sequence '" + name + "'");
}

namespace {

struct SeqOptions {
  std::string name;
  std::int64_t base = 2;
  std::pair<std::uint64_t, std::uint64_t> range{0, 0};
  std::string format = "bfile";
  std::optional<std::uint64_t> param;
};

struct VerifyOptions {
  std::string identity;
  std::int64_t base = 2;
  std::uint64_t n_max = 0;
  unsigned workers = 1;
};

struct EvalOptions {
  double x = 0.0;
  double w = 0.0;
  std::int64_t base = 2;
  std::optional<std::size_t> depth;
  std::optional<std::size_t> terms;
};

int cmd_seq(const SeqOptions& opt, std::ostream& out, std::ostream& err) {
  const auto& names = sequence_names();
  if (std::find(names.begin(), names.end(), opt.name) == names.end()) {
    err << "error: unknown sequence '" << opt.name << "'\n";
    return kUsage;
  }
  if (opt.range.first > opt.range.second) {
    err << "error: --range needs lo <= hi\n";
    return kUsage;
  }
  if ((opt.name == "binomb" || opt.name == "stirlingb") && !opt.param) {
    err << "error: sequence '" << opt.name << "' needs --param\n";
    return kUsage;
  }
  const Base b(opt.base);
  const bool csv = opt.format == "csv";
  if (csv) out << "n,value\n";
  for (std::uint64_t n = opt.range.first;; ++n) {
    const Nat value = sequence_value(opt.name, nat(n), b, opt.param.value_or(0));
    out << n << (csv ? "," : " ") << value.get_str() << '\n';
    if (n == opt.range.second) break;
  }
  return kSuccess;
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  const auto& ids = identity_ids();
  if (std::find(ids.begin(), ids.end(), opt.identity) == ids.end()) {
    err << "error: unknown identity '" << opt.identity << "'\n";
    return kUsage;
  }
  return print_report(run_sweep(opt.identity, Base(opt.base), opt.n_max, opt.workers), out, err);
}

int cmd_eval_exp(const EvalOptions& opt, std::ostream& out) {
  const Base b(opt.base);
  if (!std::isfinite(opt.x)) throw domain_error("x must be finite");
  if (!(opt.w >= 0.0 && opt.w < 1.0)) throw domain_error("w must satisfy 0 <= w < 1");
  const std::size_t depth = opt.depth.value_or(default_depth(opt.w, b));
  if (depth == 0) throw domain_error("--depth must be at least 1");
  std::size_t terms = opt.terms.value_or(0);
  if (!opt.terms) {
    constexpr std::size_t kMaxDefaultTerms = std::size_t{1} << 20;
    terms = 1;
    for (std::size_t i = 0; i < depth && terms < kMaxDefaultTerms; ++i) terms *= b.value();
    terms = std::min(terms, kMaxDefaultTerms);
  }
  if (terms == 0) throw domain_error("--terms must be at least 1");

  const double series = exp_b_series_numeric(opt.x, opt.w, b, terms);
  const double product = exp_b_product(opt.x, opt.w, b, depth);
  const ExpApprox approx = exp_b_approx(opt.x, opt.w, b, depth);

  out << "base                = " << b.value() << '\n';
  out << "depth               = " << depth << '\n';
  out << "terms               = " << terms << '\n';
  out << "series              = " << format_double(series) << '\n';
  out << "product             = " << format_double(product) << '\n';
  out << "approx_geometric    = " << format_double(approx.geometric) << '\n';
  out << "approx_two_term     = " << format_double(approx.two_term) << '\n';
  out << "|series-product|    = " << format_double(std::fabs(series - product)) << '\n';
  out << "|geometric-product| = " << format_double(std::fabs(approx.geometric - product)) << '\n';
  out << "|two_term-product|  = " << format_double(std::fabs(approx.two_term - product)) << '\n';
  if (opt.x >= 0.0) {
    const double lhs = std::fabs(log_gamma_sum(opt.x, opt.w, b, depth));
    const double bound = log_gamma_bound(opt.w, b);
    out << "|log_gamma_sum|     = " << format_double(lhs) << '\n';
    out << "log_gamma_bound     = " << format_double(bound) << '\n';
    out << "bound_check         = " << (lhs <= kLogGammaSlack * bound ? "pass" : "fail") << " (slack "
        << kLogGammaSlack << (opt.x < 1.0 ? ")" : ", x >= 1 is outside the stated range)") << '\n';
  } else {
    out << "|log_gamma_sum|     = n/a (needs x >= 0)\n";
    out << "log_gamma_bound     = n/a\n";
    out << "bound_check         = n/a\n";
  }
  return kSuccess;
}

}  // namespace

int print_report(const SweepReport& report, std::ostream& out, std::ostream& err) {
  out << report.identity_id;
  if (base_matters(report.identity_id)) out << " base=" << report.base;
  out << " nmax=" << report.n_max << ": " << report.passed << "/" << report.total << " pass";
  if (report.skipped > 0) out << " (" << report.skipped << " skipped: precondition not met)";
  out << '\n';
  for (std::size_t i = 0; i < report.failures.size() && i < kMaxPrintedFailures; ++i) {
    out << "FAIL " << describe(report.failures[i]) << '\n';
  }
  if (report.failures.size() > kMaxPrintedFailures) {
    out << "... " << report.failures.size() - kMaxPrintedFailures << " more failures\n";
  }
  err << "elapsed " << report.elapsed_seconds << " s\n";
  return report.failures.empty() ? kSuccess : kFailure;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact base-b combinatorics: sequences, identity sweeps, base-b exponential"};
  app.name("basecomb");
  app.require_subcommand(1);

  SeqOptions seq;
  auto* seq_cmd = app.add_subcommand("seq", "Emit a sequence as an OEIS b-file or CSV");
  seq_cmd->add_option("name", seq.name, "binomb | factb | stirlingb | fibb | fibtilde2 | stern")->required();
  seq_cmd->add_option("--base", seq.base, "Base b >= 2");
  seq_cmd->add_option("--range", seq.range, "Inclusive index range LO HI")->required();
  seq_cmd->add_option("--format", seq.format, "bfile | csv")->check(CLI::IsMember({"bfile", "csv"}));
  seq_cmd->add_option("--param", seq.param, "Second argument: k for binomb, upper index for stirlingb");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Sweep an identity over n < nmax");
  verify_cmd->add_option("identity", verify.identity, "Identity id")->required();
  verify_cmd->add_option("--base", verify.base, "Base b >= 2");
  verify_cmd->add_option("--nmax", verify.n_max, "Sweep bound (exclusive)")->required();
  verify_cmd->add_option("--workers", verify.workers, "Worker threads")->check(CLI::PositiveNumber);

  EvalOptions eval;
  auto* eval_cmd = app.add_subcommand("eval-exp", "Evaluate and compare forms of the base-b exponential");
  eval_cmd->add_option("--x", eval.x, "x")->required();
  eval_cmd->add_option("--w", eval.w, "w, 0 <= w < 1")->required();
  eval_cmd->add_option("--base", eval.base, "Base b >= 2");
  eval_cmd->add_option("--depth", eval.depth, "Product depth K");
  eval_cmd->add_option("--terms", eval.terms, "Series terms M");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (seq_cmd->parsed()) return cmd_seq(seq, out, err);
    if (verify_cmd->parsed()) return cmd_verify(verify, out, err);
    return cmd_eval_exp(eval, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace basecomb::cli
