// staircase — exact evaluation of the staircase series F on [0,1], witness
// certification for its modulus of continuity, and a benchmark surface.
//
// Exit codes: 0 success/certified, 1 suite failure/uncertified,
//             2 usage or domain error, 3 resource limit.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "staircase/analysis.hpp"
#include "staircase/cauchy.hpp"
#include "staircase/rational.hpp"
#include "staircase/series.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

constexpr const char* kBenchHeader =
    "n,x,mode,wall_time_ns,terms_summed,max_oracle_precision,result";
constexpr const char* kWitnessHeader =
    "x,delta,q,jump_lower_bound,measured_jump,certified";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t term_limit_from_env() {
  const char* raw = std::getenv("STAIRCASE_TERM_LIMIT");
  if (raw == nullptr || *raw == '\0') {
    return staircase::kDefaultTermLimit;
  }
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || value == 0) {
    throw UsageError("STAIRCASE_TERM_LIMIT must be a positive integer");
  }
  return static_cast<std::uint64_t>(value);
}

staircase::Rational parse_point(const std::string& text) {
  const auto x = staircase::parse_rational(text);
  if (!x) {
    throw UsageError("--x must be an exact fraction \"p/q\" (got \"" + text +
                     "\")");
  }
  return *x;
}

// Digits that 2^-n of absolute error justifies: ceil(n*log10(2)) + 1.
unsigned decimal_digits_for(unsigned n) {
  return static_cast<unsigned>((std::uint64_t{n} * 30103 + 99999) / 100000) + 1;
}

std::string decimal_string(const staircase::Dyadic& value, unsigned digits) {
  using staircase::BigInt;
  BigInt pow10 = 1;
  for (unsigned i = 0; i < digits; ++i) pow10 *= 10;
  const BigInt scaled_num = value.mantissa() * pow10;
  BigInt scaled;
  if (value.exponent() >= 0) {
    scaled = scaled_num << static_cast<unsigned>(value.exponent());
  } else {
    scaled = staircase::round_div_ties_down(
        scaled_num, BigInt(1) << static_cast<unsigned>(-value.exponent()));
  }
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  const BigInt integral = scaled / pow10;
  std::string frac = BigInt(scaled % pow10).str();
  frac.insert(0, digits - frac.size(), '0');
  return (negative ? "-" : "") + integral.str() + "." + frac;
}

struct EvalArgs {
  std::string x_text;
  unsigned n = 0;
  std::string mode = "rational";
  std::uint64_t seed = 0;
  unsigned workers = 1;
};

int run_eval(const EvalArgs& args, std::uint64_t term_limit) {
  const staircase::Rational x = parse_point(args.x_text);
  const staircase::EvalOptions options{args.workers, term_limit};
  staircase::EvalReport report;
  if (args.mode == "oracle") {
    auto phi = staircase::make_dithered_oracle(x, args.seed);
    report = staircase::eval_f_oracle(phi, args.n, options);
  } else {
    report = staircase::eval_f_rational(x, args.n, options);
  }
  const std::string tag = " (±2^-" + std::to_string(args.n) + ")";
  std::cout << "result: " << staircase::to_string(report.result) << tag << "\n"
            << "decimal: "
            << decimal_string(report.result, decimal_digits_for(args.n)) << tag
            << "\n"
            << "x: " << staircase::to_string(x) << "\n"
            << "n: " << report.precision_n << "\n"
            << "mode: " << args.mode << "\n"
            << "terms_summed: " << report.terms_summed << "\n"
            << "max_oracle_precision: " << report.max_oracle_precision << "\n"
            << "wall_time_ns: " << report.wall_time_ns << "\n";
  return kExitOk;
}

struct WitnessArgs {
  unsigned n = 0;
  std::string x_text;
  unsigned workers = 1;
};

int run_witness(const WitnessArgs& args, std::uint64_t term_limit) {
  const staircase::Witness witness =
      args.x_text.empty()
          ? staircase::make_witness(args.n)
          : staircase::make_witness_at(parse_point(args.x_text), args.n);
  const staircase::EvalOptions options{args.workers, term_limit};
  const auto cert = staircase::certify_witness(witness, options);
  std::cout << kWitnessHeader << "\n"
            << staircase::to_string(witness.x) << ','
            << staircase::to_string(witness.delta) << ',' << witness.q << ','
            << staircase::to_string(witness.jump_lower_bound) << ','
            << staircase::to_string(cert.measured_jump) << ','
            << (cert.certified ? "true" : "false") << "\n";
  return cert.certified ? kExitOk : kExitFailed;
}

struct BenchArgs {
  std::string x_text;
  unsigned n_min = 0;
  unsigned n_max = 0;
  std::string mode = "rational";
  unsigned repeats = 3;
  std::uint64_t seed = 0;
  unsigned workers = 1;
};

int run_bench(const BenchArgs& args, std::uint64_t term_limit) {
  if (args.n_min > args.n_max) {
    throw UsageError("--n-min must not exceed --n-max");
  }
  if (args.repeats < 1) {
    throw UsageError("--repeats must be >= 1");
  }
  const staircase::Rational x = parse_point(args.x_text);
  const staircase::EvalOptions options{args.workers, term_limit};
  const auto evaluate = [&](unsigned n) {
    if (args.mode == "oracle") {
      auto phi = staircase::make_dithered_oracle(x, args.seed);
      return staircase::eval_f_oracle(phi, n, options);
    }
    return staircase::eval_f_rational(x, n, options);
  };
  const auto row = [&](unsigned n, const std::string& mode,
                       const staircase::EvalReport& report) {
    std::cout << n << ',' << staircase::to_string(x) << ',' << mode << ','
              << report.wall_time_ns << ',' << report.terms_summed << ','
              << report.max_oracle_precision << ','
              << staircase::to_string(report.result) << "\n";
  };
  std::cout << kBenchHeader << "\n";
  for (unsigned n = args.n_min; n <= args.n_max; ++n) {
    staircase::EvalReport best;
    for (unsigned repeat = 0; repeat < args.repeats; ++repeat) {
      staircase::EvalReport report = evaluate(n);
      if (repeat == 0 || report.wall_time_ns < best.wall_time_ns) {
        best = report;
      }
      row(n, args.mode, report);
    }
    // summary: minimum over repeats, marked by the "-min" mode suffix
    row(n, args.mode + "-min", best);
  }
  return kExitOk;
}

struct CheckArgs {
  std::string suite;
  std::uint64_t seed = 1;
  unsigned workers = 1;
};

int run_check(const CheckArgs& args, std::uint64_t term_limit) {
  const staircase::EvalOptions options{args.workers, term_limit};
  staircase::SuiteReport report;
  if (args.suite == "alpha") {
    report = staircase::stair_equivalence_suite(12);
  } else if (args.suite == "monotone") {
    report = staircase::monotonicity_suite(200, 8, args.seed, options);
  } else if (args.suite == "tail") {
    report = staircase::tail_suite({1, 4, 64});
  } else if (args.suite == "glue") {
    report = staircase::glue_suite();
  } else if (args.suite == "oracle") {
    const std::vector<staircase::Rational> points = {
        staircase::Rational(1, 3), staircase::Rational(2, 3),
        staircase::Rational(5, 7)};
    report = staircase::oracle_robustness_suite(points, 8, 20, args.seed,
                                                options);
  } else if (args.suite == "modulus") {
    report = staircase::modulus_suite(6, 8, args.seed, options);
  } else {
    throw UsageError("unknown suite \"" + args.suite +
                     "\" (expected alpha|monotone|tail|glue|oracle|modulus)");
  }
  std::cout << "suite: " << args.suite << "\n"
            << "checked: " << report.checked << "\n"
            << "failures: " << report.failures << "\n";
  for (const std::string& note : report.failure_notes) {
    std::cerr << "failure: " << note << "\n";
  }
  return report.passed() ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact evaluator and analysis harness for the staircase series F"};
  app.require_subcommand(1);

  EvalArgs eval_args;
  CLI::App* eval = app.add_subcommand("eval", "evaluate F(x) to within 2^-n");
  eval->add_option("--x", eval_args.x_text, "input as an exact fraction p/q")
      ->required();
  eval->add_option("--n", eval_args.n, "target precision exponent")->required();
  eval->add_option("--mode", eval_args.mode, "rational or oracle")
      ->check(CLI::IsMember({"rational", "oracle"}));
  eval->add_option("--seed", eval_args.seed, "dither seed for oracle mode");
  eval->add_option("--workers", eval_args.workers, "worker threads");

  WitnessArgs witness_args;
  CLI::App* witness =
      app.add_subcommand("witness", "build and certify a jump witness");
  witness->add_option("--n", witness_args.n, "witness index (delta = 2^-n)")
      ->required();
  witness->add_option("--x", witness_args.x_text,
                      "pin the witness at this rational point");
  witness->add_option("--workers", witness_args.workers, "worker threads");

  BenchArgs bench_args;
  CLI::App* bench =
      app.add_subcommand("bench", "time evaluations across precisions (CSV)");
  bench->add_option("--x", bench_args.x_text, "input as an exact fraction p/q")
      ->required();
  bench->add_option("--n-min", bench_args.n_min, "first precision")->required();
  bench->add_option("--n-max", bench_args.n_max, "last precision")->required();
  bench->add_option("--mode", bench_args.mode, "rational or oracle")
      ->check(CLI::IsMember({"rational", "oracle"}));
  bench->add_option("--repeats", bench_args.repeats, "runs per precision");
  bench->add_option("--seed", bench_args.seed, "dither seed for oracle mode");
  bench->add_option("--workers", bench_args.workers, "worker threads");

  CheckArgs check_args;
  CLI::App* check = app.add_subcommand("check", "run a property suite");
  check->add_option("--suite", check_args.suite,
                    "alpha|monotone|tail|glue|oracle|modulus")
      ->required();
  check->add_option("--seed", check_args.seed, "suite seed");
  check->add_option("--workers", check_args.workers, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const std::uint64_t term_limit = term_limit_from_env();
    if (eval->parsed()) return run_eval(eval_args, term_limit);
    if (witness->parsed()) return run_witness(witness_args, term_limit);
    if (bench->parsed()) return run_bench(bench_args, term_limit);
    return run_check(check_args, term_limit);
  } catch (const staircase::ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailed;
  }
}
