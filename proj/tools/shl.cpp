#include "shl/almost_kahler.hpp"
#include "shl/corpus.hpp"
#include "shl/report_format.hpp"

#include <CLI11.hpp>

#include <iostream>

#ifndef SHL_CORPUS_DIR
#define SHL_CORPUS_DIR "corpus"
#endif

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInconsistent = 1;
constexpr int kExitInvalid = 2;

struct Options {
  std::string input;
  std::string lambda = "1";
  std::optional<int> degree;
  bool machine = false;
  std::string theorems = "all";
  std::optional<std::uint64_t> seed;
  std::size_t count = 0;
};

struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

shl::Rational parse_lambda(const std::string& text) {
  shl::Rational lambda;
  try {
    lambda = shl::parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw InvalidInput("--lambda: not a rational number: " + text);
  }
  if (lambda <= 0) throw InvalidInput("--lambda must be positive");
  return lambda;
}

shl::HodgeComplex load(const std::string& path) {
  return shl::HodgeComplex(shl::build_structure(shl::parse_model(shl::read_file(path))));
}

int run_validate(const Options& o) {
  load(o.input);
  std::cout << "OK: almost-Kähler structure valid\n";
  return kExitOk;
}

int run_report(const Options& o) {
  const shl::Rational lambda = parse_lambda(o.lambda);
  const shl::HodgeComplex hc = load(o.input);
  if (o.degree && (*o.degree < 0 || *o.degree > hc.dim())) throw InvalidInput("--degree out of range");
  const shl::CohomologyReport report = shl::build_report(hc, lambda);
  std::cout << (o.machine ? shl::format_report_machine(report, o.degree) : shl::format_report_table(report, o.degree));
  return kExitOk;
}

shl::TheoremFilter theorem_filter(const std::string& name) {
  auto filter = shl::parse_theorem_filter(name);
  if (!filter) throw InvalidInput("--theorems: unknown filter " + name);
  return *filter;
}

int run_check(const Options& o) {
  const shl::TheoremFilter filter = theorem_filter(o.theorems);
  const shl::HodgeComplex hc = load(o.input);
  const auto verdicts = shl::run_theorems(hc, filter);
  const bool ok = shl::all_consistent(verdicts);
  if (o.machine) {
    std::cout << shl::format_verdicts_machine(verdicts);
  } else {
    std::cout << shl::format_verdicts_table(verdicts);
    std::cout << (ok ? "CONSISTENT" : "INCONSISTENT") << '\n';
  }
  return ok ? kExitOk : kExitInconsistent;
}

int run_corpus(const Options& o) {
  const shl::TheoremFilter filter = theorem_filter(o.theorems);
  std::vector<shl::CorpusEntry> entries;
  if (o.seed) {
    const std::size_t total = o.count ? o.count : 200;
    entries = shl::random_corpus(*o.seed, total / 2, total - total / 2);
  } else {
    entries = shl::load_corpus_dir(o.input.empty() ? SHL_CORPUS_DIR : o.input);
  }
  std::size_t failures = 0;
  for (const auto& entry : entries) {
    std::vector<shl::TheoremVerdict> verdicts;
    try {
      verdicts = shl::run_theorems(shl::HodgeComplex(shl::build_structure(entry.spec)), filter);
    } catch (const shl::StructureError& e) {
      std::cout << entry.name << ": invalid structure: " << e.what() << '\n';
      ++failures;
      continue;
    }
    const bool ok = shl::all_consistent(verdicts);
    if (!ok) ++failures;
    std::cout << entry.name << ": " << verdicts.size() << " claims " << (ok ? "consistent" : "INCONSISTENT") << '\n';
    if (!ok) {
      std::cout << shl::print_model(entry.spec);
      std::cout << shl::format_verdicts_table(verdicts);
    }
  }
  std::cout << entries.size() << " structures, " << failures << " failing\n";
  return failures ? kExitInconsistent : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app("Exact symplectic Hodge theory on Lie-algebra models", "shl");
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--lambda", o.lambda, "positive rational weight of the lower-order Laplacian terms");
    cmd->add_option("--degree", o.degree, "restrict per-degree output to this degree");
    cmd->add_flag("--machine", o.machine, "flat key = value output");
    cmd->add_option("--theorems", o.theorems, "all|t1|t2|v|dlz|remark6|p1|delta1|hlc|t2proof");
  };

  auto* validate = app.add_subcommand("validate", "check that the file defines a valid almost-Kähler structure");
  validate->add_option("file", o.input)->required();
  auto* report = app.add_subcommand("report", "cohomology report");
  report->add_option("file", o.input)->required();
  add_common(report);
  auto* check = app.add_subcommand("check", "evaluate the theorem suite");
  check->add_option("file", o.input)->required();
  add_common(check);
  auto* corpus = app.add_subcommand("corpus", "run the theorem suite on a directory or a seeded random corpus");
  corpus->add_option("dir", o.input);
  corpus->add_option("--seed", o.seed, "generate a random corpus from this seed");
  corpus->add_option("--count", o.count, "number of random structures (default 200)");
  add_common(corpus);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*validate) return run_validate(o);
    if (*report) return run_report(o);
    if (*check) return run_check(o);
    return run_corpus(o);
  } catch (const shl::InconsistencyError& e) {
    std::cerr << "internal cross-check failed: " << e.what() << '\n';
    return kExitInconsistent;
  } catch (const shl::ParseError& e) {
    std::cerr << o.input << ": " << e.what() << '\n';
  } catch (const shl::StructureError& e) {
    std::cerr << o.input << ": " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kExitInvalid;
}
