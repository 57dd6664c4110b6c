// intseq: real roots of monic integer polynomials from integer sequences.
//
//   intseq sequences --poly 1,2,-1 --seed 1,0 --steps 6 --digits 4
//   intseq root --poly 1,2,-1 --shift 2,1
//   intseq roots --poly 1,0,0,-2
//   intseq bench --corpus paper

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "intseq/commands.hpp"

namespace {

struct RawOptions {
  std::string poly;
  std::string shift;
  std::string seed;
  std::size_t steps = 10;
  int digits = 12;
  std::size_t max_iters = 10000;
  bool json = false;
  std::string corpus;
  int runs = 5;
};

void add_common(CLI::App* sub, RawOptions& raw, bool poly_required) {
  auto* poly = sub->add_option("--poly", raw.poly, "coefficients including the leading 1, e.g. 1,2,-1");
  if (poly_required) poly->required();
  sub->add_option("--shift", raw.shift, "affine shift a,b (eigenvalues r -> a + b r); use --shift=-2,1 for negative a");
  sub->add_option("--digits", raw.digits, "digits for ratios and roots")->check(CLI::PositiveNumber);
  sub->add_option("--max-iters", raw.max_iters, "iteration cap")->check(CLI::PositiveNumber);
  sub->add_flag("--json", raw.json, "emit the structured document");
}

}  // namespace

int main(int argc, char** argv) {
  using intseq::cli::Command;
  CLI::App app{"Real roots of monic integer polynomials via integer sequences"};
  app.require_subcommand(1);
  RawOptions raw;

  auto* sequences = app.add_subcommand("sequences", "print the integer sequences and their ratios");
  add_common(sequences, raw, true);
  sequences->add_option("--seed", raw.seed, "seed vector S_0, default 1,0,...,0");
  sequences->add_option("--steps", raw.steps, "last index j to print");

  auto* root = app.add_subcommand("root", "dominant root, or the root targeted by --shift");
  add_common(root, raw, true);

  auto* roots = app.add_subcommand("roots", "all verified real roots");
  add_common(roots, raw, true);

  auto* bench = app.add_subcommand("bench", "time the integer pipeline against a floating-point solver");
  add_common(bench, raw, false);
  bench->add_option("--corpus", raw.corpus, "built-in corpus: paper");
  bench->add_option("--runs", raw.runs, "timed repetitions (median reported)")->check(CLI::Range(5, 1000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return intseq::cli::exit_code::kUsage;
  }

  intseq::cli::RunConfig cfg;
  try {
    if (*sequences) cfg.command = Command::Sequences;
    if (*root) cfg.command = Command::Root;
    if (*roots) cfg.command = Command::Roots;
    if (*bench) cfg.command = Command::Bench;
    if (cfg.command == Command::Bench && raw.poly.empty() && raw.corpus.empty()) {
      throw intseq::Error(intseq::ErrorCode::Parse, "bench needs --poly or --corpus");
    }
    if (!raw.poly.empty()) cfg.polynomial = intseq::cli::parse_integer_list(raw.poly);
    if (!raw.shift.empty()) cfg.shift = intseq::cli::parse_shift(raw.shift);
    if (!raw.seed.empty()) cfg.seed = intseq::cli::parse_integer_list(raw.seed);
  } catch (const intseq::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return intseq::cli::exit_code::kUsage;
  }
  cfg.steps = raw.steps;
  cfg.digits = raw.digits;
  cfg.max_iters = raw.max_iters;
  cfg.json = raw.json;
  cfg.corpus = raw.corpus;
  cfg.runs = raw.runs;
  return intseq::cli::run(cfg, std::cout, std::cerr);
}
