// One PASS/FAIL line per acceptance criterion; exit status is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "intseq/commands.hpp"
#include "intseq/intseq.hpp"
#include "support/corpus.hpp"
#include "support/worked_tables.hpp"
#include "support/properties.hpp"

namespace {

using namespace intseq;
using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Verdict pell_table() {
  SequenceFamily fam(make_polynomial({1, 2, -1}), StateVector{1, 0}, FamilyOptions{{}, false, true});
  fam.advance(5);
  for (std::size_t j = 0; j <= 6; ++j) {
    if (fam.term(1, j) != testing::kPellS1[j] || fam.term(2, j) != testing::kPellS2[j]) {
      return {false, "mismatch at j=" + std::to_string(j)};
    }
  }
  const Convergent r = fam.cross_ratio(1, 6);
  const bool ok = r.value() == Rational(BigInt(169), BigInt(-70)) && r.significant(5) == "-2.4143";
  return {ok, "ratio j=6 " + r.significant(5)};
}

Verdict shifted_table() {
  SequenceFamily fam(make_polynomial({1, 2, -1}), StateVector{1, 0}, FamilyOptions{AffineShift(2, 1), false, true});
  fam.advance(6);
  if (fam.recurrence() != make_polynomial({1, -2, -1})) return {false, "recurrence " + fam.recurrence().to_string()};
  for (std::size_t j = 0; j <= 7; ++j) {
    if (fam.term(2, j) != testing::kShiftedS2[j]) return {false, "mismatch at j=" + std::to_string(j)};
  }
  const std::string r = fam.cross_ratio(1, 7).significant(5);
  return {r == "0.41420", "ratio j=7 " + r};
}

Verdict cube_table() {
  SequenceFamily fam(make_polynomial({1, 0, 0, -2}), StateVector{1, 1, 0}, FamilyOptions{AffineShift(1, 1), false, true});
  if (fam.recurrence() != make_polynomial({1, -3, 3, -3})) return {false, "recurrence " + fam.recurrence().to_string()};
  fam.advance(23);
  for (std::size_t j = 0; j <= 25; ++j) {
    const auto& row = testing::kCubeTable[j];
    if (fam.at(j) != StateVector{row.s1, row.s2, row.s3}) return {false, "mismatch at j=" + std::to_string(j)};
  }
  for (std::size_t j = 22; j <= 25; ++j) {
    for (std::size_t i = 1; i <= 2; ++i) {
      if (fam.cross_ratio(i, j).significant(7) != "1.259921") return {false, "ratio at j=" + std::to_string(j)};
    }
  }
  return {true, "26 rows exact, ratios 1.259921 at j=22..25"};
}

Verdict dominant_accuracy() {
  const auto t0 = Clock::now();
  const MonicIntPolynomial p = make_polynomial({1, 2, -1});
  const double e1 = std::abs(dominant_root(p).approx() - (-1 - std::sqrt(2.0)));
  const double e2 = std::abs(root_via_shift(p, AffineShift(2, 1)).approx() - (-1 + std::sqrt(2.0)));
  const double t = seconds_since(t0);
  char buf[128];
  std::snprintf(buf, sizeof buf, "errors %.2e %.2e in %.3f s", e1, e2, t);
  return {e1 < 1e-10 && e2 < 1e-10 && t < 1.0, buf};
}

Verdict cube_root() {
  const auto t0 = Clock::now();
  const MonicIntPolynomial p = make_polynomial({1, 0, 0, -2});
  const RootEstimate shifted = root_via_shift(p, AffineShift(1, 1));
  const double err = std::abs(shifted.approx() - std::cbrt(2.0));
  const RootStatus plain = dominant_root(p).status;
  const double t = seconds_since(t0);
  char buf[128];
  std::snprintf(buf, sizeof buf, "error %.2e, unshifted %s, %.3f s", err, std::string(to_string(plain)).c_str(), t);
  return {shifted.converged() && err < 1e-9 && plain == RootStatus::TieDetected && t < 1.0, buf};
}

Verdict oracle_equivalence() {
  const auto t0 = Clock::now();
  const testing::SweepResult dom = testing::dominant_sweep(51, 100);
  const testing::SweepResult en = testing::enumeration_sweep(52, 100);
  const double t = seconds_since(t0);
  for (const auto& f : dom.failures) std::printf("  dominant: %s\n", f.c_str());
  for (const auto& f : en.failures) std::printf("  enumerate: %s\n", f.c_str());
  char buf[160];
  std::snprintf(buf, sizeof buf, "dominant %zu/%zu, enumeration %zu/%zu, %.1f s", dom.eligible - dom.failures.size(),
                dom.eligible, en.eligible - en.failures.size(), en.eligible, t);
  return {dom.ok() && en.ok() && dom.eligible == 100 && en.eligible > 0 && t < 60.0, buf};
}

Verdict recurrence_invariants() {
  const auto t0 = Clock::now();
  testing::Corpus corpus(31, 2, 5);
  std::size_t mismatches = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const MonicIntPolynomial p = corpus.polynomial();
    const StateVector seed = corpus.seed(p.degree());
    SequenceFamily exact = init_family(p, seed, false);
    SequenceFamily normalized = init_family(p, seed, true);
    const IntMatrix c = companion_of(p);
    StateVector v = seed;
    for (std::size_t j = 1; j <= 200; ++j) {
      v = mat_vec(c, v);
      while (exact.index() < j) exact.step();
      while (normalized.index() < j) normalized.step();
      if (exact.at(j) != v) ++mismatches;
      for (std::size_t i = 1; i < p.degree(); ++i) {
        if (exact.term(i + 1, j) == 0) {
          if (normalized.term(i + 1, j) != 0) ++mismatches;
          continue;
        }
        if (exact.cross_ratio(i, j).value() != normalized.cross_ratio(i, j).value()) ++mismatches;
      }
    }
  }
  const double t = seconds_since(t0);
  char buf[128];
  std::snprintf(buf, sizeof buf, "%zu mismatches over 100 families x 200 steps, %.1f s", mismatches, t);
  return {mismatches == 0 && t < 30.0, buf};
}

Verdict bench_report() {
  cli::RunConfig cfg;
  cfg.command = cli::Command::Bench;
  cfg.corpus = "paper";
  cfg.digits = 12;
  const report::RunDocument doc = cli::cmd_bench(cfg);
  const std::string text = report::render_text(doc);
  const auto round_trip = report::json::parse(report::json(doc).dump()).get<report::RunDocument>();
  bool ok = doc.bench.size() == 3 && !text.empty() && report::render_text(round_trip) == text;
  std::string detail;
  for (const report::BenchRecord& b : doc.bench) {
    ok = ok && b.integer_status == "converged" && b.integer_ms < 1000.0;
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s%.2f ms", detail.empty() ? "integer " : ", ", b.integer_ms);
    detail += buf;
  }
  return {ok, detail + " (no relative-speed claim)"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"1 first sequence table", pell_table},
      {"2 shifted sequence table", shifted_table},
      {"3 cube-root sequence table", cube_table},
      {"4 dominant and shifted root accuracy", dominant_accuracy},
      {"5 cube root via shift, tie without", cube_root},
      {"6 oracle equivalence sweep", oracle_equivalence},
      {"7 recurrence and normalization invariants", recurrence_invariants},
      {"8 benchmark report", bench_report},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Verdict v{false, ""};
    try {
      v = check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    if (!v.pass) ++failures;
    std::printf("%s criterion %s: %s\n", v.pass ? "PASS" : "FAIL", name.c_str(), v.detail.c_str());
    std::fflush(stdout);
  }
  return failures;
}
