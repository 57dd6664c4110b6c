#pragma once

// The four CLI commands as library calls. Each builds a RunDocument; `run`
// prints it (text or JSON) and maps the outcome onto the process exit code.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "intseq/driver.hpp"
#include "intseq/error.hpp"
#include "intseq/oracle.hpp"
#include "intseq/polynomial.hpp"
#include "intseq/report.hpp"
#include "intseq/sequence.hpp"

namespace intseq::cli {

enum class Command { Sequences, Root, Roots, Bench };

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kTie = 2;
inline constexpr int kMaxIters = 3;
inline constexpr int kDegenerateSeed = 4;
inline constexpr int kEstimatorMismatch = 5;
inline constexpr int kUsage = 64;
}  // namespace exit_code

struct RunConfig {
  Command command = Command::Root;
  std::vector<BigInt> polynomial;  // includes the leading 1
  std::optional<AffineShift> shift;
  std::optional<std::vector<BigInt>> seed;
  std::size_t steps = 10;
  int digits = 12;
  bool json = false;
  std::size_t max_iters = 10000;
  std::string corpus;  // bench only: "paper" selects the built-in cases
  int runs = 5;        // bench only
};

/// "1,2,-1" -> {1, 2, -1}. Whitespace around entries is ignored.
inline std::vector<BigInt> parse_integer_list(const std::string& text) {
  std::vector<BigInt> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw Error(ErrorCode::Parse, "empty entry in '" + text + "'");
    item = item.substr(first, last - first + 1);
    const std::size_t digits_from = (item[0] == '-' || item[0] == '+') ? 1 : 0;
    if (digits_from == item.size() ||
        !std::all_of(item.begin() + static_cast<long>(digits_from), item.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw Error(ErrorCode::Parse, "'" + item + "' is not an integer");
    }
    out.emplace_back(item[0] == '+' ? item.substr(1) : item);
  }
  if (out.empty()) throw Error(ErrorCode::Parse, "empty list");
  return out;
}

inline AffineShift parse_shift(const std::string& text) {
  const std::vector<BigInt> v = parse_integer_list(text);
  if (v.size() != 2) throw Error(ErrorCode::Parse, "shift needs exactly two integers a,b");
  if (v[1] == 0) throw Error(ErrorCode::InvalidShift, "shift scale b must be nonzero");
  return AffineShift(v[0], v[1]);
}

namespace detail {

inline std::vector<std::string> to_strings(const std::vector<BigInt>& v) {
  std::vector<std::string> out;
  for (const BigInt& x : v) out.push_back(x.str());
  return out;
}

inline report::ShiftRecord shift_record(const AffineShift& s) { return {s.a.str(), s.b.str(), ""}; }

inline report::EstimateRecord estimate_record(const RootEstimate& e, int places) {
  report::EstimateRecord r;
  r.value = to_fixed(e.value, places);
  r.digits = e.decimal_digits;
  r.status = std::string(to_string(e.status));
  r.iterations = e.iterations;
  r.shift = shift_record(e.shift_used);
  if (e.inversion_center) r.shift.invert_about = e.inversion_center->str();
  return r;
}

inline DriverOptions driver_options(const RunConfig& cfg) {
  DriverOptions opts;
  opts.target_digits = cfg.digits;
  opts.max_iters = cfg.max_iters;
  return opts;
}

inline report::RunDocument base_document(const RunConfig& cfg, std::string command) {
  report::RunDocument doc;
  doc.command = std::move(command);
  doc.polynomial = to_strings(cfg.polynomial);
  if (cfg.shift) doc.shift = shift_record(*cfg.shift);
  return doc;
}

}  // namespace detail

inline report::RunDocument cmd_sequences(const RunConfig& cfg) {
  const MonicIntPolynomial p = make_polynomial(cfg.polynomial, true);
  const std::size_t m = p.degree();
  StateVector seed = cfg.seed ? StateVector(*cfg.seed) : StateVector::basis(m);
  SequenceFamily fam(p, seed, FamilyOptions{cfg.shift.value_or(AffineShift::identity()), false, true});
  while (fam.index() < cfg.steps) fam.step();

  report::RunDocument doc = detail::base_document(cfg, "sequences");
  doc.seed = detail::to_strings(seed.components());
  for (std::size_t j = 0; j <= cfg.steps; ++j) {
    report::TableRow row;
    row.j = j;
    row.terms = detail::to_strings(fam.at(j).components());
    for (std::size_t i = 1; i < m; ++i) {
      row.ratios.push_back(fam.term(i + 1, j) == 0 ? "inf" : fam.cross_ratio(i, j).fixed(cfg.digits));
    }
    doc.rows.push_back(std::move(row));
  }
  return doc;
}

inline report::RunDocument cmd_root(const RunConfig& cfg, RootStatus* status = nullptr) {
  const MonicIntPolynomial p = make_polynomial(cfg.polynomial, true);
  const RootEstimate est = root_via_shift(p, cfg.shift.value_or(AffineShift::identity()), detail::driver_options(cfg));
  if (status) *status = est.status;
  report::RunDocument doc = detail::base_document(cfg, "root");
  doc.estimates.push_back(detail::estimate_record(est, cfg.digits));
  return doc;
}

inline report::RunDocument cmd_roots(const RunConfig& cfg) {
  const MonicIntPolynomial p = make_polynomial(cfg.polynomial, true);
  report::RunDocument doc = detail::base_document(cfg, "roots");
  for (const RootEstimate& est : enumerate_real_roots(p, detail::driver_options(cfg))) {
    doc.estimates.push_back(detail::estimate_record(est, cfg.digits));
  }
  return doc;
}

struct BenchCase {
  std::string label;
  MonicIntPolynomial poly;
  AffineShift shift;
};

/// The three worked examples: the dominant root of x^2+2x-1, its other root
/// through the shift (2,1), and the cube root of 2 through (1,1).
inline std::vector<BenchCase> builtin_corpus() {
  return {{"x^2+2x-1", make_polynomial({1, 2, -1}), AffineShift::identity()},
          {"x^2+2x-1 shifted", make_polynomial({1, 2, -1}), AffineShift(2, 1)},
          {"x^3-2 shifted", make_polynomial({1, 0, 0, -2}), AffineShift(1, 1)}};
}

/// Times the integer pipeline against Durand-Kerner plus Newton polish on the
/// same target root (the real root maximizing |a + b r|). Median of `runs`.
inline report::BenchRecord bench_case(const BenchCase& bc, int digits, int runs, std::size_t max_iters) {
  using clock = std::chrono::steady_clock;
  auto median = [](std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    return xs[xs.size() / 2];
  };
  DriverOptions opts;
  opts.target_digits = digits;
  opts.max_iters = max_iters;

  report::BenchRecord rec;
  rec.label = bc.label;
  rec.shift = bc.shift.a.str() + "," + bc.shift.b.str();
  rec.digits = digits;

  std::vector<double> int_ms;
  std::vector<double> float_ms;
  RootEstimate est;
  double float_root = std::nan("");
  int float_iters = 0;
  for (int r = 0; r < std::max(runs, 1); ++r) {
    auto t0 = clock::now();
    est = root_via_shift(bc.poly, bc.shift, opts);
    auto t1 = clock::now();
    const oracle::ComplexRootSet rs = oracle::durand_kerner(bc.poly);
    float_root = std::nan("");
    double best = -1;
    const double a = bc.shift.a.convert_to<double>();
    const double b = bc.shift.b.convert_to<double>();
    for (double x : oracle::real_roots(rs)) {
      if (std::abs(a + b * x) > best) {
        best = std::abs(a + b * x);
        float_root = x;
      }
    }
    int newton_iters = 0;
    if (!std::isnan(float_root)) float_root = oracle::newton_polish(bc.poly, float_root, digits, &newton_iters);
    auto t2 = clock::now();
    float_iters = rs.iterations + newton_iters;
    int_ms.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
    float_ms.push_back(std::chrono::duration<double, std::milli>(t2 - t1).count());
  }
  rec.integer_ms = median(int_ms);
  rec.float_ms = median(float_ms);
  rec.integer_iterations = est.iterations;
  rec.float_iterations = static_cast<std::size_t>(float_iters);
  rec.peak_bits = est.peak_bits;
  rec.integer_value = to_fixed(est.value, digits);
  rec.integer_status = std::string(to_string(est.status));
  if (std::isnan(float_root)) {
    rec.float_value = "n/a";
  } else {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(std::min(digits, 17));
    os << float_root;
    rec.float_value = os.str();
  }
  return rec;
}

inline report::RunDocument cmd_bench(const RunConfig& cfg) {
  std::vector<BenchCase> cases;
  report::RunDocument doc;
  doc.command = "bench";
  if (cfg.corpus == "paper") {
    cases = builtin_corpus();
  } else if (!cfg.corpus.empty()) {
    throw Error(ErrorCode::Parse, "unknown corpus '" + cfg.corpus + "'");
  } else {
    const MonicIntPolynomial p = make_polynomial(cfg.polynomial, true);
    const AffineShift s = cfg.shift.value_or(AffineShift::identity());
    cases.push_back({p.to_string(), p, s});
    doc = detail::base_document(cfg, "bench");
  }
  for (const BenchCase& bc : cases) doc.bench.push_back(bench_case(bc, cfg.digits, cfg.runs, cfg.max_iters));
  return doc;
}

inline int exit_code_for(RootStatus s) {
  switch (s) {
    case RootStatus::Converged: return exit_code::kOk;
    case RootStatus::TieDetected: return exit_code::kTie;
    case RootStatus::MaxItersExceeded: return exit_code::kMaxIters;
    case RootStatus::DegenerateSeed: return exit_code::kDegenerateSeed;
    case RootStatus::EstimatorMismatch: return exit_code::kEstimatorMismatch;
  }
  return exit_code::kUsage;
}

/// Executes cfg, writes the rendered document to `out`, returns the exit code.
/// Library errors are reported on `err` with the usage exit code.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.digits <= 0) throw Error(ErrorCode::InvalidOptions, "--digits must be positive");
    report::RunDocument doc;
    int code = exit_code::kOk;
    switch (cfg.command) {
      case Command::Sequences: doc = cmd_sequences(cfg); break;
      case Command::Root: {
        RootStatus status = RootStatus::Converged;
        doc = cmd_root(cfg, &status);
        code = exit_code_for(status);
        break;
      }
      case Command::Roots: doc = cmd_roots(cfg); break;
      case Command::Bench: doc = cmd_bench(cfg); break;
    }
    if (cfg.json) {
      out << report::json(doc).dump(2) << '\n';
    } else {
      out << report::render_text(doc);
    }
    return code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kUsage;
  }
}

}  // namespace intseq::cli
