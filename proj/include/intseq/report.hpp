#pragma once

// Run documents: the single structured record each CLI run produces. Text
// output is rendered from the document alone, so a document parsed back from
// JSON renders to the same bytes.

#include <algorithm>
#include <cstddef>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "intseq/numeric.hpp"
#include "intseq/polynomial.hpp"

namespace intseq::report {

using nlohmann::json;

struct ShiftRecord {
  std::string a = "0";
  std::string b = "1";
  std::string invert_about;  // non-empty for shift-and-invert probes

  std::string describe() const {
    if (!invert_about.empty()) return "invert@" + invert_about;
    return "a=" + a + " b=" + b;
  }
  friend bool operator==(const ShiftRecord&, const ShiftRecord&) = default;
};

struct TableRow {
  std::size_t j = 0;
  std::vector<std::string> terms;
  std::vector<std::string> ratios;
  friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct EstimateRecord {
  std::string value;
  int digits = 0;
  std::string status;
  std::size_t iterations = 0;
  ShiftRecord shift;
  friend bool operator==(const EstimateRecord&, const EstimateRecord&) = default;
};

struct BenchRecord {
  std::string label;
  std::string shift;
  int digits = 0;
  double integer_ms = 0;
  double float_ms = 0;
  std::size_t integer_iterations = 0;
  std::size_t float_iterations = 0;
  std::size_t peak_bits = 0;
  std::string integer_value;
  std::string float_value;
  std::string integer_status;
  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

struct RunDocument {
  std::string command;
  std::vector<std::string> polynomial;  // full coefficient list, leading 1 first
  std::optional<ShiftRecord> shift;
  std::vector<std::string> seed;
  std::vector<TableRow> rows;
  std::vector<EstimateRecord> estimates;
  std::vector<BenchRecord> bench;
  friend bool operator==(const RunDocument&, const RunDocument&) = default;
};

inline void to_json(json& j, const ShiftRecord& s) {
  if (!s.invert_about.empty()) {
    j = json{{"invert_about", s.invert_about}};
  } else {
    j = json{{"a", s.a}, {"b", s.b}};
  }
}

inline void from_json(const json& j, ShiftRecord& s) {
  if (j.contains("invert_about")) {
    s.invert_about = j.at("invert_about").get<std::string>();
  } else {
    s.a = j.at("a").get<std::string>();
    s.b = j.at("b").get<std::string>();
  }
}

inline void to_json(json& j, const TableRow& r) { j = json{{"j", r.j}, {"terms", r.terms}, {"ratios", r.ratios}}; }

inline void from_json(const json& j, TableRow& r) {
  j.at("j").get_to(r.j);
  j.at("terms").get_to(r.terms);
  j.at("ratios").get_to(r.ratios);
}

inline void to_json(json& j, const EstimateRecord& e) {
  j = json{{"value", e.value}, {"digits", e.digits}, {"status", e.status}, {"iterations", e.iterations}, {"shift", e.shift}};
}

inline void from_json(const json& j, EstimateRecord& e) {
  j.at("value").get_to(e.value);
  j.at("digits").get_to(e.digits);
  j.at("status").get_to(e.status);
  j.at("iterations").get_to(e.iterations);
  j.at("shift").get_to(e.shift);
}

inline void to_json(json& j, const BenchRecord& b) {
  j = json{{"label", b.label},
           {"shift", b.shift},
           {"digits", b.digits},
           {"integer_ms", b.integer_ms},
           {"float_ms", b.float_ms},
           {"integer_iterations", b.integer_iterations},
           {"float_iterations", b.float_iterations},
           {"peak_bits", b.peak_bits},
           {"integer_value", b.integer_value},
           {"float_value", b.float_value},
           {"integer_status", b.integer_status}};
}

inline void from_json(const json& j, BenchRecord& b) {
  j.at("label").get_to(b.label);
  j.at("shift").get_to(b.shift);
  j.at("digits").get_to(b.digits);
  j.at("integer_ms").get_to(b.integer_ms);
  j.at("float_ms").get_to(b.float_ms);
  j.at("integer_iterations").get_to(b.integer_iterations);
  j.at("float_iterations").get_to(b.float_iterations);
  j.at("peak_bits").get_to(b.peak_bits);
  j.at("integer_value").get_to(b.integer_value);
  j.at("float_value").get_to(b.float_value);
  j.at("integer_status").get_to(b.integer_status);
}

inline void to_json(json& j, const RunDocument& d) {
  j = json{{"command", d.command},
           {"polynomial", d.polynomial},
           {"shift", d.shift ? json(*d.shift) : json(nullptr)},
           {"seed", d.seed},
           {"rows", d.rows},
           {"estimates", d.estimates}};
  if (!d.bench.empty()) j["bench"] = d.bench;
}

inline void from_json(const json& j, RunDocument& d) {
  j.at("command").get_to(d.command);
  j.at("polynomial").get_to(d.polynomial);
  if (j.at("shift").is_null()) {
    d.shift.reset();
  } else {
    d.shift = j.at("shift").get<ShiftRecord>();
  }
  j.at("seed").get_to(d.seed);
  j.at("rows").get_to(d.rows);
  j.at("estimates").get_to(d.estimates);
  d.bench.clear();
  if (j.contains("bench")) j.at("bench").get_to(d.bench);
}

/// Right-aligned columns separated by two spaces.
inline std::string render_columns(const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> width;
  for (const auto& row : cells) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << "  ";
      os << std::string(width[c] - row[c].size(), ' ') << row[c];
    }
    os << '\n';
  }
  return os.str();
}

inline std::string polynomial_label(const std::vector<std::string>& full) {
  if (full.size() < 2) return "?";
  std::vector<BigInt> c;
  for (const std::string& s : full) c.emplace_back(s);
  return make_polynomial(c, true).to_string();
}

inline std::string render_sequences(const RunDocument& d) {
  std::ostringstream os;
  os << "p(x) = " << polynomial_label(d.polynomial) << '\n';
  os << "shift: " << (d.shift ? d.shift->describe() : ShiftRecord{}.describe()) << '\n';
  os << "seed: [";
  for (std::size_t i = 0; i < d.seed.size(); ++i) os << (i ? ", " : "") << d.seed[i];
  os << "]\n";
  const std::size_t m = d.seed.size();
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{"j"};
  for (std::size_t i = 1; i <= m; ++i) header.push_back("S(" + std::to_string(i) + ")");
  for (std::size_t i = 1; i < m; ++i) {
    header.push_back("S(" + std::to_string(i) + ")/S(" + std::to_string(i + 1) + ")");
  }
  cells.push_back(header);
  for (const TableRow& r : d.rows) {
    std::vector<std::string> line{std::to_string(r.j)};
    line.insert(line.end(), r.terms.begin(), r.terms.end());
    line.insert(line.end(), r.ratios.begin(), r.ratios.end());
    cells.push_back(std::move(line));
  }
  os << render_columns(cells);
  return os.str();
}

inline std::string render_root(const RunDocument& d) {
  std::ostringstream os;
  os << "p(x) = " << polynomial_label(d.polynomial) << '\n';
  for (const EstimateRecord& e : d.estimates) {
    const std::pair<const char*, std::string> fields[] = {{"root", e.value},
                                                           {"status", e.status},
                                                           {"digits", std::to_string(e.digits)},
                                                           {"iterations", std::to_string(e.iterations)},
                                                           {"shift", e.shift.describe()}};
    for (const auto& [key, value] : fields) os << std::left << std::setw(12) << key << value << '\n';
  }
  return os.str();
}

inline std::string render_roots(const RunDocument& d) {
  std::ostringstream os;
  os << "p(x) = " << polynomial_label(d.polynomial) << '\n';
  os << "real roots: " << d.estimates.size() << '\n';
  if (d.estimates.empty()) return os.str();
  std::vector<std::vector<std::string>> cells{{"value", "status", "digits", "iterations", "via"}};
  for (const EstimateRecord& e : d.estimates) {
    cells.push_back({e.value, e.status, std::to_string(e.digits), std::to_string(e.iterations), e.shift.describe()});
  }
  os << render_columns(cells);
  return os.str();
}

inline std::string format_ms(double ms) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << ms;
  return os.str();
}

inline std::string render_bench(const RunDocument& d) {
  std::vector<std::vector<std::string>> cells{{"case", "shift", "digits", "int ms", "float ms", "int iters",
                                               "float iters", "peak bits", "int value", "float value", "int status"}};
  for (const BenchRecord& b : d.bench) {
    cells.push_back({b.label, b.shift, std::to_string(b.digits), format_ms(b.integer_ms), format_ms(b.float_ms),
                     std::to_string(b.integer_iterations), std::to_string(b.float_iterations),
                     std::to_string(b.peak_bits), b.integer_value, b.float_value, b.integer_status});
  }
  return render_columns(cells);
}

inline std::string render_text(const RunDocument& d) {
  if (d.command == "sequences") return render_sequences(d);
  if (d.command == "root") return render_root(d);
  if (d.command == "roots") return render_roots(d);
  if (d.command == "bench") return render_bench(d);
  return {};
}

}  // namespace intseq::report
