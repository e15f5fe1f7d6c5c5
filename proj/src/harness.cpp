// Copyright 2026 The unruhent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "unruhent/harness.hpp"

#include "unruhent/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

namespace unruhent {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_double(std::string_view text, std::string_view what) {
  const std::string t = trim(text);
  double v = 0.0;
  const char* begin = t.data();
  if (!t.empty() && t.front() == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size() || !std::isfinite(v))
    throw UsageError("cannot parse " + std::string(what) + " '" + t + "' as a number");
  return v;
}

int parse_int(std::string_view text, std::string_view what) {
  const std::string t = trim(text);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
    throw UsageError("cannot parse " + std::string(what) + " '" + t + "' as an integer");
  return v;
}

std::string g12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

ordered_json complex_json(Complex z) { return ordered_json::array({z.real(), z.imag()}); }

ordered_json family_json(const StateFamily& f) {
  ordered_json j;
  j["P"] = complex_json(f.p);
  j["Q"] = complex_json(f.q);
  j["a1"] = complex_json(f.a1);
  j["a2"] = complex_json(f.a2);
  j["b1"] = complex_json(f.b1);
  j["b2"] = complex_json(f.b2);
  return j;
}

void normalize_pair(Complex& x, Complex& y) {
  const double n = std::sqrt(std::norm(x) + std::norm(y));
  if (n == 0.0) throw UsageError("cannot normalize a zero coefficient pair");
  x /= n;
  y /= n;
}

}  // namespace

// ---------------------------------------------------------------------------
// Parsing and formatting

Complex parse_complex(std::string_view text) {
  std::string t = trim(text);
  if (t.empty()) throw UsageError("empty complex number");
  const char last = t.back();
  if (last != 'j' && last != 'i') return {parse_double(t, "complex number"), 0.0};
  t.pop_back();
  // Split at the last sign that is not a leading sign or an exponent sign.
  std::size_t split_at = std::string::npos;
  for (std::size_t k = t.size(); k-- > 1;) {
    if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
      split_at = k;
      break;
    }
  }
  auto imag_part = [](const std::string& s) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return parse_double(s, "imaginary part");
  };
  if (split_at == std::string::npos) return {0.0, imag_part(t)};
  return {parse_double(t.substr(0, split_at), "real part"), imag_part(t.substr(split_at))};
}

StateFamily parse_family(std::string_view text, bool normalize) {
  const auto parts = split(text, ',');
  if (parts.size() != 6)
    throw UsageError("family needs six comma-separated values P,Q,a1,a2,b1,b2; got " +
                     std::to_string(parts.size()));
  StateFamily f{parse_complex(parts[0]), parse_complex(parts[1]), parse_complex(parts[2]),
                parse_complex(parts[3]), parse_complex(parts[4]), parse_complex(parts[5])};
  if (normalize) {
    normalize_pair(f.p, f.q);
    normalize_pair(f.a1, f.a2);
    normalize_pair(f.b1, f.b2);
  }
  f.validate();
  return f;
}

std::string format_complex(Complex z) {
  if (z.imag() == 0.0) return g17(z.real());
  return g17(z.real()) + (std::signbit(z.imag()) ? "-" : "+") + g17(std::abs(z.imag())) + "j";
}

std::string format_family(const StateFamily& f) {
  return format_complex(f.p) + "," + format_complex(f.q) + "," + format_complex(f.a1) + "," +
         format_complex(f.a2) + "," + format_complex(f.b1) + "," + format_complex(f.b2);
}

// ---------------------------------------------------------------------------
// Sweep configuration

void SweepConfig::validate() const {
  if (r_points < 1) throw UsageError("r_points must be positive");
  if (q_right_values.empty()) throw UsageError("at least one q_R value is required");
  for (double q : q_right_values)
    if (!(q >= 0.0 && q <= 1.0)) throw UsageError("q_R values must lie in [0, 1], got " + g17(q));
  if (orderings.empty()) throw UsageError("at least one ordering is required");
  if (threads < 1) throw UsageError("threads must be positive");
  family.validate();
}

void apply_config_text(SweepConfig& config, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string content = trim(line.substr(0, line.find('#')));
    if (content.empty()) continue;
    const auto eq = content.find('=');
    if (eq == std::string::npos)
      throw UsageError("config line " + std::to_string(line_no) + ": expected key=value");
    const std::string key = trim(content.substr(0, eq));
    const std::string value = trim(content.substr(eq + 1));
    if (key == "r_points") {
      config.r_points = parse_int(value, "r_points");
    } else if (key == "qr") {
      config.q_right_values.clear();
      for (const auto& q : split(value, ',')) config.q_right_values.push_back(parse_double(q, "q_R"));
    } else if (key == "ordering") {
      config.orderings.clear();
      for (const auto& o : split(value, ',')) config.orderings.push_back(OperatorOrdering::parse(o));
    } else if (key == "family") {
      config.family = parse_family(value);
    } else if (key == "out") {
      config.output_path = value;
    } else if (key == "threads") {
      const int t = parse_int(value, "threads");
      if (t < 1) throw UsageError("threads must be positive");
      config.threads = static_cast<unsigned>(t);
    } else {
      throw UsageError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
}

void apply_config_file(SweepConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  apply_config_text(config, buf.str());
}

std::string describe_config(const SweepConfig& config) {
  std::ostringstream os;
  os << "r_points=" << config.r_points << "\n";
  os << "qr=";
  for (std::size_t i = 0; i < config.q_right_values.size(); ++i)
    os << (i ? "," : "") << g17(config.q_right_values[i]);
  os << "\nordering=";
  for (std::size_t i = 0; i < config.orderings.size(); ++i) os << (i ? "," : "") << config.orderings[i].label();
  os << "\nfamily=" << format_family(config.family) << "\n";
  os << "threads=" << config.threads << "\n";
  if (!config.output_path.empty()) os << "out=" << config.output_path << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Sweep

std::vector<SweepRecord> run_sweep(const SweepConfig& config) {
  config.validate();
  const std::vector<double> rs = r_grid(config.r_points);
  const std::size_t nr = rs.size();
  const std::size_t nq = config.q_right_values.size();
  const std::size_t no = config.orderings.size();

  std::vector<SweepRecord> records(no * nq * nr);
  // One task per (q_R, r) point; every ordering reuses the same state.
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t task = next++; task < nq * nr; task = next++) {
      const std::size_t qi = task / nr;
      const std::size_t ri = task % nr;
      const double q = config.q_right_values[qi];
      const StateVector psi = build_state(config.family, UnruhParams::from_real(rs[ri], q));
      for (std::size_t oi = 0; oi < no; ++oi) {
        const double n = negativity(reduced_state(psi, config.orderings[oi]));
        if (!(n >= 0.0 && n <= 0.5 + 1e-9)) throw InternalError("negativity " + g17(n) + " outside [0, 1/2]");
        records[(oi * nq + qi) * nr + ri] = SweepRecord{rs[ri], q, config.orderings[oi].label(), n};
      }
    }
  };

  const unsigned threads = std::min<unsigned>(config.threads, static_cast<unsigned>(nq * nr));
  if (threads <= 1) {
    worker();
    return records;
  }
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        try {
          worker();
        } catch (...) {
          errors[t] = std::current_exception();
          next = nq * nr;
        }
      });
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return records;
}

std::string sweep_csv(const std::vector<SweepRecord>& records) {
  std::string out = "r,q_R,ordering,negativity\n";
  for (const SweepRecord& rec : records)
    out += g12(rec.r) + "," + g12(rec.q_right) + "," + rec.ordering + "," + g12(rec.negativity) + "\n";
  return out;
}

std::string gnuplot_script(const SweepConfig& config, const std::string& csv_path) {
  std::ostringstream os;
  os << "set datafile separator ','\n"
     << "set key outside right\n"
     << "set xlabel 'r'\n"
     << "set ylabel 'negativity'\n"
     << "set xrange [0:pi/4]\n"
     << "plot \\\n";
  bool first = true;
  for (const auto& ord : config.orderings) {
    for (double q : config.q_right_values) {
      if (!first) os << ", \\\n";
      first = false;
      os << "  '" << csv_path << "' using 1:(strcol(3) eq '" << ord.label() << "' && abs($2-" << g17(q)
         << ")<1e-12 ? $4 : 1/0) with lines " << (ord.label() == "physical" ? "dt 1" : "dt 2") << " title '"
         << ord.label() << " q_R=" << g12(q) << "'";
    }
  }
  os << "\n";
  return os.str();
}

void write_text_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw IoError("failed writing '" + path + "'");
}

// ---------------------------------------------------------------------------
// Single-point report

std::string single_report_json(const StateFamily& f, const UnruhParams& p, const OperatorOrdering& ord) {
  const StateVector psi = build_state(f, p);
  const DensityMatrix rho = reduced_state(psi, ord);

  ordered_json j;
  ordered_json params;
  params["r"] = p.r();
  params["q_R"] = complex_json(p.q_right());
  params["q_L"] = complex_json(p.q_left());
  params["ordering"] = ord.label();
  params["permutation"] = ord.digits();
  params["family"] = family_json(f);
  j["parameters"] = params;

  ordered_json matrix;
  matrix["dims"] = rho.dims();
  ordered_json entries = ordered_json::array();
  for (Eigen::Index i = 0; i < rho.dimension(); ++i)
    for (Eigen::Index k = 0; k < rho.dimension(); ++k) entries.push_back(complex_json(rho.matrix()(i, k)));
  matrix["row_major"] = entries;
  j["reduced_density_matrix"] = matrix;
  j["partial_transpose_spectrum"] = partial_transpose_spectrum(rho);

  ordered_json routes;
  std::vector<double> values;
  values.push_back(negativity(rho));
  routes["qubit_trace"] = values.back();
  values.push_back(negativity(subalgebra_reduced_state(psi)));
  routes["subalgebra"] = values.back();
  if (p.at_infinite_acceleration()) {
    values.push_back(negativity(infinite_acceleration_reduced_state(f, p)));
    routes["infinite_acceleration"] = values.back();
  }
  j["negativity"] = routes;
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  j["max_route_difference"] = *hi - *lo;
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Ordering tables

std::string orderings_text(const StateFamily& f, const std::vector<double>& q_grid,
                           const std::vector<OrderingClass>& rows) {
  std::ostringstream os;
  os << "# family " << format_family(f) << "\n# q_R grid";
  for (double q : q_grid) os << " " << g17(q);
  os << "\n# r = pi/4\n";
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-12s %-20s %-26s %s\n", "permutation", "name", "spread", "convergent");
  os << buf;
  for (const auto& row : rows) {
    std::snprintf(buf, sizeof buf, "%-12s %-20s %-26s %s\n", row.ordering.digits().c_str(),
                  row.ordering.name().empty() ? "-" : row.ordering.name().c_str(), g17(row.spread).c_str(),
                  row.convergent ? "yes" : "no");
    os << buf;
  }
  return os.str();
}

std::string orderings_json(const StateFamily& f, const std::vector<double>& q_grid,
                           const std::vector<OrderingClass>& rows) {
  ordered_json j;
  j["family"] = family_json(f);
  j["r"] = kInfiniteAcceleration;
  j["q_R_grid"] = q_grid;
  j["convergence_tolerance"] = kConvergenceTolerance;
  ordered_json arr = ordered_json::array();
  for (const auto& row : rows) {
    ordered_json o;
    o["permutation"] = row.ordering.digits();
    o["name"] = row.ordering.name();
    o["spread"] = row.spread;
    o["convergent"] = row.convergent;
    o["negativities"] = row.negativities;
    arr.push_back(o);
  }
  j["orderings"] = arr;
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Check report rendering

bool CheckReport::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

std::string CheckReport::to_text() const {
  std::ostringstream os;
  for (const auto& r : results) {
    const char* rel = r.bound == Bound::kAtMost ? "<=" : r.bound == Bound::kAtLeast ? ">=" : ">";
    char buf[256];
    std::snprintf(buf, sizeof buf, "[%s] %-58s measured %-12.4g (%s %.3g)\n", r.passed ? "PASS" : "FAIL",
                  r.name.c_str(), r.measured, rel, r.threshold);
    os << buf;
  }
  os << (all_passed() ? "all checks passed\n" : "some checks FAILED\n");
  return os.str();
}

std::string CheckReport::to_json() const {
  ordered_json arr = ordered_json::array();
  for (const auto& r : results) {
    ordered_json o;
    o["name"] = r.name;
    o["measured"] = r.measured;
    o["threshold"] = r.threshold;
    o["bound"] = r.bound == Bound::kAtMost ? "<=" : r.bound == Bound::kAtLeast ? ">=" : ">";
    o["passed"] = r.passed;
    arr.push_back(o);
  }
  ordered_json j;
  j["passed"] = all_passed();
  j["checks"] = arr;
  return j.dump(2) + "\n";
}

}  // namespace unruhent
