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

// Parameter sweeps, reports and the invariant suite behind the CLI.

#pragma once

#include "unruhent/entanglement.hpp"
#include "unruhent/unruh.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace unruhent {

/// Accepts "0.5", "-1", "0.3+0.4j", "2e-1-1j", "j", "-0.5j".
Complex parse_complex(std::string_view text);

/// Six comma-separated complex numbers P,Q,a1,a2,b1,b2. When `normalize`
/// is set each pair is rescaled to unit norm; otherwise it is validated.
StateFamily parse_family(std::string_view text, bool normalize = false);

std::string format_complex(Complex z);
std::string format_family(const StateFamily& f);

struct SweepConfig {
  int r_points = 50;
  std::vector<double> q_right_values = default_q_right_grid();
  std::vector<OperatorOrdering> orderings = {OperatorOrdering::physical(), OperatorOrdering::legacy_interleaved()};
  StateFamily family = StateFamily::bell_like();
  std::string output_path;  // empty means stdout
  unsigned threads = 1;

  void validate() const;
};

/// Reads key=value lines ('#' comments allowed) into `config`. Keys:
/// r_points, qr (comma list), ordering (comma list), family, out, threads.
void apply_config_text(SweepConfig& config, std::string_view text);
void apply_config_file(SweepConfig& config, const std::string& path);

/// key=value rendering accepted by apply_config_text.
std::string describe_config(const SweepConfig& config);

struct SweepRecord {
  double r;
  double q_right;
  std::string ordering;
  double negativity;
};

/// Rows ordered by ordering, then q_R (config order), then r ascending.
/// The result does not depend on config.threads.
std::vector<SweepRecord> run_sweep(const SweepConfig& config);

/// Header "r,q_R,ordering,negativity", 12 significant digits.
std::string sweep_csv(const std::vector<SweepRecord>& records);

/// gnuplot script plotting negativity vs r from `csv_path`, one curve per
/// (ordering, q_R) pair.
std::string gnuplot_script(const SweepConfig& config, const std::string& csv_path);

void write_text_file(const std::string& path, std::string_view content);

/// Reduced state, partial-transpose spectrum and negativity by every
/// applicable route, as a JSON object with stable key order.
std::string single_report_json(const StateFamily& f, const UnruhParams& p, const OperatorOrdering& ord);

std::string orderings_text(const StateFamily& f, const std::vector<double>& q_grid,
                           const std::vector<OrderingClass>& rows);
std::string orderings_json(const StateFamily& f, const std::vector<double>& q_grid,
                           const std::vector<OrderingClass>& rows);

enum class Bound { kAtMost, kAtLeast, kAbove };

struct CheckResult {
  std::string name;
  double measured;
  double threshold;
  Bound bound;
  bool passed;
};

struct CheckReport {
  std::vector<CheckResult> results;
  bool all_passed() const;
  std::string to_text() const;
  std::string to_json() const;
};

/// Every module invariant plus the acceptance criteria, with measured residuals.
CheckReport run_checks();

}  // namespace unruhent
