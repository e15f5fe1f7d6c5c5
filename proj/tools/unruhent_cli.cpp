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

// unruhent command-line front end. Talks to the library through the C API only.

#include "unruhent/unruhent.h"

#include <CLI11.hpp>

#include <cstdio>
#include <memory>
#include <string>
#include <vector>

namespace {

// Exit codes.
constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct Failure {
  ue_status status;
  std::string message;
};

void ok(ue_status s) {
  if (s != UE_OK) throw Failure{s, ue_last_error()};
}

int exit_code(ue_status s) {
  switch (s) {
    case UE_OK: return kExitOk;
    case UE_ERR_USAGE: return kExitUsage;
    case UE_ERR_IO: return kExitIo;
    default: return kExitFailure;
  }
}

template <class T, void (*Destroy)(T*)>
struct Deleter {
  void operator()(T* p) const { Destroy(p); }
};
using Family = std::unique_ptr<ue_family, Deleter<ue_family, ue_family_destroy>>;
using Ordering = std::unique_ptr<ue_ordering, Deleter<ue_ordering, ue_ordering_destroy>>;
using Config = std::unique_ptr<ue_sweep_config, Deleter<ue_sweep_config, ue_sweep_config_destroy>>;
using Table = std::unique_ptr<ue_ordering_table, Deleter<ue_ordering_table, ue_ordering_table_destroy>>;
using Report = std::unique_ptr<ue_check_report, Deleter<ue_check_report, ue_check_report_destroy>>;

void string_free(char* s) { ue_string_free(s); }
using OwnedString = std::unique_ptr<char, Deleter<char, string_free>>;

std::string take(char* s) {
  OwnedString owned(s);
  return owned ? std::string(owned.get()) : std::string();
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::fputs(text.c_str(), stdout);
    return;
  }
  ok(ue_write_file(path.c_str(), text.c_str()));
}

/// Numbers, or "pi/N" for convenience so r = pi/4 can be given exactly.
double parse_r(const std::string& text) {
  if (text == "pi/4") return ue_infinite_acceleration();
  if (text.rfind("pi/", 0) == 0) return 4.0 * ue_infinite_acceleration() / std::stod(text.substr(3));
  std::size_t used = 0;
  const double v = std::stod(text, &used);
  if (used != text.size()) throw std::invalid_argument(text);
  return v;
}

struct Options {
  std::string config_path;
  int r_points = 0;
  std::vector<double> qr;
  std::vector<std::string> orderings;
  std::string family;
  bool normalize_family = false;
  std::string out;
  bool json = false;
  bool print_defaults = false;
  unsigned threads = 0;
  std::string gnuplot;
  bool all_permutations = false;
  std::string r = "pi/4";
};

/// Config file first, command-line flags on top.
Config effective_config(const Options& o) {
  ue_sweep_config* raw = nullptr;
  ok(ue_sweep_config_create(&raw));
  Config cfg(raw);
  if (!o.config_path.empty()) ok(ue_sweep_config_load(cfg.get(), o.config_path.c_str()));
  if (o.r_points != 0) ok(ue_sweep_config_set_r_points(cfg.get(), o.r_points));
  if (!o.qr.empty()) ok(ue_sweep_config_set_q_right(cfg.get(), o.qr.data(), o.qr.size()));
  if (!o.orderings.empty()) {
    std::vector<const char*> specs;
    for (const auto& s : o.orderings) specs.push_back(s.c_str());
    ok(ue_sweep_config_set_orderings(cfg.get(), specs.data(), specs.size()));
  }
  if (!o.family.empty()) {
    ue_family* f = nullptr;
    ok(ue_family_parse(o.family.c_str(), o.normalize_family ? 1 : 0, &f));
    Family family(f);
    ok(ue_sweep_config_set_family(cfg.get(), family.get()));
  }
  if (o.threads != 0) ok(ue_sweep_config_set_threads(cfg.get(), o.threads));
  if (!o.out.empty()) ok(ue_sweep_config_set_output(cfg.get(), o.out.c_str()));
  return cfg;
}

bool print_defaults(const Options& o, const Config& cfg) {
  if (!o.print_defaults) return false;
  char* text = nullptr;
  ok(ue_sweep_config_describe(cfg.get(), &text));
  std::fputs(take(text).c_str(), stdout);
  return true;
}

int cmd_sweep(const Options& o) {
  Config cfg = effective_config(o);
  if (print_defaults(o, cfg)) return kExitOk;
  char* path = nullptr;
  ok(ue_sweep_config_output(cfg.get(), &path));
  const std::string out = take(path);
  char* csv = nullptr;
  ok(ue_sweep_csv(cfg.get(), &csv));
  emit(take(csv), out);
  if (!o.gnuplot.empty()) {
    char* script = nullptr;
    ok(ue_sweep_gnuplot(cfg.get(), out.empty() ? "sweep.csv" : out.c_str(), &script));
    emit(take(script), o.gnuplot);
  }
  return kExitOk;
}

int cmd_check(const Options& o) {
  ue_check_report* raw = nullptr;
  const ue_status status = ue_check_run(&raw);
  if (status != UE_OK && status != UE_ERR_CHECK_FAILED) ok(status);
  Report report(raw);
  char* text = nullptr;
  ok(o.json ? ue_check_report_json(report.get(), &text) : ue_check_report_text(report.get(), &text));
  emit(take(text), o.out);
  return ue_check_report_passed(report.get()) ? kExitOk : kExitFailure;
}

int cmd_orderings(const Options& o) {
  Config cfg = effective_config(o);
  if (print_defaults(o, cfg)) return kExitOk;
  ue_family* f = nullptr;
  ok(ue_sweep_config_family(cfg.get(), &f));
  Family family(f);
  std::size_t count = 0;
  ok(ue_sweep_config_q_right(cfg.get(), nullptr, 0, &count));
  std::vector<double> grid(count);
  ok(ue_sweep_config_q_right(cfg.get(), grid.data(), grid.size(), &count));

  ue_ordering_table* t = nullptr;
  ok(ue_orderings_classify(family.get(), grid.data(), grid.size(), o.all_permutations ? 1 : 0, &t));
  Table table(t);
  char* text = nullptr;
  char* json = nullptr;
  ok(ue_ordering_table_text(table.get(), &text));
  ok(ue_ordering_table_json(table.get(), &json));
  const std::string text_out = take(text);
  const std::string json_out = take(json);
  // Text goes to stdout unless --json; --out always receives the JSON.
  std::fputs(o.json ? json_out.c_str() : text_out.c_str(), stdout);
  if (!o.out.empty()) emit(json_out, o.out);
  return kExitOk;
}

int cmd_single(const Options& o) {
  Config cfg = effective_config(o);
  if (print_defaults(o, cfg)) return kExitOk;
  ue_family* f = nullptr;
  ok(ue_sweep_config_family(cfg.get(), &f));
  Family family(f);
  if (o.qr.size() > 1 || o.orderings.size() > 1)
    throw Failure{UE_ERR_USAGE, "single takes at most one --qr and one --ordering"};

  double r = 0.0;
  try {
    r = parse_r(o.r);
  } catch (const std::exception&) {
    throw Failure{UE_ERR_USAGE, "cannot parse --r '" + o.r + "'"};
  }
  ue_unruh_params params{};
  ok(ue_unruh_params_real(r, o.qr.empty() ? 1.0 : o.qr.front(), &params));
  ue_ordering* ord = nullptr;
  ok(ue_ordering_parse(o.orderings.empty() ? "physical" : o.orderings.front().c_str(), &ord));
  Ordering ordering(ord);
  char* json = nullptr;
  ok(ue_single_json(family.get(), &params, ordering.get(), &json));
  emit(take(json), o.out);
  return kExitOk;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--config", o.config_path, "key=value config file; flags override it");
  sub->add_option("--family", o.family, "P,Q,a1,a2,b1,b2 (complex as re+imj)");
  sub->add_flag("--normalize-family", o.normalize_family, "rescale each family pair to unit norm");
  sub->add_option("--qr", o.qr, "q_R value in [0,1] (repeatable or comma list)")
      ->allow_extra_args(false)
      ->delimiter(',');
  sub->add_option("--out", o.out, "output file (default stdout)");
  sub->add_flag("--print-defaults", o.print_defaults, "print the effective configuration and exit");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fermionic field entanglement across Unruh modes and operator orderings"};
  app.require_subcommand(1);
  Options o;

  auto* sweep = app.add_subcommand("sweep", "negativity over the (ordering, q_R, r) grid as CSV");
  add_common(sweep, o);
  sweep->add_option("--r-points", o.r_points, "number of r samples in [0, pi/4]")->check(CLI::PositiveNumber);
  sweep->add_option("--ordering", o.orderings, "preset name or 5-digit permutation (repeatable)")
      ->allow_extra_args(false);
  sweep->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
  sweep->add_option("--gnuplot", o.gnuplot, "also write a gnuplot script to this path");

  auto* check = app.add_subcommand("check", "run every invariant and acceptance check");
  check->add_flag("--json", o.json, "JSON report");
  check->add_option("--out", o.out, "output file (default stdout)");

  auto* orderings = app.add_subcommand("orderings", "classify operator orderings by q_R spread at r = pi/4");
  add_common(orderings, o);
  orderings->add_flag("--json", o.json, "print JSON instead of the text table");
  orderings->add_flag("--all-permutations", o.all_permutations, "also move Alice's mode (120 orderings)");

  auto* single = app.add_subcommand("single", "reduced state and negativity by every route at one point");
  add_common(single, o);
  single->add_option("--r", o.r, "acceleration parameter, number or pi/N (default pi/4)");
  single->add_option("--ordering", o.orderings, "preset name or 5-digit permutation")->allow_extra_args(false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*sweep) return cmd_sweep(o);
    if (*check) return cmd_check(o);
    if (*orderings) return cmd_orderings(o);
    if (*single) return cmd_single(o);
  } catch (const Failure& f) {
    std::fprintf(stderr, "unruhent: %s\n", f.message.c_str());
    return exit_code(f.status);
  }
  return kExitUsage;
}
