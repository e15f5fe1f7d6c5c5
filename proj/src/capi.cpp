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

#include "unruhent/unruhent.h"

#include "unruhent/errors.hpp"
#include "unruhent/harness.hpp"

#include <cstdlib>
#include <cstring>
#include <new>

using namespace unruhent;

struct ue_family {
  StateFamily value;
};

struct ue_ordering {
  OperatorOrdering value;
};

struct ue_sweep_config {
  SweepConfig value;
};

struct ue_ordering_table {
  StateFamily family;
  std::vector<double> q_grid;
  std::vector<OrderingClass> rows;
};

struct ue_check_report {
  CheckReport value;
};

namespace {

thread_local std::string last_error;

template <class F>
ue_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return UE_OK;
  } catch (const UsageError& e) {
    last_error = e.what();
    return UE_ERR_USAGE;
  } catch (const IoError& e) {
    last_error = e.what();
    return UE_ERR_IO;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return UE_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return UE_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return UE_ERR_INTERNAL;
  }
}

void require(bool cond, const char* what) {
  if (!cond) throw UsageError(what);
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

UnruhParams to_params(const ue_unruh_params* p) {
  require(p != nullptr, "unruh params must not be NULL");
  return UnruhParams(p->r, {p->q_right_re, p->q_right_im}, {p->q_left_re, p->q_left_im});
}

}  // namespace

extern "C" {

const char* ue_last_error(void) { return last_error.c_str(); }

const char* ue_version(void) { return "1.0.0"; }

void ue_string_free(char* s) { std::free(s); }

double ue_infinite_acceleration(void) { return kInfiniteAcceleration; }

ue_status ue_unruh_params_real(double r, double q_right, ue_unruh_params* out) {
  return guarded([&] {
    require(out != nullptr, "output pointer must not be NULL");
    const UnruhParams p = UnruhParams::from_real(r, q_right);
    *out = {p.r(), p.q_right().real(), p.q_right().imag(), p.q_left().real(), p.q_left().imag()};
  });
}

// ---- family ----------------------------------------------------------------

ue_status ue_family_create_default(ue_family** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer must not be NULL");
    *out = new ue_family{StateFamily::bell_like()};
  });
}

ue_status ue_family_create(const double re_im[12], ue_family** out) {
  return guarded([&] {
    require(re_im != nullptr && out != nullptr, "arguments must not be NULL");
    StateFamily f{{re_im[0], re_im[1]}, {re_im[2], re_im[3]}, {re_im[4], re_im[5]},
                  {re_im[6], re_im[7]}, {re_im[8], re_im[9]}, {re_im[10], re_im[11]}};
    f.validate();
    *out = new ue_family{f};
  });
}

ue_status ue_family_parse(const char* text, int normalize, ue_family** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "arguments must not be NULL");
    *out = new ue_family{parse_family(text, normalize != 0)};
  });
}

ue_status ue_family_get(const ue_family* f, double re_im[12]) {
  return guarded([&] {
    require(f != nullptr && re_im != nullptr, "arguments must not be NULL");
    const Complex v[6] = {f->value.p, f->value.q, f->value.a1, f->value.a2, f->value.b1, f->value.b2};
    for (int i = 0; i < 6; ++i) {
      re_im[2 * i] = v[i].real();
      re_im[2 * i + 1] = v[i].imag();
    }
  });
}

void ue_family_destroy(ue_family* f) { delete f; }

// ---- orderings -------------------------------------------------------------

ue_status ue_ordering_parse(const char* text, ue_ordering** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "arguments must not be NULL");
    *out = new ue_ordering{OperatorOrdering::parse(text)};
  });
}

ue_status ue_ordering_label(const ue_ordering* o, char* buf, size_t buf_size) {
  return guarded([&] {
    require(o != nullptr && buf != nullptr, "arguments must not be NULL");
    const std::string label = o->value.label();
    require(buf_size > label.size(), "label buffer too small");
    std::memcpy(buf, label.c_str(), label.size() + 1);
  });
}

void ue_ordering_destroy(ue_ordering* o) { delete o; }

// ---- single evaluation -----------------------------------------------------

ue_status ue_negativity(const ue_family* f, const ue_unruh_params* p, const ue_ordering* o, ue_route route,
                        double* out) {
  return guarded([&] {
    require(f != nullptr && out != nullptr, "arguments must not be NULL");
    const UnruhParams params = to_params(p);
    switch (route) {
      case UE_ROUTE_QUBIT_TRACE:
        require(o != nullptr, "the qubit-trace route needs an ordering");
        *out = negativity(reduced_state(f->value, params, o->value));
        break;
      case UE_ROUTE_SUBALGEBRA:
        *out = negativity(subalgebra_reduced_state(build_state(f->value, params)));
        break;
      case UE_ROUTE_INFINITE_ACCELERATION:
        *out = negativity(infinite_acceleration_reduced_state(f->value, params));
        break;
      default:
        throw UsageError("unknown route");
    }
  });
}

ue_status ue_single_json(const ue_family* f, const ue_unruh_params* p, const ue_ordering* o, char** json_out) {
  return guarded([&] {
    require(f != nullptr && o != nullptr && json_out != nullptr, "arguments must not be NULL");
    *json_out = dup_string(single_report_json(f->value, to_params(p), o->value));
  });
}

// ---- sweeps ----------------------------------------------------------------

ue_status ue_sweep_config_create(ue_sweep_config** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer must not be NULL");
    *out = new ue_sweep_config{};
  });
}

void ue_sweep_config_destroy(ue_sweep_config* c) { delete c; }

ue_status ue_sweep_config_set_r_points(ue_sweep_config* c, int points) {
  return guarded([&] {
    require(c != nullptr, "config must not be NULL");
    require(points >= 1, "r_points must be positive");
    c->value.r_points = points;
  });
}

ue_status ue_sweep_config_set_q_right(ue_sweep_config* c, const double* values, size_t count) {
  return guarded([&] {
    require(c != nullptr && (values != nullptr || count == 0), "arguments must not be NULL");
    require(count > 0, "at least one q_R value is required");
    std::vector<double> q(values, values + count);
    for (double v : q) require(v >= 0.0 && v <= 1.0, "q_R values must lie in [0, 1]");
    c->value.q_right_values = std::move(q);
  });
}

ue_status ue_sweep_config_set_orderings(ue_sweep_config* c, const char* const* specs, size_t count) {
  return guarded([&] {
    require(c != nullptr && specs != nullptr, "arguments must not be NULL");
    require(count > 0, "at least one ordering is required");
    std::vector<OperatorOrdering> ords;
    for (size_t i = 0; i < count; ++i) {
      require(specs[i] != nullptr, "ordering string must not be NULL");
      ords.push_back(OperatorOrdering::parse(specs[i]));
    }
    c->value.orderings = std::move(ords);
  });
}

ue_status ue_sweep_config_set_family(ue_sweep_config* c, const ue_family* f) {
  return guarded([&] {
    require(c != nullptr && f != nullptr, "arguments must not be NULL");
    c->value.family = f->value;
  });
}

ue_status ue_sweep_config_set_threads(ue_sweep_config* c, unsigned threads) {
  return guarded([&] {
    require(c != nullptr, "config must not be NULL");
    require(threads >= 1, "threads must be positive");
    c->value.threads = threads;
  });
}

ue_status ue_sweep_config_set_output(ue_sweep_config* c, const char* path) {
  return guarded([&] {
    require(c != nullptr, "config must not be NULL");
    c->value.output_path = path ? path : "";
  });
}

ue_status ue_sweep_config_load(ue_sweep_config* c, const char* path) {
  return guarded([&] {
    require(c != nullptr && path != nullptr, "arguments must not be NULL");
    apply_config_file(c->value, path);
  });
}

ue_status ue_sweep_config_describe(const ue_sweep_config* c, char** text_out) {
  return guarded([&] {
    require(c != nullptr && text_out != nullptr, "arguments must not be NULL");
    *text_out = dup_string(describe_config(c->value));
  });
}

ue_status ue_sweep_config_output(const ue_sweep_config* c, char** path_out) {
  return guarded([&] {
    require(c != nullptr && path_out != nullptr, "arguments must not be NULL");
    *path_out = dup_string(c->value.output_path);
  });
}

ue_status ue_sweep_config_family(const ue_sweep_config* c, ue_family** out) {
  return guarded([&] {
    require(c != nullptr && out != nullptr, "arguments must not be NULL");
    *out = new ue_family{c->value.family};
  });
}

ue_status ue_sweep_config_q_right(const ue_sweep_config* c, double* values, size_t capacity, size_t* count) {
  return guarded([&] {
    require(c != nullptr && count != nullptr, "arguments must not be NULL");
    const auto& q = c->value.q_right_values;
    *count = q.size();
    require(values == nullptr || capacity >= q.size(), "q_R buffer too small");
    if (values) std::copy(q.begin(), q.end(), values);
  });
}

ue_status ue_sweep_csv(const ue_sweep_config* c, char** csv_out) {
  return guarded([&] {
    require(c != nullptr && csv_out != nullptr, "arguments must not be NULL");
    *csv_out = dup_string(sweep_csv(run_sweep(c->value)));
  });
}

ue_status ue_sweep_write(const ue_sweep_config* c) {
  return guarded([&] {
    require(c != nullptr, "config must not be NULL");
    require(!c->value.output_path.empty(), "no output path configured");
    const std::string csv = sweep_csv(run_sweep(c->value));
    write_text_file(c->value.output_path, csv);
  });
}

ue_status ue_sweep_gnuplot(const ue_sweep_config* c, const char* csv_path, char** script_out) {
  return guarded([&] {
    require(c != nullptr && csv_path != nullptr && script_out != nullptr, "arguments must not be NULL");
    *script_out = dup_string(gnuplot_script(c->value, csv_path));
  });
}

// ---- ordering classification ----------------------------------------------

ue_status ue_orderings_classify(const ue_family* f, const double* q_right, size_t q_count, int all_permutations,
                                ue_ordering_table** out) {
  return guarded([&] {
    require(f != nullptr && out != nullptr, "arguments must not be NULL");
    std::vector<double> grid = q_count == 0 ? default_q_right_grid() : std::vector<double>(q_right, q_right + q_count);
    auto rows = classify_orderings(f->value, grid, all_permutations != 0);
    *out = new ue_ordering_table{f->value, std::move(grid), std::move(rows)};
  });
}

size_t ue_ordering_table_size(const ue_ordering_table* t) { return t ? t->rows.size() : 0; }

ue_status ue_ordering_table_row(const ue_ordering_table* t, size_t index, char digits[6], double* spread,
                                int* convergent) {
  return guarded([&] {
    require(t != nullptr, "table must not be NULL");
    require(index < t->rows.size(), "row index out of range");
    const auto& row = t->rows[index];
    if (digits) std::memcpy(digits, row.ordering.digits().c_str(), 6);
    if (spread) *spread = row.spread;
    if (convergent) *convergent = row.convergent ? 1 : 0;
  });
}

ue_status ue_ordering_table_text(const ue_ordering_table* t, char** text_out) {
  return guarded([&] {
    require(t != nullptr && text_out != nullptr, "arguments must not be NULL");
    *text_out = dup_string(orderings_text(t->family, t->q_grid, t->rows));
  });
}

ue_status ue_ordering_table_json(const ue_ordering_table* t, char** json_out) {
  return guarded([&] {
    require(t != nullptr && json_out != nullptr, "arguments must not be NULL");
    *json_out = dup_string(orderings_json(t->family, t->q_grid, t->rows));
  });
}

void ue_ordering_table_destroy(ue_ordering_table* t) { delete t; }

// ---- invariant suite -------------------------------------------------------

ue_status ue_check_run(ue_check_report** out) {
  ue_status status = guarded([&] {
    require(out != nullptr, "output pointer must not be NULL");
    *out = new ue_check_report{run_checks()};
  });
  if (status == UE_OK && !(*out)->value.all_passed()) {
    last_error = "one or more checks failed";
    return UE_ERR_CHECK_FAILED;
  }
  return status;
}

size_t ue_check_report_size(const ue_check_report* r) { return r ? r->value.results.size() : 0; }

ue_status ue_check_report_entry(const ue_check_report* r, size_t index, const char** name, double* measured,
                                double* threshold, int* passed) {
  return guarded([&] {
    require(r != nullptr, "report must not be NULL");
    require(index < r->value.results.size(), "entry index out of range");
    const auto& e = r->value.results[index];
    if (name) *name = e.name.c_str();
    if (measured) *measured = e.measured;
    if (threshold) *threshold = e.threshold;
    if (passed) *passed = e.passed ? 1 : 0;
  });
}

int ue_check_report_passed(const ue_check_report* r) { return r && r->value.all_passed() ? 1 : 0; }

ue_status ue_check_report_text(const ue_check_report* r, char** text_out) {
  return guarded([&] {
    require(r != nullptr && text_out != nullptr, "arguments must not be NULL");
    *text_out = dup_string(r->value.to_text());
  });
}

ue_status ue_check_report_json(const ue_check_report* r, char** json_out) {
  return guarded([&] {
    require(r != nullptr && json_out != nullptr, "arguments must not be NULL");
    *json_out = dup_string(r->value.to_json());
  });
}

void ue_check_report_destroy(ue_check_report* r) { delete r; }

ue_status ue_write_file(const char* path, const char* text) {
  return guarded([&] {
    require(path != nullptr && text != nullptr, "arguments must not be NULL");
    write_text_file(path, text);
  });
}

}  // extern "C"
