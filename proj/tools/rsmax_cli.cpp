// Copyright 2026 The rsmax Authors
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

// rsmax command-line tool. Links only the C interface.
//
//   rsmax solve      --seed FILE
//   rsmax sample     --seed FILE --lambda SEL --grid SPEC [--fix SPEC]
//   rsmax verify     --seed FILE --lambda SEL --grid SPEC [--h H] [--tol T] [--corrupt]
//   rsmax invariants [--only IDS] [--rng-seed N]
//   rsmax dual       --in FILE [--phase CHI] | --sources LIST
//
// Exit codes: 0 success, 1 verification or runtime failure, 2 usage error.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rsmax/rsmax.h"
#include "run_config.hpp"

namespace {

using rsmax::cli::ConfigError;
using rsmax::cli::GridSpec;
using rsmax::cli::LambdaMode;
using rsmax::cli::OutputFormat;
using rsmax::cli::RunConfig;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

// A failed library call. Usage errors map to exit 2, the rest to exit 1.
struct CallError : std::runtime_error {
  CallError(rsm_status s, const std::string& what)
      : std::runtime_error(what + ": " + rsm_last_error()), status(s) {}
  rsm_status status;
};

void check(rsm_status s, const char* what) {
  if (s != RSM_OK) throw CallError(s, what);
}

struct SeedDel {
  void operator()(rsm_seed* p) const { rsm_seed_free(p); }
};
struct BasisDel {
  void operator()(rsm_basis* p) const { rsm_basis_free(p); }
};
struct FieldDel {
  void operator()(rsm_field* p) const { rsm_field_free(p); }
};
struct SuiteDel {
  void operator()(rsm_invariants* p) const { rsm_invariants_free(p); }
};
using SeedPtr = std::unique_ptr<rsm_seed, SeedDel>;
using BasisPtr = std::unique_ptr<rsm_basis, BasisDel>;
using FieldPtr = std::unique_ptr<rsm_field, FieldDel>;
using SuitePtr = std::unique_ptr<rsm_invariants, SuiteDel>;

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string short_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string complex_str(const rsm_complex& z) {
  return short_num(z.re) + (z.im < 0 ? "-" : "+") + short_num(std::abs(z.im)) + "i";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Output sink: --out path, or stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw ConfigError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& os() { return file_.is_open() ? file_ : std::cout; }
  void close() {
    if (file_.is_open()) {
      file_.close();
      if (!file_) throw ConfigError("error writing output file");
    }
  }

 private:
  std::ofstream file_;
};

template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (n + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t lo = t * chunk, hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

// Flag values plus the options that carry them, so a flag given on the
// command line wins over the same key in the seed file.
struct Flags {
  std::string seed;
  std::string lambda, grid, fix, format = "csv", out;
  double h = 1e-4, tol = 1e-6, tol_rank = 1e-9, c = 1.0;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::map<std::string, CLI::Option*> opts;

  bool given(const std::string& key) const {
    const auto it = opts.find(key);
    return it != opts.end() && it->second != nullptr && it->second->count() > 0;
  }
};

void add_seed_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--seed", f.seed, "seed/config file (key = value)")->required();
  f.opts["tol_rank"] = cmd->add_option("--tol-rank", f.tol_rank, "relative rank tolerance");
  f.opts["format"] = cmd->add_option("--format", f.format, "csv or jsonl");
  f.opts["out"] = cmd->add_option("--out", f.out, "output file (default stdout)");
}

void add_field_flags(CLI::App* cmd, Flags& f) {
  f.opts["lambda"] = cmd->add_option("--lambda", f.lambda,
                                     "re0,im0,...,re3,im3 | basis:N | solve");
  f.opts["grid"] = cmd->add_option("--grid", f.grid, "axis:min:max:count[,...]");
  f.opts["fix"] = cmd->add_option("--fix", f.fix, "axis=value[,...]");
  cmd->add_option("--threads", f.threads, "worker threads")->check(CLI::PositiveNumber);
}

RunConfig build_config(const Flags& f) {
  RunConfig rc;
  rc.seed_text = read_file(f.seed);
  const auto kv = rsmax::cli::parse_config_text(rc.seed_text);
  auto pick = [&](const std::string& key, const std::string& flag_text) -> std::optional<std::string> {
    if (f.given(key)) return flag_text;
    if (const auto it = kv.find(key); it != kv.end()) return it->second;
    return std::nullopt;
  };
  if (auto v = pick("lambda", f.lambda)) rc.lambda = rsmax::cli::parse_lambda(*v);
  rc.grid = rsmax::cli::parse_grid(pick("grid", f.grid).value_or(""), pick("fix", f.fix).value_or(""));
  if (auto v = pick("h", num(f.h))) rc.h = rsmax::cli::parse_number(*v, "h");
  if (auto v = pick("tol", num(f.tol))) rc.tol = rsmax::cli::parse_number(*v, "tol");
  if (auto v = pick("tol_rank", num(f.tol_rank))) rc.tol_rank = rsmax::cli::parse_number(*v, "tol_rank");
  if (auto v = pick("format", f.format)) rc.format = rsmax::cli::parse_format(*v);
  if (auto v = pick("out", f.out)) rc.out = *v;
  if (auto v = pick("c", num(f.c))) rc.c = rsmax::cli::parse_number(*v, "c");
  if (!(rc.h > 0.0)) throw ConfigError("h must be > 0");
  if (!(rc.tol > 0.0)) throw ConfigError("tol must be > 0");
  if (!(rc.tol_rank > 0.0)) throw ConfigError("tol_rank must be > 0");
  if (rc.c && !(*rc.c > 0.0)) throw ConfigError("c must be > 0");
  return rc;
}

SeedPtr load_seed(const RunConfig& rc) {
  rsm_seed* s = nullptr;
  check(rsm_seed_parse(rc.seed_text.c_str(), &s), "seed");
  return SeedPtr(s);
}

BasisPtr solve(const rsm_seed* seed, double tol_rank) {
  rsm_solve_options opt{tol_rank, 0};
  rsm_basis* b = nullptr;
  check(rsm_solve(seed, &opt, &b), "solve");
  return BasisPtr(b);
}

FieldPtr field_for(const RunConfig& rc, const rsm_seed* seed) {
  rsm_complex lambda[4];
  if (rc.lambda.mode == LambdaMode::Explicit) {
    for (int c = 0; c < 4; ++c) lambda[c] = {rc.lambda.values[2 * c], rc.lambda.values[2 * c + 1]};
  } else {
    const BasisPtr b = solve(seed, rc.tol_rank);
    check(rsm_basis_physical(b.get(), rc.lambda.index, lambda), "lambda selection");
  }
  rsm_field* f = nullptr;
  check(rsm_field_from_seed(seed, lambda, &f), "field");
  return FieldPtr(f);
}

std::string seed_summary(const rsm_seed* seed) {
  rsm_seed_info info{};
  check(rsm_seed_get_info(seed, &info), "seed info");
  std::string s;
  switch (info.kind) {
    case RSM_SEED_REAL_PLANE:
    case RSM_SEED_COMPLEX_PLANE:
      s = std::string(info.kind == RSM_SEED_REAL_PLANE ? "real_plane" : "complex_plane") +
          " A=" + short_num(info.amplitude) + " k=(" + short_num(info.k[0]) + ", " +
          short_num(info.k[1]) + ", " + short_num(info.k[2]) + ", " + short_num(info.k[3]) + ")";
      break;
    case RSM_SEED_CYLINDRICAL:
      s = "cylindrical A=" + short_num(info.amplitude) + " E=" + short_num(info.frequency) +
          " k=" + short_num(info.axial_wavenumber) + " m=" + std::to_string(info.m);
      break;
  }
  return s;
}

// ---- solve ---------------------------------------------------------------

int cmd_solve(const Flags& f) {
  const RunConfig rc = build_config(f);
  const SeedPtr seed = load_seed(rc);
  const BasisPtr b = solve(seed.get(), rc.tol_rank);
  rsm_basis_info info{};
  check(rsm_basis_get_info(b.get(), &info), "basis info");
  std::vector<double> sv(static_cast<size_t>(info.singular_value_count));
  check(rsm_basis_singular_values(b.get(), sv.data(), info.singular_value_count), "singular values");
  auto vectors = [&](bool physical) {
    std::vector<std::array<rsm_complex, 4>> v;
    const int n = physical ? info.dim_physical : info.kernel_dim;
    for (int i = 0; i < n; ++i) {
      std::array<rsm_complex, 4> l{};
      check(physical ? rsm_basis_physical(b.get(), i, l.data()) : rsm_basis_kernel(b.get(), i, l.data()),
            "basis vector");
      v.push_back(l);
    }
    return v;
  };
  const auto phys = vectors(true), kern = vectors(false);

  // An explicit --format without --out sends the table to stdout instead of
  // the summary.
  const bool table_to_stdout = rc.out.empty() && f.given("format");
  if (!table_to_stdout) {
    std::cout << "seed " << seed_summary(seed.get()) << "\n";
    std::cout << "nullity " << info.nullity << " real, kernel " << info.kernel_dim
              << " real, dim_physical " << info.dim_physical << " real ("
              << short_num(info.dim_physical / 2.0) << " complex)\n";
    std::cout << "singular values";
    for (double s : sv) std::cout << " " << short_num(s);
    std::cout << "\n";
    auto print = [](const char* tag, const std::vector<std::array<rsm_complex, 4>>& v) {
      for (size_t i = 0; i < v.size(); ++i) {
        std::cout << tag << "[" << i << "] lambda = (";
        for (int c = 0; c < 4; ++c) std::cout << (c ? ", " : "") << complex_str(v[i][c]);
        std::cout << ")\n";
      }
    };
    print("physical", phys);
    print("kernel", kern);
    if (info.all_zero) std::cout << "warning: every constraint row vanished; all 8 directions returned\n";
    if (info.rank_ambiguous)
      std::cout << "warning: a singular value lies within 10x of tol_rank " << short_num(info.tol_rank)
                << "; the rank decision is ambiguous\n";
  }

  if (table_to_stdout || !rc.out.empty()) {
    Sink sink(rc.out);
    std::ostream& os = sink.os();
    auto lam = [](const std::array<rsm_complex, 4>& l) {
      json a = json::array();
      for (const auto& z : l) a.push_back({z.re, z.im});
      return a;
    };
    if (rc.format == OutputFormat::Jsonl) {
      json j{{"seed", seed_summary(seed.get())},
             {"nullity", info.nullity},
             {"kernel_dim", info.kernel_dim},
             {"dim_physical", info.dim_physical},
             {"singular_values", sv},
             {"tol_rank", info.tol_rank},
             {"rank_ambiguous", info.rank_ambiguous != 0},
             {"all_zero", info.all_zero != 0}};
      j["physical"] = json::array();
      for (const auto& l : phys) j["physical"].push_back(lam(l));
      j["kernel"] = json::array();
      for (const auto& l : kern) j["kernel"].push_back(lam(l));
      os << j.dump() << "\n";
    } else {
      os << "set,index,re0,im0,re1,im1,re2,im2,re3,im3\n";
      auto rows = [&](const char* tag, const std::vector<std::array<rsm_complex, 4>>& v) {
        for (size_t i = 0; i < v.size(); ++i) {
          os << tag << "," << i;
          for (const auto& z : v[i]) os << "," << num(z.re) << "," << num(z.im);
          os << "\n";
        }
      };
      rows("physical", phys);
      rows("kernel", kern);
    }
    sink.close();
  }
  return kExitOk;
}

// ---- sample --------------------------------------------------------------

struct SampleRow {
  std::array<double, 4> x{};
  rsm_field_sample f{};
  rsm_status status = RSM_OK;
  std::string error;
};

void write_header(std::ostream& os, bool b_units) {
  const char* b = b_units ? "B" : "cB";
  os << "x0,x1,x2,x3,E1,E2,E3," << b << "1," << b << "2," << b << "3,E_dot_cB,E2_minus_cB2\n";
}

double e_dot_cb(const rsm_field_sample& s) {
  return s.E[0] * s.cB[0] + s.E[1] * s.cB[1] + s.E[2] * s.cB[2];
}
double energy_diff(const rsm_field_sample& s) {
  double d = 0.0;
  for (int i = 0; i < 3; ++i) d += s.E[i] * s.E[i] - s.cB[i] * s.cB[i];
  return d;
}

void write_sample_row(std::ostream& os, OutputFormat fmt, const std::array<double, 4>& x,
                      const rsm_field_sample& s, std::optional<double> c) {
  const double inv_c = c ? 1.0 / *c : 1.0;
  if (fmt == OutputFormat::Csv) {
    for (double v : x) os << num(v) << ",";
    for (double v : s.E) os << num(v) << ",";
    for (double v : s.cB) os << num(v * inv_c) << ",";
    os << num(e_dot_cb(s)) << "," << num(energy_diff(s)) << "\n";
  } else {
    json j{{"x", x}, {"E", s.E}};
    if (c)
      j["B"] = {s.cB[0] * inv_c, s.cB[1] * inv_c, s.cB[2] * inv_c};
    else
      j["cB"] = s.cB;
    j["E_dot_cB"] = e_dot_cb(s);
    j["E2_minus_cB2"] = energy_diff(s);
    os << j.dump() << "\n";
  }
}

int cmd_sample(const Flags& f) {
  const RunConfig rc = build_config(f);
  const SeedPtr seed = load_seed(rc);
  const FieldPtr field = field_for(rc, seed.get());
  const GridSpec& g = rc.grid;
  std::vector<SampleRow> rows(g.size());
  parallel_for(rows.size(), f.threads, [&](std::size_t i) {
    rows[i].x = g.point(i);
    rows[i].status = rsm_field_eval(field.get(), rows[i].x.data(), &rows[i].f);
    if (rows[i].status != RSM_OK) rows[i].error = rsm_last_error();
  });
  std::size_t skipped = 0;
  for (const auto& r : rows) {
    if (r.status == RSM_ERR_DOMAIN) ++skipped;
    else if (r.status != RSM_OK) throw CallError(r.status, "sample");
  }
  Sink sink(rc.out);
  std::ostream& os = sink.os();
  if (rc.format == OutputFormat::Csv) write_header(os, rc.c.has_value());
  for (const auto& r : rows)
    if (r.status == RSM_OK) write_sample_row(os, rc.format, r.x, r.f, rc.c);
  if (skipped > 0) {
    if (rc.format == OutputFormat::Csv)
      os << "# skipped=" << skipped << "\n";
    else
      os << json{{"skipped", skipped}}.dump() << "\n";
  }
  sink.close();
  if (!rc.out.empty())
    std::cerr << "wrote " << rows.size() - skipped << " rows to " << rc.out
              << (skipped ? " (" + std::to_string(skipped) + " skipped near the axis)" : "") << "\n";
  return kExitOk;
}

// ---- verify --------------------------------------------------------------

struct VerifyRow {
  std::array<double, 4> x{};
  rsm_residual_report r{};
  rsm_convergence conv{};
  rsm_status status = RSM_OK;
  std::string error;
};

double median(std::vector<double> v) {
  if (v.empty()) return std::nan("");
  std::sort(v.begin(), v.end());
  const size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

int cmd_verify(const Flags& f, bool corrupt) {
  const RunConfig rc = build_config(f);
  const SeedPtr seed = load_seed(rc);
  FieldPtr field = field_for(rc, seed.get());
  if (corrupt) {
    rsm_field* c = nullptr;
    check(rsm_field_corrupted(field.get(), &c), "corrupt");
    field.reset(c);
  }
  const GridSpec& g = rc.grid;
  const std::array<double, 3> steps{rc.h * 100.0, rc.h * 50.0, rc.h * 25.0};
  std::vector<VerifyRow> rows(g.size());
  parallel_for(rows.size(), f.threads, [&](std::size_t i) {
    VerifyRow& row = rows[i];
    row.x = g.point(i);
    row.status = rsm_verify(field.get(), row.x.data(), rc.h, nullptr, &row.r);
    if (row.status == RSM_OK)
      row.status = rsm_convergence_order(field.get(), row.x.data(), steps.data(), 3, &row.conv);
    if (row.status != RSM_OK) row.error = rsm_last_error();
  });

  std::size_t skipped = 0, floor_limited = 0;
  std::vector<double> rel, slopes;
  for (const auto& r : rows) {
    if (r.status == RSM_ERR_DOMAIN) {
      ++skipped;
      continue;
    }
    if (r.status != RSM_OK) throw CallError(r.status, "verify");
    rel.push_back(r.r.relative);
    if (r.conv.floor_limited)
      ++floor_limited;
    else
      slopes.push_back(r.conv.slope);
  }
  const double max_rel = rel.empty() ? std::nan("") : *std::max_element(rel.begin(), rel.end());
  const double med_rel = median(rel);
  const double med_slope = median(slopes);
  const bool pass = !rel.empty() && max_rel < rc.tol;

  if (!rc.out.empty()) {
    Sink sink(rc.out);
    std::ostream& os = sink.os();
    if (rc.format == OutputFormat::Csv) {
      os << "x0,x1,x2,x3,relative,max_residual,div_E,div_cB,curl_E_plus_dt_cB,curl_cB_minus_dt_E,"
            "slope\n";
      for (const auto& r : rows) {
        if (r.status != RSM_OK) continue;
        for (double v : r.x) os << num(v) << ",";
        os << num(r.r.relative) << "," << num(r.r.max_residual) << "," << num(r.r.div_E) << ","
           << num(r.r.div_cB) << "," << num(r.r.curl_E_plus_dt_cB) << ","
           << num(r.r.curl_cB_minus_dt_E) << ","
           << (r.conv.floor_limited ? std::string("floor-limited") : num(r.conv.slope)) << "\n";
      }
      os << "# points=" << rel.size() << " skipped=" << skipped << " max_relative=" << num(max_rel)
         << " median_relative=" << num(med_rel) << " median_slope=" << num(med_slope)
         << " tol=" << num(rc.tol) << " status=" << (pass ? "pass" : "fail") << "\n";
    } else {
      for (const auto& r : rows) {
        if (r.status != RSM_OK) continue;
        json j{{"x", r.x},
               {"relative", r.r.relative},
               {"max_residual", r.r.max_residual},
               {"div_E", r.r.div_E},
               {"div_cB", r.r.div_cB},
               {"curl_E_plus_dt_cB", r.r.curl_E_plus_dt_cB},
               {"curl_cB_minus_dt_E", r.r.curl_cB_minus_dt_E}};
        if (r.conv.floor_limited)
          j["slope"] = "floor-limited";
        else
          j["slope"] = r.conv.slope;
        os << j.dump() << "\n";
      }
      json s{{"points", rel.size()}, {"skipped", skipped}, {"tol", rc.tol}, {"pass", pass}};
      s["max_relative"] = rel.empty() ? json(nullptr) : json(max_rel);
      s["median_relative"] = rel.empty() ? json(nullptr) : json(med_rel);
      s["median_slope"] = slopes.empty() ? json(nullptr) : json(med_slope);
      os << json{{"summary", s}}.dump() << "\n";
    }
    sink.close();
  }

  std::cout << "field " << seed_summary(seed.get()) << (corrupt ? " (corrupted: E2 sign flipped)" : "")
            << "\n";
  std::cout << "points " << rel.size() << ", skipped " << skipped << " near the axis\n";
  std::cout << "max relative residual " << short_num(max_rel) << ", median " << short_num(med_rel)
            << " at h = " << short_num(rc.h) << "\n";
  if (slopes.empty())
    std::cout << "convergence slope: floor-limited at every point\n";
  else
    std::cout << "median convergence slope " << short_num(med_slope) << " over steps "
              << short_num(steps[0]) << ", " << short_num(steps[1]) << ", " << short_num(steps[2])
              << (floor_limited ? " (" + std::to_string(floor_limited) + " floor-limited)" : "")
              << "\n";
  if (rel.empty()) std::cout << "nothing verified\n";
  std::cout << (pass ? "PASS" : "FAIL") << " (tol " << short_num(rc.tol) << ")\n";
  return pass ? kExitOk : kExitFailure;
}

// ---- invariants ----------------------------------------------------------

int cmd_invariants(const std::string& only, std::uint64_t rng_seed, const std::string& format,
                   const std::string& out) {
  std::vector<int> ids;
  if (!only.empty()) {
    std::stringstream ss(only);
    std::string item;
    while (std::getline(ss, item, ','))
      ids.push_back(rsmax::cli::parse_count(item, "invariant id"));
  }
  const OutputFormat fmt = rsmax::cli::parse_format(format);
  rsm_invariants* raw = nullptr;
  check(rsm_invariants_run(rng_seed, ids.data(), static_cast<int>(ids.size()), &raw), "invariants");
  const SuitePtr suite(raw);
  bool all = true;
  Sink sink(out);
  std::ostream& os = sink.os();
  for (int i = 0; i < rsm_invariants_count(suite.get()); ++i) {
    int id = 0, passed = 0;
    const char *title = nullptr, *detail = nullptr;
    check(rsm_invariants_get(suite.get(), i, &id, &passed, &title, &detail), "invariant");
    all = all && passed;
    const int nf = rsm_invariants_failure_count(suite.get(), i);
    if (fmt == OutputFormat::Jsonl && !out.empty()) {
      json j{{"id", id}, {"title", title}, {"passed", passed != 0}, {"detail", detail}};
      j["failures"] = json::array();
      for (int k = 0; k < nf; ++k) j["failures"].push_back(rsm_invariants_failure(suite.get(), i, k));
      os << j.dump() << "\n";
    }
    std::cout << (passed ? "PASS " : "FAIL ") << id << " " << title << ": " << detail << "\n";
    for (int k = 0; k < nf; ++k) std::cout << "    " << rsm_invariants_failure(suite.get(), i, k) << "\n";
  }
  if (fmt == OutputFormat::Csv && !out.empty()) {
    os << "id,passed\n";
    for (int i = 0; i < rsm_invariants_count(suite.get()); ++i) {
      int id = 0, passed = 0;
      check(rsm_invariants_get(suite.get(), i, &id, &passed, nullptr, nullptr), "invariant");
      os << id << "," << passed << "\n";
    }
  }
  sink.close();
  return all ? kExitOk : kExitFailure;
}

// ---- dual ----------------------------------------------------------------

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

int cmd_dual(const std::string& in_path, std::optional<double> phase, const std::string& sources,
             const std::string& format, const std::string& out) {
  if (!sources.empty()) {
    const auto parts = split_csv(sources);
    if (parts.size() != 8)
      throw ConfigError("sources must be rho_e,rho_m,je1,je2,je3,jm1,jm2,jm3");
    double v[8];
    for (int i = 0; i < 8; ++i) v[i] = rsmax::cli::parse_number(parts[static_cast<size_t>(i)], "source");
    const rsm_sources s{v[0], v[1], {v[2], v[3], v[4]}, {v[5], v[6], v[7]}};
    rsm_sources d{};
    check(rsm_dual_transform_sources(&s, &d), "dual sources");
    // Report +0 rather than the -0 produced by negating a zero source.
    d.rho_e += 0.0;
    d.rho_m += 0.0;
    for (int i = 0; i < 3; ++i) {
      d.j_e[i] += 0.0;
      d.j_m[i] += 0.0;
    }
    std::cout << "rho_e,rho_m,je1,je2,je3,jm1,jm2,jm3\n"
              << num(d.rho_e) << "," << num(d.rho_m) << "," << num(d.j_e[0]) << "," << num(d.j_e[1])
              << "," << num(d.j_e[2]) << "," << num(d.j_m[0]) << "," << num(d.j_m[1]) << ","
              << num(d.j_m[2]) << "\n";
    if (in_path.empty()) return kExitOk;
  }
  if (in_path.empty()) throw ConfigError("dual needs --in FILE or --sources LIST");
  const OutputFormat fmt = rsmax::cli::parse_format(format);
  std::istringstream in(read_file(in_path));
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("empty input file");
  const auto header = split_csv(line);
  if (header.size() != 12 || header[0] != "x0" || header[4] != "E1" ||
      (header[7] != "cB1" && header[7] != "B1"))
    throw ConfigError("input must be a csv file written by 'sample'");
  if (header[7] == "B1") throw ConfigError("input carries B = cB/c; resample without --c");
  Sink sink(out);
  std::ostream& os = sink.os();
  if (fmt == OutputFormat::Csv) write_header(os, false);
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (fmt == OutputFormat::Csv) os << line << "\n";
      continue;
    }
    const auto cells = split_csv(line);
    if (cells.size() != 12)
      throw ConfigError("line " + std::to_string(line_no) + ": expected 12 columns");
    std::array<double, 4> x{};
    rsm_field_sample s{};
    for (int i = 0; i < 4; ++i) x[static_cast<size_t>(i)] = rsmax::cli::parse_number(cells[static_cast<size_t>(i)], "x");
    for (int i = 0; i < 3; ++i) {
      s.E[i] = rsmax::cli::parse_number(cells[static_cast<size_t>(4 + i)], "E");
      s.cB[i] = rsmax::cli::parse_number(cells[static_cast<size_t>(7 + i)], "cB");
    }
    rsm_field_sample d{};
    if (phase)
      check(rsm_phase_transform(&s, *phase, &d), "phase");
    else
      check(rsm_dual_transform(&s, &d), "dual");
    for (int i = 0; i < 3; ++i) {
      d.E[i] += 0.0;
      d.cB[i] += 0.0;
    }
    write_sample_row(os, fmt, x, d, std::nullopt);
  }
  sink.close();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Riemann-Silberstein Maxwell solutions: solve, sample, verify"};
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);
  app.set_version_flag("--version", rsm_version());

  Flags sf, pf, vf;
  CLI::App* solve_cmd = app.add_subcommand("solve", "find the physical lambda basis of a seed");
  add_seed_flags(solve_cmd, sf);

  CLI::App* sample_cmd = app.add_subcommand("sample", "sample E and cB on a grid");
  add_seed_flags(sample_cmd, pf);
  add_field_flags(sample_cmd, pf);
  pf.opts["c"] = sample_cmd->add_option("--c", pf.c, "speed of light for display (writes B = cB/c)");

  CLI::App* verify_cmd = app.add_subcommand("verify", "finite-difference Maxwell check on a grid");
  add_seed_flags(verify_cmd, vf);
  add_field_flags(verify_cmd, vf);
  vf.opts["h"] = verify_cmd->add_option("--h", vf.h, "finite-difference step");
  vf.opts["tol"] = verify_cmd->add_option("--tol", vf.tol, "max relative residual to pass");
  bool corrupt = false;
  verify_cmd->add_flag("--corrupt", corrupt, "flip the sign of E2 before verifying");

  std::string only, inv_format = "csv", inv_out;
  std::uint64_t rng_seed = 0x5253'4d41'5801ULL;
  CLI::App* inv_cmd = app.add_subcommand("invariants", "run the property suite");
  inv_cmd->add_option("--only", only, "comma-separated check ids");
  inv_cmd->add_option("--rng-seed", rng_seed, "random seed");
  inv_cmd->add_option("--format", inv_format, "csv or jsonl");
  inv_cmd->add_option("--out", inv_out, "report file");

  std::string dual_in, dual_sources, dual_format = "csv", dual_out;
  double phase = 0.0;
  CLI::App* dual_cmd = app.add_subcommand("dual", "dual or phase transform of a sampled file");
  dual_cmd->add_option("--in", dual_in, "csv file written by 'sample'");
  CLI::Option* phase_opt = dual_cmd->add_option("--phase", phase, "phase angle chi (default: dual)");
  dual_cmd->add_option("--sources", dual_sources, "rho_e,rho_m,je1,je2,je3,jm1,jm2,jm3");
  dual_cmd->add_option("--format", dual_format, "csv or jsonl");
  dual_cmd->add_option("--out", dual_out, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(sf);
    if (sample_cmd->parsed()) return cmd_sample(pf);
    if (verify_cmd->parsed()) return cmd_verify(vf, corrupt);
    if (inv_cmd->parsed()) return cmd_invariants(only, rng_seed, inv_format, inv_out);
    if (dual_cmd->parsed())
      return cmd_dual(dual_in, phase_opt->count() ? std::optional<double>(phase) : std::nullopt,
                      dual_sources, dual_format, dual_out);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CallError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.status == RSM_ERR_USAGE ? kExitUsage : kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
