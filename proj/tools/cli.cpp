// Copyright 2026 The qtexp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json_io.hpp"
#include "qtexp/applications.hpp"
#include "qtexp/minpoly.hpp"
#include "qtexp/oracle.hpp"
#include "qtexp/structure.hpp"

namespace qtexp::cli {
namespace {

using Clock = std::chrono::steady_clock;

std::string fmt_cplx(cplx z) {
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(6) << std::showpos << z.real() << z.imag() << "i";
  return ss.str();
}

void print_matrix(std::ostream& out, const Mat4c& m) {
  for (int i = 0; i < 4; ++i) {
    out << " ";
    for (int j = 0; j < 4; ++j) out << " " << std::setw(22) << fmt_cplx(m(i, j));
    out << "\n";
  }
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// ---------------------------------------------------------------------------

int cmd_classify(const std::string& file, double tol, std::ostream& out) {
  const Su4Element x(io::load_matrix_file(file).generator());
  const auto tri = tridiag_of(x, tol);
  const bool imsym = is_imaginary_symmetric(x, tol);
  const bool bisym = imsym && bisym_pattern(x.quintuple().cmat, tol).has_value();
  const NormalityReport normal = is_normal_type(x.quintuple());

  out << "structure:\n";
  out << "  perskewsymmetric       " << yes_no(is_perskew(x, tol)) << "\n";
  out << "  skew-Hamiltonian       " << yes_no(is_skewham(x, tol)) << "\n";
  out << "  symmetric-tridiagonal  " << yes_no(tri.has_value());
  if (tri) out << " (alpha=" << tri->alpha << ", beta=" << tri->beta << ", gamma=" << tri->gamma << ")";
  out << "\n";
  out << "  imaginary-symmetric    " << yes_no(imsym) << "\n";
  out << "  bisymmetric-type       " << yes_no(bisym) << "\n";
  out << "  normal-type            " << yes_no(normal.normal) << "\n";
  out << "scalar part: " << x.scalar_part() << "\n";

  const MinPolyClass cls = classify(x);
  out << "charpoly: mu = " << cls.coeffs.mu << ", nu = " << cls.coeffs.nu.imag() + 0.0 << "i, pi = " << cls.coeffs.pi
      << "\n";
  out << "min-poly: " << to_string(cls.tag);
  if (cls.tag == MinPolyTag::quadratic_I || cls.tag == MinPolyTag::cubic_I) out << ", c^2 = " << cls.c2.real();
  if (cls.tag == MinPolyTag::quadratic_II)
    out << ", beta = " << cls.beta.imag() << "i, gamma = " << cls.gamma.real();
  out << "\n";

  AutoOptions opts;
  opts.structure_tol = tol;
  out << "method: " << to_string(exp_auto(x, opts).method) << "\n";
  return kOk;
}

int cmd_expm(const std::string& file, const std::string& method, const std::string& out_path, double tol,
             std::ostream& out) {
  const Su4Element x(io::load_matrix_file(file).generator());
  ExpResult r;
  if (method == "oracle") {
    r = exp_oracle(x);
  } else {
    AutoOptions opts;
    opts.structure_tol = tol;
    opts.allow_oracle = method == "auto";
    opts.verify = true;
    r = exp_auto(x, opts);
  }
  nlohmann::json doc;
  doc["matrix"] = io::matrix_to_json(r.u);
  doc["method"] = to_string(r.method);
  doc["residual"] = r.residual;
  out << "method: " << to_string(r.method) << "\n";
  out << "residual: " << std::scientific << std::setprecision(3) << r.residual << std::defaultfloat << "\n";
  if (out_path.empty())
    out << doc.dump(2) << "\n";
  else
    io::write_text_file(out_path, doc.dump(2) + "\n");
  return kOk;
}

int cmd_charpoly(const std::string& file, std::ostream& out) {
  const Su4Element x(io::load_matrix_file(file).generator());
  const CharPolyCoeffs c = charpoly(x);
  out << std::setprecision(12);
  out << "mu = " << c.mu << "\n";
  out << "nu = " << c.nu.imag() + 0.0 << "i\n";
  out << "pi = " << c.pi << "\n";
  out << "cayley-hamilton residual = " << std::scientific << std::setprecision(3)
      << cayley_hamilton_residual(x.traceless(), c) << std::defaultfloat << "\n";
  return kOk;
}

// key=value arguments; "g=1,2,3" expands to g1, g2, g3.
std::map<std::string, double> parse_kv(const std::vector<std::string>& kvs) {
  std::map<std::string, double> m;
  for (const std::string& kv : kvs) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("expected key=value, got '" + kv + "'");
    const std::string key = kv.substr(0, eq);
    std::vector<double> values;
    std::stringstream ss(kv.substr(eq + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        values.push_back(std::stod(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw UsageError("bad number in '" + kv + "'");
      }
    }
    if (values.size() == 1) {
      m[key] = values[0];
    } else {
      for (std::size_t i = 0; i < values.size(); ++i) m[key + std::to_string(i + 1)] = values[i];
    }
  }
  return m;
}

void take(std::map<std::string, double>& kv, const std::string& key, double& field) {
  if (auto it = kv.find(key); it != kv.end()) {
    field = it->second;
    kv.erase(it);
  }
}

int cmd_demo(const std::string& name, const std::vector<std::string>& kvs, const std::string& params_file,
             const std::string& save, std::ostream& out) {
  std::map<std::string, double> kv;
  if (!params_file.empty()) {
    const io::MatrixInput in = io::load_matrix_file(params_file);
    if (!in.params.is_object()) throw ParseError("\"params\" object missing in " + params_file);
    for (const auto& [k, v] : in.params.items()) {
      if (!v.is_number()) throw ParseError("param '" + k + "' must be a number");
      kv[k] = v.get<double>();
    }
  }
  for (const auto& [k, v] : parse_kv(kvs)) kv[k] = v;

  Su4Element x = Su4Element::zero();
  ExpResult r;
  nlohmann::json params;
  if (name == "rabi") {
    RabiParams p;
    take(kv, "g1", p.g1); take(kv, "g2", p.g2); take(kv, "g3", p.g3); take(kv, "E0", p.E0); take(kv, "t", p.t);
    x = rabi_generator(p);
    r = rabi_propagator(p);
    params = {{"g1", p.g1}, {"g2", p.g2}, {"g3", p.g3}, {"E0", p.E0}, {"t", p.t}};
  } else if (name == "josephson") {
    JosephsonParams p;
    take(kv, "E00", p.E00); take(kv, "E10", p.E10); take(kv, "EJ1", p.EJ1); take(kv, "EJ2", p.EJ2);
    take(kv, "t", p.t);
    x = josephson_generator(p);
    r = josephson_propagator(p);
    params = {{"E00", p.E00}, {"E10", p.E10}, {"EJ1", p.EJ1}, {"EJ2", p.EJ2}, {"t", p.t}};
  } else if (name == "jcoupling") {
    ScalarCouplingParams p;
    take(kv, "a", p.a); take(kv, "b", p.b); take(kv, "c", p.c); take(kv, "d", p.d); take(kv, "e", p.e);
    take(kv, "f", p.f); take(kv, "t", p.t);
    x = scalar_coupling_generator(p);
    r = scalar_coupling_propagator(p);
    params = {{"a", p.a}, {"b", p.b}, {"c", p.c}, {"d", p.d}, {"e", p.e}, {"f", p.f}, {"t", p.t}};
  } else {
    throw UsageError("unknown demo '" + name + "' (rabi, josephson, jcoupling)");
  }
  if (!kv.empty()) throw UsageError("unknown parameter '" + kv.begin()->first + "' for demo " + name);

  if (!save.empty()) {
    nlohmann::json doc;
    doc["matrix"] = io::matrix_to_json(x.entries());
    doc["params"] = params;
    io::write_text_file(save, doc.dump(2) + "\n");
  }
  out << "demo: " << name << " " << params.dump() << "\n";
  out << "propagator:\n";
  print_matrix(out, r.u);
  out << "method: " << to_string(r.method) << "\n";
  out << "oracle deviation: " << std::scientific << std::setprecision(3)
      << (r.u - expm_reference(x.entries())).norm() << std::defaultfloat << "\n";
  return kOk;
}

std::vector<Family> parse_families(const std::string& list) {
  if (list.empty() || list == "all") return all_families();
  std::vector<Family> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto f = family_from_string(item);
    if (!f) throw UsageError("unknown family '" + item + "'");
    out.push_back(*f);
  }
  return out;
}

int cmd_bench(const std::string& families, int trials, const std::string& csv, std::uint64_t seed,
              std::ostream& out) {
  if (trials < 1) throw UsageError("--trials must be at least 1");
  std::vector<BenchRow> rows;
  for (Family f : parse_families(families)) rows.push_back(bench_family(f, trials, seed));
  const std::string text = bench_csv(rows);
  out << text;
  if (!csv.empty()) io::write_text_file(csv, text);
  return kOk;
}

int cmd_selftest(std::ostream& out) {
  int failures = 0;
  auto report = [&](const std::string& name, bool ok) {
    out << (ok ? "ok    " : "FAIL  ") << name << "\n";
    if (!ok) ++failures;
  };

  double table = 0.0;
  for (PauliLabel l : all_pauli_labels()) table = std::max(table, (qt_term_matrix(pauli_to_qt(l)) - pauli_kron(l)).norm());
  report("pauli table", table <= 1e-14);

  Rng rng(2024);
  for (Family f : all_families()) {
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
      const Su4Element x = random_member(f, rng);
      worst = std::max(worst, (exp_family(f, x).u - expm_reference(x.entries())).norm());
    }
    report("family " + to_string(f), worst <= 1e-9);
  }
  report("demo rabi", rabi_propagator({}).method == Method::tridiag);
  report("demo josephson", josephson_propagator({}).method == Method::bisym);
  report("demo jcoupling", scalar_coupling_propagator({}).method == Method::bisym);
  return failures == 0 ? kOk : kStructure;
}

}  // namespace

BenchRow bench_family(Family f, int trials, std::uint64_t seed) {
  Rng rng(seed);
  BenchRow row{f, trials};
  std::vector<double> tc, to;
  tc.reserve(static_cast<std::size_t>(trials));
  to.reserve(static_cast<std::size_t>(trials));
  for (int k = 0; k < trials; ++k) {
    const Su4Element x = random_member(f, rng);
    const auto t0 = Clock::now();
    const ExpResult closed = exp_family(f, x);
    const auto t1 = Clock::now();
    const Mat4c oracle = expm_reference(x.entries());
    const auto t2 = Clock::now();
    tc.push_back(std::chrono::duration<double, std::nano>(t1 - t0).count());
    to.push_back(std::chrono::duration<double, std::nano>(t2 - t1).count());
    row.max_err = std::max(row.max_err, (closed.u - oracle).norm());
  }
  row.t_closed_ns = median(tc);
  row.t_oracle_ns = median(to);
  return row;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream ss;
  ss << "family,trials,t_closed_ns,t_oracle_ns,speedup,max_err\n";
  for (const BenchRow& r : rows) {
    ss << to_string(r.family) << "," << r.trials << "," << std::fixed << std::setprecision(1) << r.t_closed_ns << ","
       << r.t_oracle_ns << "," << std::setprecision(2) << r.speedup() << "," << std::scientific << std::setprecision(3)
       << r.max_err << std::defaultfloat << "\n";
  }
  return ss.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed-form exponentials of structured 4x4 anti-Hermitian matrices", "qtexp"};
  app.require_subcommand(1, 1);
  double tol = kStructureTol;
  app.add_option("--tolerance", tol, "Structure-check tolerance")->check(CLI::PositiveNumber);

  std::string file, method = "auto", out_path, families = "all", csv, demo_name, params_file, save;
  std::vector<std::string> kvs;
  int trials = 1000;
  std::uint64_t seed = 1;

  auto* classify_cmd = app.add_subcommand("classify", "Report structure, characteristic polynomial and method");
  classify_cmd->add_option("file", file, "Matrix JSON")->required();

  auto* expm_cmd = app.add_subcommand("expm", "Exponentiate a matrix");
  expm_cmd->add_option("file", file, "Matrix JSON")->required();
  expm_cmd->add_option("--method", method, "auto, closed or oracle")
      ->check(CLI::IsMember({"auto", "closed", "oracle"}));
  expm_cmd->add_option("--out", out_path, "Write the result JSON here");

  auto* charpoly_cmd = app.add_subcommand("charpoly", "Characteristic polynomial coefficients");
  charpoly_cmd->add_option("file", file, "Matrix JSON")->required();

  auto* demo_cmd = app.add_subcommand("demo", "Propagator for rabi, josephson or jcoupling");
  demo_cmd->add_option("name", demo_name, "Demo name")->required();
  demo_cmd->add_option("params", kvs, "key=value parameters");
  demo_cmd->add_option("--file", params_file, "JSON file with a \"params\" object");
  demo_cmd->add_option("--save", save, "Write the generator and parameters as JSON");

  auto* bench_cmd = app.add_subcommand("bench", "Closed form versus oracle timing");
  bench_cmd->add_option("--families", families, "Comma-separated family names, or all");
  bench_cmd->add_option("--trials", trials, "Trials per family");
  bench_cmd->add_option("--csv", csv, "Also write the CSV here");
  bench_cmd->add_option("--seed", seed, "Random seed");

  auto* selftest_cmd = app.add_subcommand("selftest", "Quick consistency checks");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (classify_cmd->parsed()) return cmd_classify(file, tol, out);
    if (expm_cmd->parsed()) return cmd_expm(file, method, out_path, tol, out);
    if (charpoly_cmd->parsed()) return cmd_charpoly(file, out);
    if (demo_cmd->parsed()) return cmd_demo(demo_name, kvs, params_file, save, out);
    if (bench_cmd->parsed()) return cmd_bench(families, trials, csv, seed, out);
    if (selftest_cmd->parsed()) return cmd_selftest(out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kStructure;
  }
  return kUsage;
}

}  // namespace qtexp::cli
