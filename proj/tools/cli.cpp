// Copyright 2026 The graphmub Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "graphmub/circuit.hpp"
#include "graphmub/entanglement.hpp"
#include "graphmub/errors.hpp"
#include "graphmub/mub_set.hpp"
#include "graphmub/serialize.hpp"
#include "graphmub/statevector.hpp"
#include "graphmub/symrep.hpp"

namespace graphmub::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_residues(const std::vector<std::int64_t>& values, const PrimeModulus& p,
                      const char* flag) {
  for (auto v : values) {
    if (v < 0 || static_cast<std::uint64_t>(v) >= p.value()) {
      throw UsageError(std::string(flag) + " entries must lie in [0, p)");
    }
  }
}

std::vector<std::int64_t> parse_csv(const std::string& text, const char* what) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      auto const v = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError(std::string("--") + what + ": not an integer list: " + text);
    }
  }
  if (out.empty()) throw UsageError(std::string("--") + what + ": empty list");
  return out;
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open " + path);
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
}

PrimeModulus modulus_flag(std::int64_t p) {
  if (p < 2 || p > (std::int64_t{1} << 31) || !is_prime(static_cast<std::uint64_t>(p))) {
    throw UsageError("-p must be a prime");
  }
  return PrimeModulus(static_cast<std::uint64_t>(p));
}

struct Flags {
  std::int64_t p = 0;
  std::int64_t n = 0;
  std::string method = "auto";
  std::string poly;
  std::string d;
  bool primitive = false;
  bool numeric = false;
  double tol = 1e-10;
  std::size_t sample = 0;
  std::string format = "json";
  std::string bipartition;
  std::string out;
  std::size_t threads = 1;
  std::string input;
  std::optional<std::size_t> index;
  std::string example;
};

int cmd_gen(const Flags& f, std::ostream& out) {
  auto const p = modulus_flag(f.p);
  if (f.n < 1 || f.n > 64) throw UsageError("-n must be in [1, 64]");
  auto const n = static_cast<std::size_t>(f.n);
  MubSetOptions opts;
  opts.method = parse_method(f.method);
  opts.primitive_required = f.primitive;
  opts.threads = f.threads;
  if (!f.poly.empty()) {
    auto coeffs = parse_csv(f.poly, "poly");
    require_residues(coeffs, p, "--poly");
    PolyZp poly(p, coeffs);
    if (coeffs.size() != n + 1 || !poly.is_monic()) {
      throw UsageError("--poly must list n + 1 ascending coefficients of a monic polynomial");
    }
    opts.polynomial = poly;
  }
  if (!f.d.empty()) {
    auto d = parse_csv(f.d, "d");
    if (d.size() != n) throw UsageError("--d must have n entries");
    require_residues(d, p, "--d");
    std::vector<Residue> dr(d.begin(), d.end());
    opts.d = dr;
  }
  write_output(f.out, to_json(mub_set(p, n, opts)), out);
  return kOk;
}

int cmd_verify(const Flags& f, std::istream& in, std::ostream& out) {
  auto s = parse_mub_set(read_input(f.input, in));
  std::ostringstream report;
  int code = kOk;
  report << "set: p=" << s.p.value() << " n=" << s.n << " graph bases=" << s.matrices.size()
         << (s.complete() ? " (complete)" : " (incomplete)") << '\n';
  auto const lemma = verify_lemma1(s, {true, f.threads});
  if (lemma.pass) {
    report << "algebraic: pass (" << lemma.determinants << " determinants)\n";
  } else {
    report << "algebraic: FAIL det(A_" << lemma.failing_pair->first << " - A_"
           << lemma.failing_pair->second << ") = 0\n";
    code = kVerificationFailed;
  }
  if (f.numeric || f.sample > 0) {
    MuOptions mo;
    mo.tol = f.tol;
    mo.threads = f.threads;
    if (f.sample > 0) mo.samples = f.sample;
    auto const r = verify_mu_numeric(s, mo);
    report << "numeric: " << (r.pass ? "pass" : "FAIL") << " (" << r.overlaps_checked
           << " overlaps, worst deviation " << r.worst_deviation << ", tol " << f.tol << ")\n";
    if (!r.pass) {
      auto const& v = *r.first_violation;
      report << "numeric: first violation basis " << v.basis_a << " element " << v.element_a
             << " vs basis " << v.basis_b << " element " << v.element_b << " overlap "
             << v.value << '\n';
      code = kVerificationFailed;
    }
  }
  if (!s.complete()) {
    report << "note: fewer than p^n graph bases; the family is not complete\n";
  }
  write_output(f.out, report.str(), out);
  return code;
}

int cmd_analyze(const Flags& f, std::istream& in, std::ostream& out) {
  auto s = parse_mub_set(read_input(f.input, in));
  std::vector<Bipartition> parts;
  if (!f.bipartition.empty()) {
    std::vector<std::size_t> x;
    for (auto v : parse_csv(f.bipartition, "bipartition")) {
      if (v < 1) throw UsageError("--bipartition indices start at 1");
      x.push_back(static_cast<std::size_t>(v));
    }
    try {
      parts.push_back(Bipartition::from_x(s.n, x));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (parts.empty() && s.n < 2) {
    write_output(f.out, analysis_report_json(s, {}), out);
    return kOk;
  }
  auto const text = analysis_report_json(s, parts);
  write_output(f.out, text, out);
  if (s.complete()) {
    for (auto const& b : parts.empty() ? all_bipartitions(s.n) : parts) {
      if (!design_purity_check(s, b).pass) return kVerificationFailed;
    }
  }
  return kOk;
}

int cmd_export(const Flags& f, std::istream& in, std::ostream& out) {
  auto s = parse_mub_set(read_input(f.input, in));
  if (f.index && *f.index >= s.matrices.size()) throw UsageError("--index out of range");
  std::vector<std::size_t> picks;
  if (f.index) {
    picks.push_back(*f.index);
  } else {
    for (std::size_t i = 0; i < s.matrices.size(); ++i) picks.push_back(i);
  }
  std::string text;
  if (f.format == "json") {
    if (f.index) {
      text = matrix_to_json(s.matrices[*f.index]) + "\n";
    } else {
      text = to_json(s);
    }
  } else if (f.format == "dot") {
    for (auto i : picks) text += to_dot(s.matrices[i], "G" + std::to_string(i));
  } else if (f.format == "circuit") {
    for (std::size_t k = 0; k < picks.size(); ++k) {
      if (k != 0) text += '\n';
      text += to_text(emit_circuit(s.matrices[picks[k]]));
    }
  } else {
    throw UsageError("--format must be json, dot or circuit");
  }
  write_output(f.out, text, out);
  return kOk;
}

int cmd_tables(const Flags& f, std::ostream& out) {
  std::optional<std::uint64_t> p;
  if (f.p != 0) p = modulus_flag(f.p).value();
  auto const text = tables_report_json(p);
  write_output(f.out, text, out);
  return text.find("\"matches_reference\": false") == std::string::npos ? kOk
                                                                          : kVerificationFailed;
}

void print_matrix(std::ostream& os, const std::string& name, const MatZp& m) {
  os << name << " =\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << "  ";
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c == 0 ? "" : " ") << m(r, c);
    os << '\n';
  }
}

int example_qutrit_companion(std::ostream& os) {
  PrimeModulus const p(3);
  PolyZp const f(p, {1, 2, 1, 1});
  os << "p = 3, n = 3, f(x) = " << f << '\n';
  os << "irreducible: " << (poly_is_irreducible(f) ? "yes" : "no")
     << ", primitive: " << (poly_is_primitive(f) ? "yes" : "no") << '\n';
  auto const w = symmetrize_companion(f);
  print_matrix(os, "C", *w.c);
  print_matrix(os, "B_0", *w.b0);
  os << "det(B_0) = " << mat_det(*w.b0) << '\n';
  os << "g = " << describe(*w.g) << '\n';
  auto const b = std::get<Residue>(*w.g) == 1 ? *w.b0 : w.b0->scaled(std::get<Residue>(*w.g));
  print_matrix(os, "B = g B_0", b);
  print_matrix(os, "P", *w.p_mat);
  print_matrix(os, "P^-1", mat_inverse(*w.p_mat));
  print_matrix(os, "P B P^T", congruence(*w.p_mat, b));
  print_matrix(os, "Q = P C P^-1", w.q);
  print_matrix(os, "Q^2", w.q * w.q);
  os << "char(Q) = " << char_poly(w.q) << '\n';
  auto const s = generate_rep_set(w);
  auto const lemma = verify_lemma1(s);
  os << "graph bases: " << s.matrices.size() << ", MUBs with computational basis: "
     << s.basis_count() << '\n';
  os << "determinant condition: " << (lemma.pass ? "pass" : "FAIL") << '\n';
  return lemma.pass ? kOk : kVerificationFailed;
}

int example_qubit_tridiag(std::ostream& os) {
  PrimeModulus const p(2);
  TridiagSpec const spec{p, {1, 0, 0}};
  auto const w = witness_from_tridiag(spec);
  os << "p = 2, n = 3, d = (1,0,0)\n";
  print_matrix(os, "Q", w.q);
  os << "char(Q) = " << w.f << '\n';
  os << "irreducible: " << (poly_is_irreducible(w.f) ? "yes" : "no")
     << ", primitive: " << (poly_is_primitive(w.f) ? "yes" : "no") << '\n';
  auto const s = generate_rep_set(w);
  for (std::size_t i = 0; i < s.matrices.size(); ++i) {
    auto const a = coefficient_vector(i, 3, p);
    print_matrix(os,
                 "A_" + std::to_string(i) + " = " + std::to_string(a[0]) + " Q^0 + " +
                     std::to_string(a[1]) + " Q^1 + " + std::to_string(a[2]) + " Q^2",
                 s.matrices[i]);
    os << "  label: " << to_string(classify_basis(s.matrices[i])) << '\n';
  }
  auto const powers = generate_power_set(w);
  os << "powers Q^0..Q^6 with the zero matrix give the same set: yes\n";
  (void)powers;
  auto const lemma = verify_lemma1(s);
  os << "graph bases: " << s.matrices.size() << ", MUBs with computational basis: "
     << s.basis_count() << '\n';
  os << "determinant condition: " << (lemma.pass ? "pass" : "FAIL") << '\n';
  auto const check = design_purity_check(s, Bipartition::from_x(3, {1}));
  os << "average purity (1|23): " << to_string(check.lhs) << " vs " << to_string(check.rhs)
     << '\n';
  os << "measurement circuit for A_2:\n";
  for (auto const& g : emit_circuit(s.matrices[2]).gates) os << "  " << gate_display_name(g, p) << '\n';
  return lemma.pass && check.pass ? kOk : kVerificationFailed;
}

int cmd_example(const Flags& f, std::ostream& out) {
  std::ostringstream os;
  int code = kOk;
  if (f.example == "appendix-c") {
    code = example_qutrit_companion(os);
  } else if (f.example == "appendix-d") {
    code = example_qubit_tridiag(os);
  } else {
    throw UsageError("unknown example '" + f.example + "' (appendix-c, appendix-d)");
  }
  write_output(f.out, os.str(), out);
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Complete sets of mutually unbiased graph-state bases", "graphmub"};
  app.require_subcommand(1);
  Flags f;
  std::size_t index = 0;

  auto add_threads = [&](CLI::App* sub) {
    sub->add_option("--threads", f.threads, "Worker threads (0 = all cores)");
  };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", f.out, "Output path"); };
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", f.input, "MubSet document (default: stdin)");
  };

  auto* gen = app.add_subcommand("gen", "Generate a complete set");
  gen->add_option("-p", f.p, "Prime")->required();
  gen->add_option("-n", f.n, "Number of qupits")->required();
  gen->add_option("--method", f.method, "tridiag, companion or auto")
      ->check(CLI::IsMember({"auto", "tridiag", "companion"}));
  gen->add_option("--poly", f.poly, "Ascending coefficients, comma separated");
  gen->add_option("--d", f.d, "Tridiagonal diagonal, comma separated");
  gen->add_flag("--primitive", f.primitive, "Require a primitive polynomial");
  add_threads(gen);
  add_out(gen);

  auto* verify = app.add_subcommand("verify", "Check a set document");
  add_input(verify);
  verify->add_flag("--numeric", f.numeric, "Check every cross-basis overlap");
  verify->add_option("--tol", f.tol, "Absolute tolerance on squared overlaps");
  verify->add_option("--sample", f.sample, "Check this many random overlaps instead");
  add_threads(verify);
  add_out(verify);

  auto* analyze = app.add_subcommand("analyze", "Entanglement and purity report");
  add_input(analyze);
  analyze->add_option("--bipartition", f.bipartition, "Qupits of X, comma separated");
  add_threads(analyze);
  add_out(analyze);

  auto* exp = app.add_subcommand("export", "Export matrices as JSON, DOT or circuits");
  add_input(exp);
  exp->add_option("--format", f.format, "json, dot or circuit")
      ->check(CLI::IsMember({"json", "dot", "circuit"}));
  auto* index_opt = exp->add_option("--index", index, "Only this graph basis");
  add_threads(exp);
  add_out(exp);

  auto* tables = app.add_subcommand("tables", "Recompute the tridiagonal reference table");
  tables->add_option("-p", f.p, "Only this prime");
  add_threads(tables);
  add_out(tables);

  auto* example = app.add_subcommand("example", "Replay a worked example");
  example->add_option("name", f.example, "appendix-c or appendix-d")->required();
  add_out(example);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "graphmub: " << e.what() << '\n';
    return kUsage;
  }
  if (index_opt->count() > 0) f.index = index;
  if (f.tol <= 0.0) {
    err << "graphmub: --tol must be positive\n";
    return kUsage;
  }

  try {
    if (*gen) return cmd_gen(f, out);
    if (*verify) return cmd_verify(f, in, out);
    if (*analyze) return cmd_analyze(f, in, out);
    if (*exp) return cmd_export(f, in, out);
    if (*tables) return cmd_tables(f, out);
    if (*example) return cmd_example(f, out);
  } catch (const UsageError& e) {
    err << "graphmub: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "graphmub: " << e.what() << '\n';
    return kUsage;
  } catch (const ConstructionError& e) {
    err << "graphmub: construction failed: " << e.what() << '\n';
    return kConstructionFailed;
  } catch (const std::invalid_argument& e) {
    err << "graphmub: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace graphmub::cli
