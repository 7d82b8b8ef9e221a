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

#include "graphmub/serialize.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "graphmub/catalog.hpp"
#include "graphmub/errors.hpp"

namespace graphmub {
namespace {

using ordered_json = nlohmann::ordered_json;

template <typename Seq>
std::string int_array(const Seq& values) {
  std::string out = "[";
  bool first = true;
  for (auto v : values) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(v);
  }
  return out + "]";
}

std::string rows_json(const MatZp& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r != 0) out += ',';
    out += int_array(m.row(r));
  }
  return out + "]";
}

// Full coefficient list, so the leading 1 is present.
std::vector<Residue> ascending(const PolyZp& f) { return f.coeffs(); }

[[noreturn]] void parse_fail(const std::string& why) { throw ParseError("MubSet: " + why); }

std::vector<std::int64_t> int_list(const nlohmann::json& j, const char* what) {
  if (!j.is_array()) parse_fail(std::string(what) + " must be an array");
  std::vector<std::int64_t> out;
  for (auto const& v : j) {
    if (!v.is_number_integer()) parse_fail(std::string(what) + " must hold integers");
    out.push_back(v.get<std::int64_t>());
  }
  return out;
}

MatZp parse_matrix(const nlohmann::json& j, const PrimeModulus& p, std::size_t n,
                   const char* what) {
  if (!j.is_array() || j.size() != n) parse_fail(std::string(what) + " must have n rows");
  std::vector<std::vector<std::int64_t>> rows;
  for (auto const& r : j) {
    auto row = int_list(r, what);
    if (row.size() != n) parse_fail(std::string(what) + " must be n x n");
    for (auto v : row) {
      if (v < 0 || static_cast<std::uint64_t>(v) >= p.value()) {
        parse_fail(std::string(what) + " entry outside [0, p)");
      }
    }
    rows.push_back(std::move(row));
  }
  MatZp m(p, rows);
  if (!m.is_symmetric()) parse_fail(std::string(what) + " is not symmetric");
  return m;
}

}  // namespace

std::string poly_to_json(const PolyZp& f) {
  return "{\"p\":" + std::to_string(f.modulus().value()) +
         ",\"coeffs\":" + int_array(ascending(f)) + "}";
}

std::string matrix_to_json(const MatZp& m) {
  return "{\"p\":" + std::to_string(m.modulus().value()) + ",\"n\":" +
         std::to_string(m.rows()) + ",\"rows\":" + rows_json(m) + "}";
}

std::string witness_to_json(const SymRepWitness& w) {
  std::ostringstream os;
  os << "{\n  \"p\": " << w.modulus().value() << ",\n  \"n\": " << w.n()
     << ",\n  \"method\": \"" << to_string(w.method) << "\",\n  \"f\": "
     << int_array(ascending(w.f));
  if (w.d) os << ",\n  \"d\": " << int_array(*w.d);
  if (w.c) os << ",\n  \"C\": " << rows_json(*w.c);
  if (w.b0) os << ",\n  \"B0\": " << rows_json(*w.b0);
  if (w.g) os << ",\n  \"g\": \"" << describe(*w.g) << '"';
  if (w.p_mat) os << ",\n  \"P\": " << rows_json(*w.p_mat);
  os << ",\n  \"Q\": " << rows_json(w.q) << "\n}\n";
  return os.str();
}

std::string to_json(const MubSet& s) {
  std::ostringstream os;
  os << "{\n  \"p\": " << s.p.value() << ",\n  \"n\": " << s.n << ",\n  \"method\": \""
     << s.method << '"';
  if (s.polynomial) os << ",\n  \"polynomial\": " << int_array(ascending(*s.polynomial));
  if (s.d) os << ",\n  \"d\": " << int_array(*s.d);
  if (!s.shifts.empty()) {
    os << ",\n  \"shifts\": [";
    for (std::size_t i = 0; i < s.shifts.size(); ++i) {
      os << (i == 0 ? "\n    " : ",\n    ") << rows_json(s.shifts[i]);
    }
    os << "\n  ]";
  }
  os << ",\n  \"matrices\": [";
  for (std::size_t i = 0; i < s.matrices.size(); ++i) {
    os << (i == 0 ? "\n    " : ",\n    ") << rows_json(s.matrices[i]);
  }
  os << "\n  ]\n}\n";
  return os.str();
}

MubSet parse_mub_set(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    parse_fail(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) parse_fail("document must be an object");
  for (auto const& [key, value] : doc.items()) {
    (void)value;
    if (key != "p" && key != "n" && key != "method" && key != "polynomial" && key != "d" &&
        key != "shifts" && key != "matrices") {
      parse_fail("unknown key '" + key + "'");
    }
  }
  for (auto const* key : {"p", "n", "method", "matrices"}) {
    if (!doc.contains(key)) parse_fail(std::string("missing key '") + key + "'");
  }
  if (!doc["p"].is_number_integer() || !doc["n"].is_number_integer()) {
    parse_fail("p and n must be integers");
  }
  auto const pv = doc["p"].get<std::int64_t>();
  auto const nv = doc["n"].get<std::int64_t>();
  if (pv < 2 || !is_prime(static_cast<std::uint64_t>(pv)) || pv > (std::int64_t{1} << 31)) {
    parse_fail("p must be a prime");
  }
  if (nv < 1 || nv > 64) parse_fail("n must be in [1, 64]");
  if (!doc["method"].is_string()) parse_fail("method must be a string");

  PrimeModulus const p(static_cast<std::uint64_t>(pv));
  auto const n = static_cast<std::size_t>(nv);
  MubSet s{p, n, doc["method"].get<std::string>(), std::nullopt, std::nullopt, {}, false, {}};

  if (doc.contains("polynomial")) {
    auto coeffs = int_list(doc["polynomial"], "polynomial");
    for (auto v : coeffs) {
      if (v < 0 || v >= pv) parse_fail("polynomial coefficient outside [0, p)");
    }
    PolyZp f(p, coeffs);
    if (coeffs.size() != n + 1 || !f.is_monic()) {
      parse_fail("polynomial must be monic of degree n");
    }
    s.polynomial = f;
  }
  if (doc.contains("d")) {
    auto d = int_list(doc["d"], "d");
    if (d.size() != n) parse_fail("d must have n entries");
    std::vector<Residue> dr;
    for (auto v : d) {
      if (v < 0 || v >= pv) parse_fail("d entry outside [0, p)");
      dr.push_back(static_cast<Residue>(v));
    }
    s.d = dr;
  }
  if (doc.contains("shifts")) {
    if (!doc["shifts"].is_array()) parse_fail("shifts must be an array");
    for (auto const& m : doc["shifts"]) s.shifts.push_back(parse_matrix(m, p, n, "shift"));
  }
  auto const& mats = doc["matrices"];
  if (!mats.is_array() || mats.empty()) parse_fail("matrices must be a nonempty array");
  if (mats.size() > s.dimension()) parse_fail("more than p^n matrices");
  for (auto const& m : mats) s.matrices.push_back(parse_matrix(m, p, n, "matrix"));
  return s;
}

std::string analysis_report_json(const MubSet& s,
                                 const std::vector<Bipartition>& bipartitions) {
  auto const parts = bipartitions.empty() ? all_bipartitions(s.n) : bipartitions;
  ordered_json doc;
  doc["p"] = s.p.value();
  doc["n"] = s.n;
  doc["graph_bases"] = s.matrices.size();

  auto const c = census(s);
  ordered_json census_doc;
  for (std::size_t l = 0; l < kLabelCount; ++l) {
    auto const label = static_cast<EntanglementLabel>(l);
    census_doc[to_string(label)] = c.count(label);
  }
  census_doc["fully-separable-including-computational"] = c.fully_separable_bases();
  doc["census"] = census_doc;

  ordered_json labels = ordered_json::array();
  for (auto const& a : s.matrices) labels.push_back(to_string(classify_basis(a)));
  doc["labels"] = labels;

  ordered_json parts_doc = ordered_json::array();
  for (auto const& b : parts) {
    ordered_json entry;
    entry["bipartition"] = b.label();
    entry["x"] = b.x;
    entry["y"] = b.y;
    ordered_json ranks = ordered_json::array();
    ordered_json purities = ordered_json::array();
    Rational sum(1);
    for (auto const& a : s.matrices) {
      auto const r = connectivity_rank(a, b);
      auto const pur = purity(a, b);
      ranks.push_back(r);
      purities.push_back(to_string(pur));
      sum += pur;
    }
    entry["ranks"] = ranks;
    entry["purities"] = purities;
    if (s.complete()) {
      auto const check = design_purity_check(s, b);
      entry["purity_sum"] = to_string(sum);
      entry["family_size"] = s.matrices.size() + 1;
      entry["lhs"] = to_string(check.lhs);
      entry["rhs"] = to_string(check.rhs);
      entry["pass"] = check.pass;
    }
    parts_doc.push_back(entry);
  }
  doc["bipartitions"] = parts_doc;
  return doc.dump(2) + "\n";
}

std::string tables_report_json(std::optional<std::uint64_t> p) {
  ordered_json rows = ordered_json::array();
  for (auto const& row : tridiag_reference_table()) {
    if (p && row.p != *p) continue;
    PrimeModulus const mod(row.p);
    auto const f = tridiag_char_poly(TridiagSpec{mod, row.d});
    std::vector<Residue> desc;
    for (std::size_t i = row.d.size(); i-- > 0;) desc.push_back(f.coeff(i));
    bool const irreducible = poly_is_irreducible(f);
    ordered_json entry;
    entry["p"] = row.p;
    entry["n"] = row.d.size();
    entry["d"] = row.d;
    entry["coeffs_desc"] = desc;
    entry["irreducible"] = irreducible;
    entry["primitive"] = irreducible && poly_is_primitive(f);
    entry["matches_reference"] = desc == row.coeffs_desc;
    rows.push_back(entry);
  }
  return rows.dump(2) + "\n";
}

std::string to_dot(const MatZp& a, const std::string& name) {
  std::ostringstream os;
  os << "graph \"" << name << "\" {\n  node [shape=circle];\n";
  for (std::size_t i = 1; i <= a.rows(); ++i) os << "  " << i << ";\n";
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = i; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      os << "  " << i + 1 << " -- " << j + 1 << " [label=\"" << a(i, j) << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace graphmub
