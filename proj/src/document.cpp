// Copyright 2026 The qck Authors
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

#include "qck/document.hpp"

#include <cstdio>
#include <initializer_list>
#include <set>

namespace qck {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw ParseError(msg); }

void check_keys(const Json& j, std::initializer_list<const char*> allowed, const char* what) {
  if (!j.is_object()) fail(std::string(what) + ": expected an object");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : j.items()) {
    if (!ok.count(key)) fail(std::string(what) + ": unknown key \"" + key + "\"");
  }
}

double parse_number(const Json& j, const char* what) {
  if (!j.is_number()) fail(std::string(what) + ": expected a number");
  return j.get<double>();
}

const Json& array_of(const Json& j, std::size_t n, const char* what) {
  if (!j.is_array() || j.size() != n) {
    fail(std::string(what) + ": expected an array of length " + std::to_string(n));
  }
  return j;
}

std::string seed_text(Seed s) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(s.value));
  return buf;
}

Json optional_or_null(const std::optional<Json>& j) { return j ? *j : Json(nullptr); }

}  // namespace

Json real_matrix_json(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json complex_matrix_json(const Eigen::MatrixXcd& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(complex_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json vector_json(const Eigen::VectorXd& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Complex parse_complex(const Json& j, const char* what) {
  array_of(j, 2, what);
  return {parse_number(j[0], what), parse_number(j[1], what)};
}

Mat4 parse_real4(const Json& j, const char* what) {
  array_of(j, 4, what);
  Mat4 m;
  for (int i = 0; i < 4; ++i) {
    array_of(j[i], 4, what);
    for (int k = 0; k < 4; ++k) m(i, k) = parse_number(j[i][k], what);
  }
  return m;
}

CMat4 parse_complex4(const Json& j, const char* what) {
  array_of(j, 4, what);
  CMat4 m;
  for (int i = 0; i < 4; ++i) {
    array_of(j[i], 4, what);
    for (int k = 0; k < 4; ++k) m(i, k) = parse_complex(j[i][k], what);
  }
  return m;
}

CMat2 parse_complex2(const Json& j, const char* what) {
  array_of(j, 2, what);
  CMat2 m;
  for (int i = 0; i < 2; ++i) {
    array_of(j[i], 2, what);
    for (int k = 0; k < 2; ++k) m(i, k) = parse_complex(j[i][k], what);
  }
  return m;
}

MapDocument parse_map_document(const Json& j) {
  check_keys(j, {"pi", "choi", "kraus", "twist", "weights", "family", "params", "meta"},
             "map document");
  int forms = 0;
  for (const char* k : {"pi", "choi", "kraus", "family"}) forms += j.contains(k) ? 1 : 0;
  if (forms != 1) fail("map document: expected exactly one of pi, choi, kraus, family");

  MapDocument doc;
  if (j.contains("meta")) {
    if (!j["meta"].is_object()) fail("meta: expected an object");
    doc.meta = j["meta"];
  }
  const bool kraus_extras = j.contains("twist") || j.contains("weights");
  if (kraus_extras && !j.contains("kraus")) fail("twist/weights only apply to kraus documents");
  if (j.contains("params") && !j.contains("family")) fail("params only apply to family documents");

  if (j.contains("pi")) {
    doc.form = MapDocument::Form::pi;
    doc.pi = parse_real4(j["pi"], "pi");
  } else if (j.contains("choi")) {
    doc.form = MapDocument::Form::choi;
    doc.choi = parse_complex4(j["choi"], "choi");
    if ((doc.choi - doc.choi.adjoint()).cwiseAbs().maxCoeff() > 1e-9) {
      fail("choi: matrix is not Hermitian");
    }
  } else if (j.contains("kraus")) {
    doc.form = MapDocument::Form::kraus;
    const Json& ops = j["kraus"];
    if (!ops.is_array()) fail("kraus: expected an array of 2x2 matrices");
    for (const auto& op : ops) doc.kraus.ops.push_back(parse_complex2(op, "kraus"));
    if (j.contains("twist")) {
      if (!j["twist"].is_boolean()) fail("twist: expected a boolean");
      doc.kraus.twist = j["twist"].get<bool>();
    }
    if (j.contains("weights")) {
      array_of(j["weights"], doc.kraus.ops.size(), "weights");
      for (const auto& w : j["weights"]) doc.kraus.weights.push_back(parse_number(w, "weights"));
    }
  } else {
    doc.form = MapDocument::Form::family;
    if (!j["family"].is_string()) fail("family: expected a string");
    doc.family = j["family"].get<std::string>();
    if (j.contains("params")) doc.params = j["params"];
    family_pi(doc.family, doc.params);  // validates
  }
  return doc;
}

Json to_json(const MapDocument& doc) {
  Json j = Json::object();
  switch (doc.form) {
    case MapDocument::Form::pi:
      j["pi"] = real_matrix_json(doc.pi);
      break;
    case MapDocument::Form::choi:
      j["choi"] = complex_matrix_json(doc.choi);
      break;
    case MapDocument::Form::kraus: {
      Json ops = Json::array();
      for (const auto& k : doc.kraus.ops) ops.push_back(complex_matrix_json(k));
      j["kraus"] = std::move(ops);
      j["twist"] = doc.kraus.twist;
      if (!doc.kraus.weights.empty()) j["weights"] = doc.kraus.weights;
      break;
    }
    case MapDocument::Form::family:
      j["family"] = doc.family;
      if (!doc.params.empty()) j["params"] = doc.params;
      break;
  }
  if (!doc.meta.is_null()) j["meta"] = doc.meta;
  return j;
}

PiMatrix family_pi(const std::string& name, const Json& params) {
  if (!params.is_object()) fail("params: expected an object");
  if (name == "identity" || name == "transpose" || name == "trace") {
    check_keys(params, {}, "params");
    if (name == "identity") return PiMatrix::Identity();
    if (name == "transpose") return transpose_pi();
    return Vec4(1, 0, 0, 0).asDiagonal();
  }
  if (name == "example_diag") {
    check_keys(params, {"b"}, "params");
    if (!params.contains("b")) fail("example_diag: missing parameter b");
    return Vec4(1, parse_number(params["b"], "b"), 0, 0).asDiagonal();
  }
  if (name == "hadamard") {
    check_keys(params, {"z"}, "params");
    if (!params.contains("z")) fail("hadamard: missing parameter z");
    const Complex z = parse_complex(params["z"], "z");
    CMat2 a;
    a << 1.0, z, std::conj(z), 1.0;
    return schur_multiplier_pi(a);
  }
  fail("unknown family: " + name);
}

PiMatrix to_pi(const MapDocument& doc) {
  switch (doc.form) {
    case MapDocument::Form::pi: return doc.pi;
    case MapDocument::Form::choi: return pi_from_choi(doc.choi);
    case MapDocument::Form::kraus: return pi_from_kraus(doc.kraus);
    case MapDocument::Form::family: return family_pi(doc.family, doc.params);
  }
  return doc.pi;
}

Json kraus_json(const KrausSet& k) {
  Json ops = Json::array();
  for (const auto& op : k.ops) ops.push_back(complex_matrix_json(op));
  Json j = {{"kraus", std::move(ops)}, {"twist", k.twist}};
  if (!k.weights.empty()) j["weights"] = k.weights;
  return j;
}

Json decomposition_json(const DecompositionResult& r) {
  return {
      {"d1", complex_matrix_json(r.d1)},
      {"d2", complex_matrix_json(r.d2)},
      {"kraus1", kraus_json(r.kraus1)},
      {"kraus2", kraus_json(r.kraus2)},
      {"affine_residual", r.affine_residual},
      {"cone_residual", r.cone_residual},
      {"iterations", r.iterations},
      {"converged", r.converged},
      {"method", to_string(r.method)},
  };
}

Json positivity_json(const PositivityResult& r) {
  return {
      {"positive", r.positive},
      {"witness", vector_json(r.witness)},
      {"min_quadratic", r.min_quadratic},
      {"time_margin", r.time_margin},
  };
}

Json report_json(const MapReport& r) {
  Json certs = Json::object();
  certs["positivity"] = positivity_json(r.positivity);

  std::optional<Json> theta;
  if (r.theta) {
    theta = Json{{"r", r.theta->r}, {"o", real_matrix_json(r.theta->o)}, {"proper", r.theta->proper}};
  }
  certs["theta"] = optional_or_null(theta);

  std::optional<Json> proj;
  if (r.projection) {
    proj = Json{{"projection", complex_matrix_json(r.projection->projection)},
                {"direction", vector_json(r.projection->direction)},
                {"residual", r.projection->residual},
                {"grid_spacing", r.projection->grid_spacing}};
  }
  certs["idempotent_projection"] = optional_or_null(proj);

  std::optional<Json> witness;
  if (r.schwarz_witness) {
    witness = Json{{"x", complex_matrix_json(r.schwarz_witness->x)},
                   {"violation", r.schwarz_witness->violation}};
  }
  certs["schwarz_witness"] = optional_or_null(witness);

  std::optional<Json> unitary;
  if (r.unitary_certificate) {
    const auto& c = *r.unitary_certificate;
    unitary = Json{{"unitary", complex_matrix_json(c.unitary)},
                   {"source", complex_matrix_json(c.source)},
                   {"target", complex_matrix_json(c.target)},
                   {"block_datum", complex_json(c.block_datum)},
                   {"residual", c.residual},
                   {"extremality_assumed", c.extremality_assumed}};
  }
  certs["unitary_certificate"] = optional_or_null(unitary);

  Json j = {
      {"positive", r.positive},
      {"cp", r.cp},
      {"ccp", r.ccp},
      {"bistochastic", r.bistochastic},
      {"unital", r.unital},
      {"trace_preserving", r.trace_preserving},
      {"in_delta1", r.in_delta1 ? Json(*r.in_delta1) : Json(nullptr)},
      {"decomposable", r.decomposable},
      {"min_choi_eig", r.min_choi_eig},
      {"min_pt_choi_eig", r.min_pt_choi_eig},
      {"bloch_trace_norm", r.bloch_trace_norm ? Json(*r.bloch_trace_norm) : Json(nullptr)},
      {"certificates", std::move(certs)},
  };
  j["decomposition"] = r.decomposition ? decomposition_json(*r.decomposition) : Json(nullptr);
  return j;
}

ChoiPair parse_decomposition(const Json& j) {
  check_keys(j,
             {"d1", "d2", "kraus1", "kraus2", "affine_residual", "cone_residual", "iterations",
              "converged", "method"},
             "decomposition");
  if (!j.contains("d1") || !j.contains("d2")) fail("decomposition: d1 and d2 are required");
  return {parse_complex4(j["d1"], "d1"), parse_complex4(j["d2"], "d2")};
}

Json generated_json(const GeneratedItem& item) {
  MapDocument doc;
  doc.meta = {{"kind", to_string(item.kind)}, {"seed", seed_text(item.seed)}};
  if (item.op) {
    doc.form = MapDocument::Form::kraus;
    doc.kraus.ops = {*item.op};
  } else {
    doc.form = MapDocument::Form::pi;
    doc.pi = item.pi;
  }
  if (item.vector) doc.meta["vector"] = vector_json(*item.vector);
  return to_json(doc);
}

}  // namespace qck
