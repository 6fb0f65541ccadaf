// Copyright 2026 The AQEC Authors
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

#include "aqec/io.hpp"

#include <cmath>
#include <fstream>

#include "aqec/errors.hpp"
#include "aqec/tolerances.hpp"

namespace aqec::io {

namespace {

// Wraps nlohmann accessors so schema problems surface as ParseError.
template <typename T>
T field(const Json& doc, const char* key, const std::string& where) {
  if (!doc.is_object() || !doc.contains(key)) throw ParseError(where + ": missing \"" + key + "\"");
  try {
    return doc.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(where + ": bad \"" + key + "\": " + e.what());
  }
}

const Json& array_field(const Json& doc, const char* key, const std::string& where) {
  if (!doc.is_object() || !doc.contains(key) || !doc.at(key).is_array()) {
    throw ParseError(where + ": \"" + key + "\" must be an array");
  }
  return doc.at(key);
}

Json real_rows(const CMatrix& m, bool imaginary) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(imaginary ? m(r, c).imag() : m(r, c).real());
    rows.push_back(std::move(row));
  }
  return rows;
}

// NaN and infinities have no JSON spelling; they become null.
Json number(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

}  // namespace

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

Json matrix_to_json(const CMatrix& m) {
  Json out = Json::object();
  out["re"] = real_rows(m, false);
  out["im"] = real_rows(m, true);
  return out;
}

// ---------------------------------------------------------------------------
// Channels

Json channel_to_json(const KrausChannel& channel) {
  Json out = Json::object();
  out["dim"] = channel.dim();
  Json effects = Json::array();
  for (const auto& e : channel.effects()) {
    Json entry = Json::object();
    entry["index"] = e.index;
    entry["re"] = real_rows(e.matrix, false);
    entry["im"] = real_rows(e.matrix, true);
    effects.push_back(std::move(entry));
  }
  out["effects"] = std::move(effects);
  return out;
}

KrausChannel channel_from_json(const Json& doc) {
  const auto dim = field<std::size_t>(doc, "dim", "channel");
  if (dim == 0 || dim > kMaxDim) throw ParseError("channel: dim must be in [1, 64]");
  std::vector<Effect> effects;
  for (const auto& entry : array_field(doc, "effects", "channel")) {
    const std::string where = "channel effect " + std::to_string(effects.size());
    Effect e{field<std::string>(entry, "index", where), CMatrix(dim, dim)};
    const auto re = field<std::vector<std::vector<double>>>(entry, "re", where);
    const auto im = field<std::vector<std::vector<double>>>(entry, "im", where);
    if (re.size() != dim || im.size() != dim) throw ParseError(where + ": expected " + std::to_string(dim) + " rows");
    for (std::size_t r = 0; r < dim; ++r) {
      if (re[r].size() != dim || im[r].size() != dim) throw ParseError(where + ": ragged row " + std::to_string(r));
      for (std::size_t c = 0; c < dim; ++c) e.matrix(r, c) = Complex(re[r][c], im[r][c]);
    }
    effects.push_back(std::move(e));
  }
  if (effects.empty()) throw ParseError("channel: no effects");
  KrausChannel probe(dim, effects, /*trace_preserving=*/false);
  const bool complete = probe.completeness_defect() <= tolerances().tp;
  return KrausChannel(dim, std::move(effects), complete);
}

// ---------------------------------------------------------------------------
// Codes

Json code_to_json(const CodeSpace& code) {
  const std::size_t n = code.num_qubits();
  if (n == 0) throw DomainError("only qubit codes have a JSON form");
  Json out = Json::object();
  out["label"] = code.label();
  out["qubits"] = n;
  Json logical = Json::array();
  for (std::size_t l = 0; l < code.logical_dim(); ++l) {
    const CVector word = code.codeword(l);
    Json terms = Json::array();
    for (std::size_t i = 0; i < word.dim(); ++i) {
      if (word[i] == Complex{}) continue;
      Json term = Json::object();
      term["basis"] = basis_label(i, n);
      term["re"] = word[i].real();
      term["im"] = word[i].imag();
      terms.push_back(std::move(term));
    }
    Json entry = Json::object();
    entry["terms"] = std::move(terms);
    logical.push_back(std::move(entry));
  }
  out["logical"] = std::move(logical);
  return out;
}

CodeSpace code_from_json(const Json& doc) {
  const auto label = field<std::string>(doc, "label", "code");
  const auto qubits = field<std::size_t>(doc, "qubits", "code");
  std::vector<std::vector<BasisTerm>> codewords;
  for (const auto& entry : array_field(doc, "logical", "code")) {
    const std::string where = "code logical state " + std::to_string(codewords.size());
    std::vector<BasisTerm> terms;
    for (const auto& term : array_field(entry, "terms", where)) {
      const double im = term.contains("im") ? field<double>(term, "im", where) : 0.0;
      terms.push_back({field<std::string>(term, "basis", where), Complex(field<double>(term, "re", where), im)});
    }
    codewords.push_back(std::move(terms));
  }
  if (codewords.empty()) throw ParseError("code: no logical states");
  try {
    return CodeSpace::from_terms(label, qubits, codewords, /*require_orthonormal=*/false);
  } catch (const Error& e) {
    throw ParseError(std::string("code: ") + e.what());
  }
}

Json bosonic_to_json(const BosonicCodeSpec& spec) {
  Json out = Json::object();
  out["modes"] = spec.mode_count;
  Json words = Json::array();
  for (const auto& word : spec.codewords) {
    Json states = Json::array();
    for (const auto& qcs : word.states) {
      Json s = Json::object();
      s["weight"] = qcs.weight;
      s["occupations"] = qcs.occupations;
      states.push_back(std::move(s));
    }
    Json entry = Json::object();
    entry["states"] = std::move(states);
    words.push_back(std::move(entry));
  }
  out["codewords"] = std::move(words);
  return out;
}

BosonicCodeSpec bosonic_from_json(const Json& doc) {
  BosonicCodeSpec spec;
  spec.mode_count = field<std::size_t>(doc, "modes", "bosonic spec");
  for (const auto& entry : array_field(doc, "codewords", "bosonic spec")) {
    const std::string where = "bosonic codeword " + std::to_string(spec.codewords.size());
    BosonicCodeword word;
    for (const auto& s : array_field(entry, "states", where)) {
      word.states.push_back({field<double>(s, "weight", where), field<std::vector<int>>(s, "occupations", where)});
    }
    spec.codewords.push_back(std::move(word));
  }
  try {
    spec.validate();
  } catch (const DomainError& e) {
    throw ParseError(std::string("bosonic spec: ") + e.what());
  }
  return spec;
}

// ---------------------------------------------------------------------------
// Reports

Json report_to_json(const CriteriaReport& report, const std::vector<std::string>& notes) {
  Json out = Json::object();
  out["code"] = report.code_label;
  out["gamma"] = report.gamma;
  out["order_t"] = report.order_t;
  out["c_max"] = report.c_max;
  out["exact_ok"] = report.exact_ok;
  out["approx_ok"] = report.approx_ok;

  Json exact = Json::object();
  exact["worst_defect"] = report.exact.worst_defect;
  exact["worst_pair"] = report.exact.worst_pair;
  exact["worst_diagonal_spread"] = report.exact.worst_diagonal_spread;
  exact["worst_diagonal_index"] = report.exact.worst_diagonal_index;
  out["exact"] = std::move(exact);

  out["worst_deformation"] = report.approx.worst_deformation;
  out["worst_deformation_index"] = report.approx.worst_deformation_index;
  out["deformation_bound"] = report.approx.deformation_bound;
  out["worst_orthogonality_defect"] = report.approx.worst_orthogonality_defect;

  if (report.ratio) {
    Json ratio = Json::object();
    ratio["deformation_at_gamma"] = report.ratio->deformation_at_gamma;
    ratio["deformation_at_half_gamma"] = report.ratio->deformation_at_half;
    ratio["ratio"] = number(report.ratio->ratio);
    ratio["expected"] = report.ratio->expected;
    ratio["ok"] = report.ratio->ok;
    out["ratio_test"] = std::move(ratio);
  } else {
    out["ratio_test"] = nullptr;
  }

  out["p_det_min"] = report.detection.p_det_min;
  out["p_sum"] = report.detection.p_sum;
  out["fidelity_lower_bound"] = report.detection.p_lambda_sum;
  if (report.order_estimate) {
    Json fit = Json::object();
    fit["exponent"] = number(report.order_estimate->exponent);
    fit["coefficient"] = number(report.order_estimate->coefficient);
    out["order_estimate"] = std::move(fit);
  } else {
    out["order_estimate"] = nullptr;
  }

  out["reversible_subset"] = report.subset.indices;
  out["subset_threshold"] = report.subset.threshold;
  out["orthonormality_defect"] = report.orthonormality_defect;
  out["warnings"] = report.warnings;
  out["notes"] = notes;

  Json effects = Json::array();
  for (const auto& a : report.analyses) {
    Json row = Json::object();
    row["index"] = a.index;
    row["p"] = a.p;
    row["lambda"] = a.lambda;
    row["residue_norm"] = a.residue_norm;
    row["reversible"] = report.in_subset(a.index);
    effects.push_back(std::move(row));
  }
  out["effects"] = std::move(effects);
  return out;
}

Json balance_to_json(const BalanceReport& report, double gamma) {
  Json out = Json::object();
  out["gamma"] = gamma;
  out["balanced"] = report.balanced;
  out["exact_constant"] = report.exact_constant;
  out["exact_sums"] = report.exact_sums;
  out["loss_sums"] = report.loss_sums;
  out["avg_excitation"] = report.avg_excitation;
  return out;
}

}  // namespace aqec::io
