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

#ifndef QCK_DOCUMENT_HPP
#define QCK_DOCUMENT_HPP

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "qck/batch.hpp"
#include "qck/classify.hpp"
#include "qck/decompose.hpp"

namespace qck {

using Json = nlohmann::json;

/// Malformed or inconsistent input document.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A map description. Exactly one of "pi", "choi", "kraus", "family" is
/// present. Complex numbers are [re, im] pairs, matrices are row-major
/// nested arrays.
///
///   {"pi": [[...4], ...4]}
///   {"choi": [[[re, im], ...4], ...4]}            Hermitian to 1e-9
///   {"kraus": [[[[re, im], [re, im]], [...]], ...], "twist": false,
///    "weights": [...]}                             twist, weights optional
///   {"family": "example_diag", "params": {"b": 0.5}}
///
/// Families: identity, transpose, trace, example_diag (b), hadamard
/// (z = [re, im], multiplier [[1, z], [conj z, 1]]). An optional "meta"
/// object is carried through untouched.
struct MapDocument {
  enum class Form { pi, choi, kraus, family };

  Form form = Form::pi;
  PiMatrix pi = PiMatrix::Zero();
  ChoiMatrix choi = ChoiMatrix::Zero();
  KrausSet kraus;
  std::string family;
  Json params = Json::object();
  Json meta;  // null when absent
};

MapDocument parse_map_document(const Json& j);
Json to_json(const MapDocument& doc);

/// Throws ParseError for unknown families or bad parameters.
PiMatrix to_pi(const MapDocument& doc);
PiMatrix family_pi(const std::string& name, const Json& params);

Json real_matrix_json(const Eigen::MatrixXd& m);
Json complex_matrix_json(const Eigen::MatrixXcd& m);
Json vector_json(const Eigen::VectorXd& v);
Json complex_json(Complex z);

Mat4 parse_real4(const Json& j, const char* what);
CMat4 parse_complex4(const Json& j, const char* what);
CMat2 parse_complex2(const Json& j, const char* what);
Complex parse_complex(const Json& j, const char* what);

Json kraus_json(const KrausSet& k);
Json decomposition_json(const DecompositionResult& r);
Json report_json(const MapReport& r);
Json positivity_json(const PositivityResult& r);

struct ChoiPair {
  ChoiMatrix d1;
  ChoiMatrix d2;
};

/// Reads d1 and d2 out of a decomposition document. Other keys written by
/// decomposition_json are accepted and ignored; anything else is an error.
ChoiPair parse_decomposition(const Json& j);

/// Document emitted by the generate command for one item.
Json generated_json(const GeneratedItem& item);

}  // namespace qck

#endif  // QCK_DOCUMENT_HPP
