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

// JSON documents read and written by the command-line tool.
//
//   channel:  {"dim": D, "effects": [{"index": "01", "re": [[..]], "im": [[..]]}]}
//   code:     {"label": s, "qubits": n,
//              "logical": [{"terms": [{"basis": "0000", "re": x, "im": y}]}]}
//   bosonic:  {"modes": m,
//              "codewords": [{"states": [{"weight": mu, "occupations": [..]}]}]}
//
// Output objects use nlohmann::ordered_json so keys keep a fixed order.

#ifndef AQEC_IO_HPP
#define AQEC_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "aqec/analyzer.hpp"
#include "aqec/channel.hpp"
#include "aqec/code_space.hpp"

namespace aqec::io {

using Json = nlohmann::ordered_json;

/// Parses a file; throws ParseError on I/O or syntax errors.
Json load_json_file(const std::string& path);

Json channel_to_json(const KrausChannel& channel);
/// The channel is flagged trace-preserving when its effects are complete
/// within tol.tp. Throws ParseError on schema violations.
KrausChannel channel_from_json(const Json& doc);

Json code_to_json(const CodeSpace& code);
/// Codewords are normalized; orthonormality is audited, not enforced.
CodeSpace code_from_json(const Json& doc);

Json bosonic_to_json(const BosonicCodeSpec& spec);
BosonicCodeSpec bosonic_from_json(const Json& doc);

Json matrix_to_json(const CMatrix& m);  // {"re": [[..]], "im": [[..]]}

Json report_to_json(const CriteriaReport& report, const std::vector<std::string>& notes = {});
Json balance_to_json(const BalanceReport& report, double gamma);

}  // namespace aqec::io

#endif  // AQEC_IO_HPP
