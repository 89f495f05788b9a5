// Copyright 2026 The distdet Authors
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


#pragma once

#include <string>

#include "json.hpp"

#include "distdet/closed_form.hpp"
#include "distdet/matrix.hpp"
#include "distdet/verify.hpp"

namespace distdet {

// Big integers are serialised as decimal strings so no value is ever rounded.

inline nlohmann::json to_json(const DetCof& dc) {
  return {{"det", dc.det.get_str()}, {"cof", dc.cof.get_str()}};
}

/// One JSON-lines record of a verification run.
inline nlohmann::json to_json(const VerifyReport& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["edges"] = r.edges;
  j["blocks"] = r.blocks;
  j["oracle"] = to_json(r.oracle);
  j["ghh"] = to_json(r.ghh);
  j["closed"] = r.closed ? to_json(*r.closed) : nlohmann::json(nullptr);
  j["closed_note"] = r.closed_note.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.closed_note);
  j["pass"] = r.pass;
  j["micros"] = {{"oracle", r.oracle_micros}, {"closed", r.closed_micros}};
  return j;
}

}  // namespace distdet
