// Copyright 2026 The epicoord Authors.
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

#ifndef EPICOORD_MODEL_IO_H_
#define EPICOORD_MODEL_IO_H_

#include <optional>
#include <string>
#include <string_view>

#include "epicoord/information_structure.h"
#include "epicoord/rational.h"
#include "epicoord/world_model.h"

namespace epicoord {

// World-model spec document:
//
//   {"variables": [{"name": "x", "bias": "1/4", "gate": []}, ...],
//    "observations": [{"guard": ["b"], "player": 0, "observed": ["x"]}, ...]}
//
// Biases may be "p/q" strings, decimal strings, or JSON numbers (converted
// from their shortest decimal form). Throws SpecError.
WorldModelSpec ParseWorldModelSpec(std::string_view json_text);
WorldModelSpec LoadWorldModelSpec(const std::string& path);
std::string WorldModelSpecToJson(const WorldModelSpec& spec);

// `source` is "builtin:messenger", "builtin:loudspeaker" or a file path.
// A given `delta` replaces the bias of `x` (for builtins it is the only
// parameter; the default is 1/4).
WorldModelSpec ResolveModel(std::string_view source,
                            const std::optional<Rational>& delta);

inline const Rational kDefaultDelta{1, 4};

// World-model-free dump: {"measures": ["p/q", ...],
// "partitions": [[[0, 1], [2]], [[0], [1, 2]]], "event": [0, 2]}.
std::string StructureToJson(const InformationStructure& structure,
                            const Event& event);

}  // namespace epicoord

#endif  // EPICOORD_MODEL_IO_H_
