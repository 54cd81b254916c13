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

#include "epicoord/model_io.h"

#include <string>

#include "doctest.h"
#include "json.hpp"
#include "test_util.h"

namespace epicoord {
namespace {

using testing::Q;

const std::string kDataDir = EPICOORD_TEST_DATA_DIR;

TEST_CASE("spec file matches the builtin messenger") {
  const WorldModelSpec spec = LoadWorldModelSpec(kDataDir + "/messenger.json");
  CHECK(spec == BuiltinMessenger(Q(1, 4)));
}

TEST_CASE("spec JSON round-trips") {
  for (const auto& spec : {BuiltinMessenger(Q(1, 3)), BuiltinLoudspeaker(Q(7, 10))}) {
    CHECK(ParseWorldModelSpec(WorldModelSpecToJson(spec)) == spec);
  }
}

TEST_CASE("numeric biases convert exactly") {
  const WorldModelSpec spec = ParseWorldModelSpec(
      R"({"variables": [{"name": "x", "bias": 0.1}], "observations": []})");
  CHECK(spec.variables[0].bias == Q(1, 10));
  CHECK(spec.variables[0].gate.empty());
}

TEST_CASE("malformed spec documents") {
  for (const char* text : {
           "not json",
           "{}",
           R"({"variables": 3})",
           R"({"variables": [{"bias": "1/2"}]})",
           R"({"variables": [{"name": "x"}]})",
           R"({"variables": [{"name": "x", "bias": "half"}]})",
           R"({"variables": [{"name": "x", "bias": "1/2"}], "observations": [{"guard": [], "observed": ["x"]}]})",
           R"({"variables": [{"name": "x", "bias": "1/2", "gate": "y"}]})",
           R"({"variables": [{"name": "x", "bias": "1/2"}], "observations": [{"guard": ["z"], "player": 0, "observed": ["x"]}]})",
       }) {
    CAPTURE(text);
    CHECK_THROWS_AS(ParseWorldModelSpec(text), SpecError);
  }
  CHECK_THROWS_AS(LoadWorldModelSpec(kDataDir + "/no_such_file.json"), SpecError);
}

TEST_CASE("model sources") {
  CHECK(ResolveModel("builtin:messenger", std::nullopt) == BuiltinMessenger(kDefaultDelta));
  CHECK(ResolveModel("builtin:loudspeaker", Q(1, 2)) == BuiltinLoudspeaker(Q(1, 2)));
  CHECK_THROWS_AS(ResolveModel("builtin:semaphore", std::nullopt), SpecError);
  CHECK_THROWS_AS(ResolveModel("builtin:messenger", Q(2)), SpecError);

  const WorldModelSpec from_file = ResolveModel(kDataDir + "/messenger.json", Q(1, 3));
  CHECK(from_file == BuiltinMessenger(Q(1, 3)));
}

TEST_CASE("structure dump") {
  const WorldModel& m = testing::Loudspeaker();
  const auto doc = nlohmann::json::parse(StructureToJson(m.structure, m.CoordinationEvent()));
  CHECK(doc["states"] == 4);
  CHECK(doc["measures"] == nlohmann::json({"3/8", "3/8", "1/8", "1/8"}));
  CHECK(doc["partitions"][0] == nlohmann::json({{0, 2}, {1}, {3}}));
  CHECK(doc["event"] == nlohmann::json({2, 3}));
}

}  // namespace
}  // namespace epicoord
