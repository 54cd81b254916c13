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

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace epicoord {
namespace {

using json = nlohmann::ordered_json;

Rational BiasFromJson(const json& value, const std::string& variable) {
  try {
    if (value.is_string()) return ParseRational(value.get<std::string>());
    if (value.is_number_integer()) return Rational(value.get<long>());
    if (value.is_number()) {
      char buffer[64];
      auto [end, ec] =
          std::to_chars(buffer, buffer + sizeof(buffer), value.get<double>());
      return ParseRational(std::string_view(buffer, end - buffer));
    }
  } catch (const ParseError& e) {
    throw SpecError("variable '" + variable + "': " + e.what());
  }
  throw SpecError("variable '" + variable + "': bias must be a string or number");
}

std::vector<std::string> NameList(const json& object, const char* key,
                                  const std::string& where) {
  if (!object.contains(key)) return {};
  const json& list = object.at(key);
  if (!list.is_array()) throw SpecError(where + ": '" + key + "' must be an array");
  std::vector<std::string> out;
  for (const auto& item : list) {
    if (!item.is_string()) {
      throw SpecError(where + ": '" + key + "' must contain variable names");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

WorldModelSpec ParseWorldModelSpec(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw SpecError(std::string("malformed world-model JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("variables") ||
      !doc.at("variables").is_array()) {
    throw SpecError("world-model JSON needs a 'variables' array");
  }
  WorldModelSpec spec;
  for (const auto& v : doc.at("variables")) {
    if (!v.is_object() || !v.contains("name") || !v.at("name").is_string()) {
      throw SpecError("every variable needs a string 'name'");
    }
    VariableSpec var;
    var.name = v.at("name").get<std::string>();
    if (!v.contains("bias")) throw SpecError("variable '" + var.name + "' has no bias");
    var.bias = BiasFromJson(v.at("bias"), var.name);
    var.gate = NameList(v, "gate", "variable '" + var.name + "'");
    spec.variables.push_back(std::move(var));
  }
  if (doc.contains("observations")) {
    if (!doc.at("observations").is_array()) {
      throw SpecError("'observations' must be an array");
    }
    int index = 0;
    for (const auto& o : doc.at("observations")) {
      const std::string where = "observation rule " + std::to_string(index++);
      if (!o.is_object() || !o.contains("player") ||
          !o.at("player").is_number_integer()) {
        throw SpecError(where + " needs an integer 'player'");
      }
      ObservationRule rule;
      rule.player = o.at("player").get<int>();
      rule.guard = NameList(o, "guard", where);
      rule.observed = NameList(o, "observed", where);
      spec.observations.push_back(std::move(rule));
    }
  }
  ValidateSpec(spec);
  return spec;
}

WorldModelSpec LoadWorldModelSpec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open world-model file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseWorldModelSpec(buffer.str());
}

std::string WorldModelSpecToJson(const WorldModelSpec& spec) {
  json doc;
  doc["variables"] = json::array();
  for (const auto& v : spec.variables) {
    doc["variables"].push_back(
        {{"name", v.name}, {"bias", FormatRational(v.bias)}, {"gate", v.gate}});
  }
  doc["observations"] = json::array();
  for (const auto& r : spec.observations) {
    doc["observations"].push_back(
        {{"guard", r.guard}, {"player", r.player}, {"observed", r.observed}});
  }
  return doc.dump(2);
}

WorldModelSpec ResolveModel(std::string_view source,
                            const std::optional<Rational>& delta) {
  const Rational d = delta.value_or(kDefaultDelta);
  if (source == "builtin:messenger") return BuiltinMessenger(d);
  if (source == "builtin:loudspeaker") return BuiltinLoudspeaker(d);
  if (source.starts_with("builtin:")) {
    throw SpecError("unknown builtin model '" + std::string(source) +
                    "' (expected builtin:messenger or builtin:loudspeaker)");
  }
  WorldModelSpec spec = LoadWorldModelSpec(std::string(source));
  ValidateSpec(spec);
  if (delta) {
    if (*delta < 0 || *delta > 1) {
      throw SpecError("delta must lie in [0, 1], got " + FormatRational(*delta));
    }
    spec.variables[*spec.VariableIndex(kCoordinationVariable)].bias = *delta;
  }
  return spec;
}

std::string StructureToJson(const InformationStructure& structure,
                            const Event& event) {
  json doc;
  doc["states"] = structure.num_states();
  doc["measures"] = json::array();
  for (const auto& m : structure.measures()) doc["measures"].push_back(FormatRational(m));
  doc["partitions"] = json::array();
  for (Player p = 0; p < kNumPlayers; ++p) {
    doc["partitions"].push_back(structure.partition(p).blocks());
  }
  doc["event"] = event.Members();
  return doc.dump();
}

}  // namespace epicoord
