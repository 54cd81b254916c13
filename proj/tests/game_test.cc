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

#include "epicoord/game.h"

#include <random>
#include <stdexcept>

#include "doctest.h"
#include "epicoord/oracle.h"
#include "test_util.h"

namespace epicoord {
namespace {

using testing::At;
using testing::Loudspeaker;
using testing::Messenger;
using testing::Q;

GameInstance Game(const WorldModel& m, const PayoffParams& payoffs = PayoffCondition1()) {
  return {m.structure, payoffs, m.CoordinationEvent()};
}

// Four equally likely states, x = 1 on the first two. Player 0 cannot tell
// states 0, 1 and 2 apart, so a hint lifts its belief to 2/3.
GameInstance NoisyGame() {
  InformationStructure s({Q(1, 4), Q(1, 4), Q(1, 4), Q(1, 4)},
                         {Partition::FromBlocks(4, {{0, 1, 2}, {3}}),
                          Partition::FromBlocks(4, {{0, 1, 2, 3}})});
  return {s, PayoffCondition1(), Event::FromMembers(4, std::vector<int>{0, 1})};
}

TEST_CASE("expected utility of pure profiles") {
  const GameInstance g = Game(Loudspeaker());
  const int w = At(Loudspeaker(), "1,1");
  const Policy always_a = Policy::Constant(4, 1);
  const Policy always_b = Policy::Constant(4, 0);
  CHECK(ExpectedUtility(g, 0, w, 1, always_a) == g.payoffs.a);
  CHECK(ExpectedUtility(g, 0, w, 1, always_b) == g.payoffs.b);
  CHECK(ExpectedUtility(g, 0, w, 0, always_a) == g.payoffs.c);
  // Block {(0,0), (1,0)}: x = 1 with belief 1/4.
  const int dark = At(Loudspeaker(), "1,0");
  CHECK(ExpectedUtility(g, 1, dark, 1, always_a) == Q(1, 4) * g.payoffs.a + Q(3, 4) * g.payoffs.d);
}

TEST_CASE("the safe action always earns c") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto inst = oracle::RandomStructure({seed, 8, oracle::MeasureStyle::kRandom});
    GameInstance g{inst.structure, PayoffCondition1(), inst.target};
    std::mt19937_64 rng(seed);
    const Policy companion = Policy::FromFunction(8, [&](Player, int) {
      return Q(static_cast<long>(rng() % 5), 4);
    });
    for (Player i = 0; i < kNumPlayers; ++i) {
      for (int w = 0; w < 8; ++w) CHECK(ExpectedUtility(g, i, w, 0, companion) == g.payoffs.c);
    }
  }
}

TEST_CASE("expected utility is linear in both strategies") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto inst = oracle::RandomStructure({seed, 8, oracle::MeasureStyle::kRandom});
    GameInstance g{inst.structure, PayoffParams::Parse("3,1/2,2,1"), inst.target};
    std::mt19937_64 rng(seed + 1000);
    auto prob = [&] { return Q(static_cast<long>(rng() % 9), 8); };
    std::vector<Rational> u(8), v(8);
    for (int w = 0; w < 8; ++w) {
      u[w] = prob();
      v[w] = prob();
    }
    const Rational lambda = prob();
    const Policy pu = Policy::FromFunction(8, [&](Player, int w) { return u[w]; });
    const Policy pv = Policy::FromFunction(8, [&](Player, int w) { return v[w]; });
    const Policy mix = Policy::FromFunction(
        8, [&](Player, int w) { return Rational(lambda * u[w] + (1 - lambda) * v[w]); });
    const Rational x = prob();
    const Rational y = prob();
    for (Player i = 0; i < kNumPlayers; ++i) {
      for (int w = 0; w < 8; ++w) {
        CHECK(ExpectedUtility(g, i, w, x, mix) ==
              lambda * ExpectedUtility(g, i, w, x, pu) +
                  (1 - lambda) * ExpectedUtility(g, i, w, x, pv));
        CHECK(ExpectedUtility(g, i, w, lambda * x + (1 - lambda) * y, pu) ==
              lambda * ExpectedUtility(g, i, w, x, pu) +
                  (1 - lambda) * ExpectedUtility(g, i, w, y, pu));
      }
    }
  }
}

TEST_CASE("noiseless messages") {
  CHECK(NoiselessCheck(Game(Messenger())));
  CHECK(NoiselessCheck(Game(Loudspeaker())));
  CHECK_FALSE(NoiselessCheck(NoisyGame()));
}

TEST_CASE("policies") {
  const auto& s = Loudspeaker().structure;
  CHECK(Policy::Constant(4, Q(1, 3)).IsMeasurable(s));
  CHECK_FALSE(Policy::FromFunction(4, [](Player, int w) { return Rational(w / 2); })
                  .IsMeasurable(s));
  const Policy rational = RationalPBeliefPolicy(Game(Loudspeaker()));
  CHECK(rational.IsMeasurable(s));
  CHECK(rational.ProbA(0, At(Loudspeaker(), "1,1")) == 1);
  CHECK(rational.ProbA(1, At(Loudspeaker(), "1,0")) == 0);
}

TEST_CASE("equilibrium verification") {
  const EquilibriumReport messenger = VerifyEquilibrium(Game(Messenger()));
  CHECK(messenger.status == EquilibriumReport::Status::kPass);
  CHECK(messenger.violations.empty());
  CHECK(messenger.checked == 36);

  const EquilibriumReport loud = VerifyEquilibrium(Game(Loudspeaker()));
  CHECK(loud.status == EquilibriumReport::Status::kPass);
  CHECK(loud.checked == 8);

  const WorldModel likely = BuildWorldModel(BuiltinLoudspeaker(ParseRational("0.95")));
  const EquilibriumReport skipped = VerifyEquilibrium(Game(likely));
  CHECK(skipped.status == EquilibriumReport::Status::kNotApplicable);
  CHECK(StatusName(skipped.status) == "N-A");
  CHECK(skipped.reason.find("10/11") != std::string::npos);

  CHECK(VerifyEquilibrium(NoisyGame()).status == EquilibriumReport::Status::kNotApplicable);
}

TEST_CASE("equilibrium holds across risk levels and priors") {
  for (const char* delta : {"1/10", "1/4", "1/2"}) {
    for (const char* p_star : {"3/5", "4/5", "19/20"}) {
      const Rational d = ParseRational(delta);
      for (const auto& spec : {BuiltinMessenger(d), BuiltinLoudspeaker(d)}) {
        const EquilibriumReport r =
            VerifyEquilibrium(Game(BuildWorldModel(spec), RiskPayoffs(ParseRational(p_star))));
        CAPTURE(delta);
        CAPTURE(p_star);
        CHECK(r.status == EquilibriumReport::Status::kPass);
      }
    }
  }
}

TEST_CASE("game validation") {
  GameInstance g = Game(Loudspeaker());
  CHECK_NOTHROW(g.Validate());
  g.target = Event(3);
  CHECK_THROWS_AS(g.Validate(), std::invalid_argument);
  GameInstance bad = Game(Loudspeaker(), {Q(1), Q(0), Q(2), Q(0)});
  CHECK_THROWS_AS(bad.Validate(), std::invalid_argument);
}

}  // namespace
}  // namespace epicoord
