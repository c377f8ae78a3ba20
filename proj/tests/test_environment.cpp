#include <gtest/gtest.h>

#include "wanderer/environment.hpp"

namespace wanderer {
namespace {

EnvState env_of(bool tree, bool rock, bool sun) {
  EnvState e;
  e.set(Feature::tree, tree);
  e.set(Feature::rock, rock);
  e.set(Feature::sun, sun);
  return e;
}

TEST(ToggleNeutralFeatures, ImmobileWorldIsFrozenButDrawsAreConsumed) {
  RandomStream rng(1);
  const auto env = env_of(true, false, true);
  for (int i = 0; i < 1000; ++i) {
    ASSERT_EQ(toggle_neutral_features(env, 0.0, 0.75, rng), env);
  }
  EXPECT_EQ(rng.counter(), 3000u);
}

TEST(ToggleNeutralFeatures, ZeroCoefficientFreezes) {
  RandomStream rng(2);
  const auto env = env_of(false, true, false);
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(toggle_neutral_features(env, 0.99, 0.0, rng), env);
}

TEST(ToggleNeutralFeatures, FlipRateMatchesCoefficient) {
  RandomStream rng(3);
  const int n = 100000;
  int flips[3] = {0, 0, 0};
  const auto env = env_of(false, false, false);
  for (int i = 0; i < n; ++i) {
    const auto next = toggle_neutral_features(env, 0.8, 0.75, rng);
    for (auto f : kFeatures) flips[static_cast<int>(f)] += next.has(f);
  }
  for (int c : flips) EXPECT_NEAR(static_cast<double>(c) / n, 0.6, 0.005);
}

TEST(SampleFood, GatedOnTreeAndExploration) {
  RandomStream rng(4);
  for (int i = 0; i < 10000; ++i) {
    ASSERT_FALSE(sample_food(env_of(false, true, true), 0.9, 1.0, rng));
    ASSERT_FALSE(sample_food(env_of(true, true, true), 0.0, 1.0, rng));
  }
  EXPECT_EQ(rng.counter(), 20000u);
}

TEST(SampleFood, Rate) {
  RandomStream rng(5);
  const int n = 100000;
  int hits = 0;
  for (int i = 0; i < n; ++i) hits += sample_food(env_of(true, false, false), 0.8, 0.5, rng);
  EXPECT_NEAR(static_cast<double>(hits) / n, 0.4, 0.005);
}

TEST(SampleFood, ProbabilityClampedToOne) {
  RandomStream rng(6);
  for (int i = 0; i < 10000; ++i) ASSERT_TRUE(sample_food(env_of(true, false, false), 0.9, 5.0, rng));
}

TEST(SamplePredator, GatedOnRockIndependentOfMovement) {
  RandomStream rng(7);
  for (int i = 0; i < 10000; ++i) {
    ASSERT_FALSE(sample_predator(env_of(true, false, true), 1.0, rng));
    ASSERT_FALSE(sample_predator(env_of(true, true, true), 0.0, rng));
  }
  const int n = 100000;
  int hits = 0;
  for (int i = 0; i < n; ++i) hits += sample_predator(env_of(false, true, false), 0.3, rng);
  EXPECT_NEAR(static_cast<double>(hits) / n, 0.3, 0.005);
}

TEST(EnvironmentPhase, AlwaysFiveDraws) {
  EventSchedule schedule;
  schedule.add({1, Directive::suppress_stochastic});
  schedule.add({3, Directive::set_feature, Feature::tree, true});
  schedule.add({3, Directive::force_food});
  EnvConfig cfg{0.75, 0.5, 0.5, std::nullopt};
  RandomStream rng(8);
  EnvState env = env_of(true, true, true);
  for (int t = 1; t <= 50; ++t) {
    env = environment_phase(env, 0.7, cfg, t < 10 ? schedule : EventSchedule{}, t, rng).env;
    ASSERT_EQ(rng.counter(), 5u * t);
  }
}

TEST(ApplySchedule, EmptyScheduleIsIdentity) {
  const EnvOutcome sampled{env_of(true, true, false), true, false};
  EXPECT_EQ(apply_schedule(sampled, env_of(false, false, false), EventSchedule{}, 5), sampled);
}

TEST(ApplySchedule, ForcedFoodWithTree) {
  EventSchedule s;
  s.add({24, Directive::force_food});
  const EnvOutcome sampled{env_of(true, false, true), false, false};
  EXPECT_FALSE(apply_schedule(sampled, sampled.env, s, 23).food);
  EXPECT_TRUE(apply_schedule(sampled, sampled.env, s, 24).food);
  EXPECT_FALSE(apply_schedule(sampled, sampled.env, s, 25).food);
}

TEST(ApplySchedule, SetFeatureOverridesToggle) {
  EventSchedule s;
  s.add({30, Directive::set_feature, Feature::sun, true});
  const EnvOutcome sampled{env_of(false, false, false), false, false};
  EXPECT_TRUE(apply_schedule(sampled, sampled.env, s, 30).env.sun());
}

TEST(ApplySchedule, SuppressionDiscardsSampledOutcome) {
  EventSchedule s;
  s.add({2, Directive::suppress_stochastic});
  const auto before = env_of(true, false, false);
  const EnvOutcome sampled{env_of(false, true, true), false, true};
  EXPECT_EQ(apply_schedule(sampled, before, s, 1), sampled);
  const auto out = apply_schedule(sampled, before, s, 7);
  EXPECT_EQ(out.env, before);
  EXPECT_FALSE(out.food);
  EXPECT_FALSE(out.predator);
}

TEST(ApplySchedule, ForcedEventWithoutGateIsViolation) {
  EventSchedule food;
  food.add({4, Directive::force_food});
  const EnvOutcome no_tree{env_of(false, true, true), false, false};
  EXPECT_THROW(apply_schedule(no_tree, no_tree.env, food, 4), ScheduleViolation);

  EventSchedule pred;
  pred.add({4, Directive::force_predator});
  const EnvOutcome no_rock{env_of(true, false, true), false, false};
  EXPECT_THROW(apply_schedule(no_rock, no_rock.env, pred, 4), ScheduleViolation);

  // Legal once a same-iteration setting provides the gate.
  pred.add({4, Directive::set_feature, Feature::rock, true});
  EXPECT_TRUE(apply_schedule(no_rock, no_rock.env, pred, 4).predator);
}

TEST(EventSchedule, RejectsNonIncreasingPerType) {
  EventSchedule s;
  s.add({5, Directive::force_food});
  s.add({5, Directive::force_predator});
  s.add({3, Directive::set_feature, Feature::sun, true});
  s.add({3, Directive::set_feature, Feature::tree, true});
  EXPECT_THROW(s.add({5, Directive::force_food}), ConfigError);
  EXPECT_THROW(s.add({2, Directive::set_feature, Feature::sun, false}), ConfigError);
  EXPECT_THROW(s.add({0, Directive::force_predator}), ConfigError);
}

TEST(InitialEnvironment, FixedOrThreeDraws) {
  RandomStream rng(9);
  EnvConfig fixed;
  fixed.initial_features = env_of(true, false, false);
  EXPECT_EQ(initial_environment(fixed, rng), env_of(true, false, false));
  EXPECT_EQ(rng.counter(), 0u);
  initial_environment(EnvConfig{}, rng);
  EXPECT_EQ(rng.counter(), 3u);
}

}  // namespace
}  // namespace wanderer
