#include <doctest.h>

#include <set>

#include "majority/landscape.hpp"
#include "support.hpp"

using namespace majority;

TEST_CASE("one-bit neighborhood") {
  const auto nb = neighbors(Rule::zeros());
  REQUIRE(nb.size() == kTableSize);
  std::set<std::string> distinct;
  for (std::size_t k = 0; k < nb.size(); ++k) {
    CHECK(nb[k].count() == 1);
    CHECK(hamming_distance(nb[k], Rule::zeros()) == 1);
    CHECK(neighbors(nb[k])[k] == Rule::zeros());
    distinct.insert(format_rule_hex(nb[k]));
  }
  CHECK(distinct.size() == kTableSize);
}

TEST_CASE("neutral degree") {
  FitnessCache cache(1000, 5);
  const int d = neutral_degree(Rule::zeros(), cache);
  CHECK(d >= 70);
  CHECK(d <= 128);
  CHECK(neutral_degree(Rule::zeros(), 1000, 5) == d);
}

TEST_CASE("expanding neutral walk") {
  FitnessCache cache(300, 8);
  Rng rng(1);
  const auto walk = expanding_neutral_walk(Rule::zeros(), cache, rng, {NeutralityCheck::AllVisited, true});
  CHECK(walk.length() <= kTableSize);
  CHECK(walk.length() > 0);
  REQUIRE(walk.degrees.size() == walk.rules.size());
  for (std::size_t i = 0; i < walk.rules.size(); ++i) {
    CHECK(walk.distances[i] == i);
    CHECK(hamming_distance(walk.rules[i], Rule::zeros()) == i);
    CHECK(walk.fitnesses[i] == cache.evaluate(walk.rules[i]));
    for (std::size_t j = 0; j < i; ++j) CHECK(is_neutral(walk.fitnesses[i], walk.fitnesses[j]));
  }
  Rng again(1);
  const auto replay = expanding_neutral_walk(Rule::zeros(), cache, again, {NeutralityCheck::AllVisited, true});
  CHECK(replay.rules == walk.rules);
  CHECK(replay.degrees == walk.degrees);
}

TEST_CASE("random neutral walk") {
  FitnessCache cache(300, 8);
  Rng rng(2);
  const auto walk = random_neutral_walk(Rule::zeros(), 15, cache, rng);
  CHECK(walk.length() <= 15);
  REQUIRE(walk.degrees.size() == walk.rules.size());
  std::set<std::string> seen;
  for (std::size_t i = 0; i < walk.rules.size(); ++i) {
    CHECK(walk.degrees[i] >= 0);
    CHECK(walk.degrees[i] <= 128);
    if (i > 0) {
      CHECK(hamming_distance(walk.rules[i], walk.rules[i - 1]) == 1);
      CHECK(is_neutral(walk.fitnesses[i], walk.fitnesses[i - 1]));
    }
    seen.insert(format_rule_hex(walk.rules[i]));
  }
  CHECK(seen.size() == walk.rules.size());
  CHECK_THROWS_AS(random_neutral_walk(Rule::zeros(), 0, cache, rng), std::invalid_argument);
}

TEST_CASE("current-only walks need neutrality to the last step only") {
  FitnessCache cache(200, 4);
  Rng rng(6);
  const auto walk = random_neutral_walk(test_support::blok("GKL"), 10, cache, rng, {NeutralityCheck::CurrentOnly, false});
  for (std::size_t i = 1; i < walk.rules.size(); ++i) CHECK(is_neutral(walk.fitnesses[i], walk.fitnesses[i - 1]));
}

TEST_CASE("autocorrelation estimator") {
  std::vector<double> alternating;
  for (int i = 0; i < 100; ++i) alternating.push_back(i % 2);
  const auto r = autocorrelation(alternating, 3);
  CHECK(r[0] == doctest::Approx(1.0));
  CHECK(r[1] == doctest::Approx(-99.0 / 100.0));
  CHECK(r[2] == doctest::Approx(98.0 / 100.0));

  std::vector<double> ramp;
  for (int i = 0; i < 50; ++i) ramp.push_back(i);
  CHECK(autocorrelation(ramp, 1)[1] > 0.9);

  CHECK_THROWS_AS(autocorrelation({1.0, 2.0}, 2), std::invalid_argument);
  CHECK_THROWS_AS(autocorrelation(std::vector<double>(10, 3.0), 1), std::domain_error);

  const std::vector<std::vector<double>> series{alternating, std::vector<double>(100, 7.0)};
  CHECK(mean_autocorrelation(series, 1)[1] == doctest::Approx(r[1]));
  CHECK_THROWS_AS(mean_autocorrelation({std::vector<double>(10, 1.0)}, 1), std::domain_error);
  CHECK_THROWS_AS(mean_autocorrelation({}, 1), std::invalid_argument);
}

TEST_CASE("histogram") {
  Histogram h = make_histogram(10);
  add_sample(h, 0.0);
  add_sample(h, 0.55);
  add_sample(h, 1.0);
  CHECK(h.total == 3);
  CHECK(h.zero_count == 1);
  CHECK(h.counts[0] == 1);
  CHECK(h.counts[5] == 1);
  CHECK(h.counts[9] == 1);
  CHECK(h.max_value() == 1.0);
  CHECK(h.count_between(0.5, 0.6) == 1);
  CHECK_THROWS_AS(make_histogram(0), std::invalid_argument);
}

TEST_CASE("density of states samplers") {
  CHECK_THROWS_AS(dos_uniform(0, 100, 1), std::invalid_argument);
  const auto one = dos_uniform(1, 100, 1);
  CHECK(one.total == 1);

  const auto uniform = dos_uniform(300, 200, 3);
  CHECK(uniform.total == 300);
  CHECK(uniform.zero_fraction() > 0.9);
  CHECK(dos_uniform(300, 200, 3).samples == uniform.samples);

  MetropolisParams mh;
  mh.burn_in = 200;
  mh.thinning = 5;
  const auto metropolis = dos_metropolis(300, 200, mh, 3);
  CHECK(metropolis.total == 300);
  CHECK(metropolis.zero_fraction() < uniform.zero_fraction());
  CHECK(metropolis.acceptance_rate > 0.0);
  CHECK(dos_metropolis(300, 200, mh, 3).samples == metropolis.samples);

  DosOptions olympus;
  olympus.subspace = OlympusTemplate::parse(kPublishedOlympusTemplate);
  const auto sub = dos_uniform(300, 200, 3, olympus);
  CHECK(sub.zero_fraction() < uniform.zero_fraction());

  MetropolisParams hot = mh;
  hot.temperature = 1e9;
  CHECK(dos_metropolis(100, 100, hot, 3).acceptance_rate > 0.99);
  MetropolisParams bad = mh;
  bad.temperature = 0.0;
  CHECK_THROWS_AS(dos_metropolis(10, 100, bad, 3), std::invalid_argument);
}
