#include <doctest.h>

#include <algorithm>
#include <set>

#include "majority/blok.hpp"
#include "majority/ca.hpp"
#include "majority/evaluation.hpp"
#include "majority/symmetry.hpp"
#include "support.hpp"

using namespace majority;
using test_support::random_config;
using test_support::random_rule;

TEST_CASE("symmetries are commuting involutions") {
  Rng rng(31);
  for (int i = 0; i < 100; ++i) {
    const Rule r = random_rule(rng);
    CHECK(s01(s01(r)) == r);
    CHECK(srl(srl(r)) == r);
    CHECK(s01(srl(r)) == srl(s01(r)));
  }
  CHECK(s01(Rule::zeros()) == Rule::ones());
}

TEST_CASE("code fixed points") {
  int rev_fixed = 0;
  int s01_fixed = 0;
  for (unsigned k = 0; k < kTableSize; ++k) {
    rev_fixed += reverse_code(k) == k;
    s01_fixed += k == kTableSize - 1 - k;
  }
  CHECK(rev_fixed == 16);
  CHECK(s01_fixed == 0);
}

TEST_CASE("symmetries conjugate the dynamics") {
  Rng rng(37);
  for (int i = 0; i < 30; ++i) {
    const Rule r = random_rule(rng);
    const Configuration c = random_config(rng);
    CHECK(step(s01(r), c.complemented()) == step(r, c).complemented());
    CHECK(step(srl(r), c.reversed()) == step(r, c).reversed());
  }
}

TEST_CASE("symmetric variants") {
  CHECK(symmetric_variants(test_support::blok("GKL")).size() == 2);
  CHECK(symmetric_variants(test_support::blok("Coe1")).size() == 4);
  CHECK(symmetric_variants(test_support::local_majority()).size() == 1);
  const auto v = symmetric_variants(test_support::blok("GKL"));
  CHECK(v[0].symmetry == Symmetry::Identity);
  CHECK(v[1].symmetry == Symmetry::S01);
  CHECK(apply_symmetry(Symmetry::Both, test_support::blok("GKL")) == test_support::blok("GKL"));
}

TEST_CASE("symmetric variants perform alike") {
  for (const auto& r : test_support::blok_rules()) {
    const auto base = standard_performance(r, 10000, 101);
    for (auto s : {Symmetry::S01, Symmetry::Srl, Symmetry::Both}) {
      CHECK(is_neutral(base, standard_performance(apply_symmetry(s, r), 10000, 202)));
    }
  }
}

TEST_CASE("template parsing") {
  const auto t = OlympusTemplate::parse(kPublishedOlympusTemplate);
  CHECK(t.format().size() == kTableSize);
  CHECK(OlympusTemplate::parse(t.format()) == t);
  CHECK(t.free_positions().size() + t.fixed_count() == kTableSize);
  CHECK(OlympusTemplate::full_space().free_positions().size() == kTableSize);
  CHECK_THROWS_AS(OlympusTemplate::parse("01*"), ParseError);
  CHECK_THROWS_AS(OlympusTemplate::parse(std::string(127, '*') + "x"), ParseError);
}

TEST_CASE("embed and project") {
  const auto t = OlympusTemplate::parse(kPublishedOlympusTemplate);
  const auto free = t.free_positions();
  const Rule zero_fill = embed(Genotype(free.size(), 0), t);
  for (std::size_t k = 0; k < kTableSize; ++k) CHECK(zero_fill[k] == (t.symbol(k) == '1'));

  Rng rng(41);
  for (int i = 0; i < 50; ++i) {
    Genotype g(free.size());
    for (auto& b : g) b = rng() & 1;
    CHECK(project(embed(g, t), t) == g);
  }
  CHECK_THROWS_AS(embed(Genotype(3, 0), t), std::invalid_argument);

  const Rule gkl = test_support::blok("GKL");
  REQUIRE(t.contains(gkl));
  CHECK(embed(project(gkl, t), t) == gkl);
  std::size_t fixed = 0;
  while (t.is_free(fixed)) ++fixed;
  CHECK_THROWS_AS(project(gkl.flipped(fixed), t), std::invalid_argument);
}

TEST_CASE("olympus sampling") {
  const auto t = OlympusTemplate::parse(kPublishedOlympusTemplate);
  const auto free = t.free_positions();
  Rng rng(43);
  std::vector<int> ones(kTableSize, 0);
  const int samples = 10000;
  for (int i = 0; i < samples; ++i) {
    const Rule r = sample_olympus(t, rng);
    for (std::size_t k = 0; k < kTableSize; ++k) {
      if (!t.is_free(k)) REQUIRE(r[k] == (t.symbol(k) == '1'));
      ones[k] += r[k];
    }
  }
  for (auto k : free) CHECK(std::abs(ones[k] / static_cast<double>(samples) - 0.5) < 0.03);
  CHECK(sample_olympus(t, 5) == sample_olympus(t, 5));
}

TEST_CASE("olympus derivation") {
  const Rule gkl = test_support::blok("GKL");
  const std::vector<Rule> same(6, gkl);
  const auto d = derive_olympus(same);
  CHECK(d.joint_bits == kTableSize);
  CHECK(d.tmpl.free_positions().empty());

  const auto rules = test_support::blok_rules();
  const auto blok = derive_olympus(rules);
  std::size_t product = 1;
  for (const auto& r : rules) product *= symmetric_variants(r).size();
  CHECK(blok.combinations == product);
  CHECK(blok.tmpl.free_positions().size() == kTableSize - blok.joint_bits);
  CHECK(blok.joint_bits == joint_bits(std::vector<Rule>([&] {
          std::vector<Rule> chosen;
          for (const auto& v : blok.chosen) chosen.push_back(v.rule);
          return chosen;
        }())));
  for (const auto& v : blok.chosen) CHECK_NOTHROW(project(v.rule, blok.tmpl));
  CHECK_FALSE(blok.optimal_sets.empty());

  // The maximum does not depend on input order.
  auto shuffled = rules;
  std::reverse(shuffled.begin(), shuffled.end());
  std::swap(shuffled[1], shuffled[4]);
  CHECK(derive_olympus(shuffled).joint_bits == blok.joint_bits);

  // Brute-force oracle for the maximum.
  std::vector<std::vector<Rule>> options;
  for (const auto& r : rules) {
    std::vector<Rule> o;
    for (const auto& v : symmetric_variants(r)) o.push_back(v.rule);
    options.push_back(o);
  }
  std::size_t best = 0;
  std::vector<std::size_t> idx(rules.size(), 0);
  for (std::size_t combo = 0; combo < product; ++combo) {
    std::size_t rest = combo;
    std::vector<Rule> pick;
    for (std::size_t i = rules.size(); i-- > 0;) {
      idx[i] = rest % options[i].size();
      rest /= options[i].size();
    }
    for (std::size_t i = 0; i < rules.size(); ++i) pick.push_back(options[i][idx[i]]);
    std::size_t agree = 0;
    for (std::size_t k = 0; k < kTableSize; ++k) {
      agree += std::all_of(pick.begin(), pick.end(), [&](const Rule& r) { return r[k] == pick[0][k]; });
    }
    best = std::max(best, agree);
  }
  CHECK(blok.joint_bits == best);
}
