/*
 * Copyright 2026 The asymptree Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "asymptree/correspondence.hpp"
#include "asymptree/experiments.hpp"
#include "asymptree/profile_json.hpp"
#include "asymptree/random_profiles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <fstream>

namespace asymptree::correspondence {
namespace {

using tree::ProfileF;

Rational q(long p, long d = 1) { return Rational(p) / d; }

TEST(Realize, Basepoint) {
  const auto r = realize_at_scale(ProfileF(q(0), 2.0, {}), 10);
  EXPECT_EQ(r.point.rho, 0.0);
  EXPECT_EQ(r.point.phi, Angle(2.0));
}

TEST(Realize, DirectFormula) {
  const ProfileF p(q(2), 1.0, {{q(1), 0.5}});
  const auto r = realize_at_scale(p, 100);
  EXPECT_EQ(r.point.rho, 200.0);
  EXPECT_EQ(r.point.rho / 100, to_double(p.depth()));
  const auto expected = Angle::from_terms(1.0, std::vector<AngleTerm>{{0.5, 100.0}});
  EXPECT_EQ(r.point.phi, expected);
  EXPECT_NEAR(log_half_chord(r.point.phi, Angle(1.0)), std::log(0.25) - 100.0, 1e-9);
}

TEST(Realize, Admissibility) {
  EXPECT_THROW(realize_at_scale(ProfileF(q(1), 0.0, {{q(1, 2), 4.0}}), 10), std::invalid_argument);
  EXPECT_THROW(realize_at_scale(ProfileF(q(1), 0.0, {}), 0.5), std::invalid_argument);
}

TEST(Realize, SymbolicRoundTrip) {
  const ProfileF p(q(3), 2.0, {{q(1, 2), -0.5}, {q(2), 1.25}});
  const auto c = levelled::circle_decompose(to_circle_levelled(p));
  EXPECT_EQ(c.top, p.top());
  ASSERT_EQ(c.tail.size(), 2u);
  EXPECT_EQ(c.tail[0].level.g, q(1, 2));
  EXPECT_EQ(c.tail[0].c, -0.5);
  EXPECT_EQ(c.tail[1].level.g, q(2));
}

TEST(PairError, Identical) {
  const ProfileF p(q(2), 1.0, {{q(1), 0.5}});
  for (double n : {1.0, 50.0, 400.0}) EXPECT_EQ(pair_error(p, p, n).error, 0.0);
}

TEST(PairError, Radial) {
  const ProfileF a(q(1), 1.0, {{q(1, 2), 0.5}});
  const ProfileF b(q(3), 1.0, {{q(1, 2), 0.5}});
  for (double n : {25.0, 50.0, 100.0, 200.0, 400.0}) {
    const auto row = pair_error(a, b, n);
    EXPECT_EQ(row.tree_delta, 2);
    EXPECT_LT(row.error, 1e-12);
  }
}

TEST(PairError, GenericPairConverges) {
  const ProfileF a(q(2), 1.0, {{q(1, 2), 0.5}});
  const ProfileF b(q(5, 2), 1.0, {{q(1, 2), 0.5}, {q(1), -1.0}});
  const double e50 = pair_error(a, b, 50).error;
  const double e400 = pair_error(a, b, 400).error;
  EXPECT_LT(e400, e50);
  EXPECT_LE(e400, 0.1);
  // Frozen from the first stable run.
  EXPECT_NEAR(e400, 0.0034657359028, 1e-10);
}

TEST(Subcone, IdenticalProfiles) {
  const ProfileF p(q(1), 1.0, {{q(1, 2), 1.0}});
  const std::vector<ProfileF> config{p, p, p};
  const std::vector<double> scales{10, 20};
  const auto rows = subcone_witness(config, scales);
  ASSERT_EQ(rows.size(), 6u);
  for (const auto& r : rows) EXPECT_EQ(r.error, 0.0);
}

TEST(Subcone, TwoProfilesMatchPairError) {
  const std::vector<ProfileF> config{ProfileF(q(2), 1.0, {{q(1, 2), 0.5}}), ProfileF(q(1), 3.0, {})};
  const std::vector<double> scales{25, 50, 100};
  const auto rows = subcone_witness(config, scales);
  ASSERT_EQ(rows.size(), 3u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto expect = pair_error(config[0], config[1], scales[i]);
    EXPECT_EQ(rows[i].pair, "0-1");
    EXPECT_EQ(rows[i].n, scales[i]);
    EXPECT_EQ(rows[i].hyper_scaled, expect.hyper_scaled);
  }
}

TEST(Subcone, Validation) {
  const std::vector<ProfileF> one{ProfileF()};
  const std::vector<ProfileF> two{ProfileF(), ProfileF()};
  const std::vector<double> ok{1, 2};
  const std::vector<double> bad{2, 1};
  EXPECT_THROW(subcone_witness(one, ok), std::invalid_argument);
  EXPECT_THROW(subcone_witness(two, bad), std::invalid_argument);
}

TEST(Subcone, DemoOrderingAndThreshold) {
  const std::vector<double> scales{25, 50, 100, 200, 400};
  const auto rows = experiments::subcone_demo(scales);
  ASSERT_EQ(rows.size(), 6u * scales.size());
  EXPECT_EQ(rows.front().pair, "0-1");
  EXPECT_EQ(rows.back().pair, "2-3");
  const auto summary = max_error_by_scale(rows);
  ASSERT_EQ(summary.size(), scales.size());
  for (std::size_t i = 1; i < summary.size(); ++i) EXPECT_LE(summary[i].max_error, summary[i - 1].max_error);
  EXPECT_LE(summary.back().max_error, 0.1);
}

TEST(Subcone, BundledFileMatchesConfiguration) {
  std::ifstream in(ASYMPTREE_DATA "/subcone_demo.json");
  ASSERT_TRUE(in);
  const auto j = nlohmann::json::parse(in);
  const auto config = experiments::demo_configuration();
  ASSERT_EQ(j.size(), config.size());
  for (std::size_t i = 0; i < config.size(); ++i) {
    EXPECT_EQ(std::get<ProfileF>(tree::profile_from_json(j[i])), config[i]);
  }
}

TEST(AnalyticLimit, Cases) {
  const ProfileF a(q(2), 1.0, {{q(1), 0.5}});
  const ProfileF b(q(3), 1.0, {{q(1), -0.5}});
  EXPECT_EQ(angular_level(a, b), q(1));
  EXPECT_EQ(classify(a, b), LimitCase::within_shorter);
  EXPECT_EQ(analytic_limit(a, b), 3);

  const ProfileF c(q(1), 1.0, {});
  const ProfileF d(q(3), 1.0, {{q(2), 1.0}});
  EXPECT_EQ(classify(c, d), LimitCase::between);
  EXPECT_EQ(analytic_limit(c, d), 2);

  const ProfileF e(q(3), 1.0, {});
  EXPECT_EQ(angular_level(c, e), std::nullopt);
  EXPECT_EQ(classify(c, e), LimitCase::beyond_longer);
  EXPECT_EQ(analytic_limit(c, e), 2);

  EXPECT_EQ(angular_level(ProfileF(q(1), 1.0, {}), ProfileF(q(1), 2.0, {})), q(0));
}

TEST(AnalyticLimit, MatchesTreeDistanceOnRandomPairs) {
  rng::Rng rng(31);
  int seen[3] = {0, 0, 0};
  for (int i = 0; i < 2000; ++i) {
    const auto pool = sampling::family_f(rng, 6);
    for (const auto& a : pool) {
      for (const auto& b : pool) {
        const Rational d = tree::distance(a, b);
        ASSERT_EQ(analytic_limit(a, b), d);
        ASSERT_EQ(analytic_limit_by_cases(a, b), d);
        ++seen[static_cast<int>(classify(a, b))];
      }
    }
  }
  for (int s : seen) EXPECT_GT(s, 0);
}

TEST(AdmissiblePairs, Shape) {
  rng::Rng rng(12);
  for (int i = 0; i < 500; ++i) {
    const auto [a, b] = sampling::admissible_pair(rng);
    for (const auto* p : {&a, &b}) {
      EXPECT_LE(p->depth(), 3);
      EXPECT_LE(p->support().size(), 5u);
      for (std::size_t k = 0; k < p->support().size(); ++k) {
        const double m = std::abs(p->support()[k].value);
        EXPECT_GE(m, 0.1);
        EXPECT_LE(m, 3.1415926535897931 - 0.1);
        if (k > 0) EXPECT_GE(p->support()[k].depth - p->support()[k - 1].depth, q(1, 10));
      }
    }
    EXPECT_LT(tree::separation(a, b).c, std::min(a.depth(), b.depth()));
  }
}

}  // namespace
}  // namespace asymptree::correspondence
