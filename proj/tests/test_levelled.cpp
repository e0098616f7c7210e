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

#include "asymptree/levelled.hpp"
#include "asymptree/levelled_io.hpp"
#include "asymptree/random_profiles.hpp"

#include <gtest/gtest.h>

#include <numbers>

namespace asymptree::levelled {
namespace {

using LN = LevelledNumber<Rational>;

LN parse(const char* s) { return parse_levelled(s); }
Rational q(long p, long d = 1) { return Rational(p) / d; }

TEST(Levelled, CanonicalForm) {
  const auto x = LN::from_terms({{level(1), q(2)}, {level(0), q(3)}, {level(1), q(-2)}, {level(2), q(0)}});
  ASSERT_EQ(x.size(), 1u);
  EXPECT_EQ(x.terms()[0].level, level(0));
  EXPECT_EQ(x.terms()[0].coeff, 3);
}

TEST(Levelled, AddNegateIsZero) {
  const auto x = parse("3*u^0 + -2*u^1/2 + 7/3*u^-1");
  EXPECT_TRUE(add(x, negate(x)).is_zero());
}

TEST(Levelled, TwoTermProduct) { EXPECT_EQ(mul(parse("1 + u"), parse("1 + -1*u")), parse("1 + -1*u^2")); }

TEST(Levelled, SimClass) {
  EXPECT_EQ(sim_class(parse("5 + u^3")), level(0));
  EXPECT_EQ(sim_class(parse("u^2 + -7*u^5")), level(2));
  EXPECT_THROW(sim_class(LN()), std::domain_error);
}

TEST(Levelled, Compare) {
  EXPECT_EQ(compare(parse("u"), LN()), Ordering::greater);
  EXPECT_EQ(compare(parse("u"), parse("1")), Ordering::less);
  EXPECT_EQ(compare(parse("-1*u^-1"), parse("-5")), Ordering::less);
  EXPECT_EQ(compare(parse("2 + u"), parse("2 + u")), Ordering::equal);
}

TEST(Levelled, StandardPart) {
  EXPECT_EQ(standard_part(parse("5 + 2*u")), 5);
  EXPECT_EQ(standard_part(parse("u^3")), 0);
  EXPECT_THROW(standard_part(parse("u^-1")), std::domain_error);
}

TEST(Levelled, SpectrumFunction) {
  EXPECT_EQ(spectrum_function(parse("3*u^0 + -2*u^1/2"), level(1, 2)), -2);
  EXPECT_EQ(spectrum_function(parse("3*u^0 + -2*u^1/2"), level(1)), 0);
}

TEST(Levelled, DecomposeExamples) {
  EXPECT_TRUE(decompose(LN()).empty());
  const auto s = decompose(parse("3*u^0 + -2*u^1/2"));
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0], (SpectrumEntry<Rational>{q(3), level(0)}));
  EXPECT_EQ(s[1], (SpectrumEntry<Rational>{q(-2), level(1, 2)}));
}

TEST(Levelled, SynthesizeExamples) {
  EXPECT_TRUE(synthesize(Spectrum<Rational>{}).is_zero());
  EXPECT_EQ(synthesize(Spectrum<Rational>{{q(1), level(0)}}), LN::constant(q(1)));
  EXPECT_THROW(synthesize(Spectrum<Rational>{{q(1), level(1)}, {q(1), level(0)}}), std::invalid_argument);
  EXPECT_THROW(synthesize(Spectrum<Rational>{{q(1), level(1)}, {q(2), level(1)}}), std::invalid_argument);
  EXPECT_THROW(synthesize(Spectrum<Rational>{{q(0), level(1)}}), std::invalid_argument);
}

TEST(Levelled, RandomProperties) {
  rng::Rng rng(2024);
  for (int i = 0; i < 1000; ++i) {
    const auto x = sampling::levelled_number(rng, 8);
    const auto y = sampling::levelled_number(rng, 8);
    const auto z = sampling::levelled_number(rng, 8);

    EXPECT_EQ(mul(x, add(y, z)), add(mul(x, y), mul(x, z)));
    if (!x.is_zero() && !y.is_zero()) EXPECT_EQ(sim_class(mul(x, y)).g, sim_class(x).g + sim_class(y).g);

    const auto xy = compare(x, y);
    const auto yx = compare(y, x);
    EXPECT_EQ(xy == Ordering::less, yx == Ordering::greater);
    EXPECT_EQ(xy == Ordering::equal, x == y);
    if (xy != Ordering::greater && compare(y, z) != Ordering::greater) EXPECT_NE(compare(x, z), Ordering::greater);

    const auto s = decompose(x);
    for (std::size_t k = 1; k < s.size(); ++k) EXPECT_TRUE(s[k - 1].level < s[k].level);
    for (const auto& e : s) EXPECT_EQ(spectrum_function(x, e.level), e.c);
    EXPECT_EQ(synthesize(s), x);
  }
}

TEST(Levelled, StandardPartIsRingMorphism) {
  rng::Rng rng(77);
  auto finite = [&] {
    auto x = sampling::levelled_number(rng, 6);
    std::vector<Term<Rational>> keep;
    for (const auto& t : x.terms()) {
      if (t.level.g >= 0) keep.push_back(t);
    }
    return LN::from_terms(keep);
  };
  for (int i = 0; i < 500; ++i) {
    const auto x = finite();
    const auto y = finite();
    EXPECT_EQ(standard_part(add(x, y)), standard_part(x) + standard_part(y));
    EXPECT_EQ(standard_part(mul(x, y)), standard_part(x) * standard_part(y));
  }
}

TEST(Levelled, LevelZeroOrderMatchesReals) {
  for (long a = -3; a <= 3; ++a) {
    for (long b = -3; b <= 3; ++b) {
      const auto expect = a < b ? Ordering::less : a == b ? Ordering::equal : Ordering::greater;
      EXPECT_EQ(compare(LN::constant(q(a)), LN::constant(q(b))), expect);
    }
  }
}

TEST(Levelled, DoubleCoefficients) {
  using LD = LevelledNumber<double>;
  const auto x = LD::from_terms({{level(1, 3), 0.25}, {level(0), -1.5}});
  EXPECT_EQ(standard_part(x), -1.5);
  EXPECT_EQ(synthesize(decompose(x)), x);
}

TEST(Circle, TopAtFullTurnIsZero) {
  const auto c = circle_decompose(make_circle(2.0 * std::numbers::pi, LevelledNumber<double>()));
  EXPECT_EQ(c.top, 0.0);
  EXPECT_TRUE(c.tail.empty());
}

TEST(Circle, PiPlusU) {
  const auto c = circle_decompose(make_circle(std::numbers::pi, LevelledNumber<double>::monomial(1.0, level(1))));
  EXPECT_EQ(c.top, std::numbers::pi);
  ASSERT_EQ(c.tail.size(), 1u);
  EXPECT_EQ(c.tail[0].c, 1.0);
  EXPECT_EQ(c.tail[0].level, level(1));
}

TEST(Circle, RejectsNonInfinitesimalTail) {
  EXPECT_THROW(make_circle(1.0, LevelledNumber<double>::constant(1.0)), std::invalid_argument);
}

TEST(Circle, RoundTrip) {
  rng::Rng rng(8);
  for (int i = 0; i < 1000; ++i) {
    std::vector<Term<double>> terms;
    for (long k = 1; k <= 5; ++k) {
      if (rng.chance(0.5)) terms.push_back({level(k, 3), rng.uniform(-3, 3)});
    }
    const auto x = make_circle(rng.uniform(-10, 10), LevelledNumber<double>::from_terms(terms));
    const auto back = circle_synthesize(circle_decompose(x));
    EXPECT_EQ(back.top, x.top);
    EXPECT_EQ(back.tail, x.tail);
  }
}

TEST(LevelledIo, FormatRoundTrip) {
  rng::Rng rng(4);
  for (int i = 0; i < 500; ++i) {
    const auto x = sampling::levelled_number(rng, 8);
    EXPECT_EQ(parse_levelled(format_levelled(x)), x);
  }
  EXPECT_EQ(format_levelled(LN()), "0");
  EXPECT_EQ(format_levelled(parse("3*u^0 + -2*u^1/2")), "3*u^0 + -2*u^1/2");
}

TEST(LevelledIo, SpectrumText) {
  EXPECT_EQ(format_spectrum(decompose(parse("0"))), "[]");
  EXPECT_EQ(format_spectrum(decompose(parse("-2*u^1/2 + 3"))), "[(3, 0), (-2, 1/2)]");
}

TEST(LevelledIo, ParseErrorsCarryPosition) {
  try {
    parse_levelled("3*u^ + 1");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
  EXPECT_THROW(parse_levelled(""), ParseError);
  EXPECT_THROW(parse_levelled("1/0*u"), ParseError);
  EXPECT_THROW(parse_levelled("2*v^1"), ParseError);
}

}  // namespace
}  // namespace asymptree::levelled
