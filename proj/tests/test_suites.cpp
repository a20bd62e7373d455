/* Copyright 2026 The mtomega Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
#include <gtest/gtest.h>

#include "mtomega/suites.hpp"

using namespace mtomega;

TEST(Suites, IdentityWordsCount) {
    SuiteParams sp;
    sp.max_weight = 6;
    SuiteReport r = suite_identity_words(sp);
    EXPECT_EQ(r.checks.size(), 57u);
    EXPECT_TRUE(r.all_passed());
}

TEST(Suites, SmallSweepsPass) {
    SuiteParams sp;
    sp.max_weight = 4;
    sp.prime_max = 23;
    sp.n_max = 8;
    sp.digits = 30;
    for (const auto& name : suite_names()) {
        SuiteReport r = run_suite(name, sp);
        EXPECT_FALSE(r.checks.empty()) << name;
        EXPECT_TRUE(r.all_passed()) << name;
    }
    EXPECT_THROW(run_suite("nonsense", sp), RangeError);
}

TEST(Suites, SpecialsSkipSmallPrimes) {
    SuiteParams sp;
    sp.max_weight = 6;
    sp.prime_max = 7;
    for (const auto& c : suite_specials(sp).checks) {
        EXPECT_EQ(c.instance.find("p=3"), std::string::npos) << c.instance;
        EXPECT_TRUE(c.passed) << c.instance;
    }
}

TEST(Suites, HbarMonomialCounts) {
    // weight 1: e_1, e_1hat, hbar
    EXPECT_EQ(hbar_monomials(1).size(), 3u);
    for (const auto& m : hbar_monomials(3)) EXPECT_EQ(m.weight(), 3);
}

TEST(Suites, SeedIsDeterministic) {
    SuiteParams sp;
    sp.random_samples = 3;
    sp.seed = 42;
    sp.series_order = 8;
    SuiteReport a = suite_q_series(sp, 3), b = suite_q_series(sp, 3);
    ASSERT_EQ(a.checks.size(), b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) EXPECT_EQ(a.checks[i].instance, b.checks[i].instance);
    sp.seed = 43;
    SuiteReport c = suite_q_series(sp, 3);
    EXPECT_NE(a.checks.back().instance, c.checks.back().instance);
}
