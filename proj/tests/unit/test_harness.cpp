// Copyright 2026 The gqdec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gq/harness.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "gq/error.hpp"
#include "gq/homology.hpp"

using namespace gq;

namespace {

SweepResult synthetic(const std::vector<double> &ps, const std::vector<double> &f3, const std::vector<double> &f5) {
    SweepResult r;
    r.decoder = "mwpm";
    const uint64_t n = 1000000;
    for (size_t k = 0; k < ps.size(); k++) {
        r.points.push_back({3, ps[k], n, uint64_t(std::llround((1 - f3[k]) * n))});
    }
    for (size_t k = 0; k < ps.size(); k++) {
        r.points.push_back({5, ps[k], n, uint64_t(std::llround((1 - f5[k]) * n))});
    }
    return r;
}

ErrorCode threshold_code(const SweepResult &r) {
    try {
        estimate_threshold(r, 3, 5);
    } catch (const gq::Error &ex) {
        return ex.code();
    }
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Wilson, KnownInterval) {
    // 81 of 263, z = 1.96: reference interval (0.2553, 0.3662).
    auto [lo, hi] = wilson_interval(81, 263);
    EXPECT_NEAR(lo, 0.2553, 1e-4);
    EXPECT_NEAR(hi, 0.3662, 1e-4);
    auto [l0, h0] = wilson_interval(0, 100);
    EXPECT_EQ(l0, 0.0);
    EXPECT_GT(h0, 0.0);
    auto [l1, h1] = wilson_interval(100, 100);
    EXPECT_LT(l1, 1.0);
    EXPECT_NEAR(h1, 1.0, 1e-12);
    auto [la, ha] = wilson_interval(5000, 10000, 3.0);
    EXPECT_NEAR(ha - la, 2 * 3.0 * 0.005, 1e-4);
}

TEST(Sweep, NoiselessRateIsPerfect) {
    SweepConfig cfg;
    cfg.distances = {3, 5};
    cfg.rates = {0.0};
    cfg.trials = 500;
    auto r = sweep(cfg);
    ASSERT_EQ(r.points.size(), 2u);
    for (const auto &pt : r.points) {
        EXPECT_EQ(pt.failures, 0u);
        EXPECT_EQ(pt.fidelity(), 1.0);
    }
}

TEST(Sweep, DeterministicAndSeedSensitive) {
    SweepConfig cfg;
    cfg.distances = {3};
    cfg.rates = {0.08, 0.12};
    cfg.trials = 3000;
    cfg.seed = 9;
    auto a = sweep(cfg);
    auto b = sweep(cfg);
    cfg.seed = 10;
    auto c = sweep(cfg);
    std::ostringstream sa, sb, sc;
    write_sweep_csv(sa, a);
    write_sweep_csv(sb, b);
    write_sweep_csv(sc, c);
    EXPECT_EQ(sa.str(), sb.str());
    EXPECT_NE(sa.str(), sc.str());
}

TEST(Sweep, MwpmNeverLosesToNoDecoding) {
    SweepConfig cfg;
    cfg.distances = {3, 5};
    cfg.rates = {0.02, 0.1};
    cfg.trials = 2000;
    auto m = sweep(cfg);
    cfg.decoder = "none";
    auto n = sweep(cfg);
    for (size_t i = 0; i < m.points.size(); i++) {
        EXPECT_LE(m.points[i].failures, n.points[i].failures);
    }
}

TEST(Sweep, MonteCarloMatchesExactValue) {
    ToricLayout layout(3);
    MwpmDecoder dec(layout);
    const double p = 0.05;
    const uint64_t n = 20000;
    SweepPoint pt = sweep_point(layout, dec, p, n, 1, 0);
    double exact = mwpm_exact_success(layout, p);
    double sigma = std::sqrt(exact * (1 - exact) / double(n));
    EXPECT_NEAR(pt.fidelity(), exact, 3 * sigma);
}

TEST(Sweep, RejectsBadConfig) {
    SweepConfig cfg;
    cfg.distances = {4};
    cfg.rates = {0.1};
    cfg.trials = 10;
    try {
        sweep(cfg);
        FAIL();
    } catch (const gq::Error &ex) {
        EXPECT_EQ(ex.code(), ErrorCode::InvalidDistance);
    }
    cfg.distances = {3};
    cfg.rates = {-0.1};
    EXPECT_THROW(sweep(cfg), gq::Error);
    cfg.rates = {0.1};
    cfg.trials = 0;
    EXPECT_THROW(sweep(cfg), gq::Error);
}

TEST(Threshold, SyntheticCrossing) {
    std::vector<double> ps{0.03, 0.04, 0.06, 0.07};
    // d=5 above d=3 below 0.05, below it afterwards; the lines cross at 0.05.
    std::vector<double> f3{0.95, 0.94, 0.92, 0.91};
    std::vector<double> f5{0.97, 0.955, 0.925, 0.91 - 0.005};
    auto est = estimate_threshold(synthetic(ps, f3, f5), 3, 5);
    EXPECT_EQ(est.cell_low, 0.06);
    EXPECT_EQ(est.cell_high, 0.07);
    EXPECT_NEAR(est.p, 0.06 + 0.01 * 0.005 / 0.01, 1e-9);
    EXPECT_NEAR(est.midpoint(), 0.065, 1e-12);

    std::vector<double> g5{0.97, 0.96, 0.93, 0.90};
    std::vector<double> g3{0.96, 0.955, 0.94, 0.92};
    auto e2 = estimate_threshold(synthetic(ps, g3, g5), 3, 5);
    EXPECT_EQ(e2.cell_low, 0.04);
    EXPECT_EQ(e2.cell_high, 0.06);
    // diff 0.005 at 0.04 and -0.01 at 0.06.
    EXPECT_NEAR(e2.p, 0.04 + 0.02 * 0.005 / 0.015, 1e-9);
}

TEST(Threshold, ZeroDifferenceOnTheGrid) {
    std::vector<double> ps{0.04, 0.05, 0.06};
    std::vector<double> f3{0.95, 0.93, 0.90};
    std::vector<double> f5{0.96, 0.93, 0.88};
    auto est = estimate_threshold(synthetic(ps, f3, f5), 3, 5);
    EXPECT_EQ(est.p, 0.05);
    EXPECT_EQ(est.cell_low, 0.04);
    EXPECT_EQ(est.cell_high, 0.06);
}

TEST(Threshold, NoCrossing) {
    std::vector<double> ps{0.04, 0.05, 0.06};
    std::vector<double> f{0.95, 0.93, 0.90};
    EXPECT_EQ(threshold_code(synthetic(ps, f, f)), ErrorCode::NoCrossing);
    std::vector<double> above{0.96, 0.94, 0.91};
    EXPECT_EQ(threshold_code(synthetic(ps, f, above)), ErrorCode::NoCrossing);
    EXPECT_EQ(threshold_code(synthetic({0.05}, {0.9}, {0.8})), ErrorCode::InvalidArgument);
}

TEST(SweepCsv, RoundTrip) {
    SweepResult r;
    r.decoder = "mwpm";
    r.seed = 42;
    r.points = {{3, 0.01, 1000, 3}, {5, 0.125, 2000, 700}};
    std::ostringstream os;
    write_sweep_csv(os, r);
    std::istringstream in(os.str());
    auto back = read_sweep_csv(in);
    EXPECT_EQ(back.decoder, "mwpm");
    EXPECT_EQ(back.seed, 42u);
    ASSERT_EQ(back.points.size(), 2u);
    EXPECT_EQ(back.points[1].d, 5u);
    EXPECT_EQ(back.points[1].p, 0.125);
    EXPECT_EQ(back.points[1].failures, 700u);
    std::ostringstream again;
    write_sweep_csv(again, back);
    EXPECT_EQ(again.str(), os.str());
    EXPECT_EQ(os.str().substr(0, os.str().find('\n')), "d,p,trials,failures,fidelity,wilson_low,wilson_high,decoder,seed");
}

TEST(SweepCsv, RejectsMalformedInput) {
    for (const char *text : {"", "d,p,trials\n3,0.1,10\n", "d,p,trials,failures\n3,0.1,10\n",
                             "d,p,trials,failures\n3,x,10,1\n", "d,p,trials,failures\n3,0.1,10,11\n"}) {
        std::istringstream in(text);
        try {
            read_sweep_csv(in);
            ADD_FAILURE() << text;
        } catch (const gq::Error &ex) {
            EXPECT_EQ(ex.code(), ErrorCode::FormatError) << text;
        }
    }
}

TEST(ParseLists, Rates) {
    auto r = parse_rate_list("0.01:0.2:0.01");
    ASSERT_EQ(r.size(), 20u);
    EXPECT_EQ(r.front(), 0.01);
    EXPECT_EQ(r[6], 0.07);
    EXPECT_EQ(r.back(), 0.2);
    EXPECT_EQ(parse_rate_list("0.06:0.16:0.01").size(), 11u);
    EXPECT_EQ(parse_rate_list("0.005:0.08:0.005").size(), 16u);
    EXPECT_EQ(parse_rate_list("0.1,0.2"), (std::vector<double>{0.1, 0.2}));
    EXPECT_THROW(parse_rate_list("0.2:0.1:0.01"), gq::Error);
    EXPECT_THROW(parse_rate_list("0.1:0.2:0"), gq::Error);
    EXPECT_THROW(parse_rate_list("0.1:0.2"), gq::Error);
    EXPECT_THROW(parse_rate_list("abc"), gq::Error);
}

TEST(ParseLists, Distances) {
    EXPECT_EQ(parse_distance_list("3,5,7"), (std::vector<uint32_t>{3, 5, 7}));
    EXPECT_THROW(parse_distance_list("3,x"), gq::Error);
}
