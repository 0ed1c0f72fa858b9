#include "boxjenkins/error.hpp"
#include "boxjenkins/series.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

using namespace bj;

TEST_CASE("difference: hand examples") {
    CHECK(difference(std::vector<double>{1, 2, 3, 4}, 1).values == std::vector<double>{1, 1, 1});
    CHECK(difference(std::vector<double>{5, 5, 5}, 1).values == std::vector<double>{0, 0});
    // [1,2,4,8] -> [1,2,4] -> [1,2]
    const auto twice = difference(std::vector<double>{1, 2, 4, 8}, 2);
    CHECK(twice.values == std::vector<double>{1, 2});
    CHECK(twice.heads == std::vector<double>{1, 1});
    CHECK(twice.d == 2);
}

TEST_CASE("difference: order zero is the identity") {
    const std::vector<double> v{3.5, -1.25, 8.0};
    const auto same = difference(v, 0);
    CHECK(same.values == v);
    CHECK(same.heads.empty());
}

TEST_CASE("difference: errors") {
    CHECK_THROWS_AS((void)difference(std::vector<double>{1, 2}, 2), InsufficientData);
    CHECK_THROWS_AS((void)difference(std::vector<double>{1, 2, 3, 4}, 3), InvalidArgument);
    CHECK_THROWS_AS((void)difference(std::vector<double>{1, 2, 3, 4}, -1), InvalidArgument);
}

TEST_CASE("undifference: hand examples") {
    CHECK(undifference(difference(std::vector<double>{1, 2, 4, 8}, 2)) == std::vector<double>{1, 2, 4, 8});
    DifferencedSeries flat{{0, 0, 0, 0}, 1, {5}};
    CHECK(undifference(flat) == std::vector<double>{5, 5, 5, 5, 5});
    DifferencedSeries broken{{1, 2}, 2, {1}};
    CHECK_THROWS_AS((void)undifference(broken), InvalidArgument);
}

TEST_CASE("undifference inverts difference on random series") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> ints(-1000, 1000);
    std::normal_distribution<double> normal(0.0, 50.0);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 3 + static_cast<std::size_t>(trial % 40);
        std::vector<double> exact(n), real(n);
        for (std::size_t i = 0; i < n; ++i) {
            exact[i] = ints(rng);
            real[i] = normal(rng) + 100.0;
        }
        for (int d = 0; d <= 2; ++d) {
            const auto diff = difference(exact, d);
            CHECK(diff.values.size() == n - static_cast<std::size_t>(d));
            CHECK(undifference(diff) == exact);  // integers round-trip bit-exactly

            const auto back = undifference(difference(real, d));
            REQUIRE(back.size() == n);
            for (std::size_t i = 0; i < n; ++i) {
                CHECK(std::abs(back[i] - real[i]) <= 1e-12 * std::max(1.0, std::abs(real[i])));
            }
        }
    }
}

TEST_CASE("summary: population moments") {
    const auto s = summary(std::vector<double>{1, 2, 3});
    CHECK(s.n == 3);
    CHECK(s.mean == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(s.variance == doctest::Approx(2.0 / 3.0).epsilon(1e-15));

    const auto single = summary(std::vector<double>{7});
    CHECK(single.mean == 7.0);
    CHECK(single.variance == 0.0);
    CHECK(summary(std::vector<double>(10, 4.25)).variance == 0.0);
    CHECK_THROWS_AS((void)summary(std::vector<double>{}), InvalidArgument);
}

TEST_CASE("summary matches a two-pass long-double oracle") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    std::vector<double> v(100);
    for (double& x : v) {
        x = u(rng);
    }
    long double mean = 0.0L;
    for (double x : v) {
        mean += x;
    }
    mean /= v.size();
    long double ss = 0.0L;
    for (double x : v) {
        ss += (x - mean) * (x - mean);
    }
    const auto s = summary(v);
    CHECK(std::abs(s.mean - static_cast<double>(mean)) <= 1e-12);
    CHECK(std::abs(s.variance - static_cast<double>(ss / v.size())) <= 1e-12);
}

TEST_CASE("time series invariants") {
    CHECK_THROWS_AS(TimeSeries({}, {}), InvalidArgument);
    CHECK_THROWS_AS(TimeSeries({{2008}, {2007}}, {1.0, 2.0}), InvalidArgument);
    CHECK_THROWS_AS(TimeSeries({{2007}, {2007}}, {1.0, 2.0}), InvalidArgument);
    CHECK_THROWS_AS(TimeSeries({{2007}, {2008}}, {1.0, NAN}), InvalidArgument);
    CHECK_THROWS_AS(TimeSeries({{2007}}, {1.0, 2.0}), InvalidArgument);
    const TimeSeries ok({{2006}, {2007, 1, 1}, {2007, 1, 2}}, {1.0, 2.0, 3.0});
    CHECK(ok.size() == 3);
}

TEST_CASE("time labels") {
    CHECK(TimeLabel::parse("2006").to_string() == "2006");
    CHECK(TimeLabel::parse("2014-12-31").to_string() == "2014-12-31");
    CHECK(TimeLabel::parse("2012-02-29").day == 29);
    CHECK_THROWS_AS((void)TimeLabel::parse("2013-02-29"), ParseError);
    CHECK_THROWS_AS((void)TimeLabel::parse("20x6"), ParseError);
    CHECK_THROWS_AS((void)TimeLabel::parse("2014/12/31"), ParseError);
    CHECK_THROWS_AS((void)TimeLabel::parse(""), ParseError);
    CHECK(TimeLabel::parse("2006") < TimeLabel::parse("2006-01-01"));
}
