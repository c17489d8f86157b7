// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "sfts/series.hpp"

#include "support/generators.hpp"

using namespace testsupport;

TEST_CASE("build copies packets in order") {
    sfts::FlowRecord flow;
    flow.packets = {{0.0, 100, sfts::Direction::Forward},
                    {0.5, 0, sfts::Direction::Reverse},
                    {2.0, 1500, sfts::Direction::Forward}};
    flow.first_ts = 0.0;
    flow.last_ts = 2.0;
    const auto s = sfts::build_sfts(flow);
    CHECK(s.n == 3);
    CHECK(s.values == std::vector<uint32_t>{100, 0, 1500});
    CHECK(s.times == std::vector<double>{0.0, 0.5, 2.0});
    CHECK(s.directions[1] == sfts::Direction::Reverse);
}

TEST_CASE("single packet flow") {
    sfts::FlowRecord flow;
    flow.packets = {{0.0, 100, sfts::Direction::Forward}};
    const auto s = sfts::build_sfts(flow);
    CHECK(s.n == 1);
    CHECK(s.values == std::vector<uint32_t>{100});
}

TEST_CASE("empty flow is a contract violation") {
    sfts::FlowRecord flow;
    CHECK_THROWS_AS((void)sfts::build_sfts(flow), std::invalid_argument);
}

TEST_CASE("derive: forced arithmetic") {
    sfts::FlowRecord flow;
    flow.packets = {{1.0, 1, sfts::Direction::Forward},
                    {1.5, 2, sfts::Direction::Forward},
                    {3.0, 3, sfts::Direction::Forward}};
    const auto d = sfts::derive_sequences(sfts::build_sfts(flow));
    CHECK(d.rel_times == std::vector<double>{0.0, 0.5, 2.0});
    CHECK(d.time_diffs == std::vector<double>{0.5, 1.5});
    CHECK(d.duration == 2.0);
}

TEST_CASE("equal timestamps are legal; zero diffs are kept") {
    sfts::FlowRecord flow;
    flow.packets = {{2.0, 10, sfts::Direction::Forward},
                    {2.0, 20, sfts::Direction::Forward},
                    {2.5, 30, sfts::Direction::Forward}};
    const auto d = sfts::derive_sequences(sfts::build_sfts(flow));
    CHECK(d.time_diffs == std::vector<double>{0.0, 0.5});
}

TEST_CASE("large synthetic flow keeps ordering") {
    Rng rng(31);
    const auto flow = random_flow(rng, 10000);
    const auto s = sfts::build_sfts(flow);
    CHECK(s.n == 10000);
    CHECK(std::is_sorted(s.times.begin(), s.times.end()));
    for (size_t i = 0; i < s.n; ++i)
        CHECK(s.values[i] == flow.packets[i].len);
}
