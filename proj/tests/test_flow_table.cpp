// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <vector>

#include "sfts/flow.hpp"

#include "support/properties.hpp"

using namespace testsupport;

namespace {

sfts::PacketRecord make_packet(double ts, uint32_t src, uint16_t sport, uint32_t dst,
                               uint16_t dport, uint8_t proto = 6,
                               uint32_t payload = 100) {
    sfts::PacketRecord p;
    p.timestamp = ts;
    p.payload_len = payload;
    p.src_addr = sfts::IpAddr::v4(src);
    p.dst_addr = sfts::IpAddr::v4(dst);
    p.protocol = proto;
    p.src_port = sport;
    p.dst_port = dport;
    return p;
}

} // namespace

TEST_CASE("flow key: swapped directions collide, protocols separate") {
    const auto a = make_packet(0, 0x0a000001, 1234, 0x0a000002, 443, 6);
    const auto b = make_packet(0, 0x0a000002, 443, 0x0a000001, 1234, 6);
    const auto c = make_packet(0, 0x0a000001, 1234, 0x0a000002, 443, 17);
    CHECK(sfts::flow_key(a).canonical() == sfts::flow_key(b).canonical());
    CHECK(sfts::FlowKeyHash{}(sfts::flow_key(a)) == sfts::FlowKeyHash{}(sfts::flow_key(b)));
    CHECK(!(sfts::flow_key(a).canonical() == sfts::flow_key(c).canonical()));

    const auto icmp = make_packet(0, 0x0a000001, 0, 0x0a000002, 0, 1);
    const auto k = sfts::flow_key(icmp);
    CHECK(k.port_a == 0);
    CHECK(k.port_b == 0);
}

TEST_CASE("inactive timeout: 70 s gap splits") {
    sfts::FlowTable table;
    std::vector<sfts::FlowRecord> expired;
    CHECK(table.ingest(make_packet(0.0, 0x0a000001, 1234, 0x0a000002, 443), expired) == 0);
    CHECK(expired.empty());
    CHECK(table.ingest(make_packet(70.0, 0x0a000001, 1234, 0x0a000002, 443), expired) == 1);
    REQUIRE(expired.size() == 1);
    CHECK(expired[0].packets.size() == 1);
    CHECK(expired[0].first_ts == 0.0);

    const auto rest = table.flush();
    REQUIRE(rest.size() == 1);
    CHECK(rest[0].packets.size() == 1);
    CHECK(rest[0].first_ts == 70.0);
}

TEST_CASE("gap of exactly the inactive timeout stays in one flow") {
    sfts::FlowTable table;
    std::vector<sfts::FlowRecord> expired;
    table.ingest(make_packet(0.0, 1, 1, 2, 2), expired);
    table.ingest(make_packet(65.0, 1, 1, 2, 2), expired);
    CHECK(expired.empty());
}

TEST_CASE("active timeout: packet stream splits at 300 s") {
    sfts::FlowTable table;
    std::vector<sfts::FlowRecord> expired;
    for (int t = 0; t <= 310; t += 10)
        table.ingest(make_packet(static_cast<double>(t), 1, 1, 2, 2), expired);
    REQUIRE(expired.size() == 1);
    CHECK(expired[0].packets.size() == 30); // t = 0 .. 290
    CHECK(expired[0].last_ts == 290.0);
    const auto rest = table.flush();
    REQUIRE(rest.size() == 1);
    CHECK(rest[0].first_ts == 300.0); // 31st packet starts record 2
    CHECK(rest[0].packets.size() == 2);
}

TEST_CASE("single packet flow, flush") {
    sfts::FlowTable table;
    std::vector<sfts::FlowRecord> expired;
    table.ingest(make_packet(5.5, 1, 1, 2, 2), expired);
    const auto flows = table.flush();
    REQUIRE(flows.size() == 1);
    CHECK(flows[0].first_ts == flows[0].last_ts);
    CHECK(table.size() == 0);
    CHECK(table.flush().empty());
}

TEST_CASE("flush orders by first timestamp") {
    sfts::FlowTable table;
    std::vector<sfts::FlowRecord> expired;
    table.ingest(make_packet(5.0, 1, 10, 2, 20), expired);
    table.ingest(make_packet(6.0, 3, 30, 4, 40), expired);
    // later-keyed flow actually started earlier
    sfts::FlowTable table2;
    table2.ingest(make_packet(5.0, 1, 10, 2, 20), expired);
    table2.ingest(make_packet(2.0, 3, 30, 4, 40), expired); // clamped (reorder)
    const auto flows = table.flush();
    CHECK(flows[0].first_ts <= flows[1].first_ts);
}

TEST_CASE("direction assignment follows the first packet") {
    sfts::FlowTable table;
    std::vector<sfts::FlowRecord> expired;
    table.ingest(make_packet(0.0, 0x0a000001, 1234, 0x0a000002, 443, 6, 10), expired);
    table.ingest(make_packet(0.1, 0x0a000002, 443, 0x0a000001, 1234, 6, 20), expired);
    table.ingest(make_packet(0.2, 0x0a000001, 1234, 0x0a000002, 443, 6, 30), expired);
    const auto flows = table.flush();
    REQUIRE(flows.size() == 1);
    const auto& f = flows[0];
    CHECK(f.pkt_count_fwd == 2);
    CHECK(f.pkt_count_rev == 1);
    CHECK(f.byte_count_fwd == 40);
    CHECK(f.byte_count_rev == 20);
    CHECK(f.key.port_a == 1234);
    CHECK(f.packets[1].dir == sfts::Direction::Reverse);
}

TEST_CASE("out-of-order packets are clamped and counted") {
    sfts::FlowTable table;
    std::vector<sfts::FlowRecord> expired;
    table.ingest(make_packet(10.0, 1, 1, 2, 2), expired);
    table.ingest(make_packet(9.0, 1, 1, 2, 2), expired); // 1 s behind
    CHECK(table.reorder_count() == 1);
    const auto flows = table.flush();
    REQUIRE(flows.size() == 1);
    CHECK(flows[0].packets[1].ts == 10.0);
    CHECK(flows[0].last_ts == 10.0);
}

TEST_CASE("bounded capacity evicts the least recently updated flow") {
    sfts::FlowTable table({300.0, 65.0, 2});
    std::vector<sfts::FlowRecord> expired;
    table.ingest(make_packet(0.0, 1, 1, 2, 2), expired);
    table.ingest(make_packet(1.0, 3, 3, 4, 4), expired);
    CHECK(expired.empty());
    table.ingest(make_packet(2.0, 5, 5, 6, 6), expired);
    REQUIRE(expired.size() == 1);
    CHECK(expired[0].first_ts == 0.0);
    CHECK(table.size() == 2);
}

TEST_CASE("flow table property suite") {
    CHECK(prop_flow_table(105, 500) == 0);
}

TEST_CASE("sfts model property suite") {
    CHECK(prop_sfts_model(106, 500) == 0);
}
