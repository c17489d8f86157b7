// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <list>
#include <unordered_map>
#include <vector>

#include "sfts/types.hpp"

namespace sfts {

/// Bidirectional 5-tuple key. (addr_a, port_a) is the source endpoint of the
/// flow's first observed packet; orientation is stable for one flow record.
struct FlowKey {
    IpAddr addr_a;
    IpAddr addr_b;
    uint16_t port_a = 0;
    uint16_t port_b = 0;
    uint8_t protocol = 0;

    friend bool operator==(const FlowKey&, const FlowKey&) = default;

    /// Direction-insensitive form: endpoints ordered so that the smaller
    /// (addr, port) pair comes first. Packets of both directions map to the
    /// same canonical key.
    FlowKey canonical() const;
};

struct FlowKeyHash {
    size_t operator()(const FlowKey& k) const noexcept;
};

FlowKey flow_key(const PacketRecord& pkt);

struct FlowPacket {
    double ts = 0.0;
    uint32_t len = 0;
    Direction dir = Direction::Forward;
};

struct FlowRecord {
    FlowKey key;
    std::vector<FlowPacket> packets; // timestamp-ordered, ties keep arrival order
    double first_ts = 0.0;
    double last_ts = 0.0;
    uint64_t pkt_count_fwd = 0;
    uint64_t pkt_count_rev = 0;
    uint64_t byte_count_fwd = 0;
    uint64_t byte_count_rev = 0;
    uint64_t seq = 0; // creation sequence, tie-break for deterministic ordering
};

/// Single-writer flow cache with the classic inactive/active timeout pair.
/// A gap strictly greater than the inactive timeout terminates a record; a
/// record reaching the active timeout (>=) is split. Capacity is bounded;
/// the least recently updated flow is evicted (and emitted) when full.
class FlowTable {
public:
    struct Options {
        double active_timeout = 300.0;
        double inactive_timeout = 65.0;
        size_t capacity = size_t{1} << 22;
    };

    FlowTable() : FlowTable(Options{}) {}
    explicit FlowTable(Options opt);

    /// Feeds one packet. Any records this packet expires (timeout or
    /// eviction) are appended to `expired`; returns the number appended.
    /// Timestamps more than 1 ms behind the stream are clamped and counted.
    size_t ingest(const PacketRecord& pkt, std::vector<FlowRecord>& expired);

    /// Removes and returns all resident flows ordered by first_ts.
    std::vector<FlowRecord> flush();

    size_t size() const { return entries_.size(); }
    uint64_t reorder_count() const { return reorder_count_; }
    const Options& options() const { return opt_; }

private:
    struct Entry {
        FlowRecord rec;
        std::list<FlowKey>::iterator lru_pos;
    };

    void start_flow(const PacketRecord& pkt, double ts, const FlowKey& canon);
    void append_packet(Entry& e, const PacketRecord& pkt, double ts);

    Options opt_;
    std::unordered_map<FlowKey, Entry, FlowKeyHash> entries_;
    std::list<FlowKey> lru_; // front = least recently updated
    double stream_ts_ = 0.0;
    bool saw_packet_ = false;
    uint64_t reorder_count_ = 0;
    uint64_t next_seq_ = 0;
};

} // namespace sfts
