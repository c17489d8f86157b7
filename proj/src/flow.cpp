// SPDX-License-Identifier: Apache-2.0
#include "sfts/flow.hpp"

#include <algorithm>

namespace sfts {

namespace {

bool endpoint_less(const IpAddr& a1, uint16_t p1, const IpAddr& a2, uint16_t p2) {
    if (a1 != a2)
        return a1 < a2;
    return p1 < p2;
}

} // namespace

FlowKey FlowKey::canonical() const {
    if (endpoint_less(addr_b, port_b, addr_a, port_a)) {
        FlowKey swapped = *this;
        std::swap(swapped.addr_a, swapped.addr_b);
        std::swap(swapped.port_a, swapped.port_b);
        return swapped;
    }
    return *this;
}

size_t FlowKeyHash::operator()(const FlowKey& k) const noexcept {
    // FNV-1a over both endpoints in canonical order plus the protocol, so the
    // hash is direction-insensitive.
    const FlowKey c = k.canonical();
    uint64_t h = 14695981039346656037ULL;
    auto mix = [&h](uint64_t v) {
        h ^= v;
        h *= 1099511628211ULL;
    };
    for (uint8_t b : c.addr_a.bytes)
        mix(b);
    for (uint8_t b : c.addr_b.bytes)
        mix(b);
    mix(c.port_a);
    mix(c.port_b);
    mix(c.protocol);
    mix(c.addr_a.is_v6);
    return static_cast<size_t>(h);
}

FlowKey flow_key(const PacketRecord& pkt) {
    FlowKey k;
    k.addr_a = pkt.src_addr;
    k.addr_b = pkt.dst_addr;
    k.port_a = pkt.src_port;
    k.port_b = pkt.dst_port;
    k.protocol = pkt.protocol;
    return k;
}

FlowTable::FlowTable(Options opt) : opt_(opt) {
    if (opt_.capacity == 0)
        opt_.capacity = 1;
}

size_t FlowTable::ingest(const PacketRecord& pkt, std::vector<FlowRecord>& expired) {
    const size_t before = expired.size();

    // Reorders beyond 1 ms are clamped to stream time and counted; smaller
    // jitter is absorbed per flow when appending.
    double ts = pkt.timestamp;
    if (saw_packet_ && ts + 1e-3 < stream_ts_) {
        ts = stream_ts_;
        ++reorder_count_;
    }
    stream_ts_ = saw_packet_ ? std::max(stream_ts_, ts) : ts;
    saw_packet_ = true;

    const FlowKey canon = flow_key(pkt).canonical();
    auto it = entries_.find(canon);
    if (it != entries_.end()) {
        Entry& e = it->second;
        const bool inactive = ts - e.rec.last_ts > opt_.inactive_timeout;
        const bool active = !inactive && ts - e.rec.first_ts >= opt_.active_timeout;
        if (inactive || active) {
            expired.push_back(std::move(e.rec));
            lru_.erase(e.lru_pos);
            entries_.erase(it);
            start_flow(pkt, ts, canon);
        } else {
            append_packet(e, pkt, ts);
            lru_.splice(lru_.end(), lru_, e.lru_pos);
        }
    } else {
        start_flow(pkt, ts, canon);
    }

    while (entries_.size() > opt_.capacity) {
        auto victim = entries_.find(lru_.front());
        expired.push_back(std::move(victim->second.rec));
        entries_.erase(victim);
        lru_.pop_front();
    }
    return expired.size() - before;
}

void FlowTable::start_flow(const PacketRecord& pkt, double ts, const FlowKey& canon) {
    Entry e;
    e.rec.key = flow_key(pkt); // orientation = this packet's source
    e.rec.first_ts = e.rec.last_ts = ts;
    e.rec.packets.push_back({ts, pkt.payload_len, Direction::Forward});
    e.rec.pkt_count_fwd = 1;
    e.rec.byte_count_fwd = pkt.payload_len;
    e.rec.seq = next_seq_++;
    lru_.push_back(canon);
    e.lru_pos = std::prev(lru_.end());
    entries_.emplace(canon, std::move(e));
}

void FlowTable::append_packet(Entry& e, const PacketRecord& pkt, double ts) {
    const double eff_ts = std::max(ts, e.rec.last_ts); // keep per-flow order
    const bool forward =
        pkt.src_addr == e.rec.key.addr_a && pkt.src_port == e.rec.key.port_a;
    e.rec.packets.push_back(
        {eff_ts, pkt.payload_len, forward ? Direction::Forward : Direction::Reverse});
    e.rec.last_ts = eff_ts;
    if (forward) {
        ++e.rec.pkt_count_fwd;
        e.rec.byte_count_fwd += pkt.payload_len;
    } else {
        ++e.rec.pkt_count_rev;
        e.rec.byte_count_rev += pkt.payload_len;
    }
}

std::vector<FlowRecord> FlowTable::flush() {
    std::vector<FlowRecord> out;
    out.reserve(entries_.size());
    for (auto& [key, entry] : entries_)
        out.push_back(std::move(entry.rec));
    entries_.clear();
    lru_.clear();
    std::sort(out.begin(), out.end(), [](const FlowRecord& a, const FlowRecord& b) {
        if (a.first_ts != b.first_ts)
            return a.first_ts < b.first_ts;
        return a.seq < b.seq;
    });
    return out;
}

} // namespace sfts
