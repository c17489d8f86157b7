// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sfts/types.hpp"

namespace sfts {

enum class CaptureErrorKind {
    FileNotFound,
    UnrecognizedFormat,
    UnsupportedLinkLayer,
    Io,
};

class CaptureError : public std::runtime_error {
public:
    CaptureError(CaptureErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    CaptureErrorKind kind() const { return kind_; }

private:
    CaptureErrorKind kind_;
};

struct CaptureStats {
    uint64_t emitted = 0;        // PacketRecords produced
    uint64_t skipped_non_ip = 0; // ARP and friends
    uint64_t malformed = 0;      // truncated or undecodable records
    uint64_t total() const { return emitted + skipped_non_ip + malformed; }
};

/// Streaming reader for classic pcap (little/big endian, microsecond and
/// nanosecond variants) and pcapng. Non-IP packets are skipped silently,
/// truncated records are counted and never abort the stream. Supported link
/// layers: Ethernet, raw IP, Linux cooked capture.
class CaptureReader {
public:
    explicit CaptureReader(const std::string& path,
                           LengthMode mode = LengthMode::TransportPayload);

    /// Next decoded IP packet in file order, or nullopt at end of stream.
    std::optional<PacketRecord> next();

    const CaptureStats& stats() const { return stats_; }

    /// Link-layer type: the classic pcap header's, or the first pcapng
    /// interface's once seen.
    uint32_t link_type() const { return link_type_; }

private:
    enum class Format { Pcap, PcapNg };
    enum class Decode { Ok, NonIp, Malformed };

    bool read_exact(void* dst, size_t len);
    bool next_pcap(PacketRecord& out, bool& got);
    bool next_pcapng(PacketRecord& out, bool& got);
    void parse_interface_block(const std::vector<uint8_t>& body);
    Decode decode_frame(const uint8_t* p, size_t caplen, uint32_t link,
                        PacketRecord& out) const;
    Decode decode_ipv4(const uint8_t* p, size_t len, PacketRecord& out) const;
    Decode decode_ipv6(const uint8_t* p, size_t len, PacketRecord& out) const;

    uint16_t load16(const void* p) const;
    uint32_t load32(const void* p) const;

    std::ifstream in_;
    std::string path_;
    Format format_ = Format::Pcap;
    LengthMode mode_ = LengthMode::TransportPayload;
    bool swap_ = false;
    double ts_unit_ = 1e-6;
    uint32_t link_type_ = 0;
    bool link_type_known_ = false;
    struct NgInterface {
        uint32_t link_type = 0;
        double ts_unit = 1e-6;
    };
    std::vector<NgInterface> interfaces_;
    std::vector<uint8_t> buf_;
    CaptureStats stats_;
    bool eof_ = false;
};

} // namespace sfts
