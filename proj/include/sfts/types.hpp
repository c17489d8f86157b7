// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace sfts {

/// How per-packet byte counts are derived from the IP headers.
enum class LengthMode {
    TransportPayload, ///< IP total length minus IP and transport headers
    IpTotal           ///< entire IP datagram length
};

enum class Direction : uint8_t { Forward = 0, Reverse = 1 };

/// IPv4 or IPv6 address. IPv4 occupies the first four bytes.
struct IpAddr {
    std::array<uint8_t, 16> bytes{};
    bool is_v6 = false;

    friend bool operator==(const IpAddr&, const IpAddr&) = default;
    friend auto operator<=>(const IpAddr&, const IpAddr&) = default;

    static IpAddr v4(uint32_t host_order);
    static IpAddr v6(const uint8_t* sixteen_bytes);
    std::string str() const;
};

/// One observed packet after link/IP/transport decoding.
struct PacketRecord {
    double timestamp = 0.0;   // seconds since epoch, capture precision preserved
    uint32_t payload_len = 0; // bytes, per LengthMode
    IpAddr src_addr;
    IpAddr dst_addr;
    uint8_t protocol = 0;     // IP protocol number
    uint16_t src_port = 0;    // 0 unless TCP or UDP
    uint16_t dst_port = 0;
};

inline constexpr uint8_t kProtoTcp = 6;
inline constexpr uint8_t kProtoUdp = 17;

} // namespace sfts
