// SPDX-License-Identifier: Apache-2.0
#include "sfts/types.hpp"

#include <arpa/inet.h>

#include <cstring>

namespace sfts {

IpAddr IpAddr::v4(uint32_t host_order) {
    IpAddr a;
    a.bytes[0] = static_cast<uint8_t>(host_order >> 24);
    a.bytes[1] = static_cast<uint8_t>(host_order >> 16);
    a.bytes[2] = static_cast<uint8_t>(host_order >> 8);
    a.bytes[3] = static_cast<uint8_t>(host_order);
    return a;
}

IpAddr IpAddr::v6(const uint8_t* sixteen_bytes) {
    IpAddr a;
    a.is_v6 = true;
    std::memcpy(a.bytes.data(), sixteen_bytes, 16);
    return a;
}

std::string IpAddr::str() const {
    char buf[INET6_ADDRSTRLEN] = {0};
    if (is_v6)
        inet_ntop(AF_INET6, bytes.data(), buf, sizeof(buf));
    else
        inet_ntop(AF_INET, bytes.data(), buf, sizeof(buf));
    return buf;
}

} // namespace sfts
