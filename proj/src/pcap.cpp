// SPDX-License-Identifier: Apache-2.0
#include "sfts/pcap.hpp"

#include <sys/stat.h>

#include <algorithm>
#include <cmath>
#include <cstring>

namespace sfts {

namespace {

// classic pcap magics
constexpr uint32_t kMagicUs = 0xa1b2c3d4u;
constexpr uint32_t kMagicUsSwapped = 0xd4c3b2a1u;
constexpr uint32_t kMagicNs = 0xa1b23c4du;
constexpr uint32_t kMagicNsSwapped = 0x4d3cb2a1u;

// pcapng block types
constexpr uint32_t kBlockSectionHeader = 0x0a0d0d0au;
constexpr uint32_t kBlockInterface = 0x00000001u;
constexpr uint32_t kBlockEnhancedPacket = 0x00000006u;
constexpr uint32_t kBlockSimplePacket = 0x00000003u;
constexpr uint32_t kByteOrderMagic = 0x1a2b3c4du;

// link layers
constexpr uint32_t kLinkEthernet = 1;
constexpr uint32_t kLinkRawIp = 101;
constexpr uint32_t kLinkLinuxSll = 113;

constexpr uint16_t kEthertypeIpv4 = 0x0800;
constexpr uint16_t kEthertypeIpv6 = 0x86dd;
constexpr uint16_t kEthertypeVlan = 0x8100;
constexpr uint16_t kEthertypeQinQ = 0x88a8;

constexpr size_t kMaxRecordLen = 256 * 1024 * 1024;

bool link_supported(uint32_t link) {
    return link == kLinkEthernet || link == kLinkRawIp || link == kLinkLinuxSll;
}

// network byte order loads, independent of file endianness
uint16_t be16(const uint8_t* p) {
    return static_cast<uint16_t>(p[0]) << 8 | p[1];
}

uint32_t swap32(uint32_t v) { return __builtin_bswap32(v); }
uint16_t swap16(uint16_t v) { return __builtin_bswap16(v); }

} // namespace

uint16_t CaptureReader::load16(const void* p) const {
    uint16_t v;
    std::memcpy(&v, p, 2);
    return swap_ ? swap16(v) : v;
}

uint32_t CaptureReader::load32(const void* p) const {
    uint32_t v;
    std::memcpy(&v, p, 4);
    return swap_ ? swap32(v) : v;
}

CaptureReader::CaptureReader(const std::string& path, LengthMode mode)
    : path_(path), mode_(mode) {
    struct stat st{};
    if (stat(path.c_str(), &st) != 0)
        throw CaptureError(CaptureErrorKind::FileNotFound, "no such file: " + path);
    in_.open(path, std::ios::binary);
    if (!in_)
        throw CaptureError(CaptureErrorKind::Io, "cannot open: " + path);

    uint8_t head[24];
    if (!in_.read(reinterpret_cast<char*>(head), 4))
        throw CaptureError(CaptureErrorKind::UnrecognizedFormat,
                           "not a capture file (too short): " + path);
    uint32_t magic;
    std::memcpy(&magic, head, 4);

    if (magic == kBlockSectionHeader) {
        format_ = Format::PcapNg;
        // rewind; the block loop consumes the SHB itself
        in_.seekg(0);
        return;
    }

    switch (magic) {
    case kMagicUs:
        break;
    case kMagicNs:
        ts_unit_ = 1e-9;
        break;
    case kMagicUsSwapped:
        swap_ = true;
        break;
    case kMagicNsSwapped:
        swap_ = true;
        ts_unit_ = 1e-9;
        break;
    default:
        throw CaptureError(CaptureErrorKind::UnrecognizedFormat,
                           "unrecognized capture format: " + path);
    }
    format_ = Format::Pcap;
    if (!in_.read(reinterpret_cast<char*>(head + 4), 20))
        throw CaptureError(CaptureErrorKind::UnrecognizedFormat,
                           "truncated pcap header: " + path);
    link_type_ = load32(head + 20);
    link_type_known_ = true;
    if (!link_supported(link_type_))
        throw CaptureError(CaptureErrorKind::UnsupportedLinkLayer,
                           "unsupported link layer " + std::to_string(link_type_));
}

bool CaptureReader::read_exact(void* dst, size_t len) {
    return static_cast<bool>(in_.read(reinterpret_cast<char*>(dst), len));
}

std::optional<PacketRecord> CaptureReader::next() {
    PacketRecord out;
    while (!eof_) {
        bool got = false;
        const bool more = format_ == Format::Pcap ? next_pcap(out, got)
                                                  : next_pcapng(out, got);
        if (got)
            return out;
        if (!more)
            eof_ = true;
    }
    return std::nullopt;
}

bool CaptureReader::next_pcap(PacketRecord& out, bool& got) {
    uint8_t hdr[16];
    if (!read_exact(hdr, 16))
        return false; // clean end of stream
    const uint32_t ts_sec = load32(hdr);
    const uint32_t ts_frac = load32(hdr + 4);
    const uint32_t incl_len = load32(hdr + 8);
    if (incl_len > kMaxRecordLen) {
        ++stats_.malformed;
        return false;
    }
    buf_.resize(incl_len);
    if (incl_len > 0 && !read_exact(buf_.data(), incl_len)) {
        // file ends mid-record
        ++stats_.malformed;
        return false;
    }
    out = PacketRecord{};
    out.timestamp = static_cast<double>(ts_sec) + ts_frac * ts_unit_;
    switch (decode_frame(buf_.data(), incl_len, link_type_, out)) {
    case Decode::Ok:
        ++stats_.emitted;
        got = true;
        break;
    case Decode::NonIp:
        ++stats_.skipped_non_ip;
        break;
    case Decode::Malformed:
        ++stats_.malformed;
        break;
    }
    return true;
}

void CaptureReader::parse_interface_block(const std::vector<uint8_t>& body) {
    NgInterface iface;
    if (body.size() < 8) {
        interfaces_.push_back(iface);
        return;
    }
    iface.link_type = load16(body.data());
    if (!link_supported(iface.link_type))
        throw CaptureError(CaptureErrorKind::UnsupportedLinkLayer,
                           "unsupported link layer " + std::to_string(iface.link_type));
    if (!link_type_known_) {
        link_type_ = iface.link_type;
        link_type_known_ = true;
    }
    // options: walk for if_tsresol (code 9)
    size_t off = 8;
    while (off + 4 <= body.size()) {
        const uint16_t code = load16(body.data() + off);
        const uint16_t len = load16(body.data() + off + 2);
        off += 4;
        if (code == 0)
            break;
        if (off + len > body.size())
            break;
        if (code == 9 && len >= 1) {
            const uint8_t r = body[off];
            if (r & 0x80)
                iface.ts_unit = std::pow(2.0, -static_cast<double>(r & 0x7f));
            else
                iface.ts_unit = std::pow(10.0, -static_cast<double>(r));
        }
        off += (len + 3u) & ~3u;
    }
    interfaces_.push_back(iface);
}

bool CaptureReader::next_pcapng(PacketRecord& out, bool& got) {
    uint8_t hdr[8];
    if (!read_exact(hdr, 8))
        return false;
    uint32_t block_type;
    std::memcpy(&block_type, hdr, 4);

    if (block_type == kBlockSectionHeader) {
        // endianness is established by the byte-order magic inside the body
        uint8_t bom[4];
        if (!read_exact(bom, 4))
            return false;
        uint32_t magic;
        std::memcpy(&magic, bom, 4);
        if (magic == kByteOrderMagic)
            swap_ = false;
        else if (swap32(magic) == kByteOrderMagic)
            swap_ = true;
        else
            throw CaptureError(CaptureErrorKind::UnrecognizedFormat,
                               "bad pcapng byte-order magic: " + path_);
        const uint32_t total_len = load32(hdr + 4);
        if (total_len < 16 || total_len > kMaxRecordLen || (total_len & 3))
            return false;
        buf_.resize(total_len - 12);
        if (!read_exact(buf_.data(), buf_.size()))
            return false;
        interfaces_.clear(); // new section, new interface list
        return true;
    }

    const uint32_t total_len = load32(hdr + 4);
    if (total_len < 12 || total_len > kMaxRecordLen || (total_len & 3))
        return false;
    buf_.resize(total_len - 8);
    if (!read_exact(buf_.data(), buf_.size()))
        return false;
    const std::vector<uint8_t>& body = buf_; // excludes trailing total_len copy
    const size_t body_len = buf_.size() - 4;

    block_type = swap_ ? swap32(block_type) : block_type;
    if (block_type == kBlockInterface) {
        parse_interface_block({body.begin(), body.begin() + body_len});
        return true;
    }
    if (block_type == kBlockEnhancedPacket) {
        if (body_len < 20) {
            ++stats_.malformed;
            return true;
        }
        const uint32_t iface_id = load32(body.data());
        const uint32_t ts_high = load32(body.data() + 4);
        const uint32_t ts_low = load32(body.data() + 8);
        const uint32_t cap_len = load32(body.data() + 12);
        if (iface_id >= interfaces_.size() || 20 + cap_len > body_len) {
            ++stats_.malformed;
            return true;
        }
        const NgInterface& iface = interfaces_[iface_id];
        out = PacketRecord{};
        const uint64_t ticks = (static_cast<uint64_t>(ts_high) << 32) | ts_low;
        out.timestamp = static_cast<double>(ticks) * iface.ts_unit;
        switch (decode_frame(body.data() + 20, cap_len, iface.link_type, out)) {
        case Decode::Ok:
            ++stats_.emitted;
            got = true;
            break;
        case Decode::NonIp:
            ++stats_.skipped_non_ip;
            break;
        case Decode::Malformed:
            ++stats_.malformed;
            break;
        }
        return true;
    }
    if (block_type == kBlockSimplePacket) {
        // no timestamp field; unusable as a time-series point
        ++stats_.malformed;
        return true;
    }
    // other block types (name resolution, statistics, custom) are not packets
    return true;
}

CaptureReader::Decode CaptureReader::decode_frame(const uint8_t* p, size_t caplen,
                                                  uint32_t link,
                                                  PacketRecord& out) const {
    switch (link) {
    case kLinkEthernet: {
        if (caplen < 14)
            return Decode::Malformed;
        uint16_t ethertype = be16(p + 12);
        size_t off = 14;
        int vlan_tags = 0;
        while ((ethertype == kEthertypeVlan || ethertype == kEthertypeQinQ) &&
               vlan_tags < 4) {
            if (off + 4 > caplen)
                return Decode::Malformed;
            ethertype = be16(p + off + 2);
            off += 4;
            ++vlan_tags;
        }
        if (ethertype == kEthertypeIpv4)
            return decode_ipv4(p + off, caplen - off, out);
        if (ethertype == kEthertypeIpv6)
            return decode_ipv6(p + off, caplen - off, out);
        return Decode::NonIp;
    }
    case kLinkLinuxSll: {
        if (caplen < 16)
            return Decode::Malformed;
        const uint16_t proto = be16(p + 14);
        if (proto == kEthertypeIpv4)
            return decode_ipv4(p + 16, caplen - 16, out);
        if (proto == kEthertypeIpv6)
            return decode_ipv6(p + 16, caplen - 16, out);
        return Decode::NonIp;
    }
    case kLinkRawIp: {
        if (caplen < 1)
            return Decode::Malformed;
        const uint8_t version = p[0] >> 4;
        if (version == 4)
            return decode_ipv4(p, caplen, out);
        if (version == 6)
            return decode_ipv6(p, caplen, out);
        return Decode::Malformed;
    }
    default:
        return Decode::Malformed;
    }
}

CaptureReader::Decode CaptureReader::decode_ipv4(const uint8_t* p, size_t len,
                                                 PacketRecord& out) const {
    if (len < 20 || (p[0] >> 4) != 4)
        return Decode::Malformed;
    const size_t ihl = static_cast<size_t>(p[0] & 0x0f) * 4;
    if (ihl < 20 || len < ihl)
        return Decode::Malformed;
    const uint32_t total_len = be16(p + 2);
    if (total_len < ihl)
        return Decode::Malformed;

    out.protocol = p[9];
    out.src_addr = IpAddr{};
    out.dst_addr = IpAddr{};
    std::memcpy(out.src_addr.bytes.data(), p + 12, 4);
    std::memcpy(out.dst_addr.bytes.data(), p + 16, 4);

    const uint16_t frag = be16(p + 6);
    const uint32_t frag_offset = (frag & 0x1fff) * 8;
    int64_t payload = 0;

    if (frag_offset > 0) {
        // non-first fragment: no transport header present
        payload = static_cast<int64_t>(total_len) - static_cast<int64_t>(ihl);
    } else if (out.protocol == kProtoTcp) {
        if (len < ihl + 20)
            return Decode::Malformed;
        const size_t doff = static_cast<size_t>(p[ihl + 12] >> 4) * 4;
        if (doff < 20)
            return Decode::Malformed;
        out.src_port = be16(p + ihl);
        out.dst_port = be16(p + ihl + 2);
        payload = static_cast<int64_t>(total_len) - static_cast<int64_t>(ihl + doff);
    } else if (out.protocol == kProtoUdp) {
        if (len < ihl + 8)
            return Decode::Malformed;
        out.src_port = be16(p + ihl);
        out.dst_port = be16(p + ihl + 2);
        payload = static_cast<int64_t>(total_len) - static_cast<int64_t>(ihl + 8);
    } else {
        payload = static_cast<int64_t>(total_len) - static_cast<int64_t>(ihl);
    }

    if (mode_ == LengthMode::IpTotal)
        payload = total_len;
    out.payload_len = static_cast<uint32_t>(
        std::clamp<int64_t>(payload, 0, static_cast<int64_t>(total_len)));
    return Decode::Ok;
}

CaptureReader::Decode CaptureReader::decode_ipv6(const uint8_t* p, size_t len,
                                                 PacketRecord& out) const {
    if (len < 40 || (p[0] >> 4) != 6)
        return Decode::Malformed;
    const uint32_t payload_len_field = be16(p + 4);
    uint8_t next = p[6];
    out.src_addr = IpAddr::v6(p + 8);
    out.dst_addr = IpAddr::v6(p + 24);

    size_t off = 40;
    size_t ext_len = 0;
    bool non_first_fragment = false;
    for (int i = 0; i < 8; ++i) {
        if (next == 0 || next == 43 || next == 60) { // hop-by-hop/routing/dstopts
            if (off + 2 > len)
                return Decode::Malformed;
            const size_t h = (static_cast<size_t>(p[off + 1]) + 1) * 8;
            next = p[off];
            off += h;
            ext_len += h;
        } else if (next == 44) { // fragment
            if (off + 8 > len)
                return Decode::Malformed;
            non_first_fragment = (be16(p + off + 2) >> 3) != 0;
            next = p[off];
            off += 8;
            ext_len += 8;
            if (non_first_fragment)
                break;
        } else if (next == 51) { // authentication header
            if (off + 2 > len)
                return Decode::Malformed;
            const size_t h = (static_cast<size_t>(p[off + 1]) + 2) * 4;
            next = p[off];
            off += h;
            ext_len += h;
        } else {
            break;
        }
        if (off > len)
            return Decode::Malformed;
    }

    out.protocol = next;
    int64_t payload = 0;
    if (non_first_fragment) {
        payload = static_cast<int64_t>(payload_len_field) - static_cast<int64_t>(ext_len);
        out.protocol = next;
        out.src_port = out.dst_port = 0;
    } else if (next == kProtoTcp) {
        if (len < off + 20)
            return Decode::Malformed;
        const size_t doff = static_cast<size_t>(p[off + 12] >> 4) * 4;
        if (doff < 20)
            return Decode::Malformed;
        out.src_port = be16(p + off);
        out.dst_port = be16(p + off + 2);
        payload = static_cast<int64_t>(payload_len_field) -
                  static_cast<int64_t>(ext_len + doff);
    } else if (next == kProtoUdp) {
        if (len < off + 8)
            return Decode::Malformed;
        out.src_port = be16(p + off);
        out.dst_port = be16(p + off + 2);
        payload = static_cast<int64_t>(payload_len_field) -
                  static_cast<int64_t>(ext_len + 8);
    } else {
        payload = static_cast<int64_t>(payload_len_field) - static_cast<int64_t>(ext_len);
    }

    if (mode_ == LengthMode::IpTotal)
        payload = static_cast<int64_t>(payload_len_field) + 40;
    out.payload_len = static_cast<uint32_t>(
        std::clamp<int64_t>(payload, 0, static_cast<int64_t>(payload_len_field) + 40));
    return Decode::Ok;
}

} // namespace sfts
