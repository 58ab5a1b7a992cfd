// beaconkit: phase-0 beacon chain state machine
// Copyright 2026 The beaconkit Authors.
// SPDX-License-Identifier: Apache-2.0

#include "beacon/ssz.hpp"

#include <stdexcept>

namespace beacon {

namespace {

constexpr std::uint64_t kOffsetBytes = 4;

void put_u32le(std::vector<std::uint8_t>& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v >> 16));
    out.push_back(static_cast<std::uint8_t>(v >> 24));
}

std::uint32_t get_u32le(std::span<const std::uint8_t> bytes) {
    return static_cast<std::uint32_t>(bytes[0]) | (static_cast<std::uint32_t>(bytes[1]) << 8) |
           (static_cast<std::uint32_t>(bytes[2]) << 16) | (static_cast<std::uint32_t>(bytes[3]) << 24);
}

// Bits packed little-endian within bytes, zero padded.
std::vector<std::uint8_t> pack_bits(const std::vector<bool>& bits, std::size_t byte_count) {
    std::vector<std::uint8_t> out(byte_count, 0);
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i]) out[i / 8] |= static_cast<std::uint8_t>(1U << (i % 8));
    }
    return out;
}

}  // namespace

TypeDescPtr TypeDesc::boolean() {
    static const TypeDescPtr desc = std::make_shared<TypeDesc>(TypeDesc{.kind = SszKind::Boolean});
    return desc;
}

TypeDescPtr TypeDesc::uint64() {
    static const TypeDescPtr desc = std::make_shared<TypeDesc>(TypeDesc{.kind = SszKind::Uint64});
    return desc;
}

TypeDescPtr TypeDesc::byte_vector32() {
    static const TypeDescPtr desc = std::make_shared<TypeDesc>(TypeDesc{.kind = SszKind::ByteVector32});
    return desc;
}

TypeDescPtr TypeDesc::bit_vector(std::uint64_t length) {
    if (length == 0) throw std::invalid_argument("BitVector length must be >= 1");
    return std::make_shared<TypeDesc>(TypeDesc{.kind = SszKind::BitVector, .length = length});
}

TypeDescPtr TypeDesc::bit_list(std::uint64_t max_length) {
    if (max_length == 0) throw std::invalid_argument("BitList max length must be >= 1");
    return std::make_shared<TypeDesc>(TypeDesc{.kind = SszKind::BitList, .length = max_length});
}

TypeDescPtr TypeDesc::list(TypeDescPtr element, std::uint64_t max_length) {
    if (!element) throw std::invalid_argument("List element descriptor missing");
    if (max_length == 0) throw std::invalid_argument("List max length must be >= 1");
    return std::make_shared<TypeDesc>(
        TypeDesc{.kind = SszKind::List, .length = max_length, .element = std::move(element)});
}

TypeDescPtr TypeDesc::container(std::vector<FieldDesc> fields) {
    if (fields.empty()) throw std::invalid_argument("Container needs at least one field");
    for (const auto& f : fields) {
        if (!f.type) throw std::invalid_argument("Container field descriptor missing");
    }
    return std::make_shared<TypeDesc>(TypeDesc{.kind = SszKind::Container, .fields = std::move(fields)});
}

bool desc_equal(const TypeDesc& a, const TypeDesc& b) {
    if (&a == &b) return true;
    if (a.kind != b.kind || a.length != b.length) return false;
    if (a.kind == SszKind::List) return desc_equal(*a.element, *b.element);
    if (a.kind == SszKind::Container) {
        if (a.fields.size() != b.fields.size()) return false;
        for (std::size_t i = 0; i < a.fields.size(); ++i) {
            if (a.fields[i].name != b.fields[i].name) return false;
            if (!desc_equal(*a.fields[i].type, *b.fields[i].type)) return false;
        }
        return true;
    }
    return true;
}

bool is_fixed_size(const TypeDesc& desc) {
    switch (desc.kind) {
        case SszKind::Boolean:
        case SszKind::Uint64:
        case SszKind::ByteVector32:
        case SszKind::BitVector:
            return true;
        case SszKind::BitList:
        case SszKind::List:
            return false;
        case SszKind::Container:
            for (const auto& f : desc.fields) {
                if (!is_fixed_size(*f.type)) return false;
            }
            return true;
    }
    return false;
}

std::uint64_t fixed_size(const TypeDesc& desc) {
    switch (desc.kind) {
        case SszKind::Boolean: return 1;
        case SszKind::Uint64: return 8;
        case SszKind::ByteVector32: return 32;
        case SszKind::BitVector: return (desc.length + 7) / 8;
        case SszKind::Container: {
            std::uint64_t total = 0;
            for (const auto& f : desc.fields) total += fixed_size(*f.type);
            return total;
        }
        case SszKind::BitList:
        case SszKind::List:
            break;
    }
    return 0;
}

SszValue::SszValue(TypeDescPtr type,
                   std::variant<bool, std::uint64_t, Bytes32, std::vector<bool>, ValueList> payload)
    : type_(std::move(type)), payload_(std::move(payload)) {}

SszValue SszValue::boolean(bool value) { return SszValue(TypeDesc::boolean(), value); }

SszValue SszValue::uint64(std::uint64_t value) { return SszValue(TypeDesc::uint64(), value); }

SszValue SszValue::byte_vector32(const Bytes32& bytes) {
    return SszValue(TypeDesc::byte_vector32(), bytes);
}

SszValue SszValue::bit_vector(std::vector<bool> bits) {
    auto desc = TypeDesc::bit_vector(bits.size());
    return SszValue(std::move(desc), std::move(bits));
}

SszValue SszValue::bit_list(std::uint64_t max_length, std::vector<bool> bits) {
    if (bits.size() > max_length) throw std::invalid_argument("BitList over max length");
    return SszValue(TypeDesc::bit_list(max_length), std::move(bits));
}

SszValue SszValue::list(TypeDescPtr element, std::uint64_t max_length, ValueList elements) {
    if (elements.size() > max_length) throw std::invalid_argument("List over max length");
    auto desc = TypeDesc::list(std::move(element), max_length);
    for (const auto& e : elements) {
        if (!desc_equal(*e.type(), *desc->element)) {
            throw std::invalid_argument("List element type mismatch");
        }
    }
    return SszValue(std::move(desc), std::move(elements));
}

SszValue SszValue::container(std::vector<FieldDesc> fields, ValueList values) {
    auto desc = TypeDesc::container(std::move(fields));
    if (values.size() != desc->fields.size()) {
        throw std::invalid_argument("Container field count mismatch");
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!desc_equal(*values[i].type(), *desc->fields[i].type)) {
            throw std::invalid_argument("Container field type mismatch");
        }
    }
    return SszValue(std::move(desc), std::move(values));
}

SszValue SszValue::with_desc(TypeDescPtr desc, ValueList values) {
    if (!desc) throw std::invalid_argument("descriptor missing");
    if (desc->kind == SszKind::Container) {
        if (values.size() != desc->fields.size()) {
            throw std::invalid_argument("Container field count mismatch");
        }
    } else if (desc->kind == SszKind::List) {
        if (values.size() > desc->length) throw std::invalid_argument("List over max length");
    } else {
        throw std::invalid_argument("with_desc expects a composite descriptor");
    }
    return SszValue(std::move(desc), std::move(values));
}

bool SszValue::as_bool() const { return std::get<bool>(payload_); }
std::uint64_t SszValue::as_uint64() const { return std::get<std::uint64_t>(payload_); }
const Bytes32& SszValue::as_bytes32() const { return std::get<Bytes32>(payload_); }
const std::vector<bool>& SszValue::as_bits() const { return std::get<std::vector<bool>>(payload_); }
const SszValue::ValueList& SszValue::as_values() const { return std::get<ValueList>(payload_); }

bool operator==(const SszValue& a, const SszValue& b) {
    return desc_equal(*a.type_, *b.type_) && a.payload_ == b.payload_;
}

// --- encode ---------------------------------------------------------------

std::vector<std::uint8_t> encode(const SszValue& value) {
    const TypeDesc& desc = *value.type();
    switch (desc.kind) {
        case SszKind::Boolean:
            return {static_cast<std::uint8_t>(value.as_bool() ? 1 : 0)};
        case SszKind::Uint64: {
            std::vector<std::uint8_t> out(8);
            std::uint64_t v = value.as_uint64();
            for (int i = 0; i < 8; ++i) out[i] = static_cast<std::uint8_t>(v >> (8 * i));
            return out;
        }
        case SszKind::ByteVector32: {
            const Bytes32& b = value.as_bytes32();
            return {b.begin(), b.end()};
        }
        case SszKind::BitVector:
            return pack_bits(value.as_bits(), (desc.length + 7) / 8);
        case SszKind::BitList: {
            // Sentinel bit at position n marks the length, then zero pad.
            const auto& bits = value.as_bits();
            std::vector<bool> with_sentinel = bits;
            with_sentinel.push_back(true);
            return pack_bits(with_sentinel, (with_sentinel.size() + 7) / 8);
        }
        case SszKind::List:
        case SszKind::Container: {
            const auto& values = value.as_values();
            std::vector<const TypeDesc*> kinds;
            if (desc.kind == SszKind::List) {
                kinds.assign(values.size(), desc.element.get());
            } else {
                for (const auto& f : desc.fields) kinds.push_back(f.type.get());
            }

            std::uint64_t fixed_len = 0;
            for (const auto* k : kinds) {
                fixed_len += is_fixed_size(*k) ? fixed_size(*k) : kOffsetBytes;
            }

            std::vector<std::uint8_t> fixed_part;
            std::vector<std::uint8_t> heap;
            fixed_part.reserve(fixed_len);
            for (std::size_t i = 0; i < values.size(); ++i) {
                if (is_fixed_size(*kinds[i])) {
                    auto piece = encode(values[i]);
                    fixed_part.insert(fixed_part.end(), piece.begin(), piece.end());
                } else {
                    put_u32le(fixed_part, static_cast<std::uint32_t>(fixed_len + heap.size()));
                    auto piece = encode(values[i]);
                    heap.insert(heap.end(), piece.begin(), piece.end());
                }
            }
            fixed_part.insert(fixed_part.end(), heap.begin(), heap.end());
            return fixed_part;
        }
    }
    return {};
}

// --- decode ---------------------------------------------------------------

namespace {

Result<SszValue> decode_impl(std::span<const std::uint8_t> bytes, const TypeDescPtr& desc);

Result<SszValue> decode_bits_fixed(std::span<const std::uint8_t> bytes, std::uint64_t length) {
    const std::uint64_t want = (length + 7) / 8;
    if (bytes.size() != want) {
        return Error(ErrorCode::MalformedLength, "bitvector expects " + std::to_string(want) + " bytes");
    }
    std::vector<bool> bits(length);
    for (std::uint64_t i = 0; i < length; ++i) {
        bits[i] = (bytes[i / 8] >> (i % 8)) & 1;
    }
    // Padding bits beyond the fixed length must be zero.
    for (std::uint64_t i = length; i < want * 8; ++i) {
        if ((bytes[i / 8] >> (i % 8)) & 1) {
            return Error(ErrorCode::MalformedPadding, "nonzero bit past bitvector length");
        }
    }
    return SszValue::bit_vector(std::move(bits));
}

Result<SszValue> decode_bit_list(std::span<const std::uint8_t> bytes, std::uint64_t max_length) {
    if (bytes.empty()) {
        return Error(ErrorCode::MalformedLength, "bitlist needs at least one byte");
    }
    const std::uint8_t last = bytes.back();
    if (last == 0) {
        return Error(ErrorCode::MalformedSentinel, "missing sentinel bit");
    }
    int sentinel_pos = 7;
    while (((last >> sentinel_pos) & 1) == 0) --sentinel_pos;
    const std::uint64_t bit_count = (bytes.size() - 1) * 8 + static_cast<std::uint64_t>(sentinel_pos);
    if (bit_count > max_length) {
        return Error(ErrorCode::MalformedListLimit,
                     "bitlist length " + std::to_string(bit_count) + " over max " + std::to_string(max_length));
    }
    // With the sentinel the highest set bit, a shorter encoding would have
    // fit in fewer bytes; require the minimal byte count for injectivity.
    if ((bit_count + 1 + 7) / 8 != bytes.size()) {
        return Error(ErrorCode::MalformedSentinel, "sentinel not in final byte");
    }
    std::vector<bool> bits(bit_count);
    for (std::uint64_t i = 0; i < bit_count; ++i) {
        bits[i] = (bytes[i / 8] >> (i % 8)) & 1;
    }
    return SszValue::bit_list(max_length, std::move(bits));
}

Result<SszValue> decode_composite(std::span<const std::uint8_t> bytes, const TypeDescPtr& desc) {
    std::vector<TypeDescPtr> kinds;
    if (desc->kind == SszKind::Container) {
        for (const auto& f : desc->fields) kinds.push_back(f.type);
    }

    if (desc->kind == SszKind::List) {
        const TypeDescPtr& elem = desc->element;
        if (is_fixed_size(*elem)) {
            const std::uint64_t elem_size = fixed_size(*elem);
            if (bytes.size() % elem_size != 0) {
                return Error(ErrorCode::MalformedLength, "list bytes not a multiple of element size");
            }
            const std::uint64_t count = bytes.size() / elem_size;
            if (count > desc->length) {
                return Error(ErrorCode::MalformedListLimit, "list count over max");
            }
            SszValue::ValueList elements;
            elements.reserve(count);
            for (std::uint64_t i = 0; i < count; ++i) {
                auto piece = decode_impl(bytes.subspan(i * elem_size, elem_size), elem);
                if (!piece.ok()) return piece.error();
                elements.push_back(std::move(piece).value());
            }
            return SszValue::with_desc(desc, std::move(elements));
        }
        // Variable-size elements: leading offset table defines the count.
        if (bytes.empty()) {
            return SszValue::with_desc(desc, {});
        }
        if (bytes.size() < kOffsetBytes) {
            return Error(ErrorCode::MalformedLength, "list too short for offset");
        }
        const std::uint32_t first = get_u32le(bytes);
        if (first % kOffsetBytes != 0 || first == 0) {
            return Error(ErrorCode::MalformedOffset, "first offset must delimit the offset table");
        }
        const std::uint64_t count = first / kOffsetBytes;
        if (count > desc->length) {
            return Error(ErrorCode::MalformedListLimit, "list count over max");
        }
        if (first > bytes.size()) {
            return Error(ErrorCode::MalformedOffset, "offset past end");
        }
        std::vector<std::uint64_t> offsets(count + 1);
        offsets[count] = bytes.size();
        for (std::uint64_t i = 0; i < count; ++i) {
            offsets[i] = get_u32le(bytes.subspan(i * kOffsetBytes, kOffsetBytes));
        }
        for (std::uint64_t i = 0; i + 1 <= count; ++i) {
            if (offsets[i] > offsets[i + 1] || offsets[i] > bytes.size()) {
                return Error(ErrorCode::MalformedOffset, "offsets must be non-decreasing and in range");
            }
        }
        SszValue::ValueList elements;
        elements.reserve(count);
        for (std::uint64_t i = 0; i < count; ++i) {
            auto piece = decode_impl(bytes.subspan(offsets[i], offsets[i + 1] - offsets[i]), elem);
            if (!piece.ok()) return piece.error();
            elements.push_back(std::move(piece).value());
        }
        return SszValue::with_desc(desc, std::move(elements));
    }

    // Container.
    std::uint64_t fixed_len = 0;
    bool any_variable = false;
    for (const auto& k : kinds) {
        if (is_fixed_size(*k)) {
            fixed_len += fixed_size(*k);
        } else {
            fixed_len += kOffsetBytes;
            any_variable = true;
        }
    }
    if (!any_variable) {
        if (bytes.size() != fixed_len) {
            return Error(ErrorCode::MalformedLength, "container expects " + std::to_string(fixed_len) + " bytes");
        }
    } else if (bytes.size() < fixed_len) {
        return Error(ErrorCode::MalformedLength, "container shorter than its fixed part");
    }

    SszValue::ValueList values;
    values.reserve(kinds.size());
    std::uint64_t cursor = 0;
    std::vector<std::pair<std::size_t, std::uint64_t>> pending;  // field index, offset
    for (std::size_t i = 0; i < kinds.size(); ++i) {
        if (is_fixed_size(*kinds[i])) {
            const std::uint64_t size = fixed_size(*kinds[i]);
            auto piece = decode_impl(bytes.subspan(cursor, size), kinds[i]);
            if (!piece.ok()) return piece.error();
            values.push_back(std::move(piece).value());
            cursor += size;
        } else {
            const std::uint32_t offset = get_u32le(bytes.subspan(cursor, kOffsetBytes));
            pending.emplace_back(i, offset);
            // Placeholder; replaced below once the slice is decoded.
            values.push_back(SszValue::boolean(false));
            cursor += kOffsetBytes;
        }
    }
    if (!pending.empty()) {
        if (pending.front().second != fixed_len) {
            return Error(ErrorCode::MalformedOffset, "first offset must equal fixed part size");
        }
        for (std::size_t i = 0; i < pending.size(); ++i) {
            const std::uint64_t start = pending[i].second;
            const std::uint64_t end = (i + 1 < pending.size()) ? pending[i + 1].second : bytes.size();
            if (start > end || end > bytes.size()) {
                return Error(ErrorCode::MalformedOffset, "offsets must be non-decreasing and in range");
            }
            auto piece = decode_impl(bytes.subspan(start, end - start), kinds[pending[i].first]);
            if (!piece.ok()) return piece.error();
            values[pending[i].first] = std::move(piece).value();
        }
    }
    return SszValue::with_desc(desc, std::move(values));
}

Result<SszValue> decode_impl(std::span<const std::uint8_t> bytes, const TypeDescPtr& desc) {
    switch (desc->kind) {
        case SszKind::Boolean:
            if (bytes.size() != 1) {
                return Error(ErrorCode::MalformedLength, "boolean expects 1 byte");
            }
            if (bytes[0] > 1) {
                return Error(ErrorCode::MalformedBoolean, "boolean byte must be 0 or 1");
            }
            return SszValue::boolean(bytes[0] == 1);
        case SszKind::Uint64: {
            if (bytes.size() != 8) {
                return Error(ErrorCode::MalformedLength, "uint64 expects 8 bytes");
            }
            std::uint64_t v = 0;
            for (int i = 7; i >= 0; --i) v = (v << 8) | bytes[static_cast<std::size_t>(i)];
            return SszValue::uint64(v);
        }
        case SszKind::ByteVector32: {
            if (bytes.size() != 32) {
                return Error(ErrorCode::MalformedLength, "byte vector expects 32 bytes");
            }
            Bytes32 out{};
            std::copy(bytes.begin(), bytes.end(), out.begin());
            return SszValue::byte_vector32(out);
        }
        case SszKind::BitVector:
            return decode_bits_fixed(bytes, desc->length);
        case SszKind::BitList:
            return decode_bit_list(bytes, desc->length);
        case SszKind::List:
        case SszKind::Container:
            return decode_composite(bytes, desc);
    }
    return Error(ErrorCode::MalformedLength, "unknown kind");
}

}  // namespace

Result<SszValue> decode(std::span<const std::uint8_t> bytes, const TypeDescPtr& desc) {
    return decode_impl(bytes, desc);
}

}  // namespace beacon
