// beaconkit: phase-0 beacon chain state machine
// Copyright 2026 The beaconkit Authors.
// SPDX-License-Identifier: Apache-2.0

#include "beacon/merkle.hpp"

#include <openssl/evp.h>

#include <bit>
#include <cassert>
#include <cstring>
#include <stdexcept>

namespace beacon {

namespace {

constexpr std::uint64_t kMaxTreeDepth = 64;

std::vector<Bytes32> zero_ladder(const Hasher& hasher) {
    std::vector<Bytes32> ladder(kMaxTreeDepth + 1);
    ladder[0] = Bytes32{};
    std::uint8_t buf[64];
    for (std::uint64_t d = 1; d <= kMaxTreeDepth; ++d) {
        std::memcpy(buf, ladder[d - 1].data(), 32);
        std::memcpy(buf + 32, ladder[d - 1].data(), 32);
        ladder[d] = hasher(std::span<const std::uint8_t, 64>(buf, 64));
    }
    return ladder;
}

Bytes32 hash_pair(const Bytes32& left, const Bytes32& right, const Hasher& hasher) {
    std::uint8_t buf[64];
    std::memcpy(buf, left.data(), 32);
    std::memcpy(buf + 32, right.data(), 32);
    return hasher(std::span<const std::uint8_t, 64>(buf, 64));
}

}  // namespace

Bytes32 sha256_64(std::span<const std::uint8_t, 64> input) {
    thread_local EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    Bytes32 out{};
    unsigned int out_len = 0;
    if (EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1 ||
        EVP_DigestUpdate(ctx, input.data(), input.size()) != 1 ||
        EVP_DigestFinal_ex(ctx, out.data(), &out_len) != 1 || out_len != 32) {
        throw std::runtime_error("sha256 failed");
    }
    return out;
}

const Hasher& sha256_hasher() {
    static const Hasher hasher = [](std::span<const std::uint8_t, 64> input) {
        return sha256_64(input);
    };
    return hasher;
}

std::uint64_t next_power_of_two(std::uint64_t n) {
    if (n <= 1) return 1;
    assert(n <= (1ULL << 63));
    return std::bit_ceil(n);
}

Bytes32 zero_subtree_root(std::uint64_t depth, const Hasher& hasher) {
    assert(depth <= kMaxTreeDepth);
    // The default hasher dominates; cache its ladder once.
    if (&hasher == &sha256_hasher()) {
        static const std::vector<Bytes32> ladder = zero_ladder(sha256_hasher());
        return ladder[depth];
    }
    Bytes32 node{};
    std::uint8_t buf[64];
    for (std::uint64_t d = 0; d < depth; ++d) {
        std::memcpy(buf, node.data(), 32);
        std::memcpy(buf + 32, node.data(), 32);
        node = hasher(std::span<const std::uint8_t, 64>(buf, 64));
    }
    return node;
}

std::vector<Bytes32> pack(const SszValue& value) {
    const TypeDesc& desc = *value.type();
    std::vector<std::uint8_t> serial;
    switch (desc.kind) {
        case SszKind::Boolean:
        case SszKind::Uint64:
        case SszKind::ByteVector32:
        case SszKind::BitVector:
            serial = encode(value);
            break;
        case SszKind::BitList: {
            // Chunking ignores the wire sentinel.
            const auto& bits = value.as_bits();
            serial.assign((bits.size() + 7) / 8, 0);
            for (std::size_t i = 0; i < bits.size(); ++i) {
                if (bits[i]) serial[i / 8] |= static_cast<std::uint8_t>(1U << (i % 8));
            }
            break;
        }
        case SszKind::List:
            // Lists of basic elements chunk their concatenated serialization.
            assert(desc.element->kind == SszKind::Uint64 || desc.element->kind == SszKind::Boolean);
            for (const auto& elem : value.as_values()) {
                auto piece = encode(elem);
                serial.insert(serial.end(), piece.begin(), piece.end());
            }
            break;
        case SszKind::Container:
            assert(false && "containers are merkleized from field roots, not packed");
            return {};
    }
    const std::size_t chunk_count = (serial.size() + 31) / 32;
    std::vector<Bytes32> chunks(chunk_count, Bytes32{});
    for (std::size_t i = 0; i < serial.size(); ++i) {
        chunks[i / 32][i % 32] = serial[i];
    }
    return chunks;
}

Result<Root> merkleize(std::span<const Bytes32> chunks, std::optional<std::uint64_t> limit,
                       const Hasher& hasher) {
    if (limit && *limit < chunks.size()) {
        return Error(ErrorCode::LimitExceeded,
                     std::to_string(chunks.size()) + " chunks over limit " + std::to_string(*limit));
    }
    const std::uint64_t virtual_width =
        next_power_of_two(limit ? *limit : static_cast<std::uint64_t>(chunks.size()));
    const std::uint64_t depth = static_cast<std::uint64_t>(std::countr_zero(virtual_width));

    // All-zero suffixes fold into precomputed zero-subtree roots, so only
    // the populated prefix is ever hashed.
    std::size_t populated = chunks.size();
    while (populated > 0 && chunks[populated - 1] == Bytes32{}) --populated;

    if (populated == 0) {
        return Root{zero_subtree_root(depth, hasher)};
    }
    std::vector<Bytes32> level(chunks.begin(), chunks.begin() + static_cast<std::ptrdiff_t>(populated));
    for (std::uint64_t d = 0; d < depth; ++d) {
        if (level.size() % 2 == 1) level.push_back(zero_subtree_root(d, hasher));
        for (std::size_t i = 0; i < level.size() / 2; ++i) {
            level[i] = hash_pair(level[2 * i], level[2 * i + 1], hasher);
        }
        level.resize(level.size() / 2);
    }
    return Root{level[0]};
}

Root mix_in_length(const Root& root, std::uint64_t length, const Hasher& hasher) {
    Bytes32 length_chunk{};
    for (int i = 0; i < 8; ++i) {
        length_chunk[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(length >> (8 * i));
    }
    return Root{hash_pair(root.bytes, length_chunk, hasher)};
}

namespace {

std::uint64_t chunk_capacity(const TypeDesc& desc) {
    switch (desc.kind) {
        case SszKind::Boolean:
        case SszKind::Uint64:
        case SszKind::ByteVector32:
            return 1;
        case SszKind::BitVector:
        case SszKind::BitList:
            return (desc.length + 255) / 256;
        case SszKind::List:
            if (desc.element->kind == SszKind::Uint64) return (desc.length * 8 + 31) / 32;
            if (desc.element->kind == SszKind::Boolean) return (desc.length + 31) / 32;
            return desc.length;
        case SszKind::Container:
            return desc.fields.size();
    }
    return 1;
}

}  // namespace

Root hash_tree_root(const SszValue& value, const Hasher& hasher) {
    const TypeDesc& desc = *value.type();
    switch (desc.kind) {
        case SszKind::Boolean:
        case SszKind::Uint64:
        case SszKind::ByteVector32:
        case SszKind::BitVector: {
            auto chunks = pack(value);
            return merkleize(chunks, chunk_capacity(desc), hasher).value();
        }
        case SszKind::BitList: {
            auto chunks = pack(value);
            Root base = merkleize(chunks, chunk_capacity(desc), hasher).value();
            return mix_in_length(base, value.as_bits().size(), hasher);
        }
        case SszKind::List: {
            const auto& elements = value.as_values();
            Root base{};
            if (desc.element->kind == SszKind::Uint64 || desc.element->kind == SszKind::Boolean) {
                auto chunks = pack(value);
                base = merkleize(chunks, chunk_capacity(desc), hasher).value();
            } else {
                std::vector<Bytes32> roots;
                roots.reserve(elements.size());
                for (const auto& elem : elements) {
                    roots.push_back(hash_tree_root(elem, hasher).bytes);
                }
                base = merkleize(roots, desc.length, hasher).value();
            }
            return mix_in_length(base, elements.size(), hasher);
        }
        case SszKind::Container: {
            std::vector<Bytes32> roots;
            roots.reserve(value.as_values().size());
            for (const auto& field : value.as_values()) {
                roots.push_back(hash_tree_root(field, hasher).bytes);
            }
            return merkleize(roots, std::nullopt, hasher).value();
        }
    }
    return Root{};
}

}  // namespace beacon
