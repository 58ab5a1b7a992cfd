// beaconkit: phase-0 beacon chain state machine
// Copyright 2026 The beaconkit Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "beacon/result.hpp"
#include "beacon/ssz.hpp"
#include "beacon/types.hpp"

namespace beacon {

// Pure 64-byte-to-32-byte compression; collision resistance is assumed, not
// checked. Injectable so tests can run a cheap deterministic stand-in.
using Hasher = std::function<Bytes32(std::span<const std::uint8_t, 64>)>;

// SHA-256 (the interoperable default).
const Hasher& sha256_hasher();
Bytes32 sha256_64(std::span<const std::uint8_t, 64> input);

// Least power of two >= max(n, 1); always >= 1.
std::uint64_t next_power_of_two(std::uint64_t n);

// Root of the all-zero subtree with 2^depth leaves under the given hasher.
// Cached per hasher instance for the default hasher; computed otherwise.
Bytes32 zero_subtree_root(std::uint64_t depth, const Hasher& hasher);

// Serializes a basic or bit-packed value into whole 32-byte chunks (bit
// lists pack without their sentinel). Composite values are not packed here;
// hash_tree_root merkleizes their member roots instead.
std::vector<Bytes32> pack(const SszValue& value);

// Binary Merkle tree over the chunks, zero padded to
// next_power_of_two(limit or |chunks|) leaves. A single leaf with no limit
// is returned unchanged.
Result<Root> merkleize(std::span<const Bytes32> chunks, std::optional<std::uint64_t> limit,
                       const Hasher& hasher);

Root mix_in_length(const Root& root, std::uint64_t length, const Hasher& hasher);

// Canonical 32-byte digest of any well-formed SSZ value.
Root hash_tree_root(const SszValue& value, const Hasher& hasher = sha256_hasher());

}  // namespace beacon
