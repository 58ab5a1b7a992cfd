// beaconkit: phase-0 beacon chain state machine
// Copyright 2026 The beaconkit Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <string_view>

#include "beacon/merkle.hpp"
#include "beacon/preset.hpp"
#include "beacon/ssz.hpp"
#include "beacon/types.hpp"

namespace beacon {

// Descriptors for every domain type. Capacities derive from the preset, so
// descriptors are built per preset (cheap, cached by the callers that care).
TypeDescPtr checkpoint_desc();
TypeDescPtr attestation_data_desc();
TypeDescPtr pending_attestation_desc(const Preset& preset);
TypeDescPtr validator_desc();
TypeDescPtr block_header_desc();
TypeDescPtr block_desc(const Preset& preset);
TypeDescPtr state_desc(const Preset& preset);

// Descriptor lookup for the CLI --type strings (BeaconState, BeaconBlock,
// Checkpoint, Uint64, ...). Null when the name is unknown.
TypeDescPtr desc_by_name(std::string_view name, const Preset& preset);

SszValue to_ssz(const Checkpoint& v);
SszValue to_ssz(const AttestationData& v);
SszValue to_ssz(const PendingAttestation& v, const Preset& preset);
SszValue to_ssz(const Validator& v);
SszValue to_ssz(const BeaconBlockHeader& v);
SszValue to_ssz(const BeaconBlock& v, const Preset& preset);
SszValue to_ssz(const BeaconState& v, const Preset& preset);

Result<Checkpoint> checkpoint_from_ssz(const SszValue& v);
Result<AttestationData> attestation_data_from_ssz(const SszValue& v);
Result<PendingAttestation> pending_attestation_from_ssz(const SszValue& v, const Preset& preset);
Result<Validator> validator_from_ssz(const SszValue& v);
Result<BeaconBlockHeader> block_header_from_ssz(const SszValue& v);
Result<BeaconBlock> block_from_ssz(const SszValue& v, const Preset& preset);
Result<BeaconState> state_from_ssz(const SszValue& v, const Preset& preset);

std::vector<std::uint8_t> encode_block(const BeaconBlock& block, const Preset& preset);
std::vector<std::uint8_t> encode_state(const BeaconState& state, const Preset& preset);
Result<BeaconBlock> decode_block(std::span<const std::uint8_t> bytes, const Preset& preset);
Result<BeaconState> decode_state(std::span<const std::uint8_t> bytes, const Preset& preset);

Root hash_tree_root(const Checkpoint& v, const Hasher& hasher = sha256_hasher());
Root hash_tree_root(const BeaconBlockHeader& v, const Hasher& hasher = sha256_hasher());
Root hash_tree_root(const BeaconBlock& v, const Preset& preset,
                    const Hasher& hasher = sha256_hasher());
// Computed field-by-field without materializing the generic value tree;
// byte-identical to hash_tree_root(to_ssz(state)) (property-tested).
Root hash_tree_root(const BeaconState& v, const Preset& preset,
                    const Hasher& hasher = sha256_hasher());

// Header whose root identifies the block in the block-tree: the block with
// its body dropped.
BeaconBlockHeader header_of(const BeaconBlock& block);
Root block_root(const BeaconBlock& block, const Hasher& hasher = sha256_hasher());

}  // namespace beacon
