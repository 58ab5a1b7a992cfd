// beaconkit: phase-0 beacon chain state machine
// Copyright 2026 The beaconkit Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "beacon/merkle.hpp"
#include "beacon/preset.hpp"
#include "beacon/types.hpp"

namespace beacon {

// Filled by process_slots when requested; the loop performs exactly
// target - start iterations, and the counters prove it.
struct SlotStats {
    std::uint64_t slots_processed = 0;
    std::uint64_t epochs_processed = 0;
};

// Every operation takes the state by value and returns a fresh state or an
// error; on any error the caller's state is untouched. This realizes the
// rule that an invalid transition leaves the state unchanged, without
// rollback machinery.

Result<BeaconState> genesis_state(const std::vector<Validator>& validators, const Preset& preset);

// Caches the state root into the ring, backfills the header's state root if
// still zero, then caches the header root. Slot is advanced by the caller.
Result<BeaconState> process_slot(BeaconState state, const Preset& preset,
                                 const Hasher& hasher = sha256_hasher());

// Advances strictly forward to `slot`, running epoch processing while
// sitting on the last slot of each epoch.
Result<BeaconState> process_slots(BeaconState state, Slot slot, const Preset& preset,
                                  const Hasher& hasher = sha256_hasher(),
                                  SlotStats* stats = nullptr);

Result<BeaconState> process_block_header(BeaconState state, const BeaconBlock& block,
                                         const Preset& preset,
                                         const Hasher& hasher = sha256_hasher());

Result<BeaconState> process_attestation(BeaconState state, const PendingAttestation& attestation,
                                        const Preset& preset);

// Justification/finalization vote weighing, the simplified fixed-unit
// reward step, then pool rotation.
Result<BeaconState> process_epoch(BeaconState state, const Preset& preset,
                                  const Hasher& hasher = sha256_hasher());

// Header plus every attestation, in order.
Result<BeaconState> process_block(BeaconState state, const BeaconBlock& block, const Preset& preset,
                                  const Hasher& hasher = sha256_hasher());

// The imperative top-level transition. With validate_result set, the
// block's declared state root must match the post-state root.
Result<BeaconState> state_transition(const BeaconState& state, const BeaconBlock& block,
                                     bool validate_result, const Preset& preset,
                                     const Hasher& hasher = sha256_hasher());

// Functional decomposition: single-slot advance, iterated forwarding, and
// block application. state_transition(s, b) equals
// update_block(forward_state_to_slot(next_slot(s), b.slot), b) byte for byte.
Result<BeaconState> next_slot(BeaconState state, const Preset& preset,
                              const Hasher& hasher = sha256_hasher());
Result<BeaconState> forward_state_to_slot(BeaconState state, Slot slot, const Preset& preset,
                                          const Hasher& hasher = sha256_hasher());
Result<BeaconState> update_block(BeaconState state, const BeaconBlock& block, const Preset& preset,
                                 const Hasher& hasher = sha256_hasher());

// True iff each stored attestation sits in the pool matching its target
// epoch and names a committee index that exists for its slot.
bool is_valid_state_epoch_attestations(const BeaconState& state, const Preset& preset);

// Operational block validity: the transition succeeds with root validation.
bool is_valid_block(const BeaconState& state, const BeaconBlock& block, const Preset& preset,
                    const Hasher& hasher = sha256_hasher());

// Boundary root of the epoch read from the historical ring: the block root
// at the epoch's first slot (the latest prior block when that slot was
// empty).
Result<Root> get_block_root_at_slot(const BeaconState& state, Slot slot, const Preset& preset);
Result<Root> get_block_root(const BeaconState& state, Epoch epoch, const Preset& preset);

Epoch current_epoch(const BeaconState& state, const Preset& preset);
Epoch previous_epoch(const BeaconState& state, const Preset& preset);

}  // namespace beacon
