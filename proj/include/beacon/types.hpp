// beaconkit: phase-0 beacon chain state machine
// Copyright 2026 The beaconkit Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "beacon/preset.hpp"
#include "beacon/result.hpp"

namespace beacon {

// Unsigned 64-bit domain quantities. All arithmetic that could wrap goes
// through the checked_* helpers below; a wrap is an invalid transition,
// never a wrapped value.
using Slot = std::uint64_t;
using Epoch = std::uint64_t;
using ValidatorIndex = std::uint64_t;
using Gwei = std::uint64_t;
using CommitteeIndex = std::uint64_t;

inline constexpr Epoch kFarFutureEpoch = UINT64_MAX;

Result<std::uint64_t> checked_add(std::uint64_t a, std::uint64_t b);
Result<std::uint64_t> checked_sub(std::uint64_t a, std::uint64_t b);
Result<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b);

Epoch epoch_of(Slot slot, const Preset& preset);
Slot epoch_start_slot(Epoch epoch, const Preset& preset);

using Bytes32 = std::array<std::uint8_t, 32>;

// 32-byte opaque output of the pluggable hash.
struct Root {
    Bytes32 bytes{};

    auto operator<=>(const Root&) const = default;
};

inline constexpr Root kZeroRoot{};

std::string to_hex(const Root& root);               // 0x + 64 lowercase digits
Result<Root> root_from_hex(std::string_view text);

struct Validator {
    ValidatorIndex index = 0;
    Gwei effective_balance = 0;
    Epoch activation_epoch = 0;
    Epoch exit_epoch = kFarFutureEpoch;

    friend bool operator==(const Validator&, const Validator&) = default;
};

struct Checkpoint {
    Epoch epoch = 0;
    Root root{};

    auto operator<=>(const Checkpoint&) const = default;
};

struct AttestationData {
    Slot slot = 0;
    CommitteeIndex index = 0;
    Root beacon_block_root{};
    Checkpoint source{};
    Checkpoint target{};

    friend bool operator==(const AttestationData&, const AttestationData&) = default;
};

struct PendingAttestation {
    std::vector<bool> aggregation_bits;
    AttestationData data{};
    std::uint64_t inclusion_delay = 0;

    friend bool operator==(const PendingAttestation&, const PendingAttestation&) = default;
};

struct BeaconBlockHeader {
    Slot slot = 0;
    Root parent_root{};
    Root state_root{};  // all-zero until backfilled by the next slot

    friend bool operator==(const BeaconBlockHeader&, const BeaconBlockHeader&) = default;
};

struct BeaconBlock {
    Slot slot = 0;
    Root parent_root{};
    Root state_root{};
    std::vector<PendingAttestation> attestations;

    friend bool operator==(const BeaconBlock&, const BeaconBlock&) = default;
};

struct BeaconState {
    Slot slot = 0;
    BeaconBlockHeader latest_block_header{};
    std::vector<Root> block_roots;  // ring, length slots_per_historical_root
    std::vector<Root> state_roots;  // ring, same length
    std::vector<Validator> validators;
    std::vector<Gwei> balances;
    std::vector<PendingAttestation> previous_epoch_attestations;
    std::vector<PendingAttestation> current_epoch_attestations;
    std::array<bool, 4> justification_bits{};
    Checkpoint previous_justified_checkpoint{};
    Checkpoint current_justified_checkpoint{};
    Checkpoint finalized_checkpoint{};

    friend bool operator==(const BeaconState&, const BeaconState&) = default;
};

// balances[i] := max(0, balances[i] - delta); floors instead of erroring.
Result<BeaconState> decrease_balance(BeaconState state, ValidatorIndex index, Gwei delta);
// balances[i] := balances[i] + delta, checked.
Result<BeaconState> increase_balance(BeaconState state, ValidatorIndex index, Gwei delta);

// A fixed registry of n equal-stake validators, active from epoch 0.
std::vector<Validator> make_registry(std::uint64_t count, const Preset& preset);

}  // namespace beacon
