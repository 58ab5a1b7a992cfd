// beaconkit: phase-0 beacon chain state machine
// Copyright 2026 The beaconkit Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <set>
#include <vector>

#include "beacon/preset.hpp"
#include "beacon/types.hpp"

namespace beacon {

struct CommitteeAssignment {
    Slot slot = 0;
    CommitteeIndex index = 0;
    std::vector<ValidatorIndex> members;

    friend bool operator==(const CommitteeAssignment&, const CommitteeAssignment&) = default;
};

enum class BoundsKind { Safe, ExistsViolation, AllViolate };

struct BoundsWitness {
    Slot slot = 0;            // slot within the epoch
    CommitteeIndex index = 0;
    std::uint64_t size = 0;

    friend bool operator==(const BoundsWitness&, const BoundsWitness&) = default;
};

// Verdict over all (slot, index) committees of one epoch for a given active
// validator count. Witness present exactly when the verdict is not Safe.
struct BoundsVerdict {
    BoundsKind kind = BoundsKind::Safe;
    std::optional<BoundsWitness> witness;
    std::uint64_t committees_per_slot = 0;
    std::uint64_t min_size = 0;
    std::uint64_t max_size = 0;
    std::uint64_t safe_min_validators = 0;  // smallest V with every size in [1, max]
    std::uint64_t safe_max_validators = 0;  // largest V with every size in [1, max]
};

std::string_view to_string(BoundsKind kind);

// Indices active at the epoch, ascending.
std::vector<ValidatorIndex> get_active_validator_indices(const BeaconState& state, Epoch epoch);

// clamp(V / slots_per_epoch / target_committee_size, 1, max_committees_per_slot)
std::uint64_t get_committee_count_per_slot(std::uint64_t active_count, const Preset& preset);

// The k-th of total_committees floor-division slices of the index sequence,
// under the identity ordering.
Result<std::vector<ValidatorIndex>> compute_committee(std::span<const ValidatorIndex> indices,
                                                      std::uint64_t total_committees,
                                                      std::uint64_t k);

// The committee for (slot, index) over the active set at the slot's epoch.
// A committee outside [1, max_validators_per_committee] is a typed error,
// never a silently oversized or empty slice.
Result<CommitteeAssignment> get_beacon_committee(const BeaconState& state, Slot slot,
                                                 CommitteeIndex index, const Preset& preset);

// {committee[i] : bits[i]}; bits length must equal the committee size.
Result<std::set<ValidatorIndex>> get_attesting_indices(const BeaconState& state,
                                                       const AttestationData& data,
                                                       const std::vector<bool>& bits,
                                                       const Preset& preset);

// Pure arithmetic over the slice formula; no committee is materialized.
BoundsVerdict check_committee_bounds(std::uint64_t active_count, const Preset& preset);

}  // namespace beacon
