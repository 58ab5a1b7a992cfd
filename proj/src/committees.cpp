// beaconkit: phase-0 beacon chain state machine
// Copyright 2026 The beaconkit Authors.
// SPDX-License-Identifier: Apache-2.0

#include "beacon/committees.hpp"

#include <algorithm>

namespace beacon {

namespace {

using U128 = unsigned __int128;

// Size of slice k of V elements split into total floor-division slices.
std::uint64_t slice_size(std::uint64_t v, std::uint64_t total, std::uint64_t k) {
    const U128 lo = (U128(v) * k) / total;
    const U128 hi = (U128(v) * (k + 1)) / total;
    return static_cast<std::uint64_t>(hi - lo);
}

}  // namespace

std::string_view to_string(BoundsKind kind) {
    switch (kind) {
        case BoundsKind::Safe: return "SAFE";
        case BoundsKind::ExistsViolation: return "EXISTS_VIOLATION";
        case BoundsKind::AllViolate: return "ALL_VIOLATE";
    }
    return "?";
}

std::vector<ValidatorIndex> get_active_validator_indices(const BeaconState& state, Epoch epoch) {
    std::vector<ValidatorIndex> active;
    active.reserve(state.validators.size());
    for (std::size_t i = 0; i < state.validators.size(); ++i) {
        const Validator& v = state.validators[i];
        if (v.activation_epoch <= epoch && epoch < v.exit_epoch) {
            active.push_back(static_cast<ValidatorIndex>(i));
        }
    }
    return active;
}

std::uint64_t get_committee_count_per_slot(std::uint64_t active_count, const Preset& preset) {
    const std::uint64_t raw =
        active_count / preset.slots_per_epoch / preset.target_committee_size;
    return std::clamp<std::uint64_t>(raw, 1, preset.max_committees_per_slot);
}

Result<std::vector<ValidatorIndex>> compute_committee(std::span<const ValidatorIndex> indices,
                                                      std::uint64_t total_committees,
                                                      std::uint64_t k) {
    if (total_committees == 0 || k >= total_committees) {
        return Error(ErrorCode::IndexOutOfRange,
                     "committee position " + std::to_string(k) + " of " +
                         std::to_string(total_committees));
    }
    const std::uint64_t n = indices.size();
    const auto start = static_cast<std::uint64_t>((U128(n) * k) / total_committees);
    const auto stop = static_cast<std::uint64_t>((U128(n) * (k + 1)) / total_committees);
    return std::vector<ValidatorIndex>(indices.begin() + static_cast<std::ptrdiff_t>(start),
                                       indices.begin() + static_cast<std::ptrdiff_t>(stop));
}

Result<CommitteeAssignment> get_beacon_committee(const BeaconState& state, Slot slot,
                                                 CommitteeIndex index, const Preset& preset) {
    const Epoch epoch = epoch_of(slot, preset);
    const auto active = get_active_validator_indices(state, epoch);
    const std::uint64_t per_slot = get_committee_count_per_slot(active.size(), preset);
    if (index >= per_slot) {
        return Error(ErrorCode::IndexOutOfRange,
                     "committee index " + std::to_string(index) + " of " + std::to_string(per_slot));
    }
    const std::uint64_t total = per_slot * preset.slots_per_epoch;
    const std::uint64_t position = (slot % preset.slots_per_epoch) * per_slot + index;
    auto members = compute_committee(active, total, position);
    if (!members.ok()) return members.error();
    if (members.value().empty()) {
        return Error(ErrorCode::EmptyCommittee,
                     "slot " + std::to_string(slot) + " index " + std::to_string(index));
    }
    if (members.value().size() > preset.max_validators_per_committee) {
        return Error(ErrorCode::OversizedCommittee,
                     "size " + std::to_string(members.value().size()) + " over " +
                         std::to_string(preset.max_validators_per_committee));
    }
    return CommitteeAssignment{.slot = slot, .index = index, .members = std::move(members).value()};
}

Result<std::set<ValidatorIndex>> get_attesting_indices(const BeaconState& state,
                                                       const AttestationData& data,
                                                       const std::vector<bool>& bits,
                                                       const Preset& preset) {
    auto committee = get_beacon_committee(state, data.slot, data.index, preset);
    if (!committee.ok()) return committee.error();
    const auto& members = committee.value().members;
    if (bits.size() != members.size()) {
        return Error(ErrorCode::BitsLengthMismatch,
                     std::to_string(bits.size()) + " bits for committee of " +
                         std::to_string(members.size()));
    }
    std::set<ValidatorIndex> attesting;
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (bits[i]) attesting.insert(members[i]);
    }
    return attesting;
}

BoundsVerdict check_committee_bounds(std::uint64_t active_count, const Preset& preset) {
    const std::uint64_t v = active_count;
    const std::uint64_t per_slot = get_committee_count_per_slot(v, preset);
    const std::uint64_t total = per_slot * preset.slots_per_epoch;
    const std::uint64_t max_allowed = preset.max_validators_per_committee;

    const std::uint64_t size_lo = v / total;
    const std::uint64_t remainder = v % total;
    const std::uint64_t size_hi = remainder == 0 ? size_lo : size_lo + 1;

    auto violates = [max_allowed](std::uint64_t size) { return size < 1 || size > max_allowed; };

    BoundsVerdict verdict;
    verdict.committees_per_slot = per_slot;
    verdict.min_size = size_lo;
    verdict.max_size = size_hi;
    verdict.safe_min_validators = preset.slots_per_epoch;
    verdict.safe_max_validators = max_allowed * preset.max_committees_per_slot * preset.slots_per_epoch;

    // Floor slices take exactly two sizes: size_lo (always present, since
    // remainder < total) and size_hi (present when the division is inexact).
    const bool hi_present = remainder != 0;
    const bool lo_bad = violates(size_lo);
    const bool hi_bad = hi_present && violates(size_hi);

    if (!lo_bad && !hi_bad) {
        verdict.kind = BoundsKind::Safe;
        return verdict;
    }
    const bool all_bad = lo_bad && (!hi_present || violates(size_hi));
    verdict.kind = all_bad ? BoundsKind::AllViolate : BoundsKind::ExistsViolation;

    // First offending position, from the slice formula alone.
    for (std::uint64_t k = 0; k < total; ++k) {
        const std::uint64_t size = slice_size(v, total, k);
        if (violates(size)) {
            verdict.witness = BoundsWitness{
                .slot = k / per_slot, .index = k % per_slot, .size = size};
            break;
        }
    }
    return verdict;
}

}  // namespace beacon
