// beaconkit: phase-0 beacon chain state machine
// Copyright 2026 The beaconkit Authors.
// SPDX-License-Identifier: Apache-2.0

#include "beacon/state_transition.hpp"

#include <algorithm>

#include "beacon/committees.hpp"
#include "beacon/schema.hpp"

namespace beacon {

Epoch current_epoch(const BeaconState& state, const Preset& preset) {
    return epoch_of(state.slot, preset);
}

Epoch previous_epoch(const BeaconState& state, const Preset& preset) {
    const Epoch current = current_epoch(state, preset);
    return current == 0 ? 0 : current - 1;
}

Result<Root> get_block_root_at_slot(const BeaconState& state, Slot slot, const Preset& preset) {
    // Ring validity window: slot < state.slot <= slot + ring length.
    if (slot >= state.slot) {
        return Error(ErrorCode::IndexOutOfRange, "slot not yet recorded");
    }
    auto window = checked_add(slot, preset.slots_per_historical_root);
    if (!window.ok()) return window.error();
    if (state.slot > window.value()) {
        return Error(ErrorCode::IndexOutOfRange, "slot fell out of the historical ring");
    }
    return state.block_roots[slot % preset.slots_per_historical_root];
}

Result<Root> get_block_root(const BeaconState& state, Epoch epoch, const Preset& preset) {
    auto start = checked_mul(epoch, preset.slots_per_epoch);
    if (!start.ok()) return start.error();
    return get_block_root_at_slot(state, start.value(), preset);
}

Result<BeaconState> genesis_state(const std::vector<Validator>& validators, const Preset& preset) {
    if (validators.empty()) {
        return Error(ErrorCode::EmptyRegistry, "genesis needs at least one validator");
    }
    BeaconState state;
    state.slot = 0;
    state.latest_block_header = BeaconBlockHeader{.slot = 0, .parent_root = kZeroRoot,
                                                  .state_root = kZeroRoot};
    state.block_roots.assign(preset.slots_per_historical_root, kZeroRoot);
    state.state_roots.assign(preset.slots_per_historical_root, kZeroRoot);
    state.validators = validators;
    state.balances.reserve(validators.size());
    for (const auto& v : validators) state.balances.push_back(v.effective_balance);
    return state;
}

Result<BeaconState> process_slot(BeaconState state, const Preset& preset, const Hasher& hasher) {
    const Root previous_state_root = hash_tree_root(state, preset, hasher);
    state.state_roots[state.slot % preset.slots_per_historical_root] = previous_state_root;
    if (state.latest_block_header.state_root == kZeroRoot) {
        state.latest_block_header.state_root = previous_state_root;
    }
    state.block_roots[state.slot % preset.slots_per_historical_root] =
        hash_tree_root(state.latest_block_header, hasher);
    return state;
}

namespace {

// Distinct validators attesting to the pool's epoch-boundary target, and
// the stake they carry. A boundary root that fell out of the historical
// ring cannot be matched, so it contributes zero stake.
Result<Gwei> matching_target_stake(const BeaconState& state,
                                   const std::vector<PendingAttestation>& pool, Epoch epoch,
                                   const Preset& preset) {
    auto boundary = get_block_root(state, epoch, preset);
    if (!boundary.ok()) return Gwei{0};
    std::set<ValidatorIndex> attesters;
    for (const auto& att : pool) {
        if (att.data.target.epoch != epoch || att.data.target.root != boundary.value()) continue;
        auto indices = get_attesting_indices(state, att.data, att.aggregation_bits, preset);
        if (!indices.ok()) return indices.error();
        attesters.insert(indices.value().begin(), indices.value().end());
    }
    Gwei stake = 0;
    for (ValidatorIndex i : attesters) {
        auto sum = checked_add(stake, state.validators[i].effective_balance);
        if (!sum.ok()) return sum.error();
        stake = sum.value();
    }
    return stake;
}

Result<Gwei> total_active_stake(const BeaconState& state, Epoch epoch) {
    Gwei stake = 0;
    for (const auto& v : state.validators) {
        if (v.activation_epoch <= epoch && epoch < v.exit_epoch) {
            auto sum = checked_add(stake, v.effective_balance);
            if (!sum.ok()) return sum.error();
            stake = sum.value();
        }
    }
    return stake;
}

Result<bool> supermajority(Gwei part, Gwei whole) {
    auto lhs = checked_mul(part, 3);
    if (!lhs.ok()) return lhs.error();
    auto rhs = checked_mul(whole, 2);
    if (!rhs.ok()) return rhs.error();
    return lhs.value() >= rhs.value();
}

Result<BeaconState> process_justification_and_finalization(BeaconState state, const Preset& preset) {
    const Epoch current = current_epoch(state, preset);
    const Epoch previous = previous_epoch(state, preset);

    auto total = total_active_stake(state, current);
    if (!total.ok()) return total.error();
    auto previous_target = matching_target_stake(state, state.previous_epoch_attestations, previous, preset);
    if (!previous_target.ok()) return previous_target.error();
    auto current_target = matching_target_stake(state, state.current_epoch_attestations, current, preset);
    if (!current_target.ok()) return current_target.error();

    const Checkpoint old_previous_justified = state.previous_justified_checkpoint;
    const Checkpoint old_current_justified = state.current_justified_checkpoint;

    state.previous_justified_checkpoint = state.current_justified_checkpoint;
    // Shift towards the older end; bit 0 is the newest epoch.
    auto& bits = state.justification_bits;
    bits = {false, bits[0], bits[1], bits[2]};

    auto prev_super = supermajority(previous_target.value(), total.value());
    if (!prev_super.ok()) return prev_super.error();
    if (prev_super.value()) {
        auto root = get_block_root(state, previous, preset);
        if (!root.ok()) return root.error();
        state.current_justified_checkpoint = Checkpoint{.epoch = previous, .root = root.value()};
        bits[1] = true;
    }
    auto curr_super = supermajority(current_target.value(), total.value());
    if (!curr_super.ok()) return curr_super.error();
    if (curr_super.value()) {
        auto root = get_block_root(state, current, preset);
        if (!root.ok()) return root.error();
        state.current_justified_checkpoint = Checkpoint{.epoch = current, .root = root.value()};
        bits[0] = true;
    }

    // The four finalization rules over the justification window.
    if (bits[1] && bits[2] && bits[3] && old_previous_justified.epoch + 3 == current) {
        state.finalized_checkpoint = old_previous_justified;
    }
    if (bits[1] && bits[2] && old_previous_justified.epoch + 2 == current) {
        state.finalized_checkpoint = old_previous_justified;
    }
    if (bits[0] && bits[1] && bits[2] && old_current_justified.epoch + 2 == current) {
        state.finalized_checkpoint = old_current_justified;
    }
    if (bits[0] && bits[1] && old_current_justified.epoch + 1 == current) {
        state.finalized_checkpoint = old_current_justified;
    }
    return state;
}

// Flat reward: previous-epoch target attesters gain one unit, everyone
// else loses one (floored at zero).
Result<BeaconState> process_rewards(BeaconState state, const Preset& preset) {
    const Epoch previous = previous_epoch(state, preset);
    std::set<ValidatorIndex> rewarded;
    auto boundary = get_block_root(state, previous, preset);
    if (boundary.ok()) {
        for (const auto& att : state.previous_epoch_attestations) {
            if (att.data.target.epoch != previous || att.data.target.root != boundary.value()) continue;
            auto indices = get_attesting_indices(state, att.data, att.aggregation_bits, preset);
            if (!indices.ok()) return indices.error();
            rewarded.insert(indices.value().begin(), indices.value().end());
        }
    }
    for (ValidatorIndex i = 0; i < state.balances.size(); ++i) {
        if (rewarded.count(i)) {
            auto next = increase_balance(std::move(state), i, preset.reward_unit);
            if (!next.ok()) return next.error();
            state = std::move(next).value();
        } else {
            auto next = decrease_balance(std::move(state), i, preset.reward_unit);
            if (!next.ok()) return next.error();
            state = std::move(next).value();
        }
    }
    return state;
}

}  // namespace

Result<BeaconState> process_epoch(BeaconState state, const Preset& preset, const Hasher& hasher) {
    (void)hasher;
    auto justified = process_justification_and_finalization(std::move(state), preset);
    if (!justified.ok()) return justified.error();
    auto rewarded = process_rewards(std::move(justified).value(), preset);
    if (!rewarded.ok()) return rewarded.error();
    state = std::move(rewarded).value();
    state.previous_epoch_attestations = std::move(state.current_epoch_attestations);
    state.current_epoch_attestations.clear();
    return state;
}

Result<BeaconState> process_slots(BeaconState state, Slot slot, const Preset& preset,
                                  const Hasher& hasher, SlotStats* stats) {
    if (state.slot >= slot) {
        return Error(ErrorCode::SlotNotAhead,
                     "state at slot " + std::to_string(state.slot) + ", target " + std::to_string(slot));
    }
    while (state.slot < slot) {
        auto cached = process_slot(std::move(state), preset, hasher);
        if (!cached.ok()) return cached.error();
        state = std::move(cached).value();
        auto next = checked_add(state.slot, 1);
        if (!next.ok()) return next.error();
        if (next.value() % preset.slots_per_epoch == 0) {
            auto boundary = process_epoch(std::move(state), preset, hasher);
            if (!boundary.ok()) return boundary.error();
            state = std::move(boundary).value();
            if (stats) ++stats->epochs_processed;
        }
        state.slot = next.value();
        if (stats) ++stats->slots_processed;
    }
    return state;
}

Result<BeaconState> process_block_header(BeaconState state, const BeaconBlock& block,
                                         const Preset& preset, const Hasher& hasher) {
    (void)preset;
    if (block.slot != state.slot) {
        return Error(ErrorCode::HeaderSlotMismatch,
                     "block slot " + std::to_string(block.slot) + ", state slot " +
                         std::to_string(state.slot));
    }
    if (block.slot <= state.latest_block_header.slot) {
        return Error(ErrorCode::HeaderSlotMismatch, "block not newer than the latest header");
    }
    const Root expected_parent = hash_tree_root(state.latest_block_header, hasher);
    if (block.parent_root != expected_parent) {
        return Error(ErrorCode::ParentRootMismatch,
                     "expected " + to_hex(expected_parent) + ", block carries " +
                         to_hex(block.parent_root));
    }
    state.latest_block_header = BeaconBlockHeader{
        .slot = block.slot, .parent_root = block.parent_root, .state_root = kZeroRoot};
    return state;
}

Result<BeaconState> process_attestation(BeaconState state, const PendingAttestation& attestation,
                                        const Preset& preset) {
    const AttestationData& data = attestation.data;
    const Epoch current = current_epoch(state, preset);
    const Epoch previous = previous_epoch(state, preset);

    if (data.target.epoch != current && data.target.epoch != previous) {
        return Error(ErrorCode::BadAttestationWrongEpoch,
                     "target epoch " + std::to_string(data.target.epoch));
    }
    if (data.target.epoch != epoch_of(data.slot, preset)) {
        return Error(ErrorCode::BadAttestationWrongEpoch, "target epoch does not match slot");
    }
    auto earliest = checked_add(data.slot, preset.min_attestation_inclusion_delay);
    if (!earliest.ok()) return earliest.error();
    if (state.slot < earliest.value()) {
        return Error(ErrorCode::BadAttestationTooEarly,
                     "included at slot " + std::to_string(state.slot));
    }
    auto latest = checked_add(data.slot, preset.slots_per_epoch);
    if (!latest.ok()) return latest.error();
    if (state.slot > latest.value()) {
        return Error(ErrorCode::BadAttestationTooLate,
                     "included at slot " + std::to_string(state.slot));
    }
    const auto active = get_active_validator_indices(state, data.target.epoch);
    if (data.index >= get_committee_count_per_slot(active.size(), preset)) {
        return Error(ErrorCode::BadAttestationBadIndex,
                     "committee index " + std::to_string(data.index));
    }
    auto committee = get_beacon_committee(state, data.slot, data.index, preset);
    if (!committee.ok()) return committee.error();
    if (attestation.aggregation_bits.size() != committee.value().members.size()) {
        return Error(ErrorCode::BadAttestationBitsLengthMismatch,
                     std::to_string(attestation.aggregation_bits.size()) + " bits for committee of " +
                         std::to_string(committee.value().members.size()));
    }
    const bool genesis_self_vote = data.source.epoch == 0 && data.target.epoch == 0;
    if (!genesis_self_vote && data.source.epoch >= data.target.epoch) {
        return Error(ErrorCode::BadAttestationWrongSource, "source epoch not before target");
    }
    const Checkpoint& expected_source = data.target.epoch == current
                                            ? state.current_justified_checkpoint
                                            : state.previous_justified_checkpoint;
    if (data.source != expected_source) {
        return Error(ErrorCode::BadAttestationWrongSource,
                     "expected source epoch " + std::to_string(expected_source.epoch));
    }

    PendingAttestation recorded = attestation;
    auto delay = checked_sub(state.slot, data.slot);
    if (!delay.ok()) return delay.error();
    recorded.inclusion_delay = delay.value();
    if (data.target.epoch == current) {
        state.current_epoch_attestations.push_back(std::move(recorded));
    } else {
        state.previous_epoch_attestations.push_back(std::move(recorded));
    }
    return state;
}

Result<BeaconState> process_block(BeaconState state, const BeaconBlock& block, const Preset& preset,
                                  const Hasher& hasher) {
    auto with_header = process_block_header(std::move(state), block, preset, hasher);
    if (!with_header.ok()) return with_header.error();
    state = std::move(with_header).value();
    if (block.attestations.size() > preset.max_attestations_per_block) {
        return Error(ErrorCode::BadAttestationTooMany,
                     std::to_string(block.attestations.size()) + " attestations");
    }
    for (const auto& attestation : block.attestations) {
        auto with_att = process_attestation(std::move(state), attestation, preset);
        if (!with_att.ok()) return with_att.error();
        state = std::move(with_att).value();
    }
    return state;
}

Result<BeaconState> state_transition(const BeaconState& state, const BeaconBlock& block,
                                     bool validate_result, const Preset& preset,
                                     const Hasher& hasher) {
    auto forwarded = process_slots(state, block.slot, preset, hasher);
    if (!forwarded.ok()) return forwarded.error();
    auto applied = process_block(std::move(forwarded).value(), block, preset, hasher);
    if (!applied.ok()) return applied.error();
    if (validate_result) {
        const Root actual = hash_tree_root(applied.value(), preset, hasher);
        if (block.state_root != actual) {
            return Error(ErrorCode::StateRootMismatch,
                         "block declares " + to_hex(block.state_root) + ", got " + to_hex(actual));
        }
    }
    return applied;
}

Result<BeaconState> next_slot(BeaconState state, const Preset& preset, const Hasher& hasher) {
    auto cached = process_slot(std::move(state), preset, hasher);
    if (!cached.ok()) return cached.error();
    state = std::move(cached).value();
    auto next = checked_add(state.slot, 1);
    if (!next.ok()) return next.error();
    if (next.value() % preset.slots_per_epoch == 0) {
        auto boundary = process_epoch(std::move(state), preset, hasher);
        if (!boundary.ok()) return boundary.error();
        state = std::move(boundary).value();
    }
    state.slot = next.value();
    return state;
}

Result<BeaconState> forward_state_to_slot(BeaconState state, Slot slot, const Preset& preset,
                                          const Hasher& hasher) {
    if (state.slot > slot) {
        return Error(ErrorCode::SlotNotAhead,
                     "state already past slot " + std::to_string(slot));
    }
    while (state.slot < slot) {
        auto advanced = next_slot(std::move(state), preset, hasher);
        if (!advanced.ok()) return advanced.error();
        state = std::move(advanced).value();
    }
    return state;
}

Result<BeaconState> update_block(BeaconState state, const BeaconBlock& block, const Preset& preset,
                                 const Hasher& hasher) {
    if (state.slot != block.slot) {
        return Error(ErrorCode::HeaderSlotMismatch,
                     "state at slot " + std::to_string(state.slot) + ", block at " +
                         std::to_string(block.slot));
    }
    auto with_header = process_block_header(std::move(state), block, preset, hasher);
    if (!with_header.ok()) return with_header.error();
    state = std::move(with_header).value();
    if (block.attestations.size() > preset.max_attestations_per_block) {
        return Error(ErrorCode::BadAttestationTooMany,
                     std::to_string(block.attestations.size()) + " attestations");
    }
    for (const auto& attestation : block.attestations) {
        auto with_att = process_attestation(std::move(state), attestation, preset);
        if (!with_att.ok()) return with_att.error();
        state = std::move(with_att).value();
    }
    return state;
}

bool is_valid_state_epoch_attestations(const BeaconState& state, const Preset& preset) {
    const Epoch current = current_epoch(state, preset);
    const Epoch previous = previous_epoch(state, preset);
    auto pool_ok = [&](const std::vector<PendingAttestation>& pool, Epoch expected) {
        for (const auto& att : pool) {
            if (att.data.target.epoch != expected) return false;
            if (epoch_of(att.data.slot, preset) != expected) return false;
            const auto active = get_active_validator_indices(state, expected);
            if (att.data.index >= get_committee_count_per_slot(active.size(), preset)) return false;
        }
        return true;
    };
    return pool_ok(state.previous_epoch_attestations, previous) &&
           pool_ok(state.current_epoch_attestations, current);
}

bool is_valid_block(const BeaconState& state, const BeaconBlock& block, const Preset& preset,
                    const Hasher& hasher) {
    return state_transition(state, block, true, preset, hasher).ok();
}

}  // namespace beacon
