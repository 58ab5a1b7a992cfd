// beaconkit: phase-0 beacon chain state machine
// Copyright 2026 The beaconkit Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <set>
#include <vector>

#include "beacon/fork_choice.hpp"
#include "beacon/types.hpp"

namespace beacon {

// One validator's source -> target vote. Sources precede targets except for
// the epoch-0 bootstrap self-votes, which carry no link content.
struct FFGVote {
    ValidatorIndex validator = 0;
    Checkpoint source{};
    Checkpoint target{};

    auto operator<=>(const FFGVote&) const = default;
};

// A pair of votes by one validator that together break a slashing rule.
struct Equivocation {
    ValidatorIndex validator = 0;
    FFGVote first{};
    FFGVote second{};

    auto operator<=>(const Equivocation&) const = default;
};

struct SlashingReport {
    std::set<Equivocation> double_votes;
    std::set<Equivocation> surround_votes;
    std::set<ValidatorIndex> slashable;  // validators appearing in either set
};

// One vote per (validator, attestation) across every stored post-state
// pool, identical votes collapsed.
Result<std::vector<FFGVote>> extract_ffg_votes(const Store& store, const Preset& preset);

// 3 * |distinct voters on exactly (source, target)| >= 2 * n.
bool is_supermajority_link(const std::vector<FFGVote>& votes, const Checkpoint& source,
                           const Checkpoint& target, std::uint64_t total_validators);

struct FinalityView {
    std::set<Checkpoint> justified;
    std::set<Checkpoint> finalized;
    std::uint64_t fixpoint_iterations = 0;
};

// Fixpoint from the genesis checkpoint: a supermajority link from a
// justified source justifies its target; a justified checkpoint with a
// supermajority link spanning one epoch (or two, across a justified
// intermediate) is finalized.
Result<FinalityView> compute_justified_finalized(const Store& store, const Preset& preset);

// Same target epoch, different target root or different source.
std::set<Equivocation> detect_double_votes(const std::vector<FFGVote>& votes);

// v1 surrounds v2 iff v1.source.epoch < v2.source.epoch and
// v2.target.epoch < v1.target.epoch.
std::set<Equivocation> detect_surround_votes(const std::vector<FFGVote>& votes);

// For two conflicting finalized checkpoints, runs both detectors over the
// store's votes. The accountable-safety bound (slashable stake >= 1/3) is
// asserted by the test harness on constructed conflicting traces.
Result<SlashingReport> accountable_safety_check(const Store& store, const Checkpoint& c1,
                                                const Checkpoint& c2, const Preset& preset);

}  // namespace beacon
