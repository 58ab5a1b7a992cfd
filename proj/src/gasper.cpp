// beaconkit: phase-0 beacon chain state machine
// Copyright 2026 The beaconkit Authors.
// SPDX-License-Identifier: Apache-2.0

#include "beacon/gasper.hpp"

#include <algorithm>
#include <map>

#include "beacon/committees.hpp"

namespace beacon {

Result<std::vector<FFGVote>> extract_ffg_votes(const Store& store, const Preset& preset) {
    std::set<FFGVote> votes;
    for (const auto& [root, state] : store.post_states) {
        for (const auto* pool : {&state.previous_epoch_attestations, &state.current_epoch_attestations}) {
            for (const auto& att : *pool) {
                auto indices = get_attesting_indices(state, att.data, att.aggregation_bits, preset);
                if (!indices.ok()) return indices.error();
                for (ValidatorIndex v : indices.value()) {
                    votes.insert(FFGVote{.validator = v, .source = att.data.source,
                                         .target = att.data.target});
                }
            }
        }
    }
    return std::vector<FFGVote>(votes.begin(), votes.end());
}

bool is_supermajority_link(const std::vector<FFGVote>& votes, const Checkpoint& source,
                           const Checkpoint& target, std::uint64_t total_validators) {
    std::set<ValidatorIndex> voters;
    for (const auto& vote : votes) {
        if (vote.source == source && vote.target == target) voters.insert(vote.validator);
    }
    // 3v >= 2n in integers; no division.
    return 3 * static_cast<std::uint64_t>(voters.size()) >= 2 * total_validators;
}

Result<FinalityView> compute_justified_finalized(const Store& store, const Preset& preset) {
    auto votes_r = extract_ffg_votes(store, preset);
    if (!votes_r.ok()) return votes_r.error();
    const auto& votes = votes_r.value();

    const auto genesis_state = store.post_states.find(store.genesis_root);
    if (genesis_state == store.post_states.end()) {
        return Error(ErrorCode::CorruptStore, "genesis state missing");
    }
    const std::uint64_t n = genesis_state->second.validators.size();

    // Distinct voter counts per (source, target) link. Bootstrap self-votes
    // (source epoch == target epoch) carry no link content.
    std::map<std::pair<Checkpoint, Checkpoint>, std::set<ValidatorIndex>> links;
    for (const auto& vote : votes) {
        if (vote.source.epoch < vote.target.epoch) {
            links[{vote.source, vote.target}].insert(vote.validator);
        }
    }

    FinalityView view;
    const Checkpoint genesis{.epoch = 0, .root = store.genesis_root};
    view.justified.insert(genesis);

    bool changed = true;
    while (changed) {
        changed = false;
        ++view.fixpoint_iterations;
        for (const auto& [link, voters] : links) {
            const auto& [source, target] = link;
            if (!view.justified.count(source)) continue;
            if (view.justified.count(target)) continue;
            if (3 * static_cast<std::uint64_t>(voters.size()) >= 2 * n) {
                view.justified.insert(target);
                changed = true;
            }
        }
    }

    view.finalized.insert(genesis);
    for (const auto& [link, voters] : links) {
        const auto& [source, target] = link;
        if (!view.justified.count(source)) continue;
        if (3 * static_cast<std::uint64_t>(voters.size()) < 2 * n) continue;
        const std::uint64_t gap = target.epoch - source.epoch;
        if (gap == 1) {
            view.finalized.insert(source);
        } else if (gap == 2) {
            const Epoch mid = source.epoch + 1;
            const bool mid_justified =
                std::any_of(view.justified.begin(), view.justified.end(),
                            [mid](const Checkpoint& c) { return c.epoch == mid; });
            if (mid_justified) view.finalized.insert(source);
        }
    }
    return view;
}

std::set<Equivocation> detect_double_votes(const std::vector<FFGVote>& votes) {
    std::set<Equivocation> found;
    std::map<std::pair<ValidatorIndex, Epoch>, std::vector<const FFGVote*>> by_target_epoch;
    for (const auto& vote : votes) {
        by_target_epoch[{vote.validator, vote.target.epoch}].push_back(&vote);
    }
    for (const auto& [key, group] : by_target_epoch) {
        for (std::size_t i = 0; i < group.size(); ++i) {
            for (std::size_t j = i + 1; j < group.size(); ++j) {
                const FFGVote& a = *group[i];
                const FFGVote& b = *group[j];
                if (a.target.root != b.target.root || a.source != b.source) {
                    found.insert(Equivocation{.validator = key.first,
                                              .first = std::min(a, b),
                                              .second = std::max(a, b)});
                }
            }
        }
    }
    return found;
}

std::set<Equivocation> detect_surround_votes(const std::vector<FFGVote>& votes) {
    std::set<Equivocation> found;
    std::map<ValidatorIndex, std::vector<const FFGVote*>> by_validator;
    for (const auto& vote : votes) {
        by_validator[vote.validator].push_back(&vote);
    }
    for (const auto& [validator, group] : by_validator) {
        for (const auto* outer : group) {
            for (const auto* inner : group) {
                if (outer->source.epoch < inner->source.epoch &&
                    inner->target.epoch < outer->target.epoch) {
                    found.insert(
                        Equivocation{.validator = validator, .first = *outer, .second = *inner});
                }
            }
        }
    }
    return found;
}

Result<SlashingReport> accountable_safety_check(const Store& store, const Checkpoint& c1,
                                                const Checkpoint& c2, const Preset& preset) {
    auto view = compute_justified_finalized(store, preset);
    if (!view.ok()) return view.error();
    if (!view.value().finalized.count(c1) || !view.value().finalized.count(c2)) {
        return Error(ErrorCode::NotConflicting, "both checkpoints must be finalized");
    }
    if (!store.blocks.count(c1.root) || !store.blocks.count(c2.root)) {
        return Error(ErrorCode::NotConflicting, "checkpoint roots not in the store");
    }
    auto on_one_chain = [&](const Root& a, const Root& b) {
        auto path = chain(store, a);
        if (!path.ok()) return false;
        return std::find(path.value().begin(), path.value().end(), b) != path.value().end();
    };
    if (on_one_chain(c1.root, c2.root) || on_one_chain(c2.root, c1.root)) {
        return Error(ErrorCode::NotConflicting, "checkpoints lie on one chain");
    }

    auto votes = extract_ffg_votes(store, preset);
    if (!votes.ok()) return votes.error();
    SlashingReport report;
    report.double_votes = detect_double_votes(votes.value());
    report.surround_votes = detect_surround_votes(votes.value());
    for (const auto& e : report.double_votes) report.slashable.insert(e.validator);
    for (const auto& e : report.surround_votes) report.slashable.insert(e.validator);
    return report;
}

}  // namespace beacon
