// beaconkit: phase-0 beacon chain state machine
// Copyright 2026 The beaconkit Authors.
// SPDX-License-Identifier: Apache-2.0

#include "beacon/fork_choice.hpp"

#include <set>

#include "beacon/schema.hpp"
#include "beacon/state_transition.hpp"

namespace beacon {

Result<Store> store_init(const BeaconState& genesis, const Preset& preset, const Hasher& hasher) {
    if (genesis.slot != 0) {
        return Error(ErrorCode::NotGenesis, "state at slot " + std::to_string(genesis.slot));
    }
    const Root state_root = hash_tree_root(genesis, preset, hasher);
    const BeaconBlock genesis_block{
        .slot = 0, .parent_root = kZeroRoot, .state_root = state_root, .attestations = {}};
    const Root root = block_root(genesis_block, hasher);

    Store store;
    store.genesis_root = root;
    store.blocks.emplace(root, genesis_block);
    store.post_states.emplace(root, genesis);
    store.justified_checkpoint = Checkpoint{.epoch = 0, .root = root};
    store.finalized_checkpoint = Checkpoint{.epoch = 0, .root = root};
    return store;
}

Result<Store> on_block(Store store, const BeaconBlock& block, const Preset& preset,
                       const Hasher& hasher) {
    auto parent = store.post_states.find(block.parent_root);
    if (parent == store.post_states.end()) {
        return Error(ErrorCode::UnknownParent, to_hex(block.parent_root));
    }
    const Root root = block_root(block, hasher);
    if (store.blocks.count(root)) {
        return Error(ErrorCode::DuplicateBlock, to_hex(root));
    }
    auto post = state_transition(parent->second, block, true, preset, hasher);
    if (!post.ok()) return post.error();

    const BeaconState& state = post.value();
    if (state.current_justified_checkpoint.epoch > store.justified_checkpoint.epoch) {
        store.justified_checkpoint = state.current_justified_checkpoint;
    }
    if (state.finalized_checkpoint.epoch > store.finalized_checkpoint.epoch) {
        store.finalized_checkpoint = state.finalized_checkpoint;
    }
    store.blocks.emplace(root, block);
    store.post_states.emplace(root, std::move(post).value());
    return store;
}

Result<std::vector<Root>> chain(const Store& store, const Root& root) {
    if (!store.blocks.count(root)) {
        return Error(ErrorCode::UnknownRoot, to_hex(root));
    }
    std::vector<Root> path;
    Root cursor = root;
    while (true) {
        path.push_back(cursor);
        if (cursor == store.genesis_root) break;
        if (path.size() > store.blocks.size()) {
            return Error(ErrorCode::CorruptStore, "parent walk exceeds block count (cycle)");
        }
        const Root parent = store.blocks.at(cursor).parent_root;
        if (!store.blocks.count(parent)) {
            return Error(ErrorCode::UnknownRoot, "parent " + to_hex(parent));
        }
        cursor = parent;
    }
    return path;
}

Root get_head(const Store& store) {
    const Root anchor = store.justified_checkpoint.root;
    Root best = anchor;
    Slot best_slot = store.blocks.count(anchor) ? store.blocks.at(anchor).slot : 0;
    for (const auto& [root, block] : store.blocks) {
        auto path = chain(store, root);
        if (!path.ok()) continue;
        bool descends = false;
        for (const Root& r : path.value()) {
            if (r == anchor) {
                descends = true;
                break;
            }
        }
        if (!descends) continue;
        if (block.slot > best_slot || (block.slot == best_slot && root > best)) {
            best = root;
            best_slot = block.slot;
        }
    }
    return best;
}

InvariantReport check_store_invariants(const Store& store) {
    InvariantReport report;

    // 1. Every non-genesis block has a parent in the store.
    {
        InvariantResult r{.id = 1, .name = "parent-present", .pass = true, .witness = "-"};
        for (const auto& [root, block] : store.blocks) {
            if (root == store.genesis_root) continue;
            if (!store.blocks.count(block.parent_root)) {
                r.pass = false;
                r.witness = "block " + to_hex(root) + " parent " + to_hex(block.parent_root);
                break;
            }
        }
        report.results.push_back(std::move(r));
    }

    // 2. Each block's slot strictly exceeds its parent's.
    {
        InvariantResult r{.id = 2, .name = "slot-increases", .pass = true, .witness = "-"};
        for (const auto& [root, block] : store.blocks) {
            if (root == store.genesis_root) continue;
            auto parent = store.blocks.find(block.parent_root);
            if (parent == store.blocks.end()) continue;  // reported by (1)
            if (block.slot <= parent->second.slot) {
                r.pass = false;
                r.witness = "block " + to_hex(root) + " slot " + std::to_string(block.slot) +
                            " vs parent slot " + std::to_string(parent->second.slot);
                break;
            }
        }
        report.results.push_back(std::move(r));
    }

    // 3. Ancestor chains are finite and totally ordered by slot.
    {
        InvariantResult r{.id = 3, .name = "chain-ordered", .pass = true, .witness = "-"};
        for (const auto& [root, block] : store.blocks) {
            std::set<Root> seen;
            Root cursor = root;
            Slot last_slot = block.slot;
            bool first = true;
            while (true) {
                if (seen.count(cursor)) {
                    r.pass = false;
                    r.witness = "cycle through " + to_hex(cursor);
                    break;
                }
                seen.insert(cursor);
                auto it = store.blocks.find(cursor);
                if (it == store.blocks.end()) break;  // missing parent; reported by (1)
                if (!first && it->second.slot >= last_slot) {
                    r.pass = false;
                    r.witness = "slot order broken at " + to_hex(cursor);
                    break;
                }
                last_slot = it->second.slot;
                first = false;
                if (cursor == store.genesis_root) break;
                cursor = it->second.parent_root;
            }
            if (!r.pass) break;
        }
        report.results.push_back(std::move(r));
    }

    // 4. The smallest element of each chain is the genesis block at slot 0.
    {
        InvariantResult r{.id = 4, .name = "chain-ends-at-genesis", .pass = true, .witness = "-"};
        for (const auto& [root, block] : store.blocks) {
            auto path = chain(store, root);
            if (!path.ok()) {
                r.pass = false;
                r.witness = "walk from " + to_hex(root) + ": " + path.error().message();
                break;
            }
            const Root& last = path.value().back();
            if (last != store.genesis_root || store.blocks.at(last).slot != 0) {
                r.pass = false;
                r.witness = "chain from " + to_hex(root) + " ends at " + to_hex(last);
                break;
            }
        }
        report.results.push_back(std::move(r));
    }

    return report;
}

}  // namespace beacon
