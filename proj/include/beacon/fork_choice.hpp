// beaconkit: phase-0 beacon chain state machine
// Copyright 2026 The beaconkit Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <vector>

#include "beacon/merkle.hpp"
#include "beacon/preset.hpp"
#include "beacon/types.hpp"

namespace beacon {

// The block-tree: blocks and their post-states keyed by header root, plus
// the checkpoints adopted from accepted states. Single writer; readers may
// share snapshots between writes.
struct Store {
    std::map<Root, BeaconBlock> blocks;
    std::map<Root, BeaconState> post_states;
    Root genesis_root{};
    Checkpoint justified_checkpoint{};
    Checkpoint finalized_checkpoint{};

    friend bool operator==(const Store&, const Store&) = default;
};

// A store holding the implicit genesis block for a slot-0 state, keyed by
// the root of its backfilled header.
Result<Store> store_init(const BeaconState& genesis, const Preset& preset,
                         const Hasher& hasher = sha256_hasher());

// Validates parentage, runs the state transition from the parent's
// post-state, and inserts block and state. A rejected block leaves the
// store byte-identical.
Result<Store> on_block(Store store, const BeaconBlock& block, const Preset& preset,
                       const Hasher& hasher = sha256_hasher());

// r, parent(r), ..., genesis. Bounded by the block count; a cycle or a
// missing parent in a hand-corrupted store is a typed error.
Result<std::vector<Root>> chain(const Store& store, const Root& root);

// Highest-slot descendant of the justified checkpoint, ties broken by
// lexicographically greatest root.
Root get_head(const Store& store);

struct InvariantResult {
    int id = 0;  // 1..4
    std::string name;
    bool pass = true;
    std::string witness;  // "-" when passing
};

struct InvariantReport {
    std::vector<InvariantResult> results;

    bool all_pass() const {
        for (const auto& r : results) {
            if (!r.pass) return false;
        }
        return true;
    }
};

// The four block-tree well-formedness checks: (1) every non-genesis block
// has its parent in the store, (2) slots strictly increase along parent
// edges, (3) every ancestor chain is finite and totally ordered by slot,
// (4) each chain bottoms out at the genesis block with slot 0.
InvariantReport check_store_invariants(const Store& store);

}  // namespace beacon
