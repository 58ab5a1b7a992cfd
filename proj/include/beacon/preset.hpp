// beaconkit: phase-0 beacon chain state machine
// Copyright 2026 The beaconkit Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "beacon/result.hpp"

namespace beacon {

// The constant bundle threaded explicitly through every operation. No
// globals: tests run the default preset and shrunken variants side by side.
struct Preset {
    std::uint64_t slots_per_epoch = 32;
    std::uint64_t max_committees_per_slot = 64;
    std::uint64_t target_committee_size = 128;
    std::uint64_t max_validators_per_committee = 2048;
    std::uint64_t slots_per_historical_root = 8192;
    std::uint64_t min_attestation_inclusion_delay = 1;
    std::uint64_t justification_bits_length = 4;  // fixed
    std::uint64_t effective_balance_per_validator = 32'000'000'000ULL;  // Gwei
    std::uint64_t reward_unit = 100'000ULL;                             // Gwei
    std::uint64_t max_attestations_per_block = 128;
    std::uint64_t validator_registry_limit = 1ULL << 40;

    friend bool operator==(const Preset&, const Preset&) = default;
};

// Default-constructed Preset, validated.
const Preset& default_preset();

// Checks the structural invariants: all counts >= 1, the historical-root
// ring a whole number of epochs, justification bits fixed at 4, and no
// derived product overflowing 64 bits.
Result<Preset> validate_preset(const Preset& preset);

// Flat key=value text, one pair per line, '#' comments. Unknown keys are
// errors. Missing keys keep their defaults.
Result<Preset> parse_preset(std::string_view text);
Result<Preset> load_preset_file(const std::string& path);

std::string format_preset(const Preset& preset);

}  // namespace beacon
