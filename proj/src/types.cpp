// beaconkit: phase-0 beacon chain state machine
// Copyright 2026 The beaconkit Authors.
// SPDX-License-Identifier: Apache-2.0

#include "beacon/types.hpp"

namespace beacon {

Result<std::uint64_t> checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t sum = 0;
    if (__builtin_add_overflow(a, b, &sum)) {
        return Error(ErrorCode::ArithmeticOverflow, "add");
    }
    return sum;
}

Result<std::uint64_t> checked_sub(std::uint64_t a, std::uint64_t b) {
    if (b > a) {
        return Error(ErrorCode::ArithmeticOverflow, "sub underflow");
    }
    return a - b;
}

Result<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t prod = 0;
    if (__builtin_mul_overflow(a, b, &prod)) {
        return Error(ErrorCode::ArithmeticOverflow, "mul");
    }
    return prod;
}

Epoch epoch_of(Slot slot, const Preset& preset) {
    return slot / preset.slots_per_epoch;
}

Slot epoch_start_slot(Epoch epoch, const Preset& preset) {
    // Presets are validated so this cannot wrap for reachable epochs; the
    // caller guards unreachable ones through checked_mul when epoch is
    // attacker-controlled.
    return epoch * preset.slots_per_epoch;
}

std::string to_hex(const Root& root) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out = "0x";
    out.reserve(2 + 64);
    for (std::uint8_t byte : root.bytes) {
        out.push_back(digits[byte >> 4]);
        out.push_back(digits[byte & 0x0F]);
    }
    return out;
}

Result<Root> root_from_hex(std::string_view text) {
    if (text.size() >= 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
        text.remove_prefix(2);
    }
    if (text.size() != 64) {
        return Error(ErrorCode::MalformedLength, "expected 64 hex digits");
    }
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        return -1;
    };
    Root root{};
    for (std::size_t i = 0; i < 32; ++i) {
        int hi = nibble(text[2 * i]);
        int lo = nibble(text[2 * i + 1]);
        if (hi < 0 || lo < 0) {
            return Error(ErrorCode::MalformedLength, "non-hex digit");
        }
        root.bytes[i] = static_cast<std::uint8_t>((hi << 4) | lo);
    }
    return root;
}

Result<BeaconState> decrease_balance(BeaconState state, ValidatorIndex index, Gwei delta) {
    if (index >= state.balances.size()) {
        return Error(ErrorCode::IndexOutOfRange, "balance index " + std::to_string(index));
    }
    Gwei& balance = state.balances[index];
    balance = delta > balance ? 0 : balance - delta;
    return state;
}

Result<BeaconState> increase_balance(BeaconState state, ValidatorIndex index, Gwei delta) {
    if (index >= state.balances.size()) {
        return Error(ErrorCode::IndexOutOfRange, "balance index " + std::to_string(index));
    }
    auto sum = checked_add(state.balances[index], delta);
    if (!sum.ok()) return sum.error();
    state.balances[index] = sum.value();
    return state;
}

std::vector<Validator> make_registry(std::uint64_t count, const Preset& preset) {
    std::vector<Validator> registry;
    registry.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        registry.push_back(Validator{
            .index = i,
            .effective_balance = preset.effective_balance_per_validator,
            .activation_epoch = 0,
            .exit_epoch = kFarFutureEpoch,
        });
    }
    return registry;
}

}  // namespace beacon
