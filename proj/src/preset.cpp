// beaconkit: phase-0 beacon chain state machine
// Copyright 2026 The beaconkit Authors.
// SPDX-License-Identifier: Apache-2.0

#include "beacon/preset.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace beacon {

namespace {

using Field = std::uint64_t Preset::*;

const std::map<std::string, Field, std::less<>>& field_map() {
    static const std::map<std::string, Field, std::less<>> map = {
        {"slots_per_epoch", &Preset::slots_per_epoch},
        {"max_committees_per_slot", &Preset::max_committees_per_slot},
        {"target_committee_size", &Preset::target_committee_size},
        {"max_validators_per_committee", &Preset::max_validators_per_committee},
        {"slots_per_historical_root", &Preset::slots_per_historical_root},
        {"min_attestation_inclusion_delay", &Preset::min_attestation_inclusion_delay},
        {"justification_bits_length", &Preset::justification_bits_length},
        {"effective_balance_per_validator", &Preset::effective_balance_per_validator},
        {"reward_unit", &Preset::reward_unit},
        {"max_attestations_per_block", &Preset::max_attestations_per_block},
        {"validator_registry_limit", &Preset::validator_registry_limit},
    };
    return map;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

bool mul_overflows(std::uint64_t a, std::uint64_t b) {
    return b != 0 && a > UINT64_MAX / b;
}

}  // namespace

const Preset& default_preset() {
    static const Preset preset = [] {
        auto checked = validate_preset(Preset{});
        return checked.value();
    }();
    return preset;
}

Result<Preset> validate_preset(const Preset& p) {
    struct Check {
        std::uint64_t value;
        const char* name;
    };
    const Check positive[] = {
        {p.slots_per_epoch, "slots_per_epoch"},
        {p.max_committees_per_slot, "max_committees_per_slot"},
        {p.target_committee_size, "target_committee_size"},
        {p.max_validators_per_committee, "max_validators_per_committee"},
        {p.slots_per_historical_root, "slots_per_historical_root"},
        {p.min_attestation_inclusion_delay, "min_attestation_inclusion_delay"},
        {p.effective_balance_per_validator, "effective_balance_per_validator"},
        {p.max_attestations_per_block, "max_attestations_per_block"},
        {p.validator_registry_limit, "validator_registry_limit"},
    };
    for (const auto& check : positive) {
        if (check.value == 0) {
            return Error(ErrorCode::BadPreset, std::string(check.name) + " must be >= 1");
        }
    }
    if (p.justification_bits_length != 4) {
        return Error(ErrorCode::BadPreset, "justification_bits_length is fixed at 4");
    }
    if (p.slots_per_historical_root % p.slots_per_epoch != 0) {
        return Error(ErrorCode::BadPreset,
                     "slots_per_historical_root must be a multiple of slots_per_epoch");
    }
    // Products the library forms later must stay in 64 bits.
    if (mul_overflows(p.max_committees_per_slot, p.slots_per_epoch) ||
        mul_overflows(p.max_validators_per_committee,
                      p.max_committees_per_slot * p.slots_per_epoch) ||
        mul_overflows(p.max_attestations_per_block, p.slots_per_epoch) ||
        mul_overflows(p.target_committee_size, p.slots_per_epoch)) {
        return Error(ErrorCode::BadPreset, "derived committee products overflow uint64");
    }
    if (mul_overflows(p.validator_registry_limit, 8)) {
        return Error(ErrorCode::BadPreset, "validator_registry_limit too large");
    }
    return p;
}

Result<Preset> parse_preset(std::string_view text) {
    Preset preset{};
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;

        auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            return Error(ErrorCode::BadPreset,
                         "line " + std::to_string(line_no) + ": expected key=value");
        }
        std::string_view key = trim(line.substr(0, eq));
        std::string_view value = trim(line.substr(eq + 1));
        auto it = field_map().find(key);
        if (it == field_map().end()) {
            return Error(ErrorCode::BadPreset, "unknown key '" + std::string(key) + "'");
        }
        std::uint64_t parsed = 0;
        auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
        if (ec != std::errc{} || end != value.data() + value.size()) {
            return Error(ErrorCode::BadPreset,
                         "bad value for '" + std::string(key) + "': " + std::string(value));
        }
        preset.*(it->second) = parsed;
    }
    return validate_preset(preset);
}

Result<Preset> load_preset_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        return Error(ErrorCode::IoError, "cannot open preset file " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_preset(buf.str());
}

std::string format_preset(const Preset& preset) {
    std::ostringstream out;
    for (const auto& [name, field] : field_map()) {
        out << name << "=" << preset.*field << "\n";
    }
    return out.str();
}

}  // namespace beacon
