// beaconkit: phase-0 beacon chain state machine
// Copyright 2026 The beaconkit Authors.
// SPDX-License-Identifier: Apache-2.0

#include "beacon/schema.hpp"

namespace beacon {

namespace {

std::uint64_t attestation_pool_limit(const Preset& preset) {
    return preset.max_attestations_per_block * preset.slots_per_epoch;
}

SszValue uint64_value(std::uint64_t v) { return SszValue::uint64(v); }

SszValue root_value(const Root& r) { return SszValue::byte_vector32(r.bytes); }

SszValue root_list(const std::vector<Root>& roots, std::uint64_t limit) {
    SszValue::ValueList elems;
    elems.reserve(roots.size());
    for (const auto& r : roots) elems.push_back(root_value(r));
    return SszValue::list(TypeDesc::byte_vector32(), limit, std::move(elems));
}

Result<Root> root_from(const SszValue& v) {
    if (v.kind() != SszKind::ByteVector32) {
        return Error(ErrorCode::MalformedLength, "expected 32-byte vector");
    }
    return Root{v.as_bytes32()};
}

}  // namespace

TypeDescPtr checkpoint_desc() {
    static const TypeDescPtr desc = TypeDesc::container({
        {"epoch", TypeDesc::uint64()},
        {"root", TypeDesc::byte_vector32()},
    });
    return desc;
}

TypeDescPtr attestation_data_desc() {
    static const TypeDescPtr desc = TypeDesc::container({
        {"slot", TypeDesc::uint64()},
        {"index", TypeDesc::uint64()},
        {"beacon_block_root", TypeDesc::byte_vector32()},
        {"source", checkpoint_desc()},
        {"target", checkpoint_desc()},
    });
    return desc;
}

TypeDescPtr pending_attestation_desc(const Preset& preset) {
    return TypeDesc::container({
        {"aggregation_bits", TypeDesc::bit_list(preset.max_validators_per_committee)},
        {"data", attestation_data_desc()},
        {"inclusion_delay", TypeDesc::uint64()},
    });
}

TypeDescPtr validator_desc() {
    static const TypeDescPtr desc = TypeDesc::container({
        {"index", TypeDesc::uint64()},
        {"effective_balance", TypeDesc::uint64()},
        {"activation_epoch", TypeDesc::uint64()},
        {"exit_epoch", TypeDesc::uint64()},
    });
    return desc;
}

TypeDescPtr block_header_desc() {
    static const TypeDescPtr desc = TypeDesc::container({
        {"slot", TypeDesc::uint64()},
        {"parent_root", TypeDesc::byte_vector32()},
        {"state_root", TypeDesc::byte_vector32()},
    });
    return desc;
}

TypeDescPtr block_desc(const Preset& preset) {
    return TypeDesc::container({
        {"slot", TypeDesc::uint64()},
        {"parent_root", TypeDesc::byte_vector32()},
        {"state_root", TypeDesc::byte_vector32()},
        {"attestations",
         TypeDesc::list(pending_attestation_desc(preset), preset.max_attestations_per_block)},
    });
}

TypeDescPtr state_desc(const Preset& preset) {
    return TypeDesc::container({
        {"slot", TypeDesc::uint64()},
        {"latest_block_header", block_header_desc()},
        {"block_roots", TypeDesc::list(TypeDesc::byte_vector32(), preset.slots_per_historical_root)},
        {"state_roots", TypeDesc::list(TypeDesc::byte_vector32(), preset.slots_per_historical_root)},
        {"validators", TypeDesc::list(validator_desc(), preset.validator_registry_limit)},
        {"balances", TypeDesc::list(TypeDesc::uint64(), preset.validator_registry_limit)},
        {"previous_epoch_attestations",
         TypeDesc::list(pending_attestation_desc(preset), attestation_pool_limit(preset))},
        {"current_epoch_attestations",
         TypeDesc::list(pending_attestation_desc(preset), attestation_pool_limit(preset))},
        {"justification_bits", TypeDesc::bit_vector(4)},
        {"previous_justified_checkpoint", checkpoint_desc()},
        {"current_justified_checkpoint", checkpoint_desc()},
        {"finalized_checkpoint", checkpoint_desc()},
    });
}

TypeDescPtr desc_by_name(std::string_view name, const Preset& preset) {
    if (name == "Boolean") return TypeDesc::boolean();
    if (name == "Uint64") return TypeDesc::uint64();
    if (name == "Root") return TypeDesc::byte_vector32();
    if (name == "Checkpoint") return checkpoint_desc();
    if (name == "AttestationData") return attestation_data_desc();
    if (name == "PendingAttestation") return pending_attestation_desc(preset);
    if (name == "Validator") return validator_desc();
    if (name == "BeaconBlockHeader") return block_header_desc();
    if (name == "BeaconBlock") return block_desc(preset);
    if (name == "BeaconState") return state_desc(preset);
    return nullptr;
}

// --- to_ssz ----------------------------------------------------------------

SszValue to_ssz(const Checkpoint& v) {
    return SszValue::with_desc(checkpoint_desc(), {uint64_value(v.epoch), root_value(v.root)});
}

SszValue to_ssz(const AttestationData& v) {
    return SszValue::with_desc(attestation_data_desc(),
                               {uint64_value(v.slot), uint64_value(v.index),
                                root_value(v.beacon_block_root), to_ssz(v.source), to_ssz(v.target)});
}

SszValue to_ssz(const PendingAttestation& v, const Preset& preset) {
    return SszValue::with_desc(
        pending_attestation_desc(preset),
        {SszValue::bit_list(preset.max_validators_per_committee, v.aggregation_bits), to_ssz(v.data),
         uint64_value(v.inclusion_delay)});
}

SszValue to_ssz(const Validator& v) {
    return SszValue::with_desc(validator_desc(),
                               {uint64_value(v.index), uint64_value(v.effective_balance),
                                uint64_value(v.activation_epoch), uint64_value(v.exit_epoch)});
}

SszValue to_ssz(const BeaconBlockHeader& v) {
    return SszValue::with_desc(block_header_desc(), {uint64_value(v.slot), root_value(v.parent_root),
                                                     root_value(v.state_root)});
}

SszValue to_ssz(const BeaconBlock& v, const Preset& preset) {
    SszValue::ValueList atts;
    atts.reserve(v.attestations.size());
    for (const auto& a : v.attestations) atts.push_back(to_ssz(a, preset));
    return SszValue::with_desc(
        block_desc(preset),
        {uint64_value(v.slot), root_value(v.parent_root), root_value(v.state_root),
         SszValue::with_desc(TypeDesc::list(pending_attestation_desc(preset),
                                            preset.max_attestations_per_block),
                             std::move(atts))});
}

SszValue to_ssz(const BeaconState& v, const Preset& preset) {
    SszValue::ValueList validators;
    validators.reserve(v.validators.size());
    for (const auto& val : v.validators) validators.push_back(to_ssz(val));

    SszValue::ValueList balances;
    balances.reserve(v.balances.size());
    for (Gwei b : v.balances) balances.push_back(uint64_value(b));

    auto pool = [&](const std::vector<PendingAttestation>& atts) {
        SszValue::ValueList elems;
        elems.reserve(atts.size());
        for (const auto& a : atts) elems.push_back(to_ssz(a, preset));
        return SszValue::with_desc(
            TypeDesc::list(pending_attestation_desc(preset), attestation_pool_limit(preset)),
            std::move(elems));
    };

    std::vector<bool> bits(v.justification_bits.begin(), v.justification_bits.end());

    return SszValue::with_desc(
        state_desc(preset),
        {uint64_value(v.slot), to_ssz(v.latest_block_header),
         root_list(v.block_roots, preset.slots_per_historical_root),
         root_list(v.state_roots, preset.slots_per_historical_root),
         SszValue::with_desc(TypeDesc::list(validator_desc(), preset.validator_registry_limit),
                             std::move(validators)),
         SszValue::with_desc(TypeDesc::list(TypeDesc::uint64(), preset.validator_registry_limit),
                             std::move(balances)),
         pool(v.previous_epoch_attestations), pool(v.current_epoch_attestations),
         SszValue::bit_vector(std::move(bits)), to_ssz(v.previous_justified_checkpoint),
         to_ssz(v.current_justified_checkpoint), to_ssz(v.finalized_checkpoint)});
}

// --- from_ssz --------------------------------------------------------------

Result<Checkpoint> checkpoint_from_ssz(const SszValue& v) {
    if (v.kind() != SszKind::Container || v.as_values().size() != 2) {
        return Error(ErrorCode::MalformedLength, "checkpoint shape");
    }
    auto root = root_from(v.as_values()[1]);
    if (!root.ok()) return root.error();
    return Checkpoint{.epoch = v.as_values()[0].as_uint64(), .root = root.value()};
}

Result<AttestationData> attestation_data_from_ssz(const SszValue& v) {
    if (v.kind() != SszKind::Container || v.as_values().size() != 5) {
        return Error(ErrorCode::MalformedLength, "attestation data shape");
    }
    const auto& f = v.as_values();
    auto head = root_from(f[2]);
    if (!head.ok()) return head.error();
    auto source = checkpoint_from_ssz(f[3]);
    if (!source.ok()) return source.error();
    auto target = checkpoint_from_ssz(f[4]);
    if (!target.ok()) return target.error();
    return AttestationData{.slot = f[0].as_uint64(),
                           .index = f[1].as_uint64(),
                           .beacon_block_root = head.value(),
                           .source = source.value(),
                           .target = target.value()};
}

Result<PendingAttestation> pending_attestation_from_ssz(const SszValue& v, const Preset&) {
    if (v.kind() != SszKind::Container || v.as_values().size() != 3) {
        return Error(ErrorCode::MalformedLength, "pending attestation shape");
    }
    const auto& f = v.as_values();
    auto data = attestation_data_from_ssz(f[1]);
    if (!data.ok()) return data.error();
    return PendingAttestation{.aggregation_bits = f[0].as_bits(),
                              .data = data.value(),
                              .inclusion_delay = f[2].as_uint64()};
}

Result<Validator> validator_from_ssz(const SszValue& v) {
    if (v.kind() != SszKind::Container || v.as_values().size() != 4) {
        return Error(ErrorCode::MalformedLength, "validator shape");
    }
    const auto& f = v.as_values();
    return Validator{.index = f[0].as_uint64(),
                     .effective_balance = f[1].as_uint64(),
                     .activation_epoch = f[2].as_uint64(),
                     .exit_epoch = f[3].as_uint64()};
}

Result<BeaconBlockHeader> block_header_from_ssz(const SszValue& v) {
    if (v.kind() != SszKind::Container || v.as_values().size() != 3) {
        return Error(ErrorCode::MalformedLength, "header shape");
    }
    const auto& f = v.as_values();
    auto parent = root_from(f[1]);
    if (!parent.ok()) return parent.error();
    auto state = root_from(f[2]);
    if (!state.ok()) return state.error();
    return BeaconBlockHeader{.slot = f[0].as_uint64(),
                             .parent_root = parent.value(),
                             .state_root = state.value()};
}

Result<BeaconBlock> block_from_ssz(const SszValue& v, const Preset& preset) {
    if (v.kind() != SszKind::Container || v.as_values().size() != 4) {
        return Error(ErrorCode::MalformedLength, "block shape");
    }
    const auto& f = v.as_values();
    auto parent = root_from(f[1]);
    if (!parent.ok()) return parent.error();
    auto state = root_from(f[2]);
    if (!state.ok()) return state.error();
    BeaconBlock block{.slot = f[0].as_uint64(),
                      .parent_root = parent.value(),
                      .state_root = state.value(),
                      .attestations = {}};
    for (const auto& elem : f[3].as_values()) {
        auto att = pending_attestation_from_ssz(elem, preset);
        if (!att.ok()) return att.error();
        block.attestations.push_back(std::move(att).value());
    }
    return block;
}

Result<BeaconState> state_from_ssz(const SszValue& v, const Preset& preset) {
    if (v.kind() != SszKind::Container || v.as_values().size() != 12) {
        return Error(ErrorCode::MalformedLength, "state shape");
    }
    const auto& f = v.as_values();
    BeaconState state;
    state.slot = f[0].as_uint64();
    auto header = block_header_from_ssz(f[1]);
    if (!header.ok()) return header.error();
    state.latest_block_header = header.value();

    auto ring = [&](const SszValue& list, std::vector<Root>& out) -> Result<bool> {
        for (const auto& elem : list.as_values()) {
            auto root = root_from(elem);
            if (!root.ok()) return root.error();
            out.push_back(root.value());
        }
        if (out.size() != preset.slots_per_historical_root) {
            return Error(ErrorCode::MalformedLength, "historical ring length");
        }
        return true;
    };
    if (auto r = ring(f[2], state.block_roots); !r.ok()) return r.error();
    if (auto r = ring(f[3], state.state_roots); !r.ok()) return r.error();

    for (const auto& elem : f[4].as_values()) {
        auto val = validator_from_ssz(elem);
        if (!val.ok()) return val.error();
        state.validators.push_back(val.value());
    }
    for (const auto& elem : f[5].as_values()) {
        state.balances.push_back(elem.as_uint64());
    }
    if (state.validators.size() != state.balances.size()) {
        return Error(ErrorCode::MalformedLength, "validators and balances must pair up");
    }
    for (const auto& elem : f[6].as_values()) {
        auto att = pending_attestation_from_ssz(elem, preset);
        if (!att.ok()) return att.error();
        state.previous_epoch_attestations.push_back(std::move(att).value());
    }
    for (const auto& elem : f[7].as_values()) {
        auto att = pending_attestation_from_ssz(elem, preset);
        if (!att.ok()) return att.error();
        state.current_epoch_attestations.push_back(std::move(att).value());
    }
    const auto& bits = f[8].as_bits();
    if (bits.size() != 4) {
        return Error(ErrorCode::MalformedLength, "justification bits length");
    }
    for (std::size_t i = 0; i < 4; ++i) state.justification_bits[i] = bits[i];

    auto prev = checkpoint_from_ssz(f[9]);
    if (!prev.ok()) return prev.error();
    auto curr = checkpoint_from_ssz(f[10]);
    if (!curr.ok()) return curr.error();
    auto fin = checkpoint_from_ssz(f[11]);
    if (!fin.ok()) return fin.error();
    state.previous_justified_checkpoint = prev.value();
    state.current_justified_checkpoint = curr.value();
    state.finalized_checkpoint = fin.value();
    return state;
}

std::vector<std::uint8_t> encode_block(const BeaconBlock& block, const Preset& preset) {
    return encode(to_ssz(block, preset));
}

std::vector<std::uint8_t> encode_state(const BeaconState& state, const Preset& preset) {
    return encode(to_ssz(state, preset));
}

Result<BeaconBlock> decode_block(std::span<const std::uint8_t> bytes, const Preset& preset) {
    auto value = decode(bytes, block_desc(preset));
    if (!value.ok()) return value.error();
    return block_from_ssz(value.value(), preset);
}

Result<BeaconState> decode_state(std::span<const std::uint8_t> bytes, const Preset& preset) {
    auto value = decode(bytes, state_desc(preset));
    if (!value.ok()) return value.error();
    return state_from_ssz(value.value(), preset);
}

// --- hash_tree_root fast paths ----------------------------------------------

Root hash_tree_root(const Checkpoint& v, const Hasher& hasher) {
    return hash_tree_root(to_ssz(v), hasher);
}

Root hash_tree_root(const BeaconBlockHeader& v, const Hasher& hasher) {
    return hash_tree_root(to_ssz(v), hasher);
}

Root hash_tree_root(const BeaconBlock& v, const Preset& preset, const Hasher& hasher) {
    return hash_tree_root(to_ssz(v, preset), hasher);
}

namespace {

Bytes32 uint64_chunk(std::uint64_t v) {
    Bytes32 chunk{};
    for (int i = 0; i < 8; ++i) chunk[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v >> (8 * i));
    return chunk;
}

Bytes32 root_list_root(const std::vector<Root>& roots, std::uint64_t limit, std::uint64_t mixed_len,
                       const Hasher& hasher) {
    std::vector<Bytes32> chunks;
    chunks.reserve(roots.size());
    for (const auto& r : roots) chunks.push_back(r.bytes);
    Root base = merkleize(chunks, limit, hasher).value();
    return mix_in_length(base, mixed_len, hasher).bytes;
}

}  // namespace

Root hash_tree_root(const BeaconState& v, const Preset& preset, const Hasher& hasher) {
    std::vector<Bytes32> field_roots;
    field_roots.reserve(12);

    field_roots.push_back(uint64_chunk(v.slot));
    field_roots.push_back(hash_tree_root(v.latest_block_header, hasher).bytes);
    field_roots.push_back(
        root_list_root(v.block_roots, preset.slots_per_historical_root, v.block_roots.size(), hasher));
    field_roots.push_back(
        root_list_root(v.state_roots, preset.slots_per_historical_root, v.state_roots.size(), hasher));

    {
        std::vector<Bytes32> roots;
        roots.reserve(v.validators.size());
        for (const auto& val : v.validators) {
            const Bytes32 leaves[4] = {uint64_chunk(val.index), uint64_chunk(val.effective_balance),
                                       uint64_chunk(val.activation_epoch), uint64_chunk(val.exit_epoch)};
            roots.push_back(merkleize(leaves, std::nullopt, hasher).value().bytes);
        }
        Root base = merkleize(roots, preset.validator_registry_limit, hasher).value();
        field_roots.push_back(mix_in_length(base, v.validators.size(), hasher).bytes);
    }
    {
        std::vector<Bytes32> chunks((v.balances.size() + 3) / 4, Bytes32{});
        for (std::size_t i = 0; i < v.balances.size(); ++i) {
            Gwei b = v.balances[i];
            for (int j = 0; j < 8; ++j) {
                chunks[i / 4][(i % 4) * 8 + static_cast<std::size_t>(j)] =
                    static_cast<std::uint8_t>(b >> (8 * j));
            }
        }
        Root base = merkleize(chunks, (preset.validator_registry_limit * 8 + 31) / 32, hasher).value();
        field_roots.push_back(mix_in_length(base, v.balances.size(), hasher).bytes);
    }

    auto pool_root = [&](const std::vector<PendingAttestation>& atts) {
        std::vector<Bytes32> roots;
        roots.reserve(atts.size());
        for (const auto& a : atts) {
            roots.push_back(hash_tree_root(to_ssz(a, preset), hasher).bytes);
        }
        Root base = merkleize(roots, attestation_pool_limit(preset), hasher).value();
        return mix_in_length(base, atts.size(), hasher).bytes;
    };
    field_roots.push_back(pool_root(v.previous_epoch_attestations));
    field_roots.push_back(pool_root(v.current_epoch_attestations));

    {
        Bytes32 bits_chunk{};
        for (std::size_t i = 0; i < 4; ++i) {
            if (v.justification_bits[i]) bits_chunk[0] |= static_cast<std::uint8_t>(1U << i);
        }
        field_roots.push_back(bits_chunk);
    }
    field_roots.push_back(hash_tree_root(v.previous_justified_checkpoint, hasher).bytes);
    field_roots.push_back(hash_tree_root(v.current_justified_checkpoint, hasher).bytes);
    field_roots.push_back(hash_tree_root(v.finalized_checkpoint, hasher).bytes);

    return merkleize(field_roots, std::nullopt, hasher).value();
}

BeaconBlockHeader header_of(const BeaconBlock& block) {
    return BeaconBlockHeader{
        .slot = block.slot, .parent_root = block.parent_root, .state_root = block.state_root};
}

Root block_root(const BeaconBlock& block, const Hasher& hasher) {
    return hash_tree_root(header_of(block), hasher);
}

}  // namespace beacon
