// beaconkit: phase-0 beacon chain state machine
// Copyright 2026 The beaconkit Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "beacon/result.hpp"
#include "beacon/types.hpp"

namespace beacon {

enum class SszKind {
    Boolean,
    Uint64,
    ByteVector32,
    BitVector,  // fixed bit length
    BitList,    // variable, bounded bit length
    List,       // variable, bounded element count
    Container,  // ordered fields
};

struct TypeDesc;
using TypeDescPtr = std::shared_ptr<const TypeDesc>;

struct FieldDesc {
    std::string name;
    TypeDescPtr type;
};

// Recursive type descriptor driving decode and hash_tree_root. Descriptors
// are immutable and shared.
struct TypeDesc {
    SszKind kind = SszKind::Boolean;
    std::uint64_t length = 0;       // BitVector: fixed length; BitList/List: max length
    TypeDescPtr element;            // List
    std::vector<FieldDesc> fields;  // Container

    static TypeDescPtr boolean();
    static TypeDescPtr uint64();
    static TypeDescPtr byte_vector32();
    static TypeDescPtr bit_vector(std::uint64_t length);
    static TypeDescPtr bit_list(std::uint64_t max_length);
    static TypeDescPtr list(TypeDescPtr element, std::uint64_t max_length);
    static TypeDescPtr container(std::vector<FieldDesc> fields);
};

bool desc_equal(const TypeDesc& a, const TypeDesc& b);

// True when every value of the type encodes to the same byte count.
bool is_fixed_size(const TypeDesc& desc);
// Encoded byte count for fixed-size types (meaningless otherwise).
std::uint64_t fixed_size(const TypeDesc& desc);

// One SSZ value: the payload plus the descriptor it satisfies. Constructors
// enforce the type invariants (lengths within bounds) and throw
// std::invalid_argument on programmer error; decoded input never throws.
class SszValue {
  public:
    using ValueList = std::vector<SszValue>;

    static SszValue boolean(bool value);
    static SszValue uint64(std::uint64_t value);
    static SszValue byte_vector32(const Bytes32& bytes);
    static SszValue bit_vector(std::vector<bool> bits);
    static SszValue bit_list(std::uint64_t max_length, std::vector<bool> bits);
    static SszValue list(TypeDescPtr element, std::uint64_t max_length, ValueList elements);
    static SszValue container(std::vector<FieldDesc> fields, ValueList values);
    // Same payload constructors against a prebuilt descriptor.
    static SszValue with_desc(TypeDescPtr desc, ValueList values);

    const TypeDescPtr& type() const { return type_; }
    SszKind kind() const { return type_->kind; }

    bool as_bool() const;
    std::uint64_t as_uint64() const;
    const Bytes32& as_bytes32() const;
    const std::vector<bool>& as_bits() const;
    const ValueList& as_values() const;  // List elements or Container fields

    friend bool operator==(const SszValue& a, const SszValue& b);

  private:
    SszValue(TypeDescPtr type, std::variant<bool, std::uint64_t, Bytes32, std::vector<bool>, ValueList> payload);

    TypeDescPtr type_;
    std::variant<bool, std::uint64_t, Bytes32, std::vector<bool>, ValueList> payload_;
};

// Deterministic serialization. Total on well-formed values.
std::vector<std::uint8_t> encode(const SszValue& value);

// Total inverse of encode on its image; every non-image byte string yields
// a typed MalformedEncoding diagnostic, never an abort.
Result<SszValue> decode(std::span<const std::uint8_t> bytes, const TypeDescPtr& desc);

}  // namespace beacon
