// beaconkit: phase-0 beacon chain state machine
// Copyright 2026 The beaconkit Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cassert>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

namespace beacon {

// Every failure in the library is one of these codes. Invalid inputs never
// abort or wrap; they surface here.
enum class ErrorCode {
    ArithmeticOverflow,
    IndexOutOfRange,
    EmptyRegistry,
    BadPreset,
    InvalidConfig,
    IoError,

    // ssz decode diagnostics (the MalformedEncoding family)
    MalformedLength,
    MalformedBoolean,
    MalformedSentinel,
    MalformedPadding,
    MalformedOffset,
    MalformedListLimit,
    MalformedChainFile,

    // merkleization
    LimitExceeded,

    // committees
    OversizedCommittee,
    EmptyCommittee,
    BitsLengthMismatch,

    // state transition
    SlotNotAhead,
    HeaderSlotMismatch,
    ParentRootMismatch,
    StateRootMismatch,
    BadAttestationWrongEpoch,
    BadAttestationTooEarly,
    BadAttestationTooLate,
    BadAttestationBadIndex,
    BadAttestationBitsLengthMismatch,
    BadAttestationWrongSource,
    BadAttestationTooMany,

    // block-tree store
    NotGenesis,
    UnknownParent,
    DuplicateBlock,
    UnknownRoot,
    CorruptStore,
    NotConflicting,
};

std::string_view to_string(ErrorCode code);

// Code families used by callers that classify rather than match exact codes.
bool is_malformed_encoding(ErrorCode code);
bool is_bad_attestation(ErrorCode code);
bool is_committee_error(ErrorCode code);
// True for every code a state transition may legally surface.
bool is_transition_error(ErrorCode code);

class [[nodiscard]] Error {
  public:
    Error(ErrorCode code, std::string detail = {})
        : code_(code), detail_(std::move(detail)) {}

    ErrorCode code() const { return code_; }
    const std::string& detail() const { return detail_; }

    // "ErrorName: detail" or just "ErrorName".
    std::string message() const;

    friend bool operator==(const Error& a, const Error& b) {
        return a.code_ == b.code_;
    }

  private:
    ErrorCode code_;
    std::string detail_;
};

// Minimal expected-style result. Operations return a fresh value or an
// Error; inputs are never mutated.
template <typename T>
class [[nodiscard]] Result {
  public:
    Result(T value) : payload_(std::move(value)) {}
    Result(Error error) : payload_(std::move(error)) {}
    Result(ErrorCode code, std::string detail = {})
        : payload_(Error(code, std::move(detail))) {}

    bool ok() const { return payload_.index() == 0; }
    explicit operator bool() const { return ok(); }

    const T& value() const& {
        assert(ok());
        return std::get<0>(payload_);
    }
    T& value() & {
        assert(ok());
        return std::get<0>(payload_);
    }
    T&& value() && {
        assert(ok());
        return std::get<0>(std::move(payload_));
    }

    const Error& error() const {
        assert(!ok());
        return std::get<1>(payload_);
    }

    ErrorCode code() const { return error().code(); }

  private:
    std::variant<T, Error> payload_;
};

}  // namespace beacon
