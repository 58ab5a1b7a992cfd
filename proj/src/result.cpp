// beaconkit: phase-0 beacon chain state machine
// Copyright 2026 The beaconkit Authors.
// SPDX-License-Identifier: Apache-2.0

#include "beacon/result.hpp"

namespace beacon {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::ArithmeticOverflow: return "ArithmeticOverflow";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::EmptyRegistry: return "EmptyRegistry";
        case ErrorCode::BadPreset: return "BadPreset";
        case ErrorCode::InvalidConfig: return "InvalidConfig";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::MalformedLength: return "MalformedEncoding(Length)";
        case ErrorCode::MalformedBoolean: return "MalformedEncoding(Boolean)";
        case ErrorCode::MalformedSentinel: return "MalformedEncoding(Sentinel)";
        case ErrorCode::MalformedPadding: return "MalformedEncoding(Padding)";
        case ErrorCode::MalformedOffset: return "MalformedEncoding(Offset)";
        case ErrorCode::MalformedListLimit: return "MalformedEncoding(ListLimit)";
        case ErrorCode::MalformedChainFile: return "MalformedChainFile";
        case ErrorCode::LimitExceeded: return "LimitExceeded";
        case ErrorCode::OversizedCommittee: return "OversizedCommittee";
        case ErrorCode::EmptyCommittee: return "EmptyCommittee";
        case ErrorCode::BitsLengthMismatch: return "BitsLengthMismatch";
        case ErrorCode::SlotNotAhead: return "SlotNotAhead";
        case ErrorCode::HeaderSlotMismatch: return "HeaderSlotMismatch";
        case ErrorCode::ParentRootMismatch: return "ParentRootMismatch";
        case ErrorCode::StateRootMismatch: return "StateRootMismatch";
        case ErrorCode::BadAttestationWrongEpoch: return "BadAttestation(WrongEpoch)";
        case ErrorCode::BadAttestationTooEarly: return "BadAttestation(TooEarly)";
        case ErrorCode::BadAttestationTooLate: return "BadAttestation(TooLate)";
        case ErrorCode::BadAttestationBadIndex: return "BadAttestation(BadIndex)";
        case ErrorCode::BadAttestationBitsLengthMismatch: return "BadAttestation(BitsLengthMismatch)";
        case ErrorCode::BadAttestationWrongSource: return "BadAttestation(WrongSource)";
        case ErrorCode::BadAttestationTooMany: return "BadAttestation(TooMany)";
        case ErrorCode::NotGenesis: return "NotGenesis";
        case ErrorCode::UnknownParent: return "UnknownParent";
        case ErrorCode::DuplicateBlock: return "DuplicateBlock";
        case ErrorCode::UnknownRoot: return "UnknownRoot";
        case ErrorCode::CorruptStore: return "CorruptStore";
        case ErrorCode::NotConflicting: return "NotConflicting";
    }
    return "UnknownError";
}

bool is_malformed_encoding(ErrorCode code) {
    switch (code) {
        case ErrorCode::MalformedLength:
        case ErrorCode::MalformedBoolean:
        case ErrorCode::MalformedSentinel:
        case ErrorCode::MalformedPadding:
        case ErrorCode::MalformedOffset:
        case ErrorCode::MalformedListLimit:
            return true;
        default:
            return false;
    }
}

bool is_bad_attestation(ErrorCode code) {
    switch (code) {
        case ErrorCode::BadAttestationWrongEpoch:
        case ErrorCode::BadAttestationTooEarly:
        case ErrorCode::BadAttestationTooLate:
        case ErrorCode::BadAttestationBadIndex:
        case ErrorCode::BadAttestationBitsLengthMismatch:
        case ErrorCode::BadAttestationWrongSource:
        case ErrorCode::BadAttestationTooMany:
            return true;
        default:
            return false;
    }
}

bool is_committee_error(ErrorCode code) {
    switch (code) {
        case ErrorCode::IndexOutOfRange:
        case ErrorCode::OversizedCommittee:
        case ErrorCode::EmptyCommittee:
        case ErrorCode::BitsLengthMismatch:
            return true;
        default:
            return false;
    }
}

bool is_transition_error(ErrorCode code) {
    switch (code) {
        case ErrorCode::ArithmeticOverflow:
        case ErrorCode::SlotNotAhead:
        case ErrorCode::HeaderSlotMismatch:
        case ErrorCode::ParentRootMismatch:
        case ErrorCode::StateRootMismatch:
            return true;
        default:
            return is_bad_attestation(code) || is_committee_error(code);
    }
}

std::string Error::message() const {
    std::string out(to_string(code_));
    if (!detail_.empty()) {
        out += ": ";
        out += detail_;
    }
    return out;
}

}  // namespace beacon
