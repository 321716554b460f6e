// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace whgeo {

// Error taxonomy shared by the whole library. The kind is stable and
// machine-readable; the message carries the human-readable payload
// (offending values, byte offsets, witnesses).
enum class ErrorKind {
    NotPositive,
    NotSorted,
    UnknownVertex,
    TooLarge,
    ZeroPoint,
    SameLeaf,
    BadIndices,
    BaseMismatch,
    IndistinguishableToOrder,
    InsufficientOrder,
    CoefficientNotRational,
    BisectionFailure,
    DegenerateFit,
    NotWeightedHomogeneous,
    GridDegenerate,
    BoxTooSmall,
    Inconclusive,
    Degenerate,
    TooFewPoints,
    OriginSliceNontrivial,
    OpenComponent,
    SyntaxError,
    UnknownVariable,
    NonPositiveExponent,
    Usage,
    Internal,
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::NotPositive: return "NotPositive";
        case ErrorKind::NotSorted: return "NotSorted";
        case ErrorKind::UnknownVertex: return "UnknownVertex";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::ZeroPoint: return "ZeroPoint";
        case ErrorKind::SameLeaf: return "SameLeaf";
        case ErrorKind::BadIndices: return "BadIndices";
        case ErrorKind::BaseMismatch: return "BaseMismatch";
        case ErrorKind::IndistinguishableToOrder: return "IndistinguishableToOrder";
        case ErrorKind::InsufficientOrder: return "InsufficientOrder";
        case ErrorKind::CoefficientNotRational: return "CoefficientNotRational";
        case ErrorKind::BisectionFailure: return "BisectionFailure";
        case ErrorKind::DegenerateFit: return "DegenerateFit";
        case ErrorKind::NotWeightedHomogeneous: return "NotWeightedHomogeneous";
        case ErrorKind::GridDegenerate: return "GridDegenerate";
        case ErrorKind::BoxTooSmall: return "BoxTooSmall";
        case ErrorKind::Inconclusive: return "Inconclusive";
        case ErrorKind::Degenerate: return "Degenerate";
        case ErrorKind::TooFewPoints: return "TooFewPoints";
        case ErrorKind::OriginSliceNontrivial: return "OriginSliceNontrivial";
        case ErrorKind::OpenComponent: return "OpenComponent";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::UnknownVariable: return "UnknownVariable";
        case ErrorKind::NonPositiveExponent: return "NonPositiveExponent";
        case ErrorKind::Usage: return "Usage";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
          kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

}  // namespace whgeo
