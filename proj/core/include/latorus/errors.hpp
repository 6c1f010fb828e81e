#pragma once

#include <stdexcept>
#include <string>

namespace latorus {

/// Base class for all domain errors raised by the library.
struct AlgebraError : std::runtime_error {
    explicit AlgebraError(const std::string& what) : std::runtime_error(what) {}
};

/// A quantum matrix violates q_ii = 1 or q_ij * q_ji = 1, or an entry is zero.
struct ConstraintViolation : AlgebraError {
    using AlgebraError::AlgebraError;
};

/// Two values of different lattice rank were combined.
struct RankMismatch : AlgebraError {
    using AlgebraError::AlgebraError;
};

/// Two matrix elements of different size (or over different quantum matrices)
/// were combined.
struct ShapeMismatch : AlgebraError {
    using AlgebraError::AlgebraError;
};

/// The zero root has no coroot.
struct ZeroCoroot : AlgebraError {
    using AlgebraError::AlgebraError;
};

/// A monomial-only operation was applied to a multi-term element.
struct NotMonomial : AlgebraError {
    using AlgebraError::AlgebraError;
};

/// exp(ad e) is only defined here for square-zero matrices.
struct NotAdNilpotent : AlgebraError {
    using AlgebraError::AlgebraError;
};

/// An element expected to live in a single root space does not.
struct NotHomogeneous : AlgebraError {
    using AlgebraError::AlgebraError;
};

/// The image of a root space under a candidate involution left the expected
/// opposite root space.
struct NotHomogeneousImage : AlgebraError {
    using AlgebraError::AlgebraError;
};

/// The requested pair of roots does not span a 6-root rank-2 subsystem.
struct NotA2Pair : AlgebraError {
    using AlgebraError::AlgebraError;
};

/// No grade-reversing anti-involution exists for this quantum matrix.
struct NotElementary : AlgebraError {
    using AlgebraError::AlgebraError;
};

/// division_witness failed to solve; indicates a bug for the tori built here.
struct NoWitness : AlgebraError {
    using AlgebraError::AlgebraError;
};

/// The octonion torus needs at least three generators.
struct OctonionRankBelow3 : AlgebraError {
    using AlgebraError::AlgebraError;
};

/// Malformed JSON or a JSON document not matching the expected schema.
struct ParseError : AlgebraError {
    using AlgebraError::AlgebraError;
};

}  // namespace latorus
