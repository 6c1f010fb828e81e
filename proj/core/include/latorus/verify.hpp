#pragma once

#include "latorus/involutions.hpp"
#include "latorus/matrix_lie_torus.hpp"
#include "latorus/report.hpp"

namespace latorus {

/// Root-grading axiom suite over the matrix Lie torus: the constant
/// subalgebra closes under the bracket with classical structure constants,
/// components decompose exactly, and each degree slice of the zero part is
/// spanned by brackets of opposite root spaces (exact rank computation).
CheckReport verify_root_grading(int ell, const QuantumMatrix& q, int window,
                                const VerifyOptions& opts = {});

/// Division axiom suite: a verified partner exists for every
/// (nonzero root, window degree) pair.
CheckReport verify_division(int ell, const QuantumMatrix& q, int window, const VerifyOptions& opts = {});

/// Coordinate-torus axiom suite: monomial invertibility, lattice-generating
/// support, and associativity (quantum) or the presentation relations plus
/// alternativity (octonion).
CheckReport verify_torus_axioms(const CoordinateDescriptor& coord, int window,
                                const VerifyOptions& opts = {});

namespace detail {

/// Expected dimension of the degree slice of the zero part:
/// ell + 1 when the degree is a witnessed commutator degree, else ell.
int zero_part_expected_dim(int ell, bool commutator_witnessed);

/// Rank of the span of [E_ij a, E_ji b] diagonal vectors for one degree.
int zero_part_span_rank(const MatrixLieTorus& torus, const Degree& lam, int window);

}  // namespace detail

}  // namespace latorus
