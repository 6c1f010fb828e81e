#pragma once

#include <vector>

#include "latorus/degree.hpp"
#include "latorus/rational.hpp"

namespace latorus {

/// The defining data of a quantum torus: an n x n matrix of nonzero
/// rationals with q_ii = 1 and q_ij * q_ji = 1. Both constraints are
/// checked at construction.
class QuantumMatrix {
public:
    QuantumMatrix(int n, std::vector<Rational> entries_row_major);

    static QuantumMatrix identity(int n);

    /// 2x2 matrix with the single free parameter q_12 = q (so q_21 = 1/q).
    static QuantumMatrix rank2(const Rational& q);

    int rank() const { return n_; }
    const Rational& at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }

    friend bool operator==(const QuantumMatrix& a, const QuantumMatrix& b) {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }

private:
    int n_;
    std::vector<Rational> e_;  // row major
};

QuantumMatrix make_quantum_matrix(int n, std::vector<Rational> entries_row_major);

/// True iff every entry is 1 or -1.
bool is_elementary(const QuantumMatrix& q);

/// The twist cocycle t(lam, mu) = prod_{i>j} q_ij^(lam_i * mu_j), the unique
/// scalar with x^lam * x^mu = t(lam, mu) * x^(lam+mu) for monomials in the
/// ascending-index normal form x^lam = x_1^(lam_1) ... x_n^(lam_n).
Rational twist(const QuantumMatrix& q, const Degree& lam, const Degree& mu);

/// t(lam, mu) / t(mu, lam); measures the failure of x^lam and x^mu to commute.
Rational twist_ratio(const QuantumMatrix& q, const Degree& lam, const Degree& mu);

}  // namespace latorus
