#include "latorus/quantum_matrix.hpp"

#include <string>

namespace latorus {

QuantumMatrix::QuantumMatrix(int n, std::vector<Rational> entries_row_major)
    : n_(n), e_(std::move(entries_row_major)) {
    if (n_ <= 0) throw ConstraintViolation("quantum matrix: rank must be positive");
    if (e_.size() != static_cast<size_t>(n_) * n_)
        throw ConstraintViolation("quantum matrix: expected " + std::to_string(n_ * n_) + " entries");
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            const Rational& qij = at(i, j);
            if (qij.is_zero())
                throw ConstraintViolation("quantum matrix: zero entry at (" + std::to_string(i + 1) + "," +
                                          std::to_string(j + 1) + ")");
        }
    }
    for (int i = 0; i < n_; ++i) {
        if (!at(i, i).is_one())
            throw ConstraintViolation("quantum matrix: q_" + std::to_string(i + 1) + std::to_string(i + 1) +
                                      " = " + at(i, i).str() + " != 1");
    }
    for (int i = 0; i < n_; ++i) {
        for (int j = i + 1; j < n_; ++j) {
            if (!(at(i, j) * at(j, i)).is_one())
                throw ConstraintViolation("quantum matrix: q_" + std::to_string(i + 1) + std::to_string(j + 1) +
                                          " * q_" + std::to_string(j + 1) + std::to_string(i + 1) + " = " +
                                          (at(i, j) * at(j, i)).str() + " != 1");
        }
    }
}

QuantumMatrix QuantumMatrix::identity(int n) {
    std::vector<Rational> e(static_cast<size_t>(n) * n, Rational(1));
    return QuantumMatrix(n, std::move(e));
}

QuantumMatrix QuantumMatrix::rank2(const Rational& q) {
    Rational inv = q.inverse();  // reject zero before building the entry list
    return QuantumMatrix(2, {Rational(1), q, std::move(inv), Rational(1)});
}

QuantumMatrix make_quantum_matrix(int n, std::vector<Rational> entries_row_major) {
    return QuantumMatrix(n, std::move(entries_row_major));
}

bool is_elementary(const QuantumMatrix& q) {
    for (int i = 0; i < q.rank(); ++i)
        for (int j = 0; j < q.rank(); ++j) {
            const Rational& e = q.at(i, j);
            if (!(e == Rational(1) || e == Rational(-1))) return false;
        }
    return true;
}

Rational twist(const QuantumMatrix& q, const Degree& lam, const Degree& mu) {
    lam.require_same_rank(mu);
    if (lam.rank() != q.rank())
        throw RankMismatch("twist: degree rank " + std::to_string(lam.rank()) + " vs matrix rank " +
                           std::to_string(q.rank()));
    Rational t(1);
    for (int i = 1; i < q.rank(); ++i) {
        if (lam[i] == 0) continue;
        for (int j = 0; j < i; ++j) {
            if (mu[j] == 0) continue;
            t *= q.at(i, j).pow(lam[i] * mu[j]);
        }
    }
    return t;
}

Rational twist_ratio(const QuantumMatrix& q, const Degree& lam, const Degree& mu) {
    return twist(q, lam, mu) / twist(q, mu, lam);
}

}  // namespace latorus
