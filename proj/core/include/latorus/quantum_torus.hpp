#pragma once

#include <map>
#include <string>

#include "latorus/quantum_matrix.hpp"

namespace latorus {

/// An element of the quantum torus K_q: a finite sum of monomials
/// c * x^lam, stored as a degree -> coefficient map with no zero
/// coefficients. The quantum matrix is not part of the element; every
/// product takes it explicitly.
class QTElement {
public:
    explicit QTElement(int rank) : rank_(rank) {}

    static QTElement zero(int rank) { return QTElement(rank); }
    static QTElement one(int rank) { return monomial(Degree::zero(rank), Rational(1)); }
    static QTElement monomial(const Degree& deg, const Rational& coef);

    /// The generator x_i (1-based).
    static QTElement generator(int rank, int i) {
        return monomial(Degree::unit(rank, i), Rational(1));
    }

    int rank() const { return rank_; }
    const std::map<Degree, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }

    /// Coefficient at a degree (zero if absent).
    Rational coef(const Degree& deg) const;

    void add_term(const Degree& deg, const Rational& coef);

    QTElement operator-() const;
    QTElement scaled(const Rational& c) const;
    friend QTElement operator+(const QTElement& a, const QTElement& b);
    friend QTElement operator-(const QTElement& a, const QTElement& b);
    friend bool operator==(const QTElement& a, const QTElement& b) {
        return a.rank_ == b.rank_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const QTElement& a, const QTElement& b) { return !(a == b); }

    std::string str() const;

    void require_same_rank(const QTElement& o) const {
        if (rank_ != o.rank_)
            throw RankMismatch("torus element rank " + std::to_string(rank_) + " vs " + std::to_string(o.rank_));
    }

private:
    int rank_;
    std::map<Degree, Rational> terms_;
};

/// Product in K_q: bilinear extension of x^lam * x^mu = t(lam,mu) x^(lam+mu).
QTElement qt_mul(const QuantumMatrix& q, const QTElement& a, const QTElement& b);

/// Two-sided inverse of the basis monomial x^lam.
QTElement qt_invert_monomial(const QuantumMatrix& q, const Degree& lam);

/// Two-sided inverse of a (single-term) monomial element c * x^lam.
/// Throws NotMonomial on zero or multi-term input.
QTElement qt_invert_monomial(const QuantumMatrix& q, const QTElement& a);

/// Commutator a*b - b*a.
QTElement qt_commutator(const QuantumMatrix& q, const QTElement& a, const QTElement& b);

/// True iff some mu with coordinates in [-window, window] witnesses
/// [x^mu, x^(lam-mu)] != 0, i.e. the degree-lam component of [K_q, K_q] is
/// the whole one-dimensional component. False means "not witnessed within
/// the window", which for these tori is taken as empty.
bool qt_commutator_component_full(const QuantumMatrix& q, const Degree& lam, int window);

/// The quantum matrix of the opposite algebra: q'_ij = q_ji.
QuantumMatrix qt_opposite(const QuantumMatrix& q);

}  // namespace latorus
