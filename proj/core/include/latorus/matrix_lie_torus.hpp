#pragma once

#include <vector>

#include "latorus/quantum_torus.hpp"
#include "latorus/root_system.hpp"
#include "latorus/sl_rational.hpp"

namespace latorus {

/// A joint (root, lattice degree) position in the double grading.
struct GradedComponentKey {
    Root root;
    Degree degree;
};

/// An (ell+1) x (ell+1) matrix with quantum-torus entries. Plain data;
/// all algebra operations live on MatrixLieTorus, which carries the
/// quantum matrix the entries multiply under.
class LieElement {
public:
    LieElement(int size, int rank)
        : size_(size), rank_(rank), entries_(static_cast<size_t>(size) * size, QTElement(rank)) {}

    int size() const { return size_; }
    int rank() const { return rank_; }

    const QTElement& at(int i, int j) const { return entries_[idx(i, j)]; }  // 1-based
    void set(int i, int j, QTElement v);

    bool is_zero() const;

    LieElement operator-() const { return scaled(Rational(-1)); }
    LieElement scaled(const Rational& c) const;
    friend LieElement operator+(const LieElement& a, const LieElement& b);
    friend LieElement operator-(const LieElement& a, const LieElement& b);
    friend bool operator==(const LieElement& a, const LieElement& b) {
        return a.size_ == b.size_ && a.rank_ == b.rank_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const LieElement& a, const LieElement& b) { return !(a == b); }

    std::string str() const;

private:
    size_t idx(int i, int j) const { return static_cast<size_t>(i - 1) * size_ + (j - 1); }

    int size_;
    int rank_;
    std::vector<QTElement> entries_;
};

/// The matrix Lie torus: trace-in-commutator matrices of size ell+1 over
/// the quantum torus K_q, with the type-A root grading by matrix position
/// and the lattice grading by entry degree. Provides the bracket, the
/// exp(ad)-built Weyl representatives, the normalized root-space transport
/// maps, and the extraction of the coordinate multiplication from brackets.
class MatrixLieTorus {
public:
    MatrixLieTorus(int ell, QuantumMatrix q);

    int ell() const { return ell_; }
    int size() const { return ell_ + 1; }
    int rank() const { return q_.rank(); }
    const QuantumMatrix& q() const { return q_; }
    const RootSystemA& roots() const { return system_; }

    LieElement zero() const { return LieElement(size(), rank()); }

    /// E_ij * a.
    LieElement matrix_unit(int i, int j, QTElement a) const;

    /// Chevalley basis of the constant subalgebra: e_alpha = E_ij * 1,
    /// h_k = (E_kk - E_{k+1,k+1}) * 1.
    LieElement chevalley_e(const Root& alpha) const;
    LieElement chevalley_h(int k) const;
    LieElement coroot_h(const Root& alpha) const;

    /// Degree-zero embedding of a rational matrix.
    LieElement embed(const RationalMatrix& m) const;

    LieElement mat_mul(const LieElement& x, const LieElement& y) const;
    LieElement bracket(const LieElement& x, const LieElement& y) const;
    QTElement trace(const LieElement& x) const;

    /// Projection onto the joint component: for a nonzero root, the
    /// degree-lam part of the (i,j) entry; for the zero root, the degree-lam
    /// parts of the diagonal. Components over support_keys sum back to x.
    LieElement component(const LieElement& x, const GradedComponentKey& key) const;
    std::vector<GradedComponentKey> support_keys(const LieElement& x) const;

    /// True iff every degree of trace(x) is witnessed as a commutator
    /// degree within the window (so x lies in the Lie torus, not just gl).
    bool is_sl_member(const LieElement& x, int window) const;

    bool is_central(const LieElement& x) const;
    bool is_central(const LieElement& x, const std::vector<LieElement>& generators) const;
    std::vector<LieElement> default_central_generators() const;

    /// exp(ad e) for square-zero e: X + [e,X] + 1/2 [e,[e,X]].
    LieElement ad_exp(const LieElement& e, const LieElement& x) const;

    /// The Weyl representative Ad eta_alpha(1) =
    /// exp(ad e_alpha) exp(ad -e_{-alpha}) exp(ad e_alpha).
    LieElement ad_eta(const Root& alpha, const LieElement& x) const;

    /// The normalized transport L_alpha -> L_beta: compose Ad eta over a
    /// Weyl word sending alpha to beta, then divide by the scalar the word
    /// produces on the constant element e_alpha. Depends only on
    /// (alpha, beta), not on the word.
    LieElement theta(const Root& beta, const Root& alpha, const LieElement& x) const;

    /// e_delta(a): the coordinate identification of a at root delta,
    /// transported from the base root eps_1 - eps_2 where e(a) = E_12 * a.
    LieElement coordinate_element(const Root& delta, const QTElement& a) const;

    /// Recover the coordinate multiplication from the bracket along an
    /// A2-pair (beta, gamma). For the canonical pair
    /// (eps_1 - eps_2, eps_2 - eps_3) this returns a*b; for the reversed
    /// pair it returns b*a.
    QTElement extract_coordinate_mul(const Root& beta, const Root& gamma, const QTElement& a,
                                     const QTElement& b) const;

    /// For e = E_ij x^lam, the partner f in the opposite component with
    /// [e,f] acting on every root space by the Cartan integer. The partner
    /// is verified against all window generators before being returned.
    LieElement division_witness(const GradedComponentKey& key, int window) const;

    Root base_root() const { return Root::pair(1, 2); }

private:
    void require_shape(const LieElement& x) const;

    int ell_;
    QuantumMatrix q_;
    RootSystemA system_;
};

}  // namespace latorus
