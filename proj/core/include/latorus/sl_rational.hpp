#pragma once

#include <vector>

#include "latorus/rational.hpp"
#include "latorus/root_system.hpp"

namespace latorus {

/// Dense (ell+1) x (ell+1) matrix over the rationals. Small and only used
/// for the constant-coefficient subalgebra and for exact linear algebra in
/// the verification suites.
class RationalMatrix {
public:
    explicit RationalMatrix(int size) : size_(size), e_(static_cast<size_t>(size) * size) {}

    static RationalMatrix unit(int size, int i, int j) {  // E_ij, 1-based
        RationalMatrix m(size);
        m.at(i, j) = Rational(1);
        return m;
    }

    int size() const { return size_; }
    Rational& at(int i, int j) { return e_[static_cast<size_t>(i - 1) * size_ + (j - 1)]; }
    const Rational& at(int i, int j) const { return e_[static_cast<size_t>(i - 1) * size_ + (j - 1)]; }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    RationalMatrix operator-() const;
    friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
    friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    RationalMatrix scaled(const Rational& c) const;

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.size_ == b.size_ && a.e_ == b.e_;
    }

private:
    int size_;
    std::vector<Rational> e_;
};

RationalMatrix bracket(const RationalMatrix& a, const RationalMatrix& b);

/// The Chevalley basis of sl_{ell+1}(Q): e_{eps_i - eps_j} = E_ij and
/// h_k = E_kk - E_{k+1,k+1}, with all structure constants exact.
class ChevalleyBasis {
public:
    explicit ChevalleyBasis(int ell);

    int ell() const { return ell_; }
    RationalMatrix e(const Root& alpha) const;  // alpha nonzero
    RationalMatrix h(int k) const;              // 1 <= k <= ell
    RationalMatrix h_of(const Root& alpha) const;  // coroot matrix E_ii - E_jj

    /// All basis elements (e_alpha for every nonzero root, then h_1..h_ell).
    std::vector<RationalMatrix> elements() const;

private:
    int ell_;
    RootSystemA system_;
};

/// Row rank of a set of rational vectors, by exact Gaussian elimination.
int rational_row_rank(std::vector<std::vector<Rational>> rows);

}  // namespace latorus
